#include <algorithm>
#include <functional>
#include <map>

#include "gtam/bijections.hpp"
#include "gtam/errors.hpp"

namespace gtam {

namespace {

EColor next_color(EColor c) {
    return c == EColor::Blue ? EColor::Green : c == EColor::Green ? EColor::Red : EColor::Blue;
}

/// Plane tree under construction: dart 2k sits at edges[k].first.
struct TreeBuilder {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot;
    std::vector<int> vertex_tag;
    std::vector<int> edge_tag;

    int add_vertex(int tag, int degree) {
        rot.emplace_back(degree, -1);
        vertex_tag.push_back(tag);
        return static_cast<int>(rot.size()) - 1;
    }
    /// Returns the edge index; slots are positions in the clockwise rotations.
    int add_edge(int a, int slot_a, int b, int slot_b, int tag) {
        const int k = static_cast<int>(edges.size());
        edges.emplace_back(a, b);
        edge_tag.push_back(tag);
        rot[a][slot_a] = 2 * k;
        rot[b][slot_b] = 2 * k + 1;
        return k;
    }
    RotationMap build() const {
        EdgeList g{static_cast<int>(rot.size()), edges};
        return build_map(g, rot, 0);
    }
    /// Builder vertex of each vertex id of the built map.
    std::vector<int> vertex_ids(const RotationMap& m) const {
        std::vector<int> out(m.vertex_count());
        for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
            out[m.vertex(2 * k)] = edges[k].first;
            out[m.vertex(2 * k + 1)] = edges[k].second;
        }
        return out;
    }
};

/// Root whose canonical code is smallest.
int best_root(const RotationMap& t, const std::vector<int>& payload) {
    std::vector<int> best;
    int root = 0;
    for (int r = 0; r < t.darts(); ++r) {
        auto c = canonical_code(t.with_root(r), payload);
        if (best.empty() || c < best) best = std::move(c), root = r;
    }
    return root;
}

std::vector<int> unrooted_code(const RotationMap& t, const std::vector<int>& payload) {
    return canonical_code(t.with_root(best_root(t, payload)), payload);
}

std::vector<int> mobile_payload(const Mobile& m) {
    std::vector<int> payload(m.tree.darts());
    for (int d = 0; d < m.tree.darts(); ++d)
        payload[d] = static_cast<int>(m.kind[m.tree.vertex(d)]) * 8 + static_cast<int>(m.color[d]);
    return payload;
}

std::vector<int> ternary_payload(const TernaryTree& t) {
    std::vector<int> payload(t.tree.darts());
    for (int d = 0; d < t.tree.darts(); ++d) payload[d] = (t.dir[d] + 1) * 8 + static_cast<int>(t.color[d]);
    return payload;
}

Mobile mobile_of(const TreeBuilder& b) {
    Mobile m;
    m.tree = b.build();
    const auto ids = b.vertex_ids(m.tree);
    for (int v = 0; v < m.tree.vertex_count(); ++v) m.kind.push_back(static_cast<NodeKind>(b.vertex_tag[ids[v]]));
    for (int d = 0; d < m.tree.darts(); ++d) m.color.push_back(static_cast<EColor>(b.edge_tag[d / 2]));
    return m;
}

TernaryTree ternary_of(const TreeBuilder& b) {
    // edge_tag: color; the first endpoint is the tail
    TernaryTree t;
    t.tree = b.build();
    for (int d = 0; d < t.tree.darts(); ++d) {
        t.color.push_back(static_cast<EColor>(b.edge_tag[d / 2]));
        t.dir.push_back(d % 2 == 0 ? 1 : -1);
    }
    return t;
}

// Ternary node slots clockwise: in-red, out-green, out-red, in-green.
constexpr EColor kSlotColor[4] = {EColor::Red, EColor::Green, EColor::Red, EColor::Green};
constexpr int kSlotDir[4] = {-1, 1, 1, -1};

bool rotation_matches(const std::vector<int>& darts, const std::function<bool(int, int)>& at) {
    const int n = static_cast<int>(darts.size());
    for (int start = 0; start < n; ++start) {
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) ok = at(darts[(start + k) % n], k);
        if (ok) return true;
    }
    return false;
}

/// Walk around the blue tree of a Schnyder wood: contour word and first-visit
/// order of the vertices other than u_B, ending with u_R.
std::pair<std::string, std::vector<int>> blue_tree_walk(const SchnyderWood& w) {
    const auto& m = w.map();
    std::string word;
    std::vector<int> order;
    std::function<void(const std::vector<int>&)> visit = [&](const std::vector<int>& darts) {
        for (int d : darts) {
            if (w.color[d] != EColor::Blue || w.dir[d] >= 0) continue;
            word += 'N';
            order.push_back(m.head(d));
            auto next = m.rotation_from(m.alpha(d));
            next.erase(next.begin());
            visit(next);
            word += 'E';
        }
    };
    visit(m.rotation_from(m.root()));
    order.push_back(w.tri.u_red());
    return {word, order};
}

struct MobileBuild {
    Mobile mobile;
    std::vector<int> black_of_face;  // mobile vertex id, -1 for the outer face
};

MobileBuild build_mobile(const SchnyderWood& w) {
    const auto& m = w.map();
    const int outer = m.outer_face();
    auto forward = [&](int d) { return w.dir[d] > 0 || (w.dir[d] == 0 && m.face(d) == outer); };
    TreeBuilder b;
    std::vector<int> white(m.vertex_count(), -1), black(m.face_count(), -1);
    for (int v = 0; v < m.vertex_count(); ++v)
        if (!w.tri.is_outer(v)) white[v] = b.add_vertex(static_cast<int>(NodeKind::White), 3);
    for (int f = 0; f < m.face_count(); ++f)
        if (f != outer) black[f] = b.add_vertex(static_cast<int>(NodeKind::Black), 3);
    // Slot of the corner (sigma^-1(e), e) at b_f: clockwise is reverse phi order.
    auto black_slot = [&](int e) {
        const auto& orbit = m.faces()[m.face(e)];
        const int k = static_cast<int>(std::find(orbit.begin(), orbit.end(), e) - orbit.begin());
        return 2 - k;
    };
    auto white_slot = [&](int d) {
        int k = 0;
        for (int x : m.vertices()[m.vertex(d)]) {
            if (x == d) return k;
            if (forward(x)) ++k;
        }
        throw InvariantFailure("mobile_from: dart not at its vertex");
    };
    for (int d = 0; d < m.darts(); ++d) {
        if (!forward(d)) continue;
        if (m.face(d) != outer) {
            if (white[m.vertex(d)] < 0) throw InvariantFailure("mobile_from: plain edge at an outer vertex");
            b.add_edge(white[m.vertex(d)], white_slot(d), black[m.face(d)], black_slot(d),
                       static_cast<int>(corner_color(w, d)));
        }
        const int e = m.alpha(d);
        if (m.face(e) != outer) {
            const int leaf = b.add_vertex(static_cast<int>(NodeKind::Leaf), 1);
            b.add_edge(black[m.face(e)], black_slot(e), leaf, 0, static_cast<int>(corner_color(w, e)));
        }
    }
    MobileBuild out{mobile_of(b), std::vector<int>(m.face_count(), -1)};
    const auto ids = b.vertex_ids(out.mobile.tree);
    std::vector<int> id_of(b.rot.size());
    for (int v = 0; v < static_cast<int>(ids.size()); ++v) id_of[ids[v]] = v;
    for (int f = 0; f < m.face_count(); ++f)
        if (f != outer) out.black_of_face[f] = id_of[black[f]];
    if (auto r = validate_mobile(out.mobile); !r.ok) throw InvariantFailure("mobile_from: " + r.violation);
    return out;
}

int dart_of_color(const RotationMap& t, const DartColors& color, int v, EColor c) {
    for (int d : t.vertices()[v])
        if (color[d] == c) return d;
    return -1;
}

}  // namespace

std::pair<Walk, Walk> bernardi_bonichon(const SchnyderWood& w) {
    const auto& m = w.map();
    if (w.tri.n() < 1) throw DomainError("bernardi_bonichon: needs n >= 1");
    auto [word, order] = blue_tree_walk(w);
    std::string upper;
    for (std::size_t r = 1; r < order.size(); ++r) {
        upper += 'N';
        for (int d : m.vertices()[order[r]])
            if (w.dir[d] < 0 && w.color[d] == EColor::Red) upper += 'E';
    }
    return {Walk(word), Walk(upper)};
}

int Mobile::white_count() const { return static_cast<int>(std::count(kind.begin(), kind.end(), NodeKind::White)); }

int TernaryTree::node_count() const {
    int n = 0;
    for (const auto& rot : tree.vertices()) n += rot.size() > 1;
    return n;
}

std::pair<int, int> TernaryTree::params() const {
    int red = 0, green = 0;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (tree.vertices()[v].size() != 1) continue;
        const int d = tree.vertices()[v][0];
        if (dir[d] > 0) (color[d] == EColor::Red ? red : green)++;
    }
    return {red - 1, green - 1};
}

Report validate_mobile(const Mobile& m) {
    const auto& t = m.tree;
    if (auto e = t.check()) return Report::fail(*e);
    if (t.face_count() != 1) return Report::fail("not a tree");
    if (static_cast<int>(m.kind.size()) != t.vertex_count() || static_cast<int>(m.color.size()) != t.darts())
        return Report::fail("payload size mismatch");
    if (m.white_count() == 0) return Report::fail("no white node");
    int blue_legs = 0, blue_plain = 0;
    for (int d = 0; d < t.darts(); ++d) {
        if (m.color[d] == EColor::None || m.color[d] != m.color[t.alpha(d)]) return Report::fail("bad edge color");
        const NodeKind a = m.kind[t.vertex(d)], b = m.kind[t.head(d)];
        if (a == b) return Report::fail("adjacent vertices of the same kind");
        if (a == NodeKind::Leaf && b != NodeKind::Black) return Report::fail("leaf not attached to a black node");
        if (d < t.alpha(d) && m.color[d] == EColor::Blue) (m.is_leg(d) ? blue_legs : blue_plain)++;
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& rot = t.vertices()[v];
        const std::size_t want = m.kind[v] == NodeKind::Leaf ? 1 : 3;
        if (rot.size() != want) return Report::fail("bad degree");
        if (want == 3 && !rotation_matches(rot, [&](int d, int k) {
                return m.color[d] == (k == 0 ? EColor::Blue : k == 1 ? EColor::Green : EColor::Red);
            }))
            return Report::fail("node colors not blue, green, red clockwise");
    }
    if (blue_legs != blue_plain + 1) return Report::fail("blue legs != blue plain edges + 1");
    return {};
}

Report validate_ternary(const TernaryTree& tt) {
    const auto& t = tt.tree;
    if (auto e = t.check()) return Report::fail(*e);
    if (t.face_count() != 1) return Report::fail("not a tree");
    if (static_cast<int>(tt.color.size()) != t.darts() || static_cast<int>(tt.dir.size()) != t.darts())
        return Report::fail("payload size mismatch");
    int balance_red = 0, balance_green = 0;
    for (int d = 0; d < t.darts(); ++d) {
        if (tt.color[d] != EColor::Red && tt.color[d] != EColor::Green) return Report::fail("edge neither red nor green");
        if (tt.color[d] != tt.color[t.alpha(d)] || tt.dir[d] == 0 || tt.dir[d] != -tt.dir[t.alpha(d)])
            return Report::fail("inconsistent edge");
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& rot = t.vertices()[v];
        if (rot.size() == 1) {
            (tt.color[rot[0]] == EColor::Red ? balance_red : balance_green) += tt.dir[rot[0]];
            continue;
        }
        if (rot.size() != 4) return Report::fail("bad degree");
        if (!rotation_matches(rot, [&](int d, int k) { return tt.color[d] == kSlotColor[k] && tt.dir[d] == kSlotDir[k]; }))
            return Report::fail("node not in-red, out-green, out-red, in-green clockwise");
    }
    if (balance_red != 0 || balance_green != 0) return Report::fail("unbalanced leaves");
    return {};
}

std::vector<int> mobile_code(const Mobile& m) { return unrooted_code(m.tree, mobile_payload(m)); }

std::vector<int> ternary_code(const TernaryTree& t) { return unrooted_code(t.tree, ternary_payload(t)); }

Mobile canonical_form(const Mobile& m) {
    Mobile out = m;
    out.tree = m.tree.with_root(best_root(m.tree, mobile_payload(m)));
    return out;
}

TernaryTree canonical_form(const TernaryTree& t) {
    TernaryTree out = t;
    out.tree = t.tree.with_root(best_root(t.tree, ternary_payload(t)));
    return out;
}

std::optional<PositionType> black_type(const Mobile& m, int v) {
    if (m.kind[v] != NodeKind::Black) return std::nullopt;
    const int blue = dart_of_color(m.tree, m.color, v, EColor::Blue);
    if (!m.is_leg(blue)) return std::nullopt;
    if (m.is_leg(dart_of_color(m.tree, m.color, v, EColor::Red))) return PositionType::NN;
    if (m.is_leg(dart_of_color(m.tree, m.color, v, EColor::Green))) return PositionType::EE;
    return PositionType::EN;
}

bool is_synchronized(const Mobile& m) {
    for (int v = 0; v < m.tree.vertex_count(); ++v)
        if (black_type(m, v) == PositionType::EN) return false;
    return true;
}

std::pair<int, int> synchronized_params(const Mobile& m) {
    if (!is_synchronized(m)) throw DomainError("synchronized_params: mobile has a node of type EN");
    int ee = 0, nn = 0;
    for (int v = 0; v < m.tree.vertex_count(); ++v) {
        const auto t = black_type(m, v);
        if (t == PositionType::EE) ++ee;
        if (t == PositionType::NN) ++nn;
    }
    return {ee - 1, nn - 1};
}

Mobile mobile_from(const SchnyderWood& w) {
    if (!is_minimal(w)) throw InvariantFailure("mobile_from: wood is not minimal");
    return build_mobile(w).mobile;
}

Report composed_type_correspondence(const SchnyderWood& w) {
    if (!is_minimal(w)) return Report::fail("wood is not minimal");
    const auto& m = w.map();
    const auto [gamma, gamma2] = bernardi_bonichon(w);
    const auto types = position_types(gamma, gamma2);
    const auto [word, order] = blue_tree_walk(w);
    (void)word;
    const auto built = build_mobile(w);
    for (std::size_t r = 0; r < order.size(); ++r) {
        const int v = order[r];
        int parent = w.out_dart(v, EColor::Blue);
        if (v == w.tri.u_red())
            for (int d : m.faces()[m.outer_face()])
                if (m.vertex(d) == v) parent = d;
        const int node = built.black_of_face[m.face(m.alpha(parent))];
        if (black_type(built.mobile, node) != types[r])
            return Report::fail("position " + std::to_string(r) + " has type " + to_string(types[r]));
    }
    return {};
}

TernaryTree mobile_to_ternary(const Mobile& m) {
    if (auto r = validate_mobile(m); !r.ok) throw DomainError("mobile_to_ternary: " + r.violation);
    if (!is_synchronized(m)) throw DomainError("mobile_to_ternary: mobile is not synchronized");
    const auto& t = m.tree;
    TreeBuilder b;
    // U vertex of each mobile vertex; whites and untyped blacks share a node.
    std::vector<int> uvertex(t.vertex_count(), -1);
    std::vector<int> node_white(t.vertex_count(), -1);
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (m.kind[v] != NodeKind::White) continue;
        const int blue = dart_of_color(t, m.color, v, EColor::Blue);
        uvertex[v] = uvertex[t.head(blue)] = b.add_vertex(0, 4);
        node_white[uvertex[v]] = v;
    }
    auto typed = [&](int v) { return m.kind[v] == NodeKind::Black && black_type(m, v).has_value(); };
    // Slot of a mobile dart at its merged node: white darts after blue, then black darts after blue.
    auto slot = [&](int d) {
        const int v = t.vertex(d);
        const auto rot = t.rotation_from(dart_of_color(t, m.color, v, EColor::Blue));
        const int k = static_cast<int>(std::find(rot.begin(), rot.end(), d) - rot.begin()) - 1;
        return m.kind[v] == NodeKind::White ? k : 2 + k;
    };
    for (int d = 0; d < t.darts(); ++d) {
        const int v = t.vertex(d), h = t.head(d);
        // d runs from the black end
        if (m.kind[v] != NodeKind::Black || m.color[d] == EColor::Blue) continue;
        if (typed(v)) {
            if (m.kind[h] != NodeKind::White) continue;  // deleted leg
            const int leaf = b.add_vertex(0, 1);
            b.add_edge(leaf, 0, uvertex[h], slot(t.alpha(d)), static_cast<int>(m.color[d]));
        } else if (m.kind[h] == NodeKind::Leaf) {
            const int leaf = b.add_vertex(0, 1);
            b.add_edge(uvertex[v], slot(d), leaf, 0, static_cast<int>(m.color[d]));
        } else {
            b.add_edge(uvertex[v], slot(d), uvertex[h], slot(t.alpha(d)), static_cast<int>(m.color[d]));
        }
    }
    auto out = ternary_of(b);
    if (auto r = validate_ternary(out); !r.ok) throw InvariantFailure("mobile_to_ternary: " + r.violation);
    return out;
}

Mobile ternary_to_mobile(const TernaryTree& u) {
    if (auto r = validate_ternary(u); !r.ok) throw DomainError("ternary_to_mobile: " + r.violation);
    const auto& t = u.tree;
    TreeBuilder b;
    const int black_tag = static_cast<int>(NodeKind::Black), white_tag = static_cast<int>(NodeKind::White),
              leaf_tag = static_cast<int>(NodeKind::Leaf);
    std::vector<int> white(t.vertex_count(), -1), black(t.vertex_count(), -1);
    std::vector<int> slot_of(t.darts(), -1);  // position in the in-red.. rotation
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& rot = t.vertices()[v];
        if (rot.size() != 4) continue;
        for (int start = 0; start < 4; ++start) {
            bool ok = true;
            for (int k = 0; k < 4; ++k) {
                const int d = rot[(start + k) % 4];
                ok = ok && u.color[d] == kSlotColor[k] && u.dir[d] == kSlotDir[k];
            }
            if (ok)
                for (int k = 0; k < 4; ++k) slot_of[rot[(start + k) % 4]] = k;
        }
        white[v] = b.add_vertex(white_tag, 3);
        black[v] = b.add_vertex(black_tag, 3);
        b.add_edge(white[v], 0, black[v], 0, static_cast<int>(EColor::Blue));
    }
    // white rotation: blue, in-green, in-red; black rotation: blue, out-green, out-red
    auto white_slot = [&](int d) { return slot_of[d] == 3 ? 1 : 2; };
    auto black_slot = [&](int d) { return slot_of[d] == 1 ? 1 : 2; };
    auto leg = [&](int at, int s, EColor c) {
        const int leaf = b.add_vertex(leaf_tag, 1);
        b.add_edge(at, s, leaf, 0, static_cast<int>(c));
    };
    for (int d = 0; d < t.darts(); ++d) {
        if (u.dir[d] < 0) continue;
        const int v = t.vertex(d), h = t.head(d), e = t.alpha(d);
        const bool leaf_tail = t.vertices()[v].size() == 1, leaf_head = t.vertices()[h].size() == 1;
        if (leaf_tail && leaf_head) throw DomainError("ternary_to_mobile: tree without nodes");
        if (leaf_head) {
            leg(black[v], black_slot(d), u.color[d]);
        } else if (leaf_tail) {
            const int node = b.add_vertex(black_tag, 3);
            const int plain_slot = u.color[d] == EColor::Green ? 1 : 2;
            b.add_edge(node, plain_slot, white[h], white_slot(e), static_cast<int>(u.color[d]));
            leg(node, 0, EColor::Blue);
            leg(node, 3 - plain_slot, u.color[d] == EColor::Red ? EColor::Green : EColor::Red);
        } else {
            b.add_edge(black[v], black_slot(d), white[h], white_slot(e), static_cast<int>(u.color[d]));
        }
    }
    auto out = mobile_of(b);
    if (auto r = validate_mobile(out); !r.ok) throw InvariantFailure("ternary_to_mobile: " + r.violation);
    return out;
}

std::vector<Mobile> enumerate_mobiles(int n, int cap) {
    require_cap(n, cap, "enumerate_mobiles");
    std::map<std::vector<int>, Mobile> found;
    if (n < 1) return {};
    struct Slot {
        int vertex, pos;
        EColor color;
        bool at_black;
    };
    const int black_tag = static_cast<int>(NodeKind::Black), white_tag = static_cast<int>(NodeKind::White),
              leaf_tag = static_cast<int>(NodeKind::Leaf);
    std::function<void(TreeBuilder, std::vector<Slot>, int)> grow = [&](TreeBuilder b, std::vector<Slot> open,
                                                                         int whites) {
        if (open.empty()) {
            if (whites != n) return;
            auto m = mobile_of(b);
            found.emplace(mobile_code(m), std::move(m));
            return;
        }
        const Slot s = open.back();
        open.pop_back();
        const int c = static_cast<int>(s.color);
        if (s.at_black) {
            // a leg, or a white child
            auto leaf_b = b;
            const int leaf = leaf_b.add_vertex(leaf_tag, 1);
            leaf_b.add_edge(s.vertex, s.pos, leaf, 0, c);
            grow(std::move(leaf_b), open, whites);
            if (whites < n) {
                const int w = b.add_vertex(white_tag, 3);
                b.add_edge(s.vertex, s.pos, w, 0, c);
                open.push_back({w, 1, next_color(s.color), false});
                open.push_back({w, 2, next_color(next_color(s.color)), false});
                grow(std::move(b), std::move(open), whites + 1);
            }
        } else {
            const int k = b.add_vertex(black_tag, 3);
            b.add_edge(s.vertex, s.pos, k, 0, c);
            open.push_back({k, 1, next_color(s.color), true});
            open.push_back({k, 2, next_color(next_color(s.color)), true});
            grow(std::move(b), std::move(open), whites);
        }
    };
    for (EColor c : {EColor::Blue, EColor::Green, EColor::Red}) {
        TreeBuilder b;
        const int leaf = b.add_vertex(leaf_tag, 1);
        const int k = b.add_vertex(black_tag, 3);
        b.add_edge(leaf, 0, k, 0, static_cast<int>(c));
        grow(b, {{k, 1, next_color(c), true}, {k, 2, next_color(next_color(c)), true}}, 0);
    }
    std::vector<Mobile> out;
    for (auto& [code, m] : found) out.push_back(std::move(m));
    return out;
}

std::vector<TernaryTree> enumerate_ternary(int i, int j, int cap) {
    const int n = i + j + 1;
    require_cap(n, cap, "enumerate_ternary");
    std::map<std::vector<int>, TernaryTree> found;
    struct Slot {
        int vertex, pos;
    };
    // the slot a child edge occupies at the child
    constexpr int kOpposite[4] = {2, 3, 0, 1};
    auto attach = [](TreeBuilder& b, int v, int pos, int w, int wpos) {
        // edges are stored tail first
        if (kSlotDir[pos] > 0) b.add_edge(v, pos, w, wpos, static_cast<int>(kSlotColor[pos]));
        else b.add_edge(w, wpos, v, pos, static_cast<int>(kSlotColor[pos]));
    };
    std::function<void(TreeBuilder, std::vector<Slot>, int)> grow = [&](TreeBuilder b, std::vector<Slot> open,
                                                                         int nodes) {
        if (open.empty()) {
            if (nodes != n) return;
            auto t = ternary_of(b);
            if (t.params() == std::pair{i, j}) found.emplace(ternary_code(t), std::move(t));
            return;
        }
        const Slot s = open.back();
        open.pop_back();
        auto leaf_b = b;
        const int leaf = leaf_b.add_vertex(0, 1);
        attach(leaf_b, s.vertex, s.pos, leaf, 0);
        grow(std::move(leaf_b), open, nodes);
        if (nodes < n) {
            const int w = b.add_vertex(0, 4);
            const int wpos = kOpposite[s.pos];
            attach(b, s.vertex, s.pos, w, wpos);
            for (int k = 1; k < 4; ++k) open.push_back({w, (wpos + k) % 4});
            grow(std::move(b), std::move(open), nodes + 1);
        }
    };
    for (int pos = 0; pos < 4; ++pos) {
        TreeBuilder b;
        const int leaf = b.add_vertex(0, 1);
        const int v = b.add_vertex(0, 4);
        attach(b, v, pos, leaf, 0);
        std::vector<Slot> open;
        for (int k = 1; k < 4; ++k) open.push_back({v, (pos + k) % 4});
        grow(b, open, 1);
    }
    std::vector<TernaryTree> out;
    for (auto& [code, t] : found) out.push_back(std::move(t));
    return out;
}

}  // namespace gtam
