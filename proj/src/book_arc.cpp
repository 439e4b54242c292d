#include "gtam/book_arc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "gtam/errors.hpp"

namespace gtam {

AugmentedMap augmented(const SeparatingDecomposition& s) {
    const auto& m = s.map();
    AugmentedMap aug;
    std::vector<int> vdeg(m.vertex_count(), 0);
    std::vector<std::vector<int>> face_ends(m.face_count());
    for (int f = 0; f < m.face_count(); ++f) {
        if (f == m.outer_face()) continue;
        for (int d : m.faces()[f]) {
            if (s.color[m.sigma_inv(d)] == s.color[d]) continue;
            aug.green.emplace_back(m.vertex(d), f);
            ++vdeg[m.vertex(d)];
            face_ends[f].push_back(m.vertex(d));
        }
        if (face_ends[f].size() != 2) throw InvariantFailure("augmented: inner face without exactly two bicolored corners");
    }
    const int sp = s.quad.s_prime(), tp = s.quad.t_prime();
    for (int v = 0; v < m.vertex_count(); ++v) {
        const int want = (v == s.quad.s() || v == s.quad.t()) ? 0 : (v == sp || v == tp) ? 1 : 2;
        if (vdeg[v] != want) throw InvariantFailure("augmented: wrong green degree");
    }
    std::vector<std::vector<int>> faces_at(m.vertex_count());
    for (auto [v, f] : aug.green) faces_at[v].push_back(f);
    int v = sp, from_face = -1;
    aug.path_vertices.push_back(v);
    while (v != tp) {
        const int f = faces_at[v][0] != from_face ? faces_at[v][0] : faces_at[v][1];
        const int w = face_ends[f][0] != v ? face_ends[f][0] : face_ends[f][1];
        aug.path_faces.push_back(f);
        aug.path_vertices.push_back(w);
        from_face = f;
        v = w;
        if (static_cast<int>(aug.path_vertices.size()) > m.vertex_count())
            throw InvariantFailure("augmented: green edges do not form a path");
    }
    if (static_cast<int>(aug.path_vertices.size()) != m.vertex_count() - 2)
        throw InvariantFailure("augmented: green path misses vertices");
    return aug;
}

namespace {

// Clockwise order of the arcs at a line position: upper-left by increasing
// length, upper-right by decreasing length, lower-right by increasing length,
// lower-left by decreasing length.
std::tuple<int, int> arc_key(int pos, int other, bool upper) {
    const int len = std::abs(other - pos);
    if (upper) return other < pos ? std::tuple{0, len} : std::tuple{1, -len};
    return other > pos ? std::tuple{2, len} : std::tuple{3, -len};
}

struct LineEdge {
    int tail_pos, head_pos;
    EColor color;
};

// Rotation system induced by drawing every blue edge below and every red
// edge above the line. Dart 2k is the tail of edges[k].
std::vector<std::vector<int>> line_rotation(int positions, const std::vector<LineEdge>& edges) {
    std::vector<std::vector<std::pair<std::tuple<int, int>, int>>> at(positions);
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
        const auto& e = edges[k];
        const bool up = e.color == EColor::Red;
        at[e.tail_pos].push_back({arc_key(e.tail_pos, e.head_pos, up), 2 * k});
        at[e.head_pos].push_back({arc_key(e.head_pos, e.tail_pos, up), 2 * k + 1});
    }
    std::vector<std::vector<int>> rot(positions);
    for (int p = 0; p < positions; ++p) {
        std::sort(at[p].begin(), at[p].end());
        for (auto& [key, d] : at[p]) rot[p].push_back(d);
    }
    return rot;
}

bool crossing(const std::vector<Arc>& arcs) {
    for (const Arc& a : arcs)
        for (const Arc& b : arcs)
            if (a.left < b.left && b.left < a.right && a.right < b.right) return true;
    return false;
}

}  // namespace

Walk BookEmbedding::middle_word() const {
    std::string w;
    for (std::size_t k = 2; k + 2 < line.size(); ++k) w += line_color[k] == VColor::Black ? 'E' : 'N';
    return Walk(w);
}

BookEmbedding book_embedding(const SeparatingDecomposition& s) {
    const auto& m = s.map();
    const auto aug = augmented(s);
    BookEmbedding b;
    b.line.push_back(s.quad.t());
    for (int v : aug.path_vertices) b.line.push_back(v);
    b.line.push_back(s.quad.s());
    std::vector<int> pos(m.vertex_count());
    for (int k = 0; k < static_cast<int>(b.line.size()); ++k) {
        pos[b.line[k]] = k;
        b.line_color.push_back(s.quad.color[b.line[k]]);
    }
    std::vector<LineEdge> edges;
    std::vector<int> tails;
    for (int d = 0; d < m.darts(); ++d) {
        if (s.dir[d] < 0) continue;
        const Arc arc{std::min(pos[m.vertex(d)], pos[m.head(d)]), std::max(pos[m.vertex(d)], pos[m.head(d)]), d};
        (s.color[d] == EColor::Blue ? b.lower : b.upper).push_back(arc);
        edges.push_back({pos[m.vertex(d)], pos[m.head(d)], s.color[d]});
        tails.push_back(d);
    }
    auto by_ends = [](const Arc& x, const Arc& y) { return std::tie(x.left, x.right) < std::tie(y.left, y.right); };
    std::sort(b.lower.begin(), b.lower.end(), by_ends);
    std::sort(b.upper.begin(), b.upper.end(), by_ends);

    if (crossing(b.lower) || crossing(b.upper)) throw InvariantFailure("book_embedding: crossing arcs");
    for (const Arc& a : b.lower)
        if (b.line_color[a.right] != VColor::Black) throw InvariantFailure("book_embedding: blue arc with white right end");
    for (const Arc& a : b.upper)
        if (b.line_color[a.left] != VColor::Black) throw InvariantFailure("book_embedding: red arc with white left end");
    std::vector<int> whites;
    for (int v : b.line)
        if (s.quad.color[v] == VColor::White) whites.push_back(v);
    if (whites != indegree_profile(s).order)
        throw InvariantFailure("book_embedding: white vertices out of first-visit order");

    // The drawing must reproduce the rotation system of the map.
    const auto rot = line_rotation(static_cast<int>(b.line.size()), edges);
    auto dart_of = [&](int x) { return x % 2 == 0 ? tails[x / 2] : m.alpha(tails[x / 2]); };
    for (int p = 0; p < static_cast<int>(rot.size()); ++p) {
        const auto& r = rot[p];
        for (std::size_t k = 0; k < r.size(); ++k)
            if (m.sigma(dart_of(r[k])) != dart_of(r[(k + 1) % r.size()]))
                throw InvariantFailure("book_embedding: drawing does not match the rotation system");
    }
    return b;
}

bool match_dots(const std::vector<Dot>& dots, Dot open, Dot close, std::vector<int>& partner) {
    partner.assign(dots.size(), -1);
    std::vector<int> stack;
    for (int p = 0; p < static_cast<int>(dots.size()); ++p) {
        if (dots[p] == open) {
            stack.push_back(p);
        } else if (dots[p] == close) {
            if (stack.empty()) return false;
            partner[p] = stack.back();
            partner[stack.back()] = p;
            stack.pop_back();
        }
    }
    return stack.empty();
}

ArcDiagram::ArcDiagram(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw DomainError("arc diagram: no segment");
    for (int r = 0; r < static_cast<int>(segments_.size()); ++r) {
        const auto& sg = segments_[r];
        if (sg.blue < 0 || sg.black < 0 || sg.red < 0) throw DomainError("arc diagram: negative dot count");
        for (auto [n, kind] : {std::pair{sg.blue, Dot::Blue}, {sg.black, Dot::Black}, {sg.red, Dot::Red}})
            for (int k = 0; k < n; ++k) {
                dots_.push_back(kind);
                segment_of_.push_back(r);
            }
    }
    if (!match_dots(dots_, Dot::Blue, Dot::Black, lower_partner_))
        throw DomainError("arc diagram: blue dots cannot be matched to black dots");
    if (!match_dots(dots_, Dot::Black, Dot::Red, upper_partner_))
        throw DomainError("arc diagram: black dots cannot be matched to red dots");
}

int ArcDiagram::i() const {
    int n = 0;
    for (const auto& sg : segments_) n += sg.black;
    return n;
}

bool ArcDiagram::operator<(const ArcDiagram& o) const {
    auto key = [](const ArcDiagram& a) {
        std::vector<std::tuple<int, int, int>> v;
        for (const auto& sg : a.segments_) v.emplace_back(sg.blue, sg.black, sg.red);
        return v;
    };
    return key(*this) < key(o);
}

std::vector<Arc> ArcDiagram::lower_arcs() const {
    std::vector<Arc> out;
    for (int p = 0; p < static_cast<int>(dots_.size()); ++p)
        if (dots_[p] == Dot::Blue) out.push_back({p, lower_partner_[p], -1});
    return out;
}

std::vector<Arc> ArcDiagram::upper_arcs() const {
    std::vector<Arc> out;
    for (int p = 0; p < static_cast<int>(dots_.size()); ++p)
        if (dots_[p] == Dot::Black) out.push_back({p, upper_partner_[p], -1});
    return out;
}

ArcDiagram chi(const SeparatingDecomposition& s) {
    const auto& m = s.map();
    const auto b = book_embedding(s);
    const auto prof = indegree_profile(s);
    const int j = static_cast<int>(prof.order.size()) - 2;
    std::vector<int> white_index(m.vertex_count(), -1);
    for (int r = 0; r < static_cast<int>(prof.order.size()); ++r) white_index[prof.order[r]] = r;

    std::vector<Segment> seg(j + 1);
    std::vector<int> black_segment(m.vertex_count(), -1);
    int r = -1;
    for (std::size_t k = 1; k + 1 < b.line.size(); ++k) {
        const int v = b.line[k];
        if (white_index[v] >= 0) {
            r = white_index[v];
        } else {
            ++seg[r].black;
            black_segment[v] = r;
        }
    }
    for (int q = 0; q <= j; ++q) {
        seg[q].blue = prof.blue_in[q];
        seg[q].red = prof.red_in[q + 1];
    }
    ArcDiagram a(seg);

    // The forced matchings must agree with the edges leaving black vertices.
    std::vector<int> blacks;
    for (std::size_t k = 1; k + 1 < b.line.size(); ++k)
        if (white_index[b.line[k]] < 0) blacks.push_back(b.line[k]);
    int seen = 0;
    for (int p = 0; p < static_cast<int>(a.dots().size()); ++p) {
        if (a.dots()[p] != Dot::Black) continue;
        const int v = blacks[seen++];
        const int blue_to = white_index[m.head(s.out_dart(v, EColor::Blue))];
        const int red_to = white_index[m.head(s.out_dart(v, EColor::Red))];
        if (a.segment_of(a.lower_partner(p)) != blue_to || a.segment_of(a.upper_partner(p)) + 1 != red_to)
            throw InvariantFailure("chi: forced matching disagrees with the separating decomposition");
    }
    return a;
}

SeparatingDecomposition chi_inverse(const ArcDiagram& a) {
    const int j = a.j();
    const auto& dots = a.dots();
    const int ndots = static_cast<int>(dots.size());
    // Line positions: t, v_0, blacks of segment 0, v_1, ..., v_{j+1}, s.
    std::vector<int> white_pos(j + 2), dot_vertex_pos(ndots, -1);
    int pos = 0;
    const int t_pos = pos++;
    for (int r = 0; r <= j; ++r) {
        white_pos[r] = pos++;
        for (int p = 0; p < ndots; ++p)
            if (a.segment_of(p) == r && dots[p] == Dot::Black) dot_vertex_pos[p] = pos++;
    }
    white_pos[j + 1] = pos++;
    const int s_pos = pos++;
    const int positions = pos;

    std::vector<LineEdge> edges;
    for (int p = 0; p < ndots; ++p) {
        if (dots[p] != Dot::Black) continue;
        edges.push_back({dot_vertex_pos[p], white_pos[a.segment_of(a.lower_partner(p))], EColor::Blue});
        edges.push_back({dot_vertex_pos[p], white_pos[a.segment_of(a.upper_partner(p)) + 1], EColor::Red});
    }
    // White v_r sits just before the dots of segment r (after all dots for r = j+1).
    auto boundary = [&](int r) {
        int first = 0;
        while (first < ndots && a.segment_of(first) < r) ++first;
        return first;  // dots with index < first lie to the left of v_r
    };
    for (int r = 0; r <= j + 1; ++r) {
        const int cut = boundary(r);
        int blue_to = s_pos, red_to = t_pos, best_blue = -1, best_red = -1;
        for (int p = 0; p < ndots; ++p) {
            if (dots[p] == Dot::Blue) {
                const int q = a.lower_partner(p);
                if (p < cut && q >= cut && p > best_blue) {
                    best_blue = p;
                    blue_to = dot_vertex_pos[q];
                }
            } else if (dots[p] == Dot::Black) {
                const int q = a.upper_partner(p);
                if (p < cut && q >= cut && p > best_red) {
                    best_red = p;
                    red_to = dot_vertex_pos[p];
                }
            }
        }
        edges.push_back({white_pos[r], blue_to, EColor::Blue});
        edges.push_back({white_pos[r], red_to, EColor::Red});
    }

    EdgeList g{positions, {}};
    for (const auto& e : edges) g.edges.emplace_back(e.tail_pos, e.head_pos);
    const auto rot = line_rotation(positions, edges);
    int root = -1;
    for (int k = 0; k < static_cast<int>(edges.size()); ++k)
        if (edges[k].tail_pos == white_pos[0] && edges[k].head_pos == s_pos) root = 2 * k + 1;
    RotationMap m = build_map(g, rot, root);

    std::vector<VColor> pos_color(positions, VColor::Black);
    for (int r = 0; r <= j + 1; ++r) pos_color[white_pos[r]] = VColor::White;
    SeparatingDecomposition out{{m, std::vector<VColor>(m.vertex_count())},
                                DartDirections(m.darts()),
                                DartColors(m.darts())};
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
        out.quad.color[m.vertex(2 * k)] = pos_color[edges[k].tail_pos];
        out.quad.color[m.vertex(2 * k + 1)] = pos_color[edges[k].head_pos];
        out.dir[2 * k] = 1;
        out.dir[2 * k + 1] = -1;
        out.color[2 * k] = out.color[2 * k + 1] = edges[k].color;
    }
    return canonicalized(out);
}

WalkTriple xi(const ArcDiagram& a) {
    std::vector<int> al, mu, be;
    for (const auto& sg : a.segments()) {
        al.push_back(sg.blue);
        mu.push_back(sg.black);
        be.push_back(sg.red);
    }
    return {Walk::from_east_per_height(al), Walk::from_east_per_height(mu), Walk::from_east_per_height(be)};
}

ArcDiagram xi_inverse(const WalkTriple& r) {
    const auto al = r.lower.east_per_height();
    const auto mu = r.middle.east_per_height();
    const auto be = r.upper.east_per_height();
    if (al.size() != mu.size() || mu.size() != be.size()) throw DomainError("xi_inverse: walks of different heights");
    std::vector<Segment> seg;
    for (std::size_t k = 0; k < al.size(); ++k) seg.push_back({al[k], mu[k], be[k]});
    return ArcDiagram(seg);
}

bool has_z_pattern(const ArcDiagram& a) {
    const auto lower = a.lower_arcs();  // (blue dot, black dot)
    const auto upper = a.upper_arcs();  // (black dot, red dot)
    for (const Arc& b : lower)
        for (const Arc& r : upper)
            if (r.left < b.left && b.left < r.right && r.right < b.right) return true;
    return false;
}

ArcDiagram half_turn(const ArcDiagram& a) {
    std::vector<Segment> seg;
    for (auto it = a.segments().rbegin(); it != a.segments().rend(); ++it) seg.push_back({it->red, it->black, it->blue});
    return ArcDiagram(seg);
}

ModifiedDiagram modified_diagram(const ArcDiagram& a) {
    ModifiedDiagram md{a, {}, {}, {}};
    if (!match_dots(a.dots(), Dot::Blue, Dot::Red, md.upper_partner))
        throw DomainError("modified_diagram: blue dots cannot be matched to red dots");
    for (int p = 0; p < static_cast<int>(a.dots().size()); ++p) {
        if (a.dots()[p] != Dot::Blue) continue;
        md.U.push_back(a.segment_of(a.lower_partner(p)));
        md.V.push_back(a.segment_of(md.upper_partner[p]));
    }
    return md;
}

bool has_forbidden_pattern(const ModifiedDiagram& m) {
    for (std::size_t k = 0; k < m.U.size(); ++k)
        if (m.U[k] > m.V[k]) return true;
    return false;
}

std::vector<ArcDiagram> enumerate_arc_diagrams(int i, int j) {
    // compositions of i into j+1 parts, one per dot color
    std::vector<std::vector<int>> comps;
    std::vector<int> cur(j + 1, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == j) {
            cur[k] = left;
            comps.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[k] = x;
            rec(k + 1, left - x);
        }
    };
    rec(0, i);
    std::vector<ArcDiagram> out;
    std::vector<int> partner;
    for (const auto& al : comps)
        for (const auto& mu : comps)
            for (const auto& be : comps) {
                std::vector<Segment> seg;
                std::vector<Dot> dots;
                for (int r = 0; r <= j; ++r) {
                    seg.push_back({al[r], mu[r], be[r]});
                    dots.insert(dots.end(), al[r], Dot::Blue);
                    dots.insert(dots.end(), mu[r], Dot::Black);
                    dots.insert(dots.end(), be[r], Dot::Red);
                }
                if (match_dots(dots, Dot::Blue, Dot::Black, partner) && match_dots(dots, Dot::Black, Dot::Red, partner))
                    out.emplace_back(seg);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gtam
