#include "gtam/planar_maps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "gtam/errors.hpp"

namespace gtam {

char to_char(VColor c) { return c == VColor::Black ? 'b' : 'w'; }

char to_char(EColor c) {
    switch (c) {
        case EColor::Blue: return 'b';
        case EColor::Red: return 'r';
        case EColor::Green: return 'g';
        case EColor::None: break;
    }
    return '-';
}

namespace {

bool is_permutation_vec(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

}  // namespace

RotationMap::RotationMap(std::vector<int> alpha, std::vector<int> sigma, int root)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)), root_(root) {
    if (alpha_.size() != sigma_.size() || alpha_.empty())
        throw DomainError("rotation map: alpha and sigma must be non-empty and of equal size");
    if (!is_permutation_vec(alpha_) || !is_permutation_vec(sigma_))
        throw DomainError("rotation map: alpha and sigma must be permutations");
    if (root_ < 0 || root_ >= darts()) throw DomainError("rotation map: root out of range");
    sigma_inv_.assign(darts(), 0);
    for (int d = 0; d < darts(); ++d) sigma_inv_[sigma_[d]] = d;
    build_orbits();
}

void RotationMap::build_orbits() {
    const int n = darts();
    vertex_of_.assign(n, -1);
    face_of_.assign(n, -1);
    edge_of_.assign(n, -1);
    vertices_.clear();
    faces_.clear();
    int edges = 0;
    for (int d = 0; d < n; ++d) {
        if (vertex_of_[d] < 0) {
            std::vector<int> orbit;
            for (int x = d; vertex_of_[x] < 0; x = sigma_[x]) {
                vertex_of_[x] = static_cast<int>(vertices_.size());
                orbit.push_back(x);
            }
            vertices_.push_back(std::move(orbit));
        }
        if (face_of_[d] < 0) {
            std::vector<int> orbit;
            for (int x = d; face_of_[x] < 0; x = phi(x)) {
                face_of_[x] = static_cast<int>(faces_.size());
                orbit.push_back(x);
            }
            faces_.push_back(std::move(orbit));
        }
        if (edge_of_[d] < 0) {
            edge_of_[d] = edges;
            edge_of_[alpha_[d]] = edges;
            ++edges;
        }
    }
    auto& outer = faces_[face_of_[root_]];
    std::rotate(outer.begin(), std::find(outer.begin(), outer.end(), root_), outer.end());
}

std::vector<int> RotationMap::rotation_from(int first) const {
    std::vector<int> out{first};
    for (int x = sigma_[first]; x != first; x = sigma_[x]) out.push_back(x);
    return out;
}

RotationMap RotationMap::mirror() const { return RotationMap(alpha_, sigma_inv_, sigma_inv_[root_]); }

std::optional<std::string> RotationMap::check() const {
    for (int d = 0; d < darts(); ++d)
        if (alpha_[d] == d || alpha_[alpha_[d]] != d) return "opposite is not a fixed-point-free involution";
    std::vector<char> seen(darts(), 0);
    std::queue<int> todo;
    todo.push(root_);
    seen[root_] = 1;
    int reached = 0;
    while (!todo.empty()) {
        const int d = todo.front();
        todo.pop();
        ++reached;
        for (int x : {alpha_[d], sigma_[d]})
            if (!seen[x]) {
                seen[x] = 1;
                todo.push(x);
            }
    }
    if (reached != darts()) return "map is not connected";
    if (vertex_count() - edges() + face_count() != 2) return "Euler relation fails (not planar)";
    return std::nullopt;
}

bool RotationMap::has_loop() const {
    for (int d = 0; d < darts(); ++d)
        if (vertex(d) == head(d)) return true;
    return false;
}

bool RotationMap::has_multi_edge() const {
    std::set<std::pair<int, int>> seen;
    for (int d = 0; d < darts(); ++d) {
        if (d > alpha_[d]) continue;
        const int a = vertex(d), b = head(d);
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return true;
    }
    return false;
}

std::vector<int> RotationMap::canonical_labels() const {
    std::vector<int> label(darts(), -1);
    std::queue<int> todo;
    int next = 0;
    label[root_] = next++;
    todo.push(root_);
    while (!todo.empty()) {
        const int d = todo.front();
        todo.pop();
        for (int x : {sigma_[d], alpha_[d]})
            if (label[x] < 0) {
                label[x] = next++;
                todo.push(x);
            }
    }
    return label;
}

std::vector<int> canonical_code(const RotationMap& m, const std::vector<int>& dart_labels) {
    const auto label = m.canonical_labels();
    std::vector<int> old_of(m.darts());
    for (int d = 0; d < m.darts(); ++d) old_of[label[d]] = d;
    std::vector<int> code{m.darts()};
    code.reserve(1 + 3 * m.darts());
    for (int k = 0; k < m.darts(); ++k) {
        const int d = old_of[k];
        code.push_back(label[m.sigma(d)]);
        code.push_back(label[m.alpha(d)]);
        if (!dart_labels.empty()) code.push_back(dart_labels[d]);
    }
    return code;
}

RotationMap relabeled(const RotationMap& m, const std::vector<int>& label) {
    std::vector<int> alpha(m.darts()), sigma(m.darts());
    for (int d = 0; d < m.darts(); ++d) {
        alpha[label[d]] = label[m.alpha(d)];
        sigma[label[d]] = label[m.sigma(d)];
    }
    return RotationMap(std::move(alpha), std::move(sigma), label[m.root()]);
}

RotationMap build_map(const EdgeList& g, const std::vector<std::vector<int>>& rotation, int root) {
    const int n = 2 * static_cast<int>(g.edges.size());
    std::vector<int> alpha(n), sigma(n, -1);
    for (int k = 0; k < n; k += 2) {
        alpha[k] = k + 1;
        alpha[k + 1] = k;
    }
    for (const auto& cyc : rotation)
        for (std::size_t a = 0; a < cyc.size(); ++a) sigma[cyc[a]] = cyc[(a + 1) % cyc.size()];
    return RotationMap(std::move(alpha), std::move(sigma), root);
}

namespace {

std::vector<int> vertex_payload_to_darts(const RotationMap& m, const std::vector<VColor>& color) {
    std::vector<int> out(m.darts());
    for (int d = 0; d < m.darts(); ++d) out[d] = static_cast<int>(color[m.vertex(d)]);
    return out;
}

std::vector<VColor> darts_to_vertex_colors(const RotationMap& m, const std::vector<int>& per_dart) {
    std::vector<VColor> color(m.vertex_count());
    for (int d = 0; d < m.darts(); ++d) color[m.vertex(d)] = static_cast<VColor>(per_dart[d]);
    return color;
}

// Cyclic orders of `darts` with the first element fixed.
std::vector<std::vector<int>> cyclic_orders(std::vector<int> darts) {
    std::vector<std::vector<int>> out;
    if (darts.size() <= 2) {
        out.push_back(darts);
        return out;
    }
    std::sort(darts.begin() + 1, darts.end());
    do {
        out.push_back(darts);
    } while (std::next_permutation(darts.begin() + 1, darts.end()));
    return out;
}

// Calls `emit(sigma)` for every rotation system of g whose faces all satisfy
// `degree_ok` and whose face count equals `faces`.
void for_each_embedding(const EdgeList& g, int faces, const std::function<bool(int)>& degree_ok,
                        const std::function<void(const std::vector<int>&)>& emit) {
    const int n = 2 * static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> at(g.vertex_count);
    for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
        at[g.edges[k].first].push_back(2 * k);
        at[g.edges[k].second].push_back(2 * k + 1);
    }
    std::vector<std::vector<std::vector<int>>> options;
    for (auto& darts : at) {
        if (darts.empty()) return;
        options.push_back(cyclic_orders(darts));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    std::vector<int> sigma(n);
    std::vector<int> mark(n, -1);
    int stamp = 0;
    while (true) {
        for (std::size_t v = 0; v < options.size(); ++v) {
            const auto& cyc = options[v][pick[v]];
            for (std::size_t a = 0; a < cyc.size(); ++a) sigma[cyc[a]] = cyc[(a + 1) % cyc.size()];
        }
        ++stamp;
        int count = 0;
        bool ok = true;
        for (int d = 0; d < n && ok; ++d) {
            if (mark[d] == stamp) continue;
            int deg = 0;
            for (int x = d; mark[x] != stamp; x = sigma[x ^ 1]) {
                mark[x] = stamp;
                ++deg;
            }
            ++count;
            ok = degree_ok(deg) && count <= faces;
        }
        if (ok && count == faces) emit(sigma);
        std::size_t v = 0;
        while (v < options.size() && ++pick[v] == options[v].size()) pick[v++] = 0;
        if (v == options.size()) break;
    }
}

bool connected(const EdgeList& g) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : g.edges) parent[find(a)] = find(b);
    for (int v = 0; v < g.vertex_count; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

// Visit every k-subset (or k-multiset) of {0..n-1} as a sorted index vector.
void for_each_combination(int n, int k, bool repeat, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (int x = from; x < n; ++x) {
            idx[pos] = x;
            rec(pos + 1, repeat ? x : x + 1);
        }
    };
    rec(0, 0);
}

std::vector<int> dir_payload(const DartDirections& dir) {
    return std::vector<int>(dir.begin(), dir.end());
}

}  // namespace

int Quadrangulation::black_count() const {
    return static_cast<int>(std::count(color.begin(), color.end(), VColor::Black));
}

int Quadrangulation::white_count() const {
    return static_cast<int>(std::count(color.begin(), color.end(), VColor::White));
}

int BipolarOrientation::sink() const {
    for (int v = 0; v < map.vertex_count(); ++v) {
        bool any_out = false;
        for (int d : map.vertices()[v]) any_out = any_out || dir[d] > 0;
        if (!any_out) return v;
    }
    throw DomainError("bipolar orientation has no sink");
}

std::pair<int, int> BipolarOrientation::boundary() const {
    const auto& outer = map.faces()[map.outer_face()];
    const int t = sink();
    int left = 0;
    std::size_t k = 0;
    for (; k < outer.size(); ++k) {
        ++left;
        if (map.head(outer[k]) == t) break;
    }
    const int right = static_cast<int>(outer.size()) - left;
    return {left - 1, right - 1};
}

std::vector<int> out_darts(const RotationMap& m, const DartDirections& dir, int v) {
    std::vector<int> out;
    for (int d : m.vertices()[v])
        if (dir[d] > 0) out.push_back(d);
    return out;
}

std::vector<int> in_darts(const RotationMap& m, const DartDirections& dir, int v) {
    std::vector<int> out;
    for (int d : m.vertices()[v])
        if (dir[d] < 0) out.push_back(d);
    return out;
}

namespace {

// Number of maximal runs of equal signs in a cyclic sequence (1 if constant).
int cyclic_runs(const std::vector<int>& signs) {
    if (signs.empty()) return 0;
    int changes = 0;
    for (std::size_t k = 0; k < signs.size(); ++k)
        if (signs[k] != signs[(k + 1) % signs.size()]) ++changes;
    return changes == 0 ? 1 : changes;
}

}  // namespace

Report validate_quadrangulation(const Quadrangulation& q) {
    const auto& m = q.map;
    if (auto bad = m.check()) return Report::fail(*bad);
    if (static_cast<int>(q.color.size()) != m.vertex_count()) return Report::fail("vertex color count mismatch");
    if (m.has_loop()) return Report::fail("map has a loop");
    if (m.has_multi_edge()) return Report::fail("map has a multiple edge");
    for (const auto& f : m.faces())
        if (f.size() != 4) return Report::fail("face degree != 4");
    for (int d = 0; d < m.darts(); ++d)
        if (q.color[m.vertex(d)] == q.color[m.head(d)]) return Report::fail("edge joins two vertices of the same color");
    if (q.color[q.s()] != VColor::Black) return Report::fail("root vertex is not black");
    return {};
}

Report validate_triangulation(const Triangulation& t) {
    const auto& m = t.map;
    if (auto bad = m.check()) return Report::fail(*bad);
    if (m.has_loop()) return Report::fail("map has a loop");
    if (m.has_multi_edge()) return Report::fail("map has a multiple edge");
    for (const auto& f : m.faces())
        if (f.size() != 3) return Report::fail("face degree != 3");
    return {};
}

Report validate_bipolar(const BipolarOrientation& b) {
    const auto& m = b.map;
    if (auto bad = m.check()) return Report::fail(*bad);
    if (static_cast<int>(b.dir.size()) != m.darts()) return Report::fail("direction count mismatch");
    for (int d = 0; d < m.darts(); ++d)
        if (b.dir[d] == 0 || b.dir[m.alpha(d)] != -b.dir[d]) return Report::fail("edge without a consistent direction");
    if (m.has_loop()) return Report::fail("not acyclic");

    const int nv = m.vertex_count();
    std::vector<int> indeg(nv, 0);
    for (int d = 0; d < m.darts(); ++d)
        if (b.dir[d] < 0) ++indeg[m.vertex(d)];
    std::vector<int> order;
    std::vector<int> deg = indeg;
    for (int v = 0; v < nv; ++v)
        if (deg[v] == 0) order.push_back(v);
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int d : m.vertices()[order[k]])
            if (b.dir[d] > 0 && --deg[m.head(d)] == 0) order.push_back(m.head(d));
    if (static_cast<int>(order.size()) != nv) return Report::fail("not acyclic");

    int sources = 0, sinks = 0, sink = -1;
    for (int v = 0; v < nv; ++v) {
        const bool has_in = indeg[v] > 0;
        const bool has_out = indeg[v] < static_cast<int>(m.vertices()[v].size());
        sources += !has_in;
        if (!has_out) {
            ++sinks;
            sink = v;
        }
    }
    if (sources != 1 || sinks != 1) return Report::fail("not a unique source and sink");
    if (indeg[b.source()] != 0) return Report::fail("root is not at the source");
    if (b.dir[m.root()] <= 0) return Report::fail("root dart is not outgoing");
    bool sink_outer = false;
    for (int d : m.faces()[m.outer_face()]) sink_outer = sink_outer || m.vertex(d) == sink;
    if (!sink_outer) return Report::fail("sink not on the outer face");

    for (int f = 0; f < m.face_count(); ++f) {
        if (f == m.outer_face()) continue;
        std::vector<int> signs;
        for (int d : m.faces()[f]) signs.push_back(b.dir[d]);
        if (cyclic_runs(signs) != 2) return Report::fail("inner face is not split into two directed intervals");
    }
    for (int v = 0; v < nv; ++v) {
        if (v == b.source() || v == sink) continue;
        std::vector<int> signs;
        for (int d : m.vertices()[v]) signs.push_back(b.dir[d]);
        if (cyclic_runs(signs) != 2) return Report::fail("non-pole vertex edges not split into in/out intervals");
    }
    return {};
}

std::pair<int, int> face_type(const BipolarOrientation& b, int face) {
    if (face == b.map.outer_face()) throw DomainError("face_type: outer face has no type");
    int ccw = 0, cw = 0;
    for (int d : b.map.faces()[face]) (b.dir[d] > 0 ? ccw : cw)++;
    return {cw - 1, ccw - 1};
}

std::vector<int> quad_code(const Quadrangulation& q) {
    return canonical_code(q.map, vertex_payload_to_darts(q.map, q.color));
}

std::vector<int> bipolar_code(const BipolarOrientation& b) { return canonical_code(b.map, dir_payload(b.dir)); }

std::vector<int> triangulation_code(const Triangulation& t) { return canonical_code(t.map); }

Quadrangulation mirror(const Quadrangulation& q) {
    Quadrangulation out{q.map.mirror(), {}};
    out.color = darts_to_vertex_colors(out.map, vertex_payload_to_darts(q.map, q.color));
    return out;
}

Triangulation mirror(const Triangulation& t) { return {t.map.mirror()}; }

BipolarOrientation mirror(const BipolarOrientation& b) { return {b.map.mirror(), b.dir}; }

namespace {

Quadrangulation canonical_quad(const RotationMap& m, const std::vector<int>& dart_color) {
    const auto label = m.canonical_labels();
    RotationMap cm = relabeled(m, label);
    return {cm, darts_to_vertex_colors(cm, relabel_payload(dart_color, label))};
}

}  // namespace

std::vector<Quadrangulation> enumerate_quadrangulations(int i, int j, int cap) {
    require_cap(i + j, cap, "enumerate_quadrangulations");
    if (i < 0 || j < 0) throw DomainError("enumerate_quadrangulations: negative parameter");
    const int blacks = i + 2, whites = j + 2, nv = blacks + whites, ne = 2 * nv - 4;
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < blacks; ++b)
        for (int w = 0; w < whites; ++w) pairs.emplace_back(b, blacks + w);

    std::map<std::vector<int>, Quadrangulation> found;
    for_each_combination(static_cast<int>(pairs.size()), ne, false, [&](const std::vector<int>& pick) {
        EdgeList g{nv, {}};
        std::vector<int> deg(nv, 0);
        for (int k : pick) {
            g.edges.push_back(pairs[k]);
            ++deg[pairs[k].first];
            ++deg[pairs[k].second];
        }
        if (*std::min_element(deg.begin(), deg.end()) < 2 || !connected(g)) return;
        std::vector<int> dart_color(2 * ne);
        for (int k = 0; k < ne; ++k) {
            dart_color[2 * k] = static_cast<int>(VColor::Black);
            dart_color[2 * k + 1] = static_cast<int>(VColor::White);
        }
        for_each_embedding(g, nv - 2, [](int d) { return d == 4; }, [&](const std::vector<int>& sigma) {
            std::vector<int> alpha(2 * ne);
            for (int d = 0; d < 2 * ne; ++d) alpha[d] = d ^ 1;
            for (int root = 0; root < 2 * ne; root += 2) {
                RotationMap m(alpha, sigma, root);
                auto code = canonical_code(m, dart_color);
                if (found.count(code)) continue;
                found.emplace(std::move(code), canonical_quad(m, dart_color));
            }
        });
    });
    std::vector<Quadrangulation> out;
    for (auto& [code, q] : found) out.push_back(std::move(q));
    return out;
}

std::vector<Triangulation> enumerate_triangulations(int n, int cap) {
    require_cap(n, cap, "enumerate_triangulations");
    if (n < 0) throw DomainError("enumerate_triangulations: negative parameter");
    const int nv = n + 3, ne = 3 * nv - 6;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b) pairs.emplace_back(a, b);
    const int min_deg = nv == 3 ? 2 : 3;

    std::map<std::vector<int>, Triangulation> found;
    for_each_combination(static_cast<int>(pairs.size()), ne, false, [&](const std::vector<int>& pick) {
        EdgeList g{nv, {}};
        std::vector<int> deg(nv, 0);
        for (int k : pick) {
            g.edges.push_back(pairs[k]);
            ++deg[pairs[k].first];
            ++deg[pairs[k].second];
        }
        if (*std::min_element(deg.begin(), deg.end()) < min_deg || !connected(g)) return;
        for_each_embedding(g, 2 * nv - 4, [](int d) { return d == 3; }, [&](const std::vector<int>& sigma) {
            std::vector<int> alpha(2 * ne);
            for (int d = 0; d < 2 * ne; ++d) alpha[d] = d ^ 1;
            for (int root = 0; root < 2 * ne; ++root) {
                RotationMap m(alpha, sigma, root);
                auto code = canonical_code(m);
                if (found.count(code)) continue;
                found.emplace(std::move(code), Triangulation{relabeled(m, m.canonical_labels())});
            }
        });
    });
    std::vector<Triangulation> out;
    for (auto& [code, t] : found) out.push_back(std::move(t));
    return out;
}

std::vector<BipolarOrientation> enumerate_bipolar(int i, int j, int cap) {
    require_cap(i + j, cap, "enumerate_bipolar");
    if (i < 0 || j < 0) throw DomainError("enumerate_bipolar: negative parameter");
    const int nv = i + 2, ne = i + j + 1;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b) pairs.emplace_back(a, b);

    std::map<std::vector<int>, BipolarOrientation> found;
    for_each_combination(static_cast<int>(pairs.size()), ne, true, [&](const std::vector<int>& pick) {
        EdgeList g{nv, {}};
        for (int k : pick) g.edges.push_back(pairs[k]);
        if (!connected(g)) return;
        for_each_embedding(g, j + 1, [](int) { return true; }, [&](const std::vector<int>& sigma) {
            std::vector<int> alpha(2 * ne);
            for (int d = 0; d < 2 * ne; ++d) alpha[d] = d ^ 1;
            const RotationMap base(alpha, sigma, 0);
            for (int mask = 0; mask < (1 << ne); ++mask) {
                DartDirections dir(2 * ne);
                for (int k = 0; k < ne; ++k) {
                    dir[2 * k] = (mask >> k & 1) ? 1 : -1;
                    dir[2 * k + 1] = static_cast<std::int8_t>(-dir[2 * k]);
                }
                int source = -1, sources = 0;
                for (int v = 0; v < nv; ++v) {
                    bool has_in = false;
                    for (int d : base.vertices()[v]) has_in = has_in || dir[d] < 0;
                    if (!has_in) {
                        source = v;
                        ++sources;
                    }
                }
                if (sources != 1) continue;
                for (int f = 0; f < base.face_count(); ++f) {
                    int root = -1, hits = 0;
                    for (int d : base.faces()[f])
                        if (base.vertex(d) == source) {
                            root = d;
                            ++hits;
                        }
                    if (hits != 1) continue;
                    BipolarOrientation b{base.with_root(root), dir};
                    if (!validate_bipolar(b).ok) continue;
                    auto code = bipolar_code(b);
                    if (found.count(code)) continue;
                    const auto label = b.map.canonical_labels();
                    found.emplace(std::move(code),
                                  BipolarOrientation{relabeled(b.map, label), relabel_payload(b.dir, label)});
                }
            }
        });
    });
    std::vector<BipolarOrientation> out;
    for (auto& [code, b] : found) out.push_back(std::move(b));
    return out;
}

Quadrangulation four_cycle() {
    // vertices s=0 (black), s'=1 (white), t=2 (black), t'=3 (white);
    // edges s-s', s'-t, t-t', t'-s.
    EdgeList g{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    // clockwise at s: to s' then to t'; root dart s->s' is dart 0.
    std::vector<std::vector<int>> rot{{0, 7}, {1, 2}, {3, 4}, {5, 6}};
    RotationMap m = build_map(g, rot, 0);
    Quadrangulation q{m, std::vector<VColor>(4)};
    for (int d = 0; d < m.darts(); ++d) {
        const int graph_vertex = (d % 2 == 0) ? g.edges[d / 2].first : g.edges[d / 2].second;
        q.color[m.vertex(d)] = (graph_vertex % 2 == 0) ? VColor::Black : VColor::White;
    }
    return q;
}

BipolarOrientation single_edge() {
    RotationMap m({1, 0}, {0, 1}, 0);
    return {m, {1, -1}};
}

}  // namespace gtam
