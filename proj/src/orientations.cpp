#include "gtam/orientations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "gtam/errors.hpp"

namespace gtam {

namespace {

// One entry of a circular local pattern: an edge class (outgoing or
// ingoing, with a color), occurring exactly once or as a possibly empty block.
struct Token {
    int sign;
    EColor color;
    bool block;
};

using Pattern = std::vector<Token>;

const Pattern kWhiteRule{{1, EColor::Blue, false},
                         {-1, EColor::Red, true},
                         {1, EColor::Red, false},
                         {-1, EColor::Blue, true}};
const Pattern kBlackRule{{1, EColor::Blue, false},
                         {-1, EColor::Blue, true},
                         {1, EColor::Red, false},
                         {-1, EColor::Red, true}};
const Pattern kSchnyderRule{{1, EColor::Blue, false}, {-1, EColor::Red, true},
                            {1, EColor::Green, false}, {-1, EColor::Blue, true},
                            {1, EColor::Red, false},   {-1, EColor::Green, true}};

using EdgeClass = std::pair<int, EColor>;

bool matches(const std::vector<EdgeClass>& seq, const Pattern& pat) {
    const std::size_t n = seq.size();
    auto eq = [](const EdgeClass& c, const Token& t) { return c.first == t.sign && c.second == t.color; };
    for (std::size_t k = 0; k < n; ++k) {
        if (!eq(seq[k], pat[0])) continue;
        std::size_t pos = 0;
        bool ok = true;
        for (const Token& t : pat) {
            if (t.block) {
                while (pos < n && eq(seq[(k + pos) % n], t)) ++pos;
            } else if (pos < n && eq(seq[(k + pos) % n], t)) {
                ++pos;
            } else {
                ok = false;
                break;
            }
        }
        if (ok && pos == n) return true;
    }
    return false;
}

std::vector<EdgeClass> classes_at(const RotationMap& m, const DartDirections& dir, const DartColors& color, int v) {
    std::vector<EdgeClass> seq;
    for (int d : m.vertices()[v]) seq.emplace_back(dir[d], color[d]);
    return seq;
}

std::vector<int> overlay_payload(const RotationMap& m, const DartDirections& dir, const DartColors& color,
                                 const std::vector<VColor>* vcolor) {
    std::vector<int> out(m.darts());
    for (int d = 0; d < m.darts(); ++d) {
        const int vc = vcolor ? static_cast<int>((*vcolor)[m.vertex(d)]) : 0;
        out[d] = vc * 100 + (dir[d] + 1) * 10 + static_cast<int>(color[d]);
    }
    return out;
}

// Follows the outgoing dart of color c from every vertex in `from` and
// checks that `target` is reached without revisiting a vertex.
bool reaches(const RotationMap& m, const std::function<int(int)>& next, const std::vector<int>& from, int target) {
    for (int v : from) {
        int x = v;
        for (int steps = 0; x != target; ++steps) {
            if (steps > m.vertex_count()) return false;
            const int d = next(x);
            if (d < 0) return false;
            x = m.head(d);
        }
    }
    return true;
}

int find_out(const RotationMap& m, const DartDirections& dir, const DartColors& color, int v, EColor c) {
    for (int d : m.vertices()[v])
        if (dir[d] > 0 && color[d] == c) return d;
    return -1;
}

}  // namespace

int SeparatingDecomposition::out_dart(int v, EColor c) const { return find_out(map(), dir, color, v, c); }

int SchnyderWood::out_dart(int v, EColor c) const { return find_out(map(), dir, color, v, c); }

Report validate_sepdec(const SeparatingDecomposition& s) {
    if (auto r = validate_quadrangulation(s.quad); !r.ok) return r;
    const auto& m = s.map();
    if (static_cast<int>(s.dir.size()) != m.darts() || static_cast<int>(s.color.size()) != m.darts())
        return Report::fail("overlay size mismatch");
    for (int d = 0; d < m.darts(); ++d) {
        if (s.dir[d] == 0 || s.dir[m.alpha(d)] != -s.dir[d]) return Report::fail("edge without a consistent direction");
        if (s.color[d] != s.color[m.alpha(d)] || (s.color[d] != EColor::Blue && s.color[d] != EColor::Red))
            return Report::fail("edge without a consistent blue/red color");
    }
    const int sv = s.quad.s(), tv = s.quad.t();
    for (int v = 0; v < m.vertex_count(); ++v) {
        for (int d : m.vertices()[v]) {
            if (v == sv && (s.dir[d] > 0 || s.color[d] != EColor::Blue)) return Report::fail("edge at s is not ingoing blue");
            if (v == tv && (s.dir[d] > 0 || s.color[d] != EColor::Red)) return Report::fail("edge at t is not ingoing red");
        }
        if (v == sv || v == tv) continue;
        const Pattern& rule = s.quad.color[v] == VColor::White ? kWhiteRule : kBlackRule;
        if (!matches(classes_at(m, s.dir, s.color, v), rule)) return Report::fail("local rule violated");
    }
    std::vector<int> others;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (v != sv && v != tv) others.push_back(v);
    if (!reaches(m, [&](int v) { return s.out_dart(v, EColor::Blue); }, others, sv))
        return Report::fail("blue edges do not form a tree rooted at s");
    if (!reaches(m, [&](int v) { return s.out_dart(v, EColor::Red); }, others, tv))
        return Report::fail("red edges do not form a tree rooted at t");
    return {};
}

EColor corner_color(const SchnyderWood& w, int d) {
    const auto& m = w.map();
    const int v = m.vertex(d);
    if (v == w.tri.u_blue()) return EColor::Blue;
    if (v == w.tri.u_green()) return EColor::Green;
    if (v == w.tri.u_red()) return EColor::Red;
    int x = m.sigma_inv(d);
    while (w.dir[x] <= 0) x = m.sigma_inv(x);
    switch (w.color[x]) {
        case EColor::Green: return EColor::Blue;
        case EColor::Red: return EColor::Green;
        case EColor::Blue: return EColor::Red;
        case EColor::None: break;
    }
    throw InvariantFailure("corner_color: uncolored outgoing edge");
}

Report validate_schnyder(const SchnyderWood& w) {
    if (auto r = validate_triangulation(w.tri); !r.ok) return r;
    const auto& m = w.map();
    if (static_cast<int>(w.dir.size()) != m.darts() || static_cast<int>(w.color.size()) != m.darts())
        return Report::fail("overlay size mismatch");
    const int ub = w.tri.u_blue(), ug = w.tri.u_green(), ur = w.tri.u_red();
    auto outer_color = [&](int v) {
        return v == ub ? EColor::Blue : v == ug ? EColor::Green : v == ur ? EColor::Red : EColor::None;
    };
    for (int d = 0; d < m.darts(); ++d) {
        const bool outer_edge = w.tri.is_outer(m.vertex(d)) && w.tri.is_outer(m.head(d));
        if (outer_edge) {
            if (w.dir[d] != 0 || w.color[d] != EColor::None) return Report::fail("outer edge is oriented");
            continue;
        }
        if (w.dir[d] == 0 || w.dir[m.alpha(d)] != -w.dir[d]) return Report::fail("inner edge without a direction");
        if (w.color[d] == EColor::None || w.color[d] != w.color[m.alpha(d)])
            return Report::fail("inner edge without a consistent color");
        const EColor oc = outer_color(m.vertex(d));
        if (oc != EColor::None && (w.dir[d] > 0 || w.color[d] != oc))
            return Report::fail("edge at an outer vertex is not ingoing of its color");
    }
    std::vector<int> inner;
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (w.tri.is_outer(v)) continue;
        inner.push_back(v);
        if (!matches(classes_at(m, w.dir, w.color, v), kSchnyderRule)) return Report::fail("local rule violated");
    }
    for (auto [c, root] : {std::pair{EColor::Blue, ub}, {EColor::Green, ug}, {EColor::Red, ur}})
        if (!reaches(m, [&](int v) { return w.out_dart(v, c); }, inner, root))
            return Report::fail("a color class is not a tree");
    for (int f = 0; f < m.face_count(); ++f) {
        if (f == m.outer_face()) continue;
        std::vector<EColor> cs;
        for (int d : m.faces()[f]) cs.push_back(corner_color(w, d));
        // phi walks inner faces counterclockwise, so clockwise blue, green,
        // red reads blue, red, green here.
        const std::vector<EColor> want{EColor::Blue, EColor::Red, EColor::Green};
        bool ok = false;
        for (int k = 0; k < 3; ++k) {
            std::vector<EColor> rot{cs[k], cs[(k + 1) % 3], cs[(k + 2) % 3]};
            ok = ok || rot == want;
        }
        if (!ok) return Report::fail("face corners are not blue, green, red clockwise");
    }
    return {};
}

namespace {

// Backtracking over per-vertex choices of outgoing darts, one per color in
// `colors`. `forced(v, d)` returns the color dart d must have if outgoing
// from v (None if free); `rule(v)` is the local pattern at v or nullptr.
struct OverlaySearch {
    const RotationMap& m;
    std::vector<int> movers;  // vertices that choose outgoing darts
    std::vector<EColor> colors;
    std::function<EColor(int, int)> forced;
    std::function<const Pattern*(int)> rule;

    DartDirections dir;
    DartColors color;
    std::vector<char> done;  // per vertex: choice made (or fixed)
    std::vector<std::pair<DartDirections, DartColors>> found;

    bool ready(int w) const {
        if (!done[w]) return false;
        for (int d : m.vertices()[w])
            if (!done[m.head(d)]) return false;
        return true;
    }

    bool check_around(int v) const {
        std::vector<int> to_check{v};
        for (int d : m.vertices()[v]) to_check.push_back(m.head(d));
        for (int w : to_check) {
            const Pattern* p = rule(w);
            if (p && ready(w) && !matches(classes_at(m, dir, color, w), *p)) return false;
        }
        return true;
    }

    void run(std::size_t k) {
        if (k == movers.size()) {
            for (int d = 0; d < m.darts(); ++d)
                if (dir[d] == 0 && forced(m.vertex(d), d) != EColor::None) return;
            found.emplace_back(dir, color);
            return;
        }
        const int v = movers[k];
        const auto& darts = m.vertices()[v];
        std::vector<int> pick(colors.size(), -1);
        std::function<void(std::size_t)> choose = [&](std::size_t c) {
            if (c == colors.size()) {
                // every dart with a forced color must be chosen
                for (int d : darts) {
                    const EColor f = forced(v, d);
                    if (f != EColor::None && std::find(pick.begin(), pick.end(), d) == pick.end()) return;
                }
                for (std::size_t a = 0; a < pick.size(); ++a) {
                    const int d = pick[a];
                    dir[d] = 1;
                    dir[m.alpha(d)] = -1;
                    color[d] = color[m.alpha(d)] = colors[a];
                }
                done[v] = 1;
                if (check_around(v)) run(k + 1);
                done[v] = 0;
                for (int d : pick) {
                    dir[d] = dir[m.alpha(d)] = 0;
                    color[d] = color[m.alpha(d)] = EColor::None;
                }
                return;
            }
            for (int d : darts) {
                if (std::find(pick.begin(), pick.begin() + c, d) != pick.begin() + c) continue;
                if (dir[d] != 0) continue;  // already claimed by the other end
                const EColor f = forced(v, d);
                if (f != EColor::None && f != colors[c]) continue;
                pick[c] = d;
                choose(c + 1);
            }
            pick[c] = -1;
        };
        choose(0);
    }
};

std::vector<int> bfs_order(const RotationMap& m, int from) {
    std::vector<int> order{from};
    std::vector<char> seen(m.vertex_count(), 0);
    seen[from] = 1;
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int d : m.vertices()[order[k]])
            if (!seen[m.head(d)]) {
                seen[m.head(d)] = 1;
                order.push_back(m.head(d));
            }
    return order;
}

}  // namespace

std::vector<int> sepdec_code(const SeparatingDecomposition& s) {
    return canonical_code(s.map(), overlay_payload(s.map(), s.dir, s.color, &s.quad.color));
}

SeparatingDecomposition canonicalized(const SeparatingDecomposition& s) {
    const auto label = s.map().canonical_labels();
    SeparatingDecomposition out{{relabeled(s.map(), label), {}}, relabel_payload(s.dir, label),
                                relabel_payload(s.color, label)};
    out.quad.color.resize(out.map().vertex_count());
    for (int d = 0; d < s.map().darts(); ++d) out.quad.color[out.map().vertex(label[d])] = s.quad.color[s.map().vertex(d)];
    return out;
}

std::vector<int> schnyder_code(const SchnyderWood& w) {
    return canonical_code(w.map(), overlay_payload(w.map(), w.dir, w.color, nullptr));
}

std::vector<SeparatingDecomposition> enumerate_sepdecs(const Quadrangulation& q) {
    const auto& m = q.map;
    const int sv = q.s(), tv = q.t();
    OverlaySearch search{m, {}, {EColor::Blue, EColor::Red}, nullptr, nullptr, {}, {}, {}, {}};
    search.forced = [&](int v, int d) {
        if (v == sv || v == tv) return EColor::None;
        if (m.head(d) == sv) return EColor::Blue;
        if (m.head(d) == tv) return EColor::Red;
        return EColor::None;
    };
    search.rule = [&](int v) -> const Pattern* {
        if (v == sv || v == tv) return nullptr;
        return q.color[v] == VColor::White ? &kWhiteRule : &kBlackRule;
    };
    for (int v : bfs_order(m, sv))
        if (v != sv && v != tv) search.movers.push_back(v);
    search.dir.assign(m.darts(), 0);
    search.color.assign(m.darts(), EColor::None);
    search.done.assign(m.vertex_count(), 0);
    search.done[sv] = search.done[tv] = 1;
    search.run(0);

    std::map<std::vector<int>, SeparatingDecomposition> out;
    for (auto& [dir, color] : search.found) {
        SeparatingDecomposition s{q, dir, color};
        out.emplace(sepdec_code(s), std::move(s));
    }
    std::vector<SeparatingDecomposition> result;
    for (auto& [code, s] : out) result.push_back(std::move(s));
    return result;
}

std::vector<SchnyderWood> enumerate_schnyder(const Triangulation& t) {
    const auto& m = t.map;
    const int ub = t.u_blue(), ug = t.u_green(), ur = t.u_red();
    OverlaySearch search{m, {}, {EColor::Blue, EColor::Green, EColor::Red}, nullptr, nullptr, {}, {}, {}, {}};
    search.forced = [&](int v, int d) {
        if (t.is_outer(v)) return EColor::None;
        const int h = m.head(d);
        return h == ub ? EColor::Blue : h == ug ? EColor::Green : h == ur ? EColor::Red : EColor::None;
    };
    search.rule = [&](int v) -> const Pattern* { return t.is_outer(v) ? nullptr : &kSchnyderRule; };
    for (int v : bfs_order(m, ub))
        if (!t.is_outer(v)) search.movers.push_back(v);
    search.dir.assign(m.darts(), 0);
    search.color.assign(m.darts(), EColor::None);
    search.done.assign(m.vertex_count(), 0);
    search.done[ub] = search.done[ug] = search.done[ur] = 1;
    search.run(0);

    std::map<std::vector<int>, SchnyderWood> out;
    for (auto& [dir, color] : search.found) {
        SchnyderWood w{t, dir, color};
        out.emplace(schnyder_code(w), std::move(w));
    }
    std::vector<SchnyderWood> result;
    for (auto& [code, w] : out) result.push_back(std::move(w));
    return result;
}

std::vector<SeparatingDecomposition> enumerate_all_sepdecs(int i, int j, int cap) {
    require_cap(i + j, cap, "enumerate_all_sepdecs");
    std::vector<SeparatingDecomposition> out;
    for (const auto& q : enumerate_quadrangulations(i, j))
        for (auto& s : enumerate_sepdecs(q)) out.push_back(std::move(s));
    return out;
}

std::vector<Cycle> clockwise_cycles(const RotationMap& m, const DartDirections& dir) {
    std::vector<Cycle> out;
    Cycle path;
    std::vector<char> on_path(m.vertex_count(), 0);
    auto is_clockwise = [&](const Cycle& c) {
        std::vector<char> in_cycle(m.edges(), 0);
        for (int d : c) in_cycle[m.edge(d)] = 1;
        std::vector<char> reach(m.face_count(), 0);
        std::queue<int> todo;
        reach[m.outer_face()] = 1;
        todo.push(m.outer_face());
        while (!todo.empty()) {
            const int f = todo.front();
            todo.pop();
            for (int d : m.faces()[f]) {
                if (in_cycle[m.edge(d)]) continue;
                const int g = m.face(m.alpha(d));
                if (!reach[g]) {
                    reach[g] = 1;
                    todo.push(g);
                }
            }
        }
        return !reach[m.face(m.alpha(c.front()))];
    };
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int d : m.vertices()[v]) {
            if (dir[d] <= 0) continue;
            const int h = m.head(d);
            if (h == start) {
                path.push_back(d);
                if (is_clockwise(path)) out.push_back(path);
                path.pop_back();
            } else if (h > start && !on_path[h]) {
                on_path[h] = 1;
                path.push_back(d);
                dfs(start, h);
                path.pop_back();
                on_path[h] = 0;
            }
        }
    };
    for (int st = 0; st < m.vertex_count(); ++st) {
        on_path[st] = 1;
        dfs(st, st);
        on_path[st] = 0;
    }
    return out;
}

bool is_minimal(const SeparatingDecomposition& s) { return clockwise_cycles(s.map(), s.dir).empty(); }

bool is_minimal(const SchnyderWood& w) { return clockwise_cycles(w.map(), w.dir).empty(); }

SeparatingDecomposition minimal_sepdec(const Quadrangulation& q) {
    std::vector<SeparatingDecomposition> mins;
    for (auto& s : enumerate_sepdecs(q))
        if (is_minimal(s)) mins.push_back(std::move(s));
    if (mins.size() != 1)
        throw InvariantFailure("minimal_sepdec: found " + std::to_string(mins.size()) + " minimal separating decompositions");
    return mins.front();
}

SchnyderWood minimal_schnyder(const Triangulation& t) {
    std::vector<SchnyderWood> mins;
    for (auto& w : enumerate_schnyder(t))
        if (is_minimal(w)) mins.push_back(std::move(w));
    if (mins.size() != 1)
        throw InvariantFailure("minimal_schnyder: found " + std::to_string(mins.size()) + " minimal Schnyder woods");
    return mins.front();
}

SeparatingDecomposition tau_sepdec(const SeparatingDecomposition& s) {
    const auto& m = s.map();
    SeparatingDecomposition out{{m.with_root(m.phi(m.phi(m.root()))), s.quad.color}, s.dir, s.color};
    for (auto& c : out.color) c = c == EColor::Blue ? EColor::Red : EColor::Blue;
    return out;
}

std::vector<int> blue_contour(const SeparatingDecomposition& s) {
    const auto& m = s.map();
    std::vector<int> out;
    // Darts of a vertex in clockwise order; at a non-root vertex the walk
    // starts right after the edge toward the parent.
    std::function<void(const std::vector<int>&)> visit = [&](const std::vector<int>& darts) {
        for (int d : darts) {
            if (s.color[d] != EColor::Blue || s.dir[d] >= 0) continue;
            out.push_back(d);
            const int back = m.alpha(d);
            auto next = m.rotation_from(back);
            next.erase(next.begin());
            visit(next);
            out.push_back(back);
        }
    };
    visit(m.rotation_from(m.root()));
    return out;
}

IndegreeProfile indegree_profile(const SeparatingDecomposition& s) {
    const auto& m = s.map();
    IndegreeProfile p;
    std::vector<char> seen(m.vertex_count(), 0);
    for (int d : blue_contour(s)) {
        const int v = m.head(d);
        if (seen[v] || s.quad.color[v] != VColor::White) continue;
        seen[v] = 1;
        p.order.push_back(v);
    }
    for (int v : p.order) {
        int b = 0, r = 0;
        for (int d : m.vertices()[v])
            if (s.dir[d] < 0) (s.color[d] == EColor::Blue ? b : r)++;
        p.blue_in.push_back(b);
        p.red_in.push_back(r);
    }
    if (static_cast<int>(p.order.size()) != s.quad.white_count() || p.order.front() != s.quad.s_prime() ||
        p.order.back() != s.quad.t_prime())
        throw InvariantFailure("indegree_profile: white vertices are not ordered from s' to t'");
    return p;
}

bool is_m_regular(const SeparatingDecomposition& s, int m) {
    const auto p = indegree_profile(s);
    if (p.blue_in.front() != 0) return false;
    for (std::size_t r = 1; r + 1 < p.order.size(); ++r)
        if (p.blue_in[r] != m) return false;
    return true;
}

}  // namespace gtam
