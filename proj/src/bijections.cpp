#include "gtam/bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gtam/errors.hpp"

namespace gtam {

namespace {

// Words of the contour rules: lower reads white-black moves, middle reads
// black-white moves of the clockwise walk around the blue tree.
std::pair<std::string, std::string> contour_words(const SeparatingDecomposition& s) {
    const auto& m = s.map();
    const auto& col = s.quad.color;
    std::string low, mid;
    for (int d : blue_contour(s)) {
        const bool down = s.dir[d] < 0;
        const int parent = down ? m.vertex(d) : m.head(d);
        const int child = down ? m.head(d) : m.vertex(d);
        const bool white_parent = col[parent] == VColor::White;
        const bool white_child = col[child] == VColor::White;
        if (white_parent && !white_child) {
            if (down) low += 'E';
            else mid += 'E';
        } else if (!white_parent && white_child) {
            if (down) mid += 'N';
            else low += 'N';
        }
    }
    // low: drop the last two N; mid: drop the first and last N
    for (int k = 0; k < 2; ++k) low.erase(low.rfind('N'), 1);
    mid.erase(mid.find('N'), 1);
    mid.erase(mid.rfind('N'), 1);
    return {low, mid};
}

Walk upper_walk(const IndegreeProfile& p) {
    return Walk::from_east_per_height(std::vector<int>(p.red_in.begin() + 1, p.red_in.end()));
}

}  // namespace

WalkTriple phi(const SeparatingDecomposition& s) {
    auto [low, mid] = contour_words(s);
    return {Walk(low), Walk(mid), upper_walk(indegree_profile(s))};
}

WalkTriple phi_prime(const SeparatingDecomposition& s) {
    const auto p = indegree_profile(s);
    auto [low, mid] = contour_words(s);
    (void)low;
    return {Walk::from_east_per_height(std::vector<int>(p.blue_in.begin(), p.blue_in.end() - 1)), Walk(mid),
            upper_walk(p)};
}

SeparatingDecomposition phi_prime_inverse(const WalkTriple& r) { return chi_inverse(xi_inverse(r)); }

MinimalImage is_minimal_image(const SeparatingDecomposition& s) {
    const auto r = phi_prime(s);
    MinimalImage out{is_minimal(s), tamari_leq(r.lower, r.middle, r.upper)};
    if (out.minimal != out.in_G) throw InvariantFailure("is_minimal_image: minimality and membership in G differ");
    return out;
}

Report level_value_correspondence(const SeparatingDecomposition& s) {
    const auto r = phi_prime(s);
    const auto al = r.lower.east_per_height();
    const auto be = r.upper.east_per_height();
    const auto& m = s.map();
    const int j = static_cast<int>(al.size()) - 1;
    if (al[0] != static_cast<int>(m.vertices()[s.quad.s_prime()].size()) - 2)
        return Report::fail("alpha_0 != deg(s') - 2");
    if (be[j] != static_cast<int>(m.vertices()[s.quad.t_prime()].size()) - 2)
        return Report::fail("beta_j != deg(t') - 2");
    std::multiset<std::pair<int, int>> levels, whites;
    for (int q = 1; q <= j; ++q) levels.insert({be[q - 1], al[q]});
    const auto p = indegree_profile(s);
    for (int q = 1; q <= j; ++q) whites.insert({p.red_in[q], p.blue_in[q]});
    if (levels != whites) return Report::fail("level-value types differ from inner white vertex types");
    return {};
}

SeparatingDecomposition iota(const BipolarOrientation& b) {
    const auto& m = b.map;
    const int n = m.darts();
    const int sv = b.source(), tv = b.sink();
    // B with the virtual edge e* = (x at s, y at t) across the outer face.
    const int x = n, y = n + 1;
    std::vector<int> alpha(m.alpha()), sigma(m.sigma());
    alpha.push_back(y);
    alpha.push_back(x);
    sigma.push_back(0);
    sigma.push_back(0);
    const int root = m.root();
    int t_outer = -1;
    for (int d : m.faces()[m.outer_face()])
        if (m.vertex(d) == tv) t_outer = d;
    if (t_outer < 0) throw DomainError("iota: sink not on the outer face");
    sigma[m.sigma_inv(root)] = x;
    sigma[x] = root;
    sigma[m.sigma_inv(t_outer)] = y;
    sigma[y] = t_outer;
    const RotationMap bs(alpha, sigma, root);
    DartDirections dir(b.dir);
    dir.push_back(1);
    dir.push_back(-1);

    // Q vertices: B vertices, then faces of B*.
    const int nv = bs.vertex_count();
    auto white = [&](int face) { return nv + face; };
    struct QEdge {
        int tail, head;
        EColor color;
    };
    std::vector<QEdge> edges;
    std::vector<int> corner_edge(bs.darts());  // corner (d, sigma(d)) -> Q edge
    for (int d = 0; d < bs.darts(); ++d) {
        const int v = bs.vertex(d), e = bs.sigma(d);
        const int f = white(bs.face(e));
        QEdge q{};
        if (v == sv) q = {f, v, EColor::Blue};
        else if (v == tv) q = {f, v, EColor::Red};
        else if (dir[d] > 0 && dir[e] > 0) q = {f, v, EColor::Blue};
        else if (dir[d] < 0 && dir[e] < 0) q = {f, v, EColor::Red};
        else if (dir[d] > 0) q = {v, f, EColor::Red};
        else q = {v, f, EColor::Blue};
        corner_edge[d] = static_cast<int>(edges.size());
        edges.push_back(q);
    }
    EdgeList g{nv + bs.face_count(), {}};
    for (const auto& q : edges) g.edges.emplace_back(q.tail, q.head);
    auto qdart = [&](int k, int vertex) { return edges[k].tail == vertex ? 2 * k : 2 * k + 1; };
    std::vector<std::vector<int>> rot(g.vertex_count);
    for (int v = 0; v < nv; ++v)
        for (int d : bs.vertices()[v]) rot[v].push_back(qdart(corner_edge[d], v));
    for (int f = 0; f < bs.face_count(); ++f) {
        const auto& orbit = bs.faces()[f];
        // corner (sigma^-1(e), e) of face f sits at vertex(e); reverse phi order
        for (auto it = orbit.rbegin(); it != orbit.rend(); ++it)
            rot[white(f)].push_back(qdart(corner_edge[bs.sigma_inv(*it)], white(f)));
    }
    const int qroot = qdart(corner_edge[x], sv);
    RotationMap qm = build_map(g, rot, qroot);
    SeparatingDecomposition out{{qm, std::vector<VColor>(qm.vertex_count())},
                                DartDirections(qm.darts()),
                                DartColors(qm.darts())};
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
        out.quad.color[qm.vertex(2 * k)] = edges[k].tail < nv ? VColor::Black : VColor::White;
        out.quad.color[qm.vertex(2 * k + 1)] = edges[k].head < nv ? VColor::Black : VColor::White;
        out.dir[2 * k] = 1;
        out.dir[2 * k + 1] = -1;
        out.color[2 * k] = out.color[2 * k + 1] = edges[k].color;
    }
    return canonicalized(out);
}

BipolarOrientation iota_inverse(const SeparatingDecomposition& s) {
    const auto& q = s.map();
    const int outer = q.outer_face();
    // one B edge per inner Q face
    std::vector<int> edge_of_face(q.face_count(), -1);
    EdgeList g{q.vertex_count(), {}};
    std::vector<std::pair<int, int>> ends;  // (tail, head) as Q vertices
    for (int f = 0; f < q.face_count(); ++f) {
        if (f == outer) continue;
        const auto& orbit = q.faces()[f];
        if (orbit.size() != 4) throw DomainError("iota_inverse: face of degree != 4");
        int k = 0;
        while (s.quad.color[q.vertex(orbit[k])] != VColor::Black) ++k;
        const int d1 = orbit[k], d4 = orbit[(k + 3) % 4];
        const int b1 = q.vertex(d1), b2 = q.vertex(orbit[(k + 2) % 4]);
        // d4 runs from w2 to b1
        const bool from_b1 = s.color[d4] == EColor::Blue;
        edge_of_face[f] = static_cast<int>(ends.size());
        ends.push_back(from_b1 ? std::pair{b1, b2} : std::pair{b2, b1});
    }
    for (auto [a, b] : ends) g.edges.emplace_back(a, b);
    std::vector<std::vector<int>> rot(g.vertex_count);
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (s.quad.color[v] != VColor::Black) continue;
        for (int e : q.vertices()[v]) {
            const int f = q.face(e);
            if (f == outer) continue;
            const int k = edge_of_face[f];
            const int d = ends[k].first == v ? 2 * k : 2 * k + 1;
            rot[v].push_back(d);
        }
    }
    // leftmost out-edge at s: the first B edge after the outer corner
    const int qroot = q.root();
    const int root = 2 * edge_of_face[q.face(q.sigma(qroot))];
    // Compact vertex ids to the black ones.
    std::vector<int> id(q.vertex_count(), -1);
    int nb = 0;
    for (int v = 0; v < q.vertex_count(); ++v)
        if (s.quad.color[v] == VColor::Black) id[v] = nb++;
    EdgeList h{nb, {}};
    for (auto [a, b] : g.edges) h.edges.emplace_back(id[a], id[b]);
    std::vector<std::vector<int>> hrot;
    for (int v = 0; v < q.vertex_count(); ++v)
        if (id[v] >= 0) hrot.push_back(rot[v]);
    RotationMap bm = build_map(h, hrot, root);
    DartDirections dir(bm.darts());
    for (int d = 0; d < bm.darts(); ++d) dir[d] = d % 2 == 0 ? 1 : -1;
    const auto label = bm.canonical_labels();
    return {relabeled(bm, label), relabel_payload(dir, label)};
}

Point TandemWalk::end() const {
    Point p{0, a};
    for (const auto& s : steps) {
        if (s.se) {
            p.x += 1;
            p.y -= 1;
        } else {
            p.x -= s.p;
            p.y += s.q;
        }
    }
    return p;
}

int TandemWalk::se_count() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const TandemStep& s) { return s.se; }));
}

bool TandemWalk::valid() const {
    if (a < 0) return false;
    Point p{0, a};
    for (const auto& s : steps) {
        if (!s.se && (s.p < 0 || s.q < 0)) return false;
        p = s.se ? Point{p.x + 1, p.y - 1} : Point{p.x - s.p, p.y + s.q};
        if (p.x < 0 || p.y < 0) return false;
    }
    return p.y == 0;
}

std::string to_string(const TandemStep& s) {
    return s.se ? std::string("SE") : "(-" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

TandemWalk sigma(const WalkTriple& r) {
    if (!is_above(r.lower, r.middle) || !is_above(r.middle, r.upper)) throw DomainError("sigma: triple not in R");
    const auto al = r.lower.east_per_height();
    const auto be = r.upper.east_per_height();
    TandemWalk w{al[0], {}};
    int row = 0;
    for (char c : r.middle.word()) {
        if (c == 'E') {
            w.steps.push_back({});
        } else {
            ++row;
            w.steps.push_back({false, be[row - 1], al[row]});
        }
    }
    return w;
}

WalkTriple sigma_inverse(const TandemWalk& w) {
    if (!w.valid()) throw DomainError("sigma_inverse: not a tandem walk in the quadrant ending on the x-axis");
    std::vector<int> al{w.a}, be;
    std::string mid;
    for (const auto& s : w.steps) {
        if (s.se) {
            mid += 'E';
        } else {
            mid += 'N';
            be.push_back(s.p);
            al.push_back(s.q);
        }
    }
    be.push_back(w.end().x);
    WalkTriple r{Walk::from_east_per_height(al), Walk(mid), Walk::from_east_per_height(be)};
    if (!is_above(r.lower, r.middle) || !is_above(r.middle, r.upper))
        throw InvariantFailure("sigma_inverse: image not in R");
    return r;
}

TandemWalk lambda(const BipolarOrientation& b) { return sigma(phi_prime(iota(b))); }

TandemWalk lambda_tilde(const BipolarOrientation& b) {
    const auto& m = b.map;
    const int tv = b.sink();
    // rightmost ingoing dart at every vertex other than s
    std::vector<int> rightmost(m.vertex_count(), -1);
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (v == b.source()) continue;
        if (v == tv) {
            for (int d : m.faces()[m.outer_face()])
                if (m.vertex(d) == tv) rightmost[v] = d;
            continue;
        }
        for (int d : m.vertices()[v])
            if (b.dir[d] > 0 && b.dir[m.sigma(d)] < 0) rightmost[v] = m.sigma(d);
    }
    auto in_tree = [&](int d) {  // d outgoing
        return rightmost[m.head(d)] == m.alpha(d);
    };
    std::vector<int> order;  // outgoing darts e_1, e_2, ...
    std::function<void(const std::vector<int>&)> visit = [&](const std::vector<int>& darts) {
        for (int d : darts) {
            if (b.dir[d] < 0) continue;
            order.push_back(d);
            if (in_tree(d)) {
                auto next = m.rotation_from(m.alpha(d));
                next.erase(next.begin());
                visit(next);
            }
        }
    };
    visit(m.rotation_from(m.root()));
    if (order.size() != static_cast<std::size_t>(m.edges()) || order.back() != m.alpha(rightmost[tv]))
        throw InvariantFailure("lambda_tilde: the last edge of the walk is not the top right edge");
    TandemWalk w{b.boundary().first, {}};
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const int d = order[k];
        if (in_tree(d)) {
            w.steps.push_back({});
        } else {
            auto [p, q] = face_type(b, m.face(m.alpha(d)));
            w.steps.push_back({false, p, q});
        }
    }
    return w;
}

WalkTriple tau_triple(const WalkTriple& r) {
    return {r.upper.mirrored(), r.middle.mirrored(), r.lower.mirrored()};
}

TandemWalk tau_tandem(const TandemWalk& w) {
    TandemWalk out{w.end().x, {}};
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
        out.steps.push_back(it->se ? TandemStep{} : TandemStep{false, it->q, it->p});
    return out;
}

std::vector<TandemWalk> enumerate_tandem(int i, int j) {
    std::vector<TandemWalk> out;
    TandemWalk w;
    // y + (sum of future q) = remaining SE steps, so y never exceeds them
    std::function<void(int, int, int, int)> rec = [&](int x, int y, int se_left, int other_left) {
        if (se_left == 0 && other_left == 0) {
            if (y == 0) out.push_back(w);
            return;
        }
        if (se_left > 0 && y >= 1) {
            w.steps.push_back({});
            rec(x + 1, y - 1, se_left - 1, other_left);
            w.steps.pop_back();
        }
        if (other_left > 0)
            for (int p = 0; p <= x; ++p)
                for (int q = 0; y + q <= se_left; ++q) {
                    w.steps.push_back({false, p, q});
                    rec(x - p, y + q, se_left, other_left - 1);
                    w.steps.pop_back();
                }
    };
    for (int a = 0; a <= i; ++a) {
        w = TandemWalk{a, {}};
        rec(0, a, i, j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gtam
