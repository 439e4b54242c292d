#include "gtam/walks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gtam/errors.hpp"

namespace gtam {

Walk::Walk(std::string_view word) : word_(word) {
    for (char c : word_)
        if (c != 'N' && c != 'E')
            throw ParseError("walk contains a letter other than N/E: '" + std::string(word) + "'");
}

int Walk::east_count() const {
    return static_cast<int>(std::count(word_.begin(), word_.end(), 'E'));
}

int Walk::north_count() const {
    return static_cast<int>(std::count(word_.begin(), word_.end(), 'N'));
}

std::vector<int> Walk::east_per_height() const {
    std::vector<int> counts(north_count() + 1, 0);
    int h = 0;
    for (char c : word_) {
        if (c == 'N')
            ++h;
        else
            ++counts[h];
    }
    return counts;
}

Walk Walk::from_east_per_height(const std::vector<int>& counts) {
    std::string w;
    for (std::size_t r = 0; r < counts.size(); ++r) {
        if (r > 0) w += 'N';
        w.append(counts[r], 'E');
    }
    Walk out;
    out.word_ = std::move(w);
    return out;
}

std::vector<Point> Walk::points() const {
    std::vector<Point> pts{{0, 0}};
    Point p;
    for (char c : word_) {
        if (c == 'N')
            ++p.y;
        else
            ++p.x;
        pts.push_back(p);
    }
    return pts;
}

Walk Walk::mirrored() const {
    Walk out;
    out.word_.assign(word_.rbegin(), word_.rend());
    return out;
}

bool Walk::is_dyck() const {
    int balance = 0;
    for (char c : word_) {
        balance += (c == 'N') ? 1 : -1;
        if (balance < 0) return false;
    }
    return balance == 0;
}

Walk Walk::repeat(std::string_view block, int times) {
    std::string w;
    for (int k = 0; k < times; ++k) w += block;
    return Walk(w);
}

namespace {

std::vector<int> prefix_sums(const std::vector<int>& v) {
    std::vector<int> out(v.size());
    std::partial_sum(v.begin(), v.end(), out.begin());
    return out;
}

// Abscissa of nu's North step leaving height y; i at the top.
int north_abscissa(const Walk& nu, int y) {
    const Point end = nu.endpoint();
    if (y == end.y) return end.x;
    int x = 0, h = 0;
    for (std::size_t k = 0; k < nu.size(); ++k) {
        if (nu[k] == 'E') {
            ++x;
        } else {
            if (h == y) return x;
            ++h;
        }
    }
    throw DomainError("height outside nu");
}

}  // namespace

bool is_above(const Walk& lower, const Walk& upper) {
    if (lower.endpoint() != upper.endpoint()) return false;
    const auto lo = prefix_sums(lower.east_per_height());
    const auto up = prefix_sums(upper.east_per_height());
    for (std::size_t r = 0; r < lo.size(); ++r)
        if (up[r] > lo[r]) return false;
    return true;
}

int ell_label(const Walk& nu, const Walk& gamma, Point p) {
    const auto pts = gamma.points();
    if (std::find(pts.begin(), pts.end(), p) == pts.end())
        throw DomainError("point is not on the walk");
    return north_abscissa(nu, p.y) - p.x;
}

std::vector<Point> valleys(const Walk& gamma) {
    std::vector<Point> out;
    const auto pts = gamma.points();
    for (std::size_t k = 1; k < gamma.size(); ++k)
        if (gamma[k - 1] == 'E' && gamma[k] == 'N') out.push_back(pts[k]);
    return out;
}

Walk push(const Walk& nu, const Walk& gamma, Point p) {
    const auto pts = gamma.points();
    std::size_t k = 1;
    while (k < gamma.size() && !(pts[k] == p && gamma[k - 1] == 'E' && gamma[k] == 'N')) ++k;
    if (k >= gamma.size()) throw DomainError("push: point is not a valley of the walk");
    const int label = north_abscissa(nu, p.y) - p.x;
    std::size_t m = k + 1;
    while (m < pts.size() && north_abscissa(nu, pts[m].y) - pts[m].x != label) ++m;
    if (m >= pts.size()) throw InvariantFailure("push: no later point with the same label");
    const std::string& w = gamma.word();
    return Walk(w.substr(0, k - 1) + w.substr(k, m - k) + 'E' + w.substr(m));
}

std::vector<Walk> covers(const Walk& nu, const Walk& gamma) {
    std::vector<Walk> out;
    for (const Point& p : valleys(gamma)) out.push_back(push(nu, gamma, p));
    return out;
}

std::vector<int> bracket_vector(const Walk& nu, const Walk& gamma) {
    if (nu.endpoint() != gamma.endpoint())
        throw DomainError("bracket_vector: walks have different endpoints");
    const auto opens = nu.east_per_height();
    const auto closes = gamma.east_per_height();
    std::vector<int> entries(nu.east_count(), -1);
    std::vector<int> stack;
    int next = 0;
    for (std::size_t r = 0; r < opens.size(); ++r) {
        for (int k = 0; k < opens[r]; ++k) stack.push_back(next++);
        for (int k = 0; k < closes[r]; ++k) {
            if (stack.empty()) throw DomainError("bracket_vector: walk is not above nu");
            entries[stack.back()] = static_cast<int>(r);
            stack.pop_back();
        }
    }
    return entries;
}

std::optional<int> tamari_violation(const Walk& nu, const Walk& a, const Walk& b) {
    const auto u = bracket_vector(nu, a);
    const auto v = bracket_vector(nu, b);
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] > v[k]) return static_cast<int>(k) + 1;
    return std::nullopt;
}

bool tamari_leq(const Walk& nu, const Walk& a, const Walk& b) { return !tamari_violation(nu, a, b); }

std::string canopy(const Walk& dyck) {
    if (dyck.empty() || !dyck.is_dyck()) throw DomainError("canopy: not a non-empty Dyck walk");
    std::string out;
    for (int a : dyck.east_per_height()) out += (a == 0) ? 'E' : 'N';
    return out;
}

std::vector<Walk> enumerate_W(const Walk& nu) {
    const auto bound = prefix_sums(nu.east_per_height());
    const int heights = static_cast<int>(bound.size());
    std::vector<Walk> out;
    std::vector<int> counts(heights, 0);
    std::function<void(int, int)> rec = [&](int r, int used) {
        if (r == heights - 1) {
            counts[r] = bound[r] - used;
            out.push_back(Walk::from_east_per_height(counts));
            return;
        }
        for (int c = 0; used + c <= bound[r]; ++c) {
            counts[r] = c;
            rec(r + 1, used + c);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Walk> all_walks(int i, int j) {
    std::string w = std::string(i, 'E') + std::string(j, 'N');
    std::sort(w.begin(), w.end());
    std::vector<Walk> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Interval> intervals(const Walk& nu) {
    const auto elems = enumerate_W(nu);
    std::vector<std::vector<int>> vecs;
    vecs.reserve(elems.size());
    for (const auto& g : elems) vecs.push_back(bracket_vector(nu, g));
    std::vector<Interval> out;
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
            bool leq = true;
            for (std::size_t k = 0; k < vecs[a].size() && leq; ++k) leq = vecs[a][k] <= vecs[b][k];
            if (leq) out.emplace_back(elems[a], elems[b]);
        }
    return out;
}

std::vector<WalkTriple> enumerate_G(int i, int j, int cap) {
    require_cap(i + j, cap, "enumerate_G");
    std::vector<WalkTriple> out;
    for (const Walk& nu : all_walks(i, j))
        for (auto& [a, b] : intervals(nu)) out.push_back({nu, a, b});
    return out;
}

std::vector<WalkTriple> enumerate_R(int i, int j, int cap) {
    require_cap(i + j, cap, "enumerate_R");
    std::vector<WalkTriple> out;
    for (const Walk& lo : all_walks(i, j))
        for (const Walk& mid : enumerate_W(lo))
            for (const Walk& up : enumerate_W(mid)) out.push_back({lo, mid, up});
    return out;
}

std::vector<Interval> enumerate_I(int n, int cap) {
    require_cap(n, cap, "enumerate_I");
    return intervals(Walk::repeat("NE", n));
}

std::vector<Interval> enumerate_S(int i, int j, int cap) {
    require_cap(i + j + 1, cap, "enumerate_S");
    std::vector<Interval> out;
    for (auto& [a, b] : enumerate_I(i + j + 1, cap)) {
        const std::string c = canopy(a);
        if (c != canopy(b)) continue;
        if (std::count(c.begin(), c.end(), 'E') == i + 1) out.emplace_back(a, b);
    }
    return out;
}

const char* to_string(PositionType t) {
    switch (t) {
        case PositionType::EE: return "EE";
        case PositionType::NN: return "NN";
        case PositionType::EN: return "EN";
    }
    return "?";
}

std::vector<PositionType> position_types(const Walk& lower, const Walk& upper) {
    if (lower.size() != upper.size() || !tamari_leq(Walk::repeat("NE", int(lower.size() / 2)), lower, upper))
        throw DomainError("position_types: not a Tamari interval");
    const std::string c = canopy(lower);
    const std::string d = canopy(upper);
    std::vector<PositionType> out;
    for (std::size_t r = 0; r < c.size(); ++r) {
        if (d[r] == 'E' && c[r] == 'E')
            out.push_back(PositionType::EE);
        else if (d[r] == 'N' && c[r] == 'N')
            out.push_back(PositionType::NN);
        else if (d[r] == 'E' && c[r] == 'N')
            out.push_back(PositionType::EN);
        else
            throw InvariantFailure("position_types: column of type N over E in an interval");
    }
    return out;
}

std::vector<std::pair<Walk, Walk>> nu_dyck_table(const Walk& nu, int cap) {
    const int n = static_cast<int>(nu.size());
    require_cap(n, cap, "nu_dyck_table");
    const Walk dyck_nu = Walk::repeat("NE", n + 1);
    const std::vector<Walk> src = enumerate_W(nu);
    std::vector<Walk> dst;
    const std::string want = "E" + nu.word() + "N";
    for (const Walk& d : enumerate_W(dyck_nu))
        if (canopy(d) == want) dst.push_back(d);
    if (src.size() != dst.size())
        throw InvariantFailure("nu_dyck_table: sizes differ (" + std::to_string(src.size()) +
                               " vs " + std::to_string(dst.size()) + ")");

    const std::size_t m = src.size();
    std::vector<std::vector<char>> ls(m, std::vector<char>(m)), ld(m, std::vector<char>(m));
    std::vector<int> below_s(m), above_s(m), below_d(m), above_d(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            ls[a][b] = tamari_leq(nu, src[a], src[b]);
            ld[a][b] = tamari_leq(dyck_nu, dst[a], dst[b]);
            below_s[b] += ls[a][b];
            above_s[a] += ls[a][b];
            below_d[b] += ld[a][b];
            above_d[a] += ld[a][b];
        }

    std::vector<int> image(m, -1);
    std::vector<char> used(m, 0);
    std::function<bool(std::size_t)> assign = [&](std::size_t a) {
        if (a == m) return true;
        for (std::size_t c = 0; c < m; ++c) {
            if (used[c] || below_s[a] != below_d[c] || above_s[a] != above_d[c]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < a && ok; ++p)
                ok = ls[p][a] == ld[image[p]][c] && ls[a][p] == ld[c][image[p]];
            if (!ok) continue;
            image[a] = static_cast<int>(c);
            used[c] = 1;
            if (assign(a + 1)) return true;
            used[c] = 0;
        }
        image[a] = -1;
        return false;
    };
    if (!assign(0)) throw InvariantFailure("nu_dyck_table: no order isomorphism found");

    std::vector<std::pair<Walk, Walk>> table;
    for (std::size_t a = 0; a < m; ++a) table.emplace_back(src[a], dst[image[a]]);
    return table;
}

}  // namespace gtam
