#include "gtam/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "gtam/bijections.hpp"
#include "gtam/counting.hpp"
#include "gtam/errors.hpp"
#include "gtam/io.hpp"

namespace gtam {

namespace {

struct Context {
    VerificationReport& report;

    void count(long n = 1) { report.instances += n; }
    /// Records the first failure; returns cond.
    bool check(bool cond, const std::function<std::string()>& what) {
        if (!cond && report.ok) {
            report.ok = false;
            report.counterexample = what();
        }
        return cond;
    }
};

std::string params(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

template <class F>
void for_params(int max, F f) {
    for (int i = 0; i <= max; ++i)
        for (int j = 0; i + j <= max; ++j) f(i, j);
}

void counts(Context& c, int max) {
    for (int n = 1; n <= max; ++n) {
        std::size_t total = 0;
        for (int i = 0; i <= n; ++i) total += enumerate_G(i, n - i).size();
        c.count();
        c.check(total == count_nonseparable(n), [&] { return "|G_" + std::to_string(n) + "| = " + std::to_string(total); });
    }
    for_params(max, [&](int i, int j) {
        const auto g = enumerate_G(i, j).size();
        c.count();
        c.check(g == count_nonseparable_refined(i, j), [&] { return "|G" + params(i, j) + "| = " + std::to_string(g); });
    });
}

void quad_counts(Context& c, int max) {
    for_params(max, [&](int i, int j) {
        const auto q = enumerate_quadrangulations(i, j).size();
        c.count();
        c.check(q == count_nonseparable_refined(i, j), [&] { return "|Q" + params(i, j) + "| = " + std::to_string(q); });
    });
}

void theorem1(Context& c, int max) {
    for_params(max, [&](int i, int j) {
        std::vector<WalkTriple> images;
        std::size_t minimal = 0;
        for (const auto& s : enumerate_all_sepdecs(i, j)) {
            c.count();
            const auto r = phi_prime(s);
            const bool in_g = tamari_leq(r.lower, r.middle, r.upper);
            const bool min = is_minimal(s);
            minimal += min;
            c.check(is_above(r.lower, r.middle) && is_above(r.middle, r.upper),
                    [&] { return "image outside R:\n" + io::write_map(io::to_file(s)); });
            c.check(sepdec_code(phi_prime_inverse(r)) == sepdec_code(s),
                    [&] { return "round trip fails:\n" + io::write_map(io::to_file(s)); });
            c.check(min == in_g, [&] { return "minimal != image in G:\n" + io::write_map(io::to_file(s)); });
            images.push_back(r);
        }
        std::sort(images.begin(), images.end());
        c.check(images == enumerate_R(i, j), [&] { return "image is not R" + params(i, j); });
        c.check(minimal == enumerate_G(i, j).size(), [&] { return "minimal count differs from |G" + params(i, j) + "|"; });
    });
}

void zpattern(Context& c, int max) {
    for_params(max, [&](int i, int j) {
        for (const auto& s : enumerate_all_sepdecs(i, j)) {
            c.count();
            c.check(is_minimal(s) == !has_z_pattern(chi(s)),
                    [&] { return "minimality vs Z-pattern:\n" + io::write_map(io::to_file(s)); });
        }
    });
    for_params(max + 1, [&](int i, int j) {
        for (const auto& r : enumerate_R(i, j)) {
            c.count();
            c.check(tamari_leq(r.lower, r.middle, r.upper) == !has_z_pattern(xi_inverse(r)),
                    [&] { return "G vs Z-pattern:\n" + io::write_triple(r); });
        }
    });
}

void corollary1(Context& c, int max) {
    for_params(max, [&](int i, int j) {
        for (const auto& r : enumerate_R(i, j)) {
            c.count();
            const auto t = tau_triple(r);
            c.check(tamari_leq(r.lower, r.middle, r.upper) == tamari_leq(t.lower, t.middle, t.upper),
                    [&] { return "tau changes membership in G:\n" + io::write_triple(r); });
        }
    });
}

std::multiset<std::pair<int, int>> face_types(const BipolarOrientation& b) {
    std::multiset<std::pair<int, int>> out;
    for (int f = 0; f < b.map.face_count(); ++f)
        if (f != b.map.outer_face()) out.insert(face_type(b, f));
    return out;
}

void proposition1(Context& c, int max) {
    for_params(max, [&](int i, int j) {
        std::map<std::pair<int, int>, std::size_t> per_boundary, walks;
        std::set<TandemWalk> images;
        for (const auto& b : enumerate_bipolar(i, j)) {
            c.count();
            const auto w = lambda(b);
            std::multiset<std::pair<int, int>> steps;
            for (const auto& s : w.steps)
                if (!s.se) steps.insert({s.p, s.q});
            c.check(w.valid() && w.se_count() == i && std::pair{w.a, w.end().x} == b.boundary(),
                    [&] { return "image outside W_{i,j}[a,b]:\n" + io::write_map(io::to_file(b)); });
            c.check(steps == face_types(b), [&] { return "face types differ:\n" + io::write_map(io::to_file(b)); });
            images.insert(w);
            ++per_boundary[b.boundary()];
        }
        for (const auto& w : enumerate_tandem(i, j)) ++walks[{w.a, w.end().x}];
        c.check(images.size() == enumerate_bipolar(i, j).size(), [&] { return "Lambda not injective on B" + params(i, j); });
        c.check(per_boundary == walks, [&] { return "|B_{i,j}[a,b]| != |W_{i,j}[a,b]| at " + params(i, j); });
    });
}

void kmsw_link(Context& c, int max) {
    for_params(max, [&](int i, int j) {
        for (const auto& b : enumerate_bipolar(i, j)) {
            c.count();
            c.check(lambda(mirror(b)) == tau_tandem(lambda_tilde(b)),
                    [&] { return "Lambda(mir B) != tau(Lambda~ B):\n" + io::write_map(io::to_file(b)); });
        }
    });
}

void iota_suite(Context& c, int max) {
    for_params(max, [&](int i, int j) {
        std::set<std::vector<int>> codes;
        for (const auto& b : enumerate_bipolar(i, j)) {
            c.count();
            const auto s = iota(b);
            codes.insert(sepdec_code(s));
            c.check(validate_sepdec(s).ok && bipolar_code(iota_inverse(s)) == bipolar_code(b),
                    [&] { return "iota round trip:\n" + io::write_map(io::to_file(b)); });
        }
        c.check(codes.size() == enumerate_all_sepdecs(i, j).size(), [&] { return "iota not onto Sep" + params(i, j); });
    });
}

void theorem2(Context& c, int max) {
    for (int n = 1; n <= max; ++n) {
        std::set<std::pair<Walk, Walk>> image, minimal_image;
        std::size_t woods = 0;
        for (const auto& t : enumerate_triangulations(n))
            for (const auto& w : enumerate_schnyder(t)) {
                c.count();
                ++woods;
                const auto p = bernardi_bonichon(w);
                c.check(p.first.is_dyck() && p.second.is_dyck() && is_above(p.first, p.second),
                        [&] { return "image outside P_n:\n" + io::write_map(io::to_file(w)); });
                image.insert(p);
                if (!is_minimal(w)) continue;
                minimal_image.insert(p);
                const auto r = composed_type_correspondence(w);
                c.check(r.ok, [&] { return r.violation + ":\n" + io::write_map(io::to_file(w)); });
            }
        std::size_t pairs = 0;
        const auto dyck = enumerate_W(Walk::repeat("NE", n));
        for (const auto& a : dyck)
            for (const auto& b : dyck) pairs += is_above(a, b);
        const auto in = enumerate_I(n);
        c.check(image.size() == woods, [&] { return "bernardi_bonichon not injective at n=" + std::to_string(n); });
        c.check(image.size() == pairs, [&] { return "|image| != |P_" + std::to_string(n) + "|"; });
        c.check(minimal_image == std::set<std::pair<Walk, Walk>>(in.begin(), in.end()),
                [&] { return "minimal image != I_" + std::to_string(n); });
    }
}

void series(Context& c, int max) {
    c.count();
    const auto r = verify_type_table(max);
    c.check(r.ok, [&] { return r.violation; });
    const auto f = F_series(max + 1);
    const auto diag = f.diagonal();
    for (int n = 1; n <= max; ++n) {
        c.count();
        c.check(diag[n + 1] == enumerate_I(n).size(), [&] { return "F(t,t,t) at n=" + std::to_string(n); });
    }
    for_params(max - 1, [&](int i, int j) {
        c.count();
        c.check(f.coeff(i + 1, j + 1, 0) == enumerate_G(i, j).size(), [&] { return "F(x,y,0) at " + params(i, j); });
    });
    c.count();
    const auto p = check_planted_system(max + 1);
    c.check(p.ok, [&] { return p.violation; });
}

void mtamari(Context& c, int max) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= max - m + 1; ++n) {
            c.count();
            const Walk nu = Walk::repeat("N" + std::string(m, 'E'), n);
            const auto k = intervals(nu).size();
            c.check(k == count_mtamari(m, n), [&] {
                return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + std::to_string(k) + " intervals";
            });
        }
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; (m + 1) * n <= std::min(max, 4); ++n) {
            c.count();
            std::size_t k = 0;
            for (const auto& q : enumerate_quadrangulations(m * n, n)) k += is_m_regular(minimal_sepdec(q), m);
            c.check(k == count_mtamari(m, n), [&] {
                return "Q_n^(m) filter m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + std::to_string(k);
            });
        }
}

void mobiles(Context& c, int max) {
    for (int n = 1; n <= max; ++n) {
        c.count();
        const auto k = enumerate_mobiles(n).size();
        c.check(k == enumerate_I(n).size(), [&] { return "|T_" + std::to_string(n) + "| = " + std::to_string(k); });
    }
    for_params(max, [&](int i, int j) {
        std::size_t sync = 0;
        std::set<std::vector<int>> images, expected;
        for (const auto& m : enumerate_mobiles(i + j + 1)) {
            if (!is_synchronized(m) || synchronized_params(m) != std::pair{i, j}) continue;
            c.count();
            ++sync;
            const auto u = mobile_to_ternary(m);
            images.insert(ternary_code(u));
            c.check(mobile_code(ternary_to_mobile(u)) == mobile_code(m),
                    [&] { return "ternary round trip:\n" + io::write_mobile(m); });
        }
        for (const auto& u : enumerate_ternary(i, j)) expected.insert(ternary_code(u));
        const auto g = enumerate_G(i, j).size();
        c.check(sync == g && expected.size() == g && images == expected,
                [&] { return "synchronized mobiles vs ternary trees at " + params(i, j); });
    });
}

const std::map<std::string, std::pair<int, void (*)(Context&, int)>>& registry() {
    static const std::map<std::string, std::pair<int, void (*)(Context&, int)>> r{
        {"counts", {4, counts}},
        {"quad-counts", {4, quad_counts}},
        {"theorem1", {4, theorem1}},
        {"zpattern", {4, zpattern}},
        {"corollary1", {5, corollary1}},
        {"proposition1", {4, proposition1}},
        {"kmsw-link", {4, kmsw_link}},
        {"iota", {4, iota_suite}},
        {"theorem2", {3, theorem2}},
        {"series", {5, series}},
        {"mtamari", {4, mtamari}},
        {"mobiles", {3, mobiles}},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, entry] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

int default_suite_size(const std::string& suite) {
    auto it = registry().find(suite);
    if (it == registry().end()) throw DomainError("unknown suite '" + suite + "'");
    return it->second.first;
}

VerificationReport run_suite(const std::string& suite, int max_size) {
    auto it = registry().find(suite);
    if (it == registry().end()) throw DomainError("unknown suite '" + suite + "'");
    VerificationReport report;
    report.suite = suite;
    Context c{report};
    const auto start = std::chrono::steady_clock::now();
    it->second.second(c, max_size);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace gtam
