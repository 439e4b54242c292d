// One PASS/FAIL line per acceptance criterion.
//
//   acceptance [--expect-fail N,...]
//
// Exit status is 0 iff the set of failing criteria equals the expected set
// (empty by default).

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "gtam/bijections.hpp"
#include "gtam/counting.hpp"
#include "gtam/errors.hpp"
#include "gtam/io.hpp"
#include "gtam/verify.hpp"
#include "oracles.hpp"

using namespace gtam;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void suite(const std::string& name, int size) {
        const auto r = run_suite(name, size);
        expect(r.ok, name + ": " + r.counterexample);
    }
};

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(GTAM_FIXTURE_DIR) + "/" + name);
    if (!in) throw ParseError("missing fixture " + name);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream out;
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
    return out.str();
}

std::size_t size_G(int n) {
    std::size_t total = 0;
    for (int i = 0; i <= n; ++i) total += enumerate_G(i, n - i).size();
    return total;
}

/// Pairs of Dyck words of length 2n, one weakly above the other, by listing
/// every word and comparing column heights.
std::size_t dyck_pairs_by_listing(int n) {
    std::vector<Walk> dyck;
    for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
        std::string w;
        for (int k = 0; k < 2 * n; ++k) w += (mask >> k & 1) ? 'N' : 'E';
        const Walk g(w);
        if (g.endpoint() == Point{n, n} && g.is_dyck()) dyck.push_back(g);
    }
    std::size_t pairs = 0;
    for (const auto& a : dyck)
        for (const auto& b : dyck) pairs += oracle::above_by_columns(a, b);
    return pairs;
}

Outcome criterion1() {
    Outcome o;
    const std::vector<std::size_t> stated{2, 6, 22, 91};
    std::vector<std::size_t> got;
    for (int n = 1; n <= 4; ++n) got.push_back(size_G(n));
    o.expect(got == stated, "|G_n| = " + join(got) + ", stated " + join(stated));
    o.expect(enumerate_G(1, 1).size() == 4 && enumerate_G(2, 1).size() == 10, "|G_{1,1}| or |G_{2,1}|");
    o.suite("counts", 4);
    return o;
}

Outcome criterion2() {
    Outcome o;
    o.suite("quad-counts", 4);
    return o;
}

Outcome criterion3() {
    Outcome o;
    o.suite("theorem1", 4);
    return o;
}

Outcome criterion4() {
    Outcome o;
    o.suite("zpattern", 4);
    return o;
}

Outcome criterion5() {
    Outcome o;
    o.suite("corollary1", 5);
    return o;
}

Outcome criterion6() {
    Outcome o;
    o.suite("proposition1", 4);
    o.suite("kmsw-link", 4);
    return o;
}

Outcome criterion7() {
    Outcome o;
    const std::vector<std::size_t> stated_P{1, 3, 12}, stated_I{1, 3, 13};
    std::vector<std::size_t> woods, listed, dp, minimal;
    for (int n = 1; n <= 3; ++n) {
        std::size_t w = 0, m = 0;
        for (const auto& t : enumerate_triangulations(n))
            for (const auto& s : enumerate_schnyder(t)) {
                ++w;
                m += is_minimal(s);
            }
        woods.push_back(w);
        minimal.push_back(m);
        listed.push_back(dyck_pairs_by_listing(n));
        dp.push_back(static_cast<std::size_t>(oracle::nested_dyck_pairs(n)));
    }
    o.suite("theorem2", 3);
    o.expect(listed == dp, "pair enumerations disagree: " + join(listed) + " vs " + join(dp));
    o.expect(woods == listed, "|woods| = " + join(woods) + ", |P_n| = " + join(listed));
    o.expect(minimal == stated_I, "|minimal woods| = " + join(minimal) + ", stated " + join(stated_I));
    o.expect(listed == stated_P, "|P_n| = " + join(listed) + " by brute force, stated " + join(stated_P));
    return o;
}

Outcome criterion8() {
    Outcome o;
    o.suite("series", 5);
    const auto diag = F_series(5).diagonal();
    std::vector<std::size_t> got;
    for (int n = 1; n <= 4; ++n) got.push_back(static_cast<std::size_t>(diag[n + 1]));
    o.expect(got == std::vector<std::size_t>{1, 3, 13, 68}, "F(t,t,t) = " + join(got));
    return o;
}

Outcome criterion9() {
    Outcome o;
    const std::vector<std::vector<std::size_t>> stated{{1, 3, 13, 68}, {1, 6, 58}, {1, 10}};
    for (int m = 1; m <= 3; ++m) {
        std::vector<std::size_t> got;
        for (int n = 1; n <= 5 - m; ++n) got.push_back(intervals(Walk::repeat("N" + std::string(m, 'E'), n)).size());
        o.expect(got == stated[m - 1], "m=" + std::to_string(m) + ": " + join(got));
    }
    o.suite("mtamari", 4);
    return o;
}

Outcome criterion10() {
    Outcome o;
    o.suite("mobiles", 3);
    return o;
}

Outcome criterion11() {
    Outcome o;
    const auto triple = io::parse_triple(fixture("running_triple.txt"));
    const auto sepdec = io::as_sepdec(io::parse_map(fixture("running_sepdec.txt")));
    o.expect(phi_prime(sepdec) == triple, "Phi' of the running decomposition is not the running triple");
    o.expect(bracket_vector(triple.lower, triple.middle) == std::vector<int>{4, 0, 0, 4, 3, 3, 5}, "U");
    o.expect(bracket_vector(triple.lower, triple.upper) == std::vector<int>{5, 4, 0, 4, 2, 3, 5}, "V");
    o.expect(tamari_violation(triple.lower, triple.middle, triple.upper) == 5, "verdict is not 'false at index 5'");

    const auto walk = io::parse_tandem(fixture("running_tandem.txt"));
    o.expect(sigma(triple) == walk, "sigma of the running triple");
    o.expect(walk.valid() && walk.se_count() == 7 && walk.steps.size() == 12 && walk.a == 3 && walk.end().x == 2,
             "running tandem walk not in W_{7,5}[3,2]");
    o.expect(lambda(iota_inverse(sepdec)) == walk, "Lambda after iota^-1 differs from sigma");

    const auto mirrored = io::parse_tandem(fixture("running_tandem_tau.txt"));
    const auto bipolar = io::as_bipolar(io::parse_map(fixture("running_bipolar.txt")));
    const auto flipped = io::as_bipolar(io::parse_map(fixture("running_bipolar_mirror.txt")));
    o.expect(bipolar_code(flipped) == bipolar_code(mirror(bipolar)), "mirrored bipolar fixture");
    o.expect(lambda_tilde(flipped) == mirrored && tau_tandem(walk) == mirrored, "mirrored walk");
    o.expect(mirrored.valid() && mirrored.se_count() == 7 && mirrored.a == 2 && mirrored.end().x == 3,
             "mirrored walk not in W_{7,5}[2,3]");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--expect-fail") == 0 && k + 1 < argc) {
            std::stringstream list(argv[++k]);
            for (std::string item; std::getline(list, item, ',');) expected.insert(std::stoi(item));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N,...]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"counts vs formulas", criterion1},
        {"quadrangulation counts", criterion2},
        {"Phi' bijection and minimality", criterion3},
        {"Z-pattern characterizations", criterion4},
        {"tau preserves G", criterion5},
        {"Lambda and the mirror link", criterion6},
        {"Schnyder woods to Dyck pairs", criterion7},
        {"generating function", criterion8},
        {"m-Tamari intervals", criterion9},
        {"mobiles and ternary trees", criterion10},
        {"running example", criterion11},
    };

    std::set<int> failed;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const int id = static_cast<int>(k) + 1;
        if (!o.ok) failed.insert(id);
        std::cout << "criterion " << id << " (" << criteria[k].first << "): " << (o.ok ? "PASS" : "FAIL");
        if (!o.ok) std::cout << " - " << o.detail;
        std::cout << " [" << secs << " s]" << std::endl;
    }
    std::cout << failed.size() << " of " << criteria.size() << " criteria failed" << std::endl;
    if (failed != expected) {
        if (!expected.empty()) std::cout << "failing set differs from --expect-fail" << std::endl;
        return 1;
    }
    return 0;
}
