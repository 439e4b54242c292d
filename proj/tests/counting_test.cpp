#include "doctest.h"
#include "gtam/counting.hpp"
#include "gtam/errors.hpp"
#include "gtam/walks.hpp"

using namespace gtam;

TEST_CASE("closed formulas") {
    const int nonsep[] = {2, 6, 22, 91, 408};
    for (int n = 1; n <= 5; ++n) CHECK(count_nonseparable(n) == nonsep[n - 1]);
    CHECK(count_nonseparable_refined(2, 1) == 10);
    for (int n = 0; n <= 8; ++n) {
        BigInt sum = 0;
        for (int i = 0; i <= n; ++i) sum += count_nonseparable_refined(i, n - i);
        CHECK(sum == count_nonseparable(n));
    }
    const int m1[] = {1, 3, 13, 68};
    for (int n = 1; n <= 4; ++n) CHECK(count_mtamari(1, n) == m1[n - 1]);
    CHECK(count_mtamari(2, 3) == 58);
    CHECK(count_mtamari(3, 2) == 10);
    CHECK_THROWS_AS(count_mtamari(1, 0), DomainError);
}

TEST_CASE("series arithmetic") {
    const int d = 4;
    const auto x = TruncatedSeries::x(d);
    const auto inv = (x + 1).inverse();
    CHECK(((x + 1) * inv) == TruncatedSeries::constant(d, 1));
    CHECK(inv.coeff(3, 0, 0) == -1);
    CHECK((x * x * x * x * x).terms().empty());
    CHECK(TruncatedSeries::monomial(d, {1, 2, 0}, 5).to_text() == "x^1 y^2 z^0: 5\n");
}

TEST_CASE("solve_RG") {
    const auto s = solve_RG(6);
    CHECK(s.iterations <= 7);
    CHECK(s.R.coeff(0, 1, 0) == 1);
    CHECK(s.G.coeff(1, 0, 0) == 1);
    CHECK(s.R.coeff(1, 0, 0) == 0);
    // iterate k of a smaller truncation agrees with the solution below degree k
    for (int d = 1; d <= 5; ++d) {
        const auto t = solve_RG(d);
        for (const auto& [e, c] : t.R.terms()) CHECK(s.R.coeff(e[0], e[1], e[2]) == c);
    }
    CHECK(check_planted_system(6).ok);
}

TEST_CASE("F against enumeration") {
    const auto f = F_series(6);
    CHECK(f.coeff(1, 1, 0) == 1);
    CHECK(f.coeff(1, 1, 1) == 1);
    CHECK(f.coeff(1, 2, 0) == 1);
    CHECK(f.coeff(2, 1, 0) == 1);
    for (const auto& [e, c] : f.terms()) CHECK(c > 0);
    const auto diag = f.diagonal();
    CHECK(diag[2] == 1);
    CHECK(diag[3] == 3);
    CHECK(diag[4] == 13);
    CHECK(diag[5] == 68);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) CHECK(f.coeff(i + 1, j + 1, 0) == enumerate_G(i, j).size());
}

TEST_CASE("type table") {
    CHECK(verify_type_table(3).ok);
    CHECK(verify_type_table(5).ok);
    const auto a = brute_type_table(4);
    std::vector<BigInt> rows(5);
    for (const auto& [e, c] : a) rows[e[0] + e[1] + e[2] + 1] += c;
    for (int n = 1; n <= 4; ++n) CHECK(rows[n] == enumerate_I(n).size());
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            auto it = a.find({i, j, 0});
            REQUIRE(it != a.end());
            CHECK(it->second == enumerate_S(i, j).size());
            CHECK(it->second == enumerate_G(i, j).size());
        }
}
