#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "doctest.h"
#include "gtam/errors.hpp"
#include "gtam/walks.hpp"
#include "oracles.hpp"

using namespace gtam;

TEST_CASE("is_above on small walks") {
    CHECK(is_above(Walk("EN"), Walk("NE")));
    CHECK_FALSE(is_above(Walk("NE"), Walk("EN")));
    CHECK(is_above(Walk("EENN"), Walk("EENN")));
    CHECK_FALSE(is_above(Walk("EN"), Walk("ENN")));
}

TEST_CASE("prefix formulation agrees with the column-by-column reading") {
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j + i <= 6; ++j) {
            const auto ws = all_walks(i, j);
            for (const auto& a : ws)
                for (const auto& b : ws) REQUIRE(is_above(a, b) == oracle::above_by_columns(a, b));
        }
}

TEST_CASE("ell_label") {
    CHECK(ell_label(Walk("EN"), Walk("EN"), {1, 0}) == 0);
    CHECK(ell_label(Walk("EN"), Walk("NE"), {0, 1}) == 1);
    CHECK(ell_label(Walk(""), Walk(""), {0, 0}) == 0);
    CHECK_THROWS_AS(ell_label(Walk("EN"), Walk("EN"), {0, 1}), DomainError);
}

TEST_CASE("push") {
    CHECK(push(Walk("EN"), Walk("EN"), {1, 0}) == Walk("NE"));
    CHECK_THROWS_AS(push(Walk("NE"), Walk("NE"), {0, 1}), DomainError);
    CHECK_THROWS_AS(push(Walk("NE"), Walk("NE"), {1, 1}), DomainError);

    // Every push from a walk above nu = EENENEENNE lands above nu and above gamma.
    const Walk nu("EENENEENNE");
    for (const Walk& g : enumerate_W(nu))
        for (const Walk& c : covers(nu, g)) {
            CHECK(is_above(nu, c));
            CHECK(is_above(g, c));
            CHECK(c != g);
        }
}

TEST_CASE("tamari_leq matches the transitive closure of push for |nu| <= 7") {
    for (int len = 0; len <= 7; ++len)
        for (int i = 0; i <= len; ++i)
            for (const Walk& nu : all_walks(i, len - i)) {
                const auto elems = enumerate_W(nu);
                for (const Walk& a : elems) {
                    const auto reach = oracle::push_closure(nu, a);
                    for (const Walk& b : elems) {
                        const bool leq = tamari_leq(nu, a, b);
                        REQUIRE(leq == (reach.count(b) == 1));
                        if (leq) REQUIRE(is_above(a, b));
                    }
                }
            }
}

TEST_CASE("push strictly increases the bracket vector") {
    for (int len = 0; len <= 6; ++len)
        for (int i = 0; i <= len; ++i)
            for (const Walk& nu : all_walks(i, len - i))
                for (const Walk& g : enumerate_W(nu))
                    for (const Walk& c : covers(nu, g)) {
                        const auto u = bracket_vector(nu, g);
                        const auto v = bracket_vector(nu, c);
                        bool strict = false;
                        for (std::size_t k = 0; k < u.size(); ++k) {
                            REQUIRE(u[k] <= v[k]);
                            strict = strict || u[k] < v[k];
                        }
                        REQUIRE(strict);
                    }
}

TEST_CASE("bracket_vector of nu itself is the entrywise minimum") {
    for (int len = 0; len <= 6; ++len)
        for (int i = 0; i <= len; ++i)
            for (const Walk& nu : all_walks(i, len - i)) {
                const auto base = bracket_vector(nu, nu);
                for (const Walk& g : enumerate_W(nu)) {
                    const auto v = bracket_vector(nu, g);
                    for (std::size_t k = 0; k < v.size(); ++k) REQUIRE(base[k] <= v[k]);
                }
            }
    CHECK_THROWS_AS(bracket_vector(Walk("NE"), Walk("EN")), DomainError);
}

TEST_CASE("running example bracket vectors") {
    const WalkTriple fig = oracle::running_example_triple();
    CHECK(bracket_vector(fig.lower, fig.middle) == std::vector<int>{4, 0, 0, 4, 3, 3, 5});
    CHECK(bracket_vector(fig.lower, fig.upper) == std::vector<int>{5, 4, 0, 4, 2, 3, 5});
    CHECK_FALSE(tamari_leq(fig.lower, fig.middle, fig.upper));
    CHECK(tamari_leq(Walk("EN"), Walk("EN"), Walk("NE")));
}

TEST_CASE("canopy") {
    CHECK(canopy(Walk("NENE")) == "ENN");
    CHECK(canopy(Walk("NNEE")) == "EEN");
    for (int n = 1; n <= 5; ++n) CHECK(canopy(Walk::repeat("NE", n)) == "E" + std::string(n, 'N'));
    CHECK_THROWS_AS(canopy(Walk("EN")), DomainError);
    CHECK_THROWS_AS(canopy(Walk("")), DomainError);
    for (int n = 1; n <= 5; ++n)
        for (const Walk& d : enumerate_W(Walk::repeat("NE", n))) {
            const auto c = canopy(d);
            CHECK(c.front() == 'E');
            CHECK(c.back() == 'N');
        }
}

TEST_CASE("enumerate_W") {
    CHECK(enumerate_W(Walk("EN")) == std::vector<Walk>{Walk("EN"), Walk("NE")});
    CHECK(enumerate_W(Walk("")) == std::vector<Walk>{Walk("")});
    CHECK(enumerate_W(Walk::repeat("NE", 3)).size() == 5);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (const Walk& nu : all_walks(i, j)) {
                std::vector<Walk> brute;
                for (const Walk& w : all_walks(i, j))
                    if (oracle::above_by_columns(nu, w)) brute.push_back(w);
                CHECK(enumerate_W(nu) == brute);
            }
}

TEST_CASE("interval families") {
    CHECK(enumerate_G(1, 1).size() == 4);
    CHECK(enumerate_R(1, 1).size() == 4);
    CHECK(enumerate_I(3).size() == 13);
    CHECK(enumerate_G(0, 0).size() == 1);
    CHECK(enumerate_G(3, 0).size() == 1);
    CHECK(enumerate_G(0, 3).size() == 1);
    CHECK_THROWS_AS(enumerate_G(5, 5), CapExceeded);
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) CHECK(enumerate_G(i, j).size() == enumerate_S(i, j).size());
}

TEST_CASE("position types") {
    using P = PositionType;
    CHECK(position_types(Walk("NENE"), Walk("NNEE")) == std::vector<P>{P::EE, P::EN, P::NN});
    CHECK(position_types(Walk("NENE"), Walk("NENE")) == std::vector<P>{P::EE, P::NN, P::NN});
    CHECK_THROWS_AS(position_types(Walk("NNEE"), Walk("NENE")), DomainError);
    for (int n = 1; n <= 5; ++n)
        for (auto& [a, b] : enumerate_I(n)) {
            const auto t = position_types(a, b);
            REQUIRE(t.size() == std::size_t(n + 1));
            CHECK(t.front() == P::EE);
            CHECK(t.back() == P::NN);
            if (a == b) CHECK(std::count(t.begin(), t.end(), P::EN) == 0);
        }
}

TEST_CASE("nu_dyck_table") {
    auto t0 = nu_dyck_table(Walk(""));
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].second == Walk("NE"));
    auto t1 = nu_dyck_table(Walk("EN"));
    REQUIRE(t1.size() == 2);
    for (int len = 0; len <= 5; ++len)
        for (int i = 0; i <= len; ++i)
            for (const Walk& nu : all_walks(i, len - i)) {
                const auto table = nu_dyck_table(nu);
                CHECK(table.size() == enumerate_W(nu).size());
                const Walk big = Walk::repeat("NE", len + 1);
                for (auto& [a, da] : table)
                    for (auto& [b, db] : table) REQUIRE(tamari_leq(nu, a, b) == tamari_leq(big, da, db));
            }
}
