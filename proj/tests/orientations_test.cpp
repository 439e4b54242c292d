#include <set>

#include "doctest.h"
#include "gtam/errors.hpp"
#include "gtam/orientations.hpp"
#include "gtam/walks.hpp"
#include "oracles.hpp"

using namespace gtam;

TEST_CASE("the 4-cycle has one separating decomposition") {
    const auto q = four_cycle();
    const auto all = enumerate_sepdecs(q);
    REQUIRE(all.size() == 1);
    const auto& s = all[0];
    CHECK(validate_sepdec(s).ok);
    CHECK(clockwise_cycles(s.map(), s.dir).empty());
    CHECK(sepdec_code(minimal_sepdec(q)) == sepdec_code(s));
    const auto p = indegree_profile(s);
    CHECK(p.order == std::vector<int>{q.s_prime(), q.t_prime()});
    CHECK(p.blue_in.front() == 0);
    CHECK(p.red_in.back() == 0);
    CHECK(is_m_regular(s, 1));
    CHECK(is_m_regular(s, 2));
}

TEST_CASE("separating decompositions are counted by R_{i,j}") {
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            std::size_t total = 0, minimal = 0;
            const auto quads = enumerate_quadrangulations(i, j);
            for (const auto& q : quads) {
                const auto all = enumerate_sepdecs(q);
                total += all.size();
                for (const auto& s : all) {
                    REQUIRE(validate_sepdec(s).ok);
                    const bool min = is_minimal(s);
                    minimal += min;
                    // tau is an involution that preserves validity and minimality
                    const auto ts = tau_sepdec(s);
                    CHECK(validate_sepdec(ts).ok);
                    CHECK(is_minimal(ts) == min);
                    CHECK(sepdec_code(tau_sepdec(ts)) == sepdec_code(s));
                    if (!min) {
                        // a non-minimal one has a clockwise 4-cycle
                        bool four = false;
                        for (const auto& c : clockwise_cycles(s.map(), s.dir)) four = four || c.size() == 4;
                        CHECK(four);
                    }
                }
            }
            INFO("i=" << i << " j=" << j);
            CHECK(total == enumerate_R(i, j).size());
            CHECK(minimal == quads.size());
            CHECK(minimal == enumerate_G(i, j).size());
        }
}

TEST_CASE("reversing a clockwise cycle removes it") {
    for (const auto& s : enumerate_all_sepdecs(2, 1)) {
        for (const auto& c : clockwise_cycles(s.map(), s.dir)) {
            auto dir = s.dir;
            for (int d : c) {
                dir[d] = -dir[d];
                dir[s.map().alpha(d)] = -dir[s.map().alpha(d)];
            }
            for (const auto& other : clockwise_cycles(s.map(), dir)) {
                std::set<int> a(c.begin(), c.end());
                std::set<int> edges_c, edges_o;
                for (int d : c) edges_c.insert(s.map().edge(d));
                for (int d : other) edges_o.insert(s.map().edge(d));
                CHECK(edges_c != edges_o);
            }
        }
    }
}

TEST_CASE("indegree profiles") {
    for (const auto& s : enumerate_all_sepdecs(2, 2)) {
        const auto p = indegree_profile(s);
        int blue_into_white = 0;
        for (int d = 0; d < s.map().darts(); ++d)
            if (s.dir[d] < 0 && s.color[d] == EColor::Blue && s.quad.color[s.map().vertex(d)] == VColor::White)
                ++blue_into_white;
        int sum = 0;
        for (int b : p.blue_in) sum += b;
        CHECK(sum == blue_into_white);
        CHECK(p.order.size() == 4);
        // every tree edge is walked twice
        CHECK(blue_contour(s).size() == 2 * (s.map().vertex_count() - 2));
    }
}

TEST_CASE("m-regular quadrangulations") {
    const std::vector<std::size_t> tam{1, 1, 3, 13};
    for (int n = 1; n <= 2; ++n) {
        std::size_t count = 0;
        for (const auto& q : enumerate_quadrangulations(n, n)) count += is_m_regular(minimal_sepdec(q), 1);
        CHECK(count == tam[n]);
    }
    std::size_t count = 0;
    for (const auto& q : enumerate_quadrangulations(2, 1)) count += is_m_regular(minimal_sepdec(q), 2);
    CHECK(count == 1);
}

TEST_CASE("Schnyder woods") {
    const auto tet = enumerate_triangulations(1);
    REQUIRE(tet.size() == 1);
    const auto woods = enumerate_schnyder(tet[0]);
    REQUIRE(woods.size() == 1);
    CHECK(validate_schnyder(woods[0]).ok);
    CHECK(schnyder_code(minimal_schnyder(tet[0])) == schnyder_code(woods[0]));

    for (int n = 0; n <= 3; ++n) {
        std::size_t total = 0;
        for (const auto& t : enumerate_triangulations(n)) {
            const auto all = enumerate_schnyder(t);
            total += all.size();
            for (const auto& w : all) CHECK(validate_schnyder(w).ok);
            CHECK_NOTHROW(minimal_schnyder(t));
        }
        CHECK(total == static_cast<std::size_t>(oracle::nested_dyck_pairs(n)));
    }
}
