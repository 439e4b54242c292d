#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gtam/errors.hpp"
#include "gtam/planar_maps.hpp"

using namespace gtam;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long quad_formula(int i, int j) {
    return factorial(2 * i + j + 1) * factorial(2 * j + i + 1) /
           (factorial(i + 1) * factorial(j + 1) * factorial(2 * i + 1) * factorial(2 * j + 1));
}

// Random relabeling of the darts of m.
RotationMap shuffled(const RotationMap& m, std::mt19937& rng, std::vector<int>& perm) {
    perm.resize(m.darts());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> alpha(m.darts()), sigma(m.darts());
    for (int d = 0; d < m.darts(); ++d) {
        alpha[perm[d]] = perm[m.alpha(d)];
        sigma[perm[d]] = perm[m.sigma(d)];
    }
    return RotationMap(alpha, sigma, perm[m.root()]);
}

}  // namespace

TEST_CASE("orbits of small maps") {
    const auto q = four_cycle();
    CHECK(q.map.vertex_count() == 4);
    CHECK(q.map.face_count() == 2);
    for (const auto& f : q.map.faces()) CHECK(f.size() == 4);
    CHECK(q.map.faces()[q.map.outer_face()].front() == q.map.root());
    CHECK(validate_quadrangulation(q).ok);
    CHECK(q.params() == std::pair{0, 0});
    CHECK(q.color[q.s()] == VColor::Black);
    CHECK(q.color[q.t()] == VColor::Black);
    CHECK(q.color[q.s_prime()] == VColor::White);
    CHECK(q.color[q.t_prime()] == VColor::White);

    // single loop: one vertex, one edge, two faces
    RotationMap loop({1, 0}, {1, 0}, 0);
    CHECK(loop.vertex_count() == 1);
    CHECK(loop.face_count() == 2);
    CHECK(!loop.check());
    CHECK(loop.has_loop());

    // tetrahedron: K4, 4 triangles
    EdgeList k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}};
    // Of the two cyclic orders at vertex 0 exactly one is planar.
    RotationMap tet = build_map(k4, {{0, 2, 4}, {1, 11, 6}, {3, 7, 8}, {5, 9, 10}}, 0);
    RotationMap tet2 = build_map(k4, {{0, 4, 2}, {1, 11, 6}, {3, 7, 8}, {5, 9, 10}}, 0);
    CHECK(bool(tet.check()) != bool(tet2.check()));
    const RotationMap& planar = tet.check() ? tet2 : tet;
    CHECK(planar.face_count() == 4);
    for (const auto& f : planar.faces()) CHECK(f.size() == 3);
}

TEST_CASE("check rejects broken maps") {
    CHECK_THROWS_AS(RotationMap({1, 0}, {0, 0}, 0), DomainError);
    CHECK_THROWS_AS(RotationMap({1, 0}, {0, 1}, 3), DomainError);
    CHECK(RotationMap({0, 1}, {0, 1}, 0).check());            // alpha has fixed points
    CHECK(RotationMap({1, 0, 3, 2}, {0, 1, 2, 3}, 0).check());  // disconnected
}

TEST_CASE("mirror is an involution and swaps boundary lengths") {
    for (const auto& q : enumerate_quadrangulations(1, 1)) {
        const auto mm = mirror(mirror(q));
        CHECK(quad_code(mm) == quad_code(q));
        const auto m1 = mirror(q);
        CHECK(validate_quadrangulation(m1).ok);
        CHECK(m1.s_prime() == m1.map.head(m1.map.root()));
    }
    for (int n = 0; n <= 3; ++n)
        for (const auto& b : enumerate_bipolar(n, 3 - n)) {
            const auto mb = mirror(b);
            CHECK(validate_bipolar(mb).ok);
            auto [a, bb] = b.boundary();
            CHECK(mb.boundary() == std::pair{bb, a});
            CHECK(bipolar_code(mirror(mb)) == bipolar_code(b));
        }
}

TEST_CASE("canonical code is invariant under dart relabeling") {
    std::mt19937 rng(7);
    for (const auto& q : enumerate_quadrangulations(2, 1)) {
        std::vector<int> perm;
        RotationMap m = shuffled(q.map, rng, perm);
        std::vector<int> colors(m.darts());
        for (int d = 0; d < q.map.darts(); ++d) colors[perm[d]] = static_cast<int>(q.color[q.map.vertex(d)]);
        CHECK(canonical_code(m, colors) == quad_code(q));
    }
}

TEST_CASE("quadrangulation counts") {
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            const auto all = enumerate_quadrangulations(i, j);
            CHECK(static_cast<long long>(all.size()) == quad_formula(i, j));
            for (const auto& q : all) {
                REQUIRE(validate_quadrangulation(q).ok);
                CHECK(q.params() == std::pair{i, j});
            }
        }
    CHECK_THROWS_AS(enumerate_quadrangulations(3, 3), CapExceeded);
}

TEST_CASE("triangulation counts") {
    const std::vector<std::size_t> expected{1, 1, 3, 13};
    for (int n = 0; n <= 3; ++n) {
        const auto all = enumerate_triangulations(n);
        CHECK(all.size() == expected[n]);
        for (const auto& t : all) CHECK(validate_triangulation(t).ok);
    }
}

TEST_CASE("bipolar orientations") {
    const auto e = single_edge();
    CHECK(validate_bipolar(e).ok);
    CHECK(e.boundary() == std::pair{0, 0});
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            const auto all = enumerate_bipolar(i, j);
            // Bipolar orientations are equinumerous with quadrangulations.
            CHECK(static_cast<long long>(all.size()) == quad_formula(i, j));
            for (const auto& b : all) {
                REQUIRE(validate_bipolar(b).ok);
                CHECK(b.non_pole_count() == i);
                CHECK(b.inner_face_count() == j);
                for (int f = 0; f < b.map.face_count(); ++f) {
                    if (f == b.map.outer_face()) continue;
                    auto [p, q] = face_type(b, f);
                    CHECK(p >= 0);
                    CHECK(q >= 0);
                }
            }
        }
    // the 2-cycle with both edges s -> t
    const auto two = enumerate_bipolar(0, 1);
    REQUIRE(two.size() == 1);
    CHECK(face_type(two[0], 1 - two[0].map.outer_face()) == std::pair{0, 0});
}
