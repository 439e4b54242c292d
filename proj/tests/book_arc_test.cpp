#include <set>

#include "doctest.h"
#include "gtam/book_arc.hpp"
#include "gtam/errors.hpp"
#include "oracles.hpp"

using namespace gtam;

TEST_CASE("4-cycle: green path, book embedding and empty diagram") {
    const auto s = minimal_sepdec(four_cycle());
    const auto aug = augmented(s);
    CHECK(aug.path_vertices == std::vector<int>{s.quad.s_prime(), s.quad.t_prime()});
    CHECK(aug.path_faces.size() == 1);
    const auto b = book_embedding(s);
    CHECK(b.line.size() == 4);
    CHECK(b.middle_word() == Walk(""));
    const auto a = chi(s);
    CHECK(a.segments() == std::vector<Segment>{Segment{}});
    CHECK(xi(a) == WalkTriple{});
    CHECK(sepdec_code(chi_inverse(a)) == sepdec_code(s));
    CHECK_FALSE(has_z_pattern(a));
}

TEST_CASE("chi is a bijection onto arc diagrams") {
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            std::set<std::vector<int>> seen_codes;
            std::vector<ArcDiagram> images;
            for (const auto& s : enumerate_all_sepdecs(i, j)) {
                const auto b = book_embedding(s);
                CHECK(b.line.size() == std::size_t(i + j + 4));
                const auto a = chi(s);
                CHECK(a.i() == i);
                CHECK(a.j() == j);
                images.push_back(a);
                const auto back = chi_inverse(a);
                REQUIRE(validate_sepdec(back).ok);
                CHECK(sepdec_code(back) == sepdec_code(s));
                // minimal iff no Z-pattern
                CHECK(is_minimal(s) == !has_z_pattern(a));
                CHECK(has_z_pattern(a) == has_z_pattern(half_turn(a)));
                CHECK(chi(tau_sepdec(s)) == half_turn(a));
            }
            std::sort(images.begin(), images.end());
            CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
            CHECK(images == enumerate_arc_diagrams(i, j));
        }
}

TEST_CASE("xi and xi_inverse") {
    CHECK(xi(ArcDiagram()) == WalkTriple{});
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) {
            const auto rs = enumerate_R(i, j);
            CHECK(rs.size() == enumerate_arc_diagrams(i, j).size());
            for (const auto& r : rs) {
                const auto a = xi_inverse(r);
                CHECK(xi(a) == r);
                // membership in G iff no Z-pattern
                CHECK(tamari_leq(r.lower, r.middle, r.upper) == !has_z_pattern(a));
                const auto md = modified_diagram(a);
                CHECK(md.U == bracket_vector(r.lower, r.middle));
                CHECK(md.V == bracket_vector(r.lower, r.upper));
                CHECK(has_forbidden_pattern(md) == !tamari_leq(r.lower, r.middle, r.upper));
            }
        }
    CHECK_THROWS_AS(xi_inverse({Walk("NE"), Walk("EN"), Walk("EN")}), DomainError);
    CHECK_THROWS_AS(ArcDiagram({{0, 1, 0}, {1, 0, 1}}), DomainError);
}

TEST_CASE("Z-pattern on a hand-made diagram") {
    // dots: blue black | blue red | black red; the red arc (1,3) and the
    // blue arc (2,4) interleave
    const ArcDiagram a({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(a.lower_arcs() == std::vector<Arc>{{0, 1}, {2, 4}});
    CHECK(a.upper_arcs() == std::vector<Arc>{{1, 3}, {4, 5}});
    CHECK(has_z_pattern(a));
    CHECK_FALSE(has_z_pattern(ArcDiagram({{1, 1, 1}})));
}
