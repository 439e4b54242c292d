#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "gtam/bijections.hpp"
#include "gtam/errors.hpp"
#include "oracles.hpp"

using namespace gtam;

TEST_CASE("phi on the 4-cycle") {
    const auto s = minimal_sepdec(four_cycle());
    CHECK(phi(s) == WalkTriple{});
    CHECK(phi_prime(s) == WalkTriple{});
}

TEST_CASE("phi_prime = xi o chi and the minimal restriction") {
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            std::vector<WalkTriple> all, minimal, contour;
            for (const auto& s : enumerate_all_sepdecs(i, j)) {
                const auto r = phi_prime(s);
                CHECK(r == xi(chi(s)));
                CHECK(r.middle == book_embedding(s).middle_word());
                CHECK(sepdec_code(phi_prime_inverse(r)) == sepdec_code(s));
                CHECK(level_value_correspondence(s).ok);
                const auto mi = is_minimal_image(s);
                all.push_back(r);
                contour.push_back(phi(s));
                if (mi.minimal) minimal.push_back(r);
            }
            std::sort(all.begin(), all.end());
            std::sort(minimal.begin(), minimal.end());
            std::sort(contour.begin(), contour.end());
            CHECK(all == enumerate_R(i, j));
            CHECK(contour == all);
            CHECK(minimal == enumerate_G(i, j));
        }
}

TEST_CASE("phi agrees with phi_prime on middle and upper walks") {
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            for (const auto& s : enumerate_all_sepdecs(i, j)) {
                const auto a = phi(s), b = phi_prime(s);
                CHECK(a.middle == b.middle);
                CHECK(a.upper == b.upper);
                CHECK(a.lower.endpoint() == b.lower.endpoint());
            }
}

TEST_CASE("iota is a bijection onto separating decompositions") {
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            std::set<std::vector<int>> codes;
            const auto bs = enumerate_bipolar(i, j);
            for (const auto& b : bs) {
                const auto s = iota(b);
                REQUIRE(validate_sepdec(s).ok);
                CHECK(s.quad.params() == std::pair{i, j});
                codes.insert(sepdec_code(s));
                const auto back = iota_inverse(s);
                CHECK(bipolar_code(back) == bipolar_code(b));
                // deg(s') = a + 2
                CHECK(static_cast<int>(s.map().vertices()[s.quad.s_prime()].size()) == b.boundary().first + 2);
                // inner face types against inner white vertex types
                std::multiset<std::pair<int, int>> faces, whites;
                for (int f = 0; f < b.map.face_count(); ++f)
                    if (f != b.map.outer_face()) faces.insert(face_type(b, f));
                const auto p = indegree_profile(s);
                for (int r = 1; r <= j; ++r) whites.insert({p.red_in[r], p.blue_in[r]});
                CHECK(faces == whites);
            }
            CHECK(codes.size() == bs.size());
            CHECK(codes.size() == enumerate_all_sepdecs(i, j).size());
        }
}

TEST_CASE("sigma on a small triple") {
    const WalkTriple r{Walk("EN"), Walk("EN"), Walk("NE")};
    const auto w = sigma(r);
    CHECK(w.a == 1);
    REQUIRE(w.steps.size() == 2);
    CHECK(w.steps[0].se);
    CHECK(to_string(w.steps[1]) == "(-0,0)");
    CHECK(w.end() == Point{1, 0});
    CHECK(sigma_inverse(w) == r);
    CHECK_THROWS_AS(sigma_inverse(TandemWalk{0, {TandemStep{}}}), DomainError);
}

TEST_CASE("sigma is a bijection and commutes with the involutions") {
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) {
            std::vector<TandemWalk> images;
            for (const auto& r : enumerate_R(i, j)) {
                const auto w = sigma(r);
                CHECK(w.valid());
                CHECK(sigma_inverse(w) == r);
                CHECK(tau_triple(tau_triple(r)) == r);
                CHECK(tau_tandem(tau_tandem(w)) == w);
                CHECK(sigma(tau_triple(r)) == tau_tandem(w));
                CHECK(tamari_leq(r.lower, r.middle, r.upper) ==
                      tamari_leq(tau_triple(r).lower, tau_triple(r).middle, tau_triple(r).upper));
                images.push_back(w);
            }
            std::sort(images.begin(), images.end());
            CHECK(images == enumerate_tandem(i, j));
        }
}

TEST_CASE("lambda and the rightmost-tree walk") {
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            std::map<std::pair<int, int>, int> by_boundary, walks_by_boundary;
            for (const auto& b : enumerate_bipolar(i, j)) {
                const auto w = lambda(b);
                CHECK(w.valid());
                CHECK(w.se_count() == i);
                CHECK(static_cast<int>(w.steps.size()) == i + j);
                CHECK(std::pair{w.a, w.end().x} == b.boundary());
                std::multiset<std::pair<int, int>> faces, steps;
                for (int f = 0; f < b.map.face_count(); ++f)
                    if (f != b.map.outer_face()) faces.insert(face_type(b, f));
                for (const auto& st : w.steps)
                    if (!st.se) steps.insert({st.p, st.q});
                CHECK(faces == steps);
                CHECK(lambda(mirror(b)) == tau_tandem(lambda_tilde(b)));
                ++by_boundary[b.boundary()];
            }
            for (const auto& w : enumerate_tandem(i, j)) ++walks_by_boundary[{w.a, w.end().x}];
            CHECK(by_boundary == walks_by_boundary);
        }
}

TEST_CASE("enumerate_tandem counts") {
    CHECK(enumerate_tandem(0, 0).size() == 1);
    CHECK(enumerate_tandem(1, 0).size() == 1);
    CHECK(enumerate_tandem(0, 1).size() == 1);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) CHECK(enumerate_tandem(i, j).size() == enumerate_R(i, j).size());
}
