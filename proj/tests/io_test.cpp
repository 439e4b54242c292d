#include "doctest.h"
#include "gtam/errors.hpp"
#include "gtam/io.hpp"

using namespace gtam;

namespace {

template <class W, class P, class T>
void round_trip(const T& x, W write, P parse) {
    const std::string text = write(x);
    CHECK(write(parse(text)) == text);
}

}  // namespace

TEST_CASE("walk and triple formats") {
    CHECK(io::write_walk(Walk("NEE")) == "NEE\n");
    CHECK(io::parse_walk("") == Walk(""));
    CHECK_THROWS_AS(io::parse_walk("NX\n"), ParseError);
    const WalkTriple r{Walk("EN"), Walk("EN"), Walk("NE")};
    CHECK(io::parse_triple(io::write_triple(r)) == r);
    CHECK(io::parse_triple("\n\n\n") == WalkTriple{});
    CHECK(io::detect_kind("\n\n\n") == "triple");
    CHECK(io::detect_kind("EN\nNE\n") == "interval");
    CHECK_THROWS_AS(io::parse_triple("EN\n"), ParseError);
}

TEST_CASE("map format") {
    const auto s = minimal_sepdec(four_cycle());
    const auto text = io::write_map(io::to_file(s));
    CHECK(text.rfind("map E=4 root=", 0) == 0);
    CHECK(io::detect_kind(text) == "map");
    const auto back = io::as_sepdec(io::parse_map(text));
    CHECK(sepdec_code(back) == sepdec_code(s));
    CHECK(io::write_map(io::to_file(back)) == text);
    for (const auto& q : enumerate_all_sepdecs(1, 1)) round_trip(io::to_file(q), io::write_map, io::parse_map);
    for (const auto& b : enumerate_bipolar(2, 1)) {
        const auto t = io::write_map(io::to_file(b));
        CHECK(bipolar_code(io::as_bipolar(io::parse_map(t))) == bipolar_code(b));
    }
    const auto w = minimal_schnyder(enumerate_triangulations(2).at(0));
    CHECK(schnyder_code(io::as_schnyder(io::parse_map(io::write_map(io::to_file(w))))) == schnyder_code(w));
    CHECK_THROWS_AS(io::parse_map("map E=1 root=1\nopposite: 2 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_map("map E=1 root=1\nopposite: 1 2\nsigma: 1 2\n"), ParseError);
    CHECK_THROWS_AS(io::as_sepdec(io::parse_map(io::write_map(io::to_file(four_cycle())))), DomainError);
}

TEST_CASE("arc diagram format") {
    const ArcDiagram a({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    const auto text = io::write_arcs(a);
    CHECK(text == "b | k | .\nb | . | r\n. | k | r\nlower: 0-1 2-4\nupper: 1-3 4-5\n");
    CHECK(io::parse_arcs(text) == a);
    CHECK(io::detect_kind(text) == "arcs");
    CHECK(io::parse_arcs("b b | k | r\n| k | r\nlower: 0-4 1-2\nupper: 2-3 4-5\n") ==
          ArcDiagram({{2, 1, 1}, {0, 1, 1}}));
    CHECK_THROWS_AS(io::parse_arcs("b | k | .\n. | . | r\nlower: 0-2\nupper: 1-2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_arcs("b | k | r\nlower: 0-1\nupper: 0-2\n"), ParseError);
}

TEST_CASE("tandem format") {
    const TandemWalk w{1, {TandemStep{}, TandemStep{false, 0, 0}}};
    CHECK(io::write_tandem(w) == "1; SE (-0,0)\n");
    CHECK(io::parse_tandem("1; SE (-0,0)") == w);
    CHECK(io::write_tandem(TandemWalk{}) == "0;\n");
    CHECK(io::parse_tandem("0;\n") == TandemWalk{});
    CHECK(io::detect_kind("0;\n") == "tandem");
    CHECK_THROWS_AS(io::parse_tandem("1; SW"), ParseError);
    for (const auto& t : enumerate_tandem(2, 2)) round_trip(t, io::write_tandem, io::parse_tandem);
}

TEST_CASE("mobile and ternary formats") {
    for (const auto& m : enumerate_mobiles(3)) {
        const auto text = io::write_mobile(m);
        const auto back = io::parse_mobile(text);
        CHECK(validate_mobile(back).ok);
        CHECK(mobile_code(back) == mobile_code(m));
        CHECK(io::write_mobile(back) == text);
    }
    for (const auto& t : enumerate_ternary(1, 1)) {
        const auto text = io::write_ternary(t);
        const auto back = io::parse_ternary(text);
        CHECK(validate_ternary(back).ok);
        CHECK(ternary_code(back) == ternary_code(t));
        CHECK(io::write_ternary(back) == text);
    }
    const auto u = io::parse_ternary("ternary N(r<L,g>L,r>L,g<L)\n");
    CHECK(u.params() == std::pair{0, 0});
    CHECK_THROWS_AS(io::parse_mobile("mobile W(bK(gL,rL),gK(rL,bL)"), ParseError);
    CHECK_THROWS_AS(io::parse_ternary("ternary N(rL)"), ParseError);
}

TEST_CASE("dot output") {
    const auto s = minimal_sepdec(four_cycle());
    const auto d = io::dot(io::to_file(s));
    CHECK(d.find("digraph") == 0);
    std::size_t blue = 0, red = 0;
    for (std::size_t p = 0; (p = d.find("color=blue", p)) != std::string::npos; ++p) ++blue;
    for (std::size_t p = 0; (p = d.find("color=red", p)) != std::string::npos; ++p) ++red;
    CHECK(blue == 2);
    CHECK(red == 2);
    CHECK(io::dot(enumerate_mobiles(1).at(0)).find("graph mobile") == 0);
}
