#include "gtam/dispatch.hpp"

#include <sstream>

#include "gtam/bijections.hpp"
#include "gtam/counting.hpp"
#include "gtam/errors.hpp"
#include "gtam/io.hpp"

namespace gtam {

namespace {

int arg(const std::vector<int>& p, std::size_t k, const std::string& family) {
    if (k >= p.size()) throw DomainError(family + ": missing parameter " + std::to_string(k + 1));
    return p[k];
}

}  // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"G", "R", "S", "I", "Q", "Sep", "B", "W", "Tri", "Schnyder",
                                                "mobiles", "ternary", "formulaN", "formulaNij", "formulaM"};
    return names;
}

const std::vector<std::string>& bijection_names() {
    static const std::vector<std::string> names{
        "phi", "phiprime", "phiprime_inv", "chi", "chi_inv", "xi", "xi_inv", "sigma", "sigma_inv", "iota", "iota_inv",
        "mirror", "lambda", "lambdatilde", "tau_triple", "tau_tandem", "tau_sepdec", "bb", "mobile", "ternary",
        "ternary_inv"};
    return names;
}

std::vector<std::string> enumerate_family(const std::string& family, const std::vector<int>& p, int max) {
    auto cap = [&](int fallback) { return max >= 0 ? max : fallback; };
    std::vector<std::string> out;
    if (family == "G" || family == "R") {
        const int i = arg(p, 0, family), j = arg(p, 1, family);
        const auto all = family == "G" ? enumerate_G(i, j, cap(kDefaultWalkCap)) : enumerate_R(i, j, cap(kDefaultWalkCap));
        for (const auto& r : all) out.push_back(io::write_triple(r));
    } else if (family == "S") {
        for (const auto& x : enumerate_S(arg(p, 0, family), arg(p, 1, family), cap(kDefaultWalkCap)))
            out.push_back(io::write_interval(x));
    } else if (family == "I") {
        for (const auto& x : enumerate_I(arg(p, 0, family), cap(kDefaultWalkCap))) out.push_back(io::write_interval(x));
    } else if (family == "Q") {
        for (const auto& q : enumerate_quadrangulations(arg(p, 0, family), arg(p, 1, family), cap(kDefaultQuadCap)))
            out.push_back(io::write_map(io::to_file(q)));
    } else if (family == "Sep") {
        for (const auto& s : enumerate_all_sepdecs(arg(p, 0, family), arg(p, 1, family), cap(kDefaultSepdecCap)))
            out.push_back(io::write_map(io::to_file(s)));
    } else if (family == "B") {
        for (const auto& b : enumerate_bipolar(arg(p, 0, family), arg(p, 1, family), cap(kDefaultBipolarCap)))
            out.push_back(io::write_map(io::to_file(b)));
    } else if (family == "W") {
        const int i = arg(p, 0, family), j = arg(p, 1, family);
        require_cap(i + j, cap(kDefaultWalkCap), "tandem walks");
        for (const auto& w : enumerate_tandem(i, j)) out.push_back(io::write_tandem(w));
    } else if (family == "Tri") {
        for (const auto& t : enumerate_triangulations(arg(p, 0, family), cap(kDefaultTriangulationCap)))
            out.push_back(io::write_map(io::to_file(t)));
    } else if (family == "Schnyder") {
        for (const auto& t : enumerate_triangulations(arg(p, 0, family), cap(kDefaultTriangulationCap)))
            for (const auto& w : enumerate_schnyder(t)) out.push_back(io::write_map(io::to_file(w)));
    } else if (family == "mobiles") {
        for (const auto& m : enumerate_mobiles(arg(p, 0, family), cap(kDefaultTreeCap))) out.push_back(io::write_mobile(canonical_form(m)));
    } else if (family == "ternary") {
        for (const auto& t : enumerate_ternary(arg(p, 0, family), arg(p, 1, family), cap(kDefaultTreeCap)))
            out.push_back(io::write_ternary(canonical_form(t)));
    } else {
        throw DomainError("unknown family '" + family + "'");
    }
    return out;
}

std::string count_family(const std::string& family, const std::vector<int>& p, int max) {
    std::ostringstream out;
    if (family == "formulaN") out << count_nonseparable(arg(p, 0, family));
    else if (family == "formulaNij") out << count_nonseparable_refined(arg(p, 0, family), arg(p, 1, family));
    else if (family == "formulaM") out << count_mtamari(arg(p, 0, family), arg(p, 1, family));
    else out << enumerate_family(family, p, max).size();
    return out.str();
}

std::string apply_bijection(const std::string& name, const std::string& text) {
    auto sepdec = [&] { return io::as_sepdec(io::parse_map(text)); };
    auto bipolar = [&] { return io::as_bipolar(io::parse_map(text)); };
    auto triple = [&] { return io::parse_triple(text); };
    auto in_R = [](const WalkTriple& r) {
        if (!is_above(r.lower, r.middle) || !is_above(r.middle, r.upper)) throw DomainError("triple is not in R");
        return r;
    };
    if (name == "phi") return io::write_triple(phi(sepdec()));
    if (name == "phiprime") return io::write_triple(phi_prime(sepdec()));
    if (name == "phiprime_inv") return io::write_map(io::to_file(phi_prime_inverse(triple())));
    if (name == "chi") return io::write_arcs(chi(sepdec()));
    if (name == "chi_inv") return io::write_map(io::to_file(chi_inverse(io::parse_arcs(text))));
    if (name == "xi") return io::write_triple(xi(io::parse_arcs(text)));
    if (name == "xi_inv") return io::write_arcs(xi_inverse(triple()));
    if (name == "sigma") return io::write_tandem(sigma(triple()));
    if (name == "sigma_inv") return io::write_triple(sigma_inverse(io::parse_tandem(text)));
    if (name == "iota") return io::write_map(io::to_file(iota(bipolar())));
    if (name == "iota_inv") return io::write_map(io::to_file(iota_inverse(sepdec())));
    if (name == "mirror") return io::write_map(io::to_file(mirror(bipolar())));
    if (name == "lambda") return io::write_tandem(lambda(bipolar()));
    if (name == "lambdatilde") return io::write_tandem(lambda_tilde(bipolar()));
    if (name == "tau_triple") return io::write_triple(tau_triple(in_R(triple())));
    if (name == "tau_tandem") {
        const auto w = io::parse_tandem(text);
        if (!w.valid()) throw DomainError("tandem walk leaves the quadrant or does not end on the x-axis");
        return io::write_tandem(tau_tandem(w));
    }
    if (name == "tau_sepdec") return io::write_map(io::to_file(tau_sepdec(sepdec())));
    if (name == "bb") return io::write_interval(bernardi_bonichon(io::as_schnyder(io::parse_map(text))));
    if (name == "mobile") {
        const auto w = io::as_schnyder(io::parse_map(text));
        if (!is_minimal(w)) throw DomainError("the Schnyder wood is not minimal");
        return io::write_mobile(canonical_form(mobile_from(w)));
    }
    if (name == "ternary") return io::write_ternary(canonical_form(mobile_to_ternary(io::parse_mobile(text))));
    if (name == "ternary_inv") return io::write_mobile(canonical_form(ternary_to_mobile(io::parse_ternary(text))));
    throw DomainError("unknown bijection '" + name + "'");
}

std::string render(const std::string& text, const std::string& format) {
    const std::string kind = io::detect_kind(text);
    if (format == "dot") {
        if (kind == "map") return io::dot(io::parse_map(text));
        if (kind == "mobile") return io::dot(io::parse_mobile(text));
        if (kind == "ternary") return io::dot(io::parse_ternary(text));
        throw DomainError("no DOT rendering for a " + kind);
    }
    if (kind == "map") return io::write_map(io::parse_map(text));
    if (kind == "mobile") return io::write_mobile(canonical_form(io::parse_mobile(text)));
    if (kind == "ternary") return io::write_ternary(canonical_form(io::parse_ternary(text)));
    if (kind == "tandem") return io::write_tandem(io::parse_tandem(text));
    if (kind == "arcs") return io::write_arcs(io::parse_arcs(text));
    if (kind == "triple") return io::write_triple(io::parse_triple(text));
    if (kind == "interval") return io::write_interval(io::parse_interval(text));
    return io::write_walk(io::parse_walk(text));
}

}  // namespace gtam
