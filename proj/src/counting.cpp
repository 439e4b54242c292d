#include "gtam/counting.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "gtam/errors.hpp"
#include "gtam/walks.hpp"

namespace gtam {

namespace {

int total(const Exponent& e) { return e[0] + e[1] + e[2]; }

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int r = 1; r <= k; ++r) b = b * (n - k + r) / r;
    return b;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
    if (a % b != 0) throw InvariantFailure(std::string(what) + ": formula is not an integer");
    return a / b;
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(int degree, BigInt c) { return monomial(degree, {0, 0, 0}, std::move(c)); }

TruncatedSeries TruncatedSeries::monomial(int degree, Exponent e, BigInt c) {
    TruncatedSeries s(degree);
    if (total(e) <= degree) s.add(e, c);
    return s;
}

void TruncatedSeries::add(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt TruncatedSeries::coeff(int a, int b, int c) const {
    auto it = terms_.find({a, b, c});
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> TruncatedSeries::diagonal() const {
    std::vector<BigInt> out(degree_ + 1);
    for (const auto& [e, c] : terms_) out[total(e)] += c;
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (degree_ != o.degree_) throw DomainError("series of different truncation");
    TruncatedSeries s = *this;
    for (const auto& [e, c] : o.terms_) s.add(e, c);
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (degree_ != o.degree_) throw DomainError("series of different truncation");
    TruncatedSeries s = *this;
    for (const auto& [e, c] : o.terms_) s.add(e, -c);
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (degree_ != o.degree_) throw DomainError("series of different truncation");
    TruncatedSeries s(degree_);
    for (const auto& [e, c] : terms_)
        for (const auto& [f, d] : o.terms_) {
            const Exponent g{e[0] + f[0], e[1] + f[1], e[2] + f[2]};
            if (total(g) <= degree_) s.add(g, c * d);
        }
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeff(0, 0, 0) != 1) throw DomainError("inverse: constant term is not 1");
    // 1/(1+u) = sum (-u)^k; u has no constant term so k <= degree suffices
    const TruncatedSeries u = *this - constant(degree_, 1);
    TruncatedSeries out = constant(degree_, 1), power = constant(degree_, 1);
    for (int k = 1; k <= degree_; ++k) {
        power = power * u;
        out = k % 2 ? out - power : out + power;
    }
    return out;
}

std::string TruncatedSeries::to_text() const {
    std::vector<std::pair<std::tuple<int, int, int, int>, BigInt>> rows;
    for (const auto& [e, c] : terms_) rows.push_back({{total(e), e[0], e[1], e[2]}, c});
    std::sort(rows.begin(), rows.end());
    std::ostringstream out;
    for (const auto& [k, c] : rows)
        out << "x^" << std::get<1>(k) << " y^" << std::get<2>(k) << " z^" << std::get<3>(k) << ": " << c << '\n';
    return out.str();
}

RGSolution solve_RG(int degree) {
    if (degree < 1) throw DomainError("solve_RG: degree must be >= 1");
    const auto x = TruncatedSeries::x(degree), y = TruncatedSeries::y(degree), z = TruncatedSeries::z(degree);
    RGSolution s{TruncatedSeries(degree), TruncatedSeries(degree), 0};
    for (int it = 1; it <= degree + 1; ++it) {
        const auto r1 = s.R + 1, g1 = s.G + 1;
        TruncatedSeries R = (y + z * s.R) * r1 * g1 * g1;
        TruncatedSeries G = (x + z * s.G) * g1 * r1 * r1;
        const bool stable = R == s.R && G == s.G;
        s.R = std::move(R);
        s.G = std::move(G);
        s.iterations = it;
        if (stable) return s;
    }
    throw InvariantFailure("solve_RG: no fixed point within degree + 1 iterations");
}

TruncatedSeries F_series(int degree) {
    if (degree < 2) throw DomainError("F_series: degree must be >= 2");
    const auto [R, G, iterations] = solve_RG(degree);
    (void)iterations;
    const auto x = TruncatedSeries::x(degree), y = TruncatedSeries::y(degree), z = TruncatedSeries::z(degree);
    const auto RG = R * G;
    return x * R + y * G + z * RG - RG * ((R + 1) * (G + 1)).inverse();
}

Report check_planted_system(int degree) {
    const auto [R, G, iterations] = solve_RG(degree);
    (void)iterations;
    const auto x = TruncatedSeries::x(degree), y = TruncatedSeries::y(degree), z = TruncatedSeries::z(degree);
    const auto r1 = R + 1, g1 = G + 1;
    const auto B = r1 * (x + z * G) * g1 * (y + z * R);
    const auto left = B * g1 + x + z * G, right = B * r1 + y + z * R;
    if (!(B == left * right)) return Report::fail("B equation");
    if (!(R == right * r1 * g1)) return Report::fail("R equation");
    if (!(G == left * r1 * g1)) return Report::fail("G equation");
    if (!(B * r1 * g1 == R * G * (r1 * g1).inverse())) return Report::fail("F_2 identity");
    return {};
}

BigInt count_nonseparable(int n) {
    if (n < 0) throw DomainError("count_nonseparable: n < 0");
    return exact_div(2 * factorial(3 * n + 3), factorial(n + 2) * factorial(2 * n + 3), "count_nonseparable");
}

BigInt count_nonseparable_refined(int i, int j) {
    if (i < 0 || j < 0) throw DomainError("count_nonseparable_refined: negative argument");
    return exact_div(factorial(2 * i + j + 1) * factorial(2 * j + i + 1),
                     factorial(i + 1) * factorial(j + 1) * factorial(2 * i + 1) * factorial(2 * j + 1),
                     "count_nonseparable_refined");
}

BigInt count_mtamari(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("count_mtamari: needs m, n >= 1");
    return exact_div(BigInt(m + 1) * binomial((m + 1) * (m + 1) * n + m, n - 1), BigInt(n) * (m * n + 1),
                     "count_mtamari");
}

TypeCountTable brute_type_table(int n_max) {
    TypeCountTable a;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& [lower, upper] : enumerate_I(n)) {
            int ee = 0, nn = 0, en = 0;
            for (auto t : position_types(lower, upper)) (t == PositionType::EE ? ee : t == PositionType::NN ? nn : en)++;
            a[{ee - 1, nn - 1, en}] += 1;
        }
    return a;
}

Report verify_type_table(int n_max) {
    const auto a = brute_type_table(n_max);
    const auto f = F_series(n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i < n; ++i)
            for (int j = 0; i + j < n; ++j) {
                const int k = n - 1 - i - j;
                auto it = a.find({i, j, k});
                const BigInt brute = it == a.end() ? BigInt(0) : it->second;
                if (brute != f.coeff(i + 1, j + 1, k)) {
                    std::ostringstream msg;
                    msg << "a[" << i << "," << j << "," << k << "] = " << brute << " but the series gives "
                        << f.coeff(i + 1, j + 1, k);
                    return Report::fail(msg.str());
                }
            }
    return {};
}

}  // namespace gtam
