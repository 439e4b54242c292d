#pragma once

// Closed formulas and the truncated trivariate series of the type-refined
// interval count.

#include <array>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtam/planar_maps.hpp"

namespace gtam {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::array<int, 3>;  // powers of x, y, z

/// Sparse series in x, y, z; every monomial of total degree > D is dropped.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree = 0) : degree_(degree) {}

    static TruncatedSeries constant(int degree, BigInt c);
    static TruncatedSeries x(int degree) { return monomial(degree, {1, 0, 0}); }
    static TruncatedSeries y(int degree) { return monomial(degree, {0, 1, 0}); }
    static TruncatedSeries z(int degree) { return monomial(degree, {0, 0, 1}); }
    static TruncatedSeries monomial(int degree, Exponent e, BigInt c = 1);

    int degree() const { return degree_; }
    BigInt coeff(int a, int b, int c) const;
    const std::map<Exponent, BigInt>& terms() const { return terms_; }
    /// Coefficients of F(t,t,t) for t^0..t^D.
    std::vector<BigInt> diagonal() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator+(long c) const { return *this + constant(degree_, c); }
    /// Requires constant term 1; inverts by the geometric series.
    TruncatedSeries inverse() const;
    bool operator==(const TruncatedSeries& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

    /// Lines `x^a y^b z^c: coeff` sorted by (total degree, a, b, c).
    std::string to_text() const;

private:
    void add(const Exponent& e, const BigInt& c);

    int degree_;
    std::map<Exponent, BigInt> terms_;  // no zero entries
};

struct RGSolution {
    TruncatedSeries R, G;
    int iterations = 0;
};

/// Fixed point of R = (y+zR)(1+R)(1+G)^2, G = (x+zG)(1+G)(1+R)^2 from R = G = 0.
RGSolution solve_RG(int degree);

/// F = xR + yG + zRG - RG/((1+R)(1+G)) to total degree D >= 2.
TruncatedSeries F_series(int degree);

/// B = (1+R)(x+zG)(1+G)(y+zR) satisfies the three-equation system of planted mobiles.
Report check_planted_system(int degree);

BigInt count_nonseparable(int n);
BigInt count_nonseparable_refined(int i, int j);
/// (m+1)/(n(mn+1)) binom((m+1)^2 n + m, n-1), n >= 1.
BigInt count_mtamari(int m, int n);

/// a[i,j,k]: intervals of I_{i+j+k+1} with i+1, j+1, k positions of type EE, NN, EN.
using TypeCountTable = std::map<Exponent, BigInt>;

/// By enumeration of the intervals of Tam_n for n <= n_max.
TypeCountTable brute_type_table(int n_max);

/// Every a[i,j,k] with i+j+k+1 <= n_max against [x^{i+1} y^{j+1} z^k] F.
Report verify_type_table(int n_max);

}  // namespace gtam
