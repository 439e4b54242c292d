#pragma once

// Lattice walks with North/East steps, the nu-Tamari order and the interval
// families built on top of it.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gtam {

struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

/// A walk from the origin, stored as its word over {N, E}.
class Walk {
public:
    Walk() = default;
    explicit Walk(std::string_view word);

    const std::string& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    char operator[](std::size_t k) const { return word_[k]; }

    int east_count() const;
    int north_count() const;
    Point endpoint() const { return {east_count(), north_count()}; }

    /// Number of East steps at each height 0..north_count().
    std::vector<int> east_per_height() const;
    /// Inverse of east_per_height: E^{c_0} N E^{c_1} ... N E^{c_j}.
    static Walk from_east_per_height(const std::vector<int>& counts);

    /// Points visited, starting at the origin (size()+1 entries).
    std::vector<Point> points() const;

    Walk mirrored() const;
    bool is_dyck() const;

    static Walk repeat(std::string_view block, int times);

    auto operator<=>(const Walk&) const = default;

private:
    std::string word_;
};

struct WalkTriple {
    Walk lower;
    Walk middle;
    Walk upper;
    auto operator<=>(const WalkTriple&) const = default;
};

/// True iff `upper` is above `lower`: same endpoint and, for every height r,
/// upper has at most as many East steps at height <= r as lower.
bool is_above(const Walk& lower, const Walk& upper);

/// x' - x where x' is the abscissa of nu's North step leaving height y
/// (x' = i at the top height). Throws DomainError if p is not on gamma.
int ell_label(const Walk& nu, const Walk& gamma, Point p);

/// Valley points of gamma (preceded by E, followed by N).
std::vector<Point> valleys(const Walk& gamma);

/// The covering move at the valley p. Throws DomainError if p is not a valley.
Walk push(const Walk& nu, const Walk& gamma, Point p);

/// All walks covering gamma in Tam(nu).
std::vector<Walk> covers(const Walk& nu, const Walk& gamma);

/// Segment index matched to each East step of nu (left to right) when the
/// East steps of nu open and those of gamma close, height by height.
/// Throws DomainError unless gamma is above nu.
std::vector<int> bracket_vector(const Walk& nu, const Walk& gamma);

/// First index (1-based) where the bracket vector of a exceeds that of b.
std::optional<int> tamari_violation(const Walk& nu, const Walk& a, const Walk& b);

/// Componentwise comparison of bracket vectors.
bool tamari_leq(const Walk& nu, const Walk& a, const Walk& b);

/// Canopy word of a Dyck walk of length 2n >= 2, as a string over {E, N}
/// of length n+1.
std::string canopy(const Walk& dyck);

/// All walks above nu, sorted.
std::vector<Walk> enumerate_W(const Walk& nu);

/// All arrangements of i East and j North steps, sorted.
std::vector<Walk> all_walks(int i, int j);

using Interval = std::pair<Walk, Walk>;

inline constexpr int kDefaultWalkCap = 7;

std::vector<WalkTriple> enumerate_G(int i, int j, int cap = kDefaultWalkCap);
std::vector<WalkTriple> enumerate_R(int i, int j, int cap = kDefaultWalkCap);
std::vector<Interval> enumerate_I(int n, int cap = kDefaultWalkCap);
std::vector<Interval> enumerate_S(int i, int j, int cap = kDefaultWalkCap);

/// All intervals of Tam(nu).
std::vector<Interval> intervals(const Walk& nu);

enum class PositionType : std::uint8_t { EE, NN, EN };

const char* to_string(PositionType t);

/// Column types of an interval of Tam_n; throws DomainError if not an interval.
std::vector<PositionType> position_types(const Walk& lower, const Walk& upper);

/// Order isomorphism from Tam(nu) onto the Dyck walks of length 2(n+1)
/// whose canopy is E nu N; the lexicographically smallest one is returned.
std::vector<std::pair<Walk, Walk>> nu_dyck_table(const Walk& nu, int cap = 5);

}  // namespace gtam
