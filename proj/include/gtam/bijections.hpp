#pragma once

// Bijections between separating decompositions, bipolar orientations,
// triples of walks and tandem walks.

#include <optional>
#include <string>
#include <vector>

#include "gtam/book_arc.hpp"
#include "gtam/orientations.hpp"
#include "gtam/planar_maps.hpp"
#include "gtam/walks.hpp"

namespace gtam {

/// The original contour-based mapping (lower walk read off the blue tree).
WalkTriple phi(const SeparatingDecomposition& s);
/// Lower walk from blue indegrees of v_0..v_j.
WalkTriple phi_prime(const SeparatingDecomposition& s);
/// chi_inverse o xi_inverse. Throws DomainError unless r is in R_{i,j}.
SeparatingDecomposition phi_prime_inverse(const WalkTriple& r);

struct MinimalImage {
    bool minimal = false;
    bool in_G = false;
};

/// (is_minimal(s), phi_prime(s) in G). Throws InvariantFailure if they differ.
MinimalImage is_minimal_image(const SeparatingDecomposition& s);

/// alpha_0 = deg(s')-2, beta_j = deg(t')-2, and level-value types match the
/// types of inner white vertices as multisets.
Report level_value_correspondence(const SeparatingDecomposition& s);

SeparatingDecomposition iota(const BipolarOrientation& b);
BipolarOrientation iota_inverse(const SeparatingDecomposition& s);

struct TandemStep {
    bool se = true;  // (1,-1) when set, else (-p,q)
    int p = 0;
    int q = 0;
    bool operator==(const TandemStep&) const = default;
    auto operator<=>(const TandemStep&) const = default;
};

struct TandemWalk {
    int a = 0;
    std::vector<TandemStep> steps;

    Point end() const;
    int se_count() const;
    /// Stays in the quadrant and ends on the x-axis.
    bool valid() const;
    bool operator==(const TandemWalk&) const = default;
    auto operator<=>(const TandemWalk&) const = default;
};

std::string to_string(const TandemStep& s);

TandemWalk sigma(const WalkTriple& r);
WalkTriple sigma_inverse(const TandemWalk& w);

/// sigma o phi_prime o iota.
TandemWalk lambda(const BipolarOrientation& b);
/// Steps read along a clockwise walk around the rightmost tree.
TandemWalk lambda_tilde(const BipolarOrientation& b);

WalkTriple tau_triple(const WalkTriple& r);
TandemWalk tau_tandem(const TandemWalk& w);

/// All tandem walks in W_{i,j}[a,b] for every a, b, by direct search.
std::vector<TandemWalk> enumerate_tandem(int i, int j);

/// (gamma, gamma'): contour of the blue tree (N away from u_B) and
/// N E^{beta_1} ... N E^{beta_n}. Requires n >= 1.
std::pair<Walk, Walk> bernardi_bonichon(const SchnyderWood& w);

enum class NodeKind : std::uint8_t { Black, White, Leaf };

/// A 3-mobile as a plane tree. Both darts of an edge carry its color; leaves
/// are the vertices of degree 1 and their edges are the legs.
struct Mobile {
    RotationMap tree;
    std::vector<NodeKind> kind;  // per vertex
    DartColors color;

    int white_count() const;
    bool is_leg(int d) const { return kind[tree.vertex(d)] == NodeKind::Leaf || kind[tree.head(d)] == NodeKind::Leaf; }
};

/// A bicolored ternary tree. dir as in DartDirections; leaves have degree 1.
struct TernaryTree {
    RotationMap tree;
    DartColors color;
    DartDirections dir;

    int node_count() const;
    /// (outgoing red leaves - 1, outgoing green leaves - 1), i.e. (i, j).
    std::pair<int, int> params() const;
};

Report validate_mobile(const Mobile& m);
Report validate_ternary(const TernaryTree& t);

/// Invariant under re-rooting: the smallest rooted code over all darts.
std::vector<int> mobile_code(const Mobile& m);
std::vector<int> ternary_code(const TernaryTree& t);
/// Same tree rerooted at the dart with the smallest code, so equal trees print equally.
Mobile canonical_form(const Mobile& m);
TernaryTree canonical_form(const TernaryTree& t);

/// Type of a black node whose blue edge is a leg; nullopt otherwise.
std::optional<PositionType> black_type(const Mobile& m, int v);
bool is_synchronized(const Mobile& m);
/// (#EE - 1, #NN - 1) of a synchronized mobile.
std::pair<int, int> synchronized_params(const Mobile& m);

/// Requires the minimal wood (InvariantFailure otherwise).
Mobile mobile_from(const SchnyderWood& w);

/// Position r of the bernardi_bonichon pair and the black node b_f, f on the
/// right of the parent edge of v_r, have the same type.
Report composed_type_correspondence(const SchnyderWood& w);

/// Throws DomainError unless m is synchronized.
TernaryTree mobile_to_ternary(const Mobile& m);
Mobile ternary_to_mobile(const TernaryTree& t);

inline constexpr int kDefaultTreeCap = 5;

/// 3-mobiles with n white nodes, by planted plane-tree generation.
std::vector<Mobile> enumerate_mobiles(int n, int cap = kDefaultTreeCap);
/// U_{i,j}, by planted plane-tree generation.
std::vector<TernaryTree> enumerate_ternary(int i, int j, int cap = kDefaultTreeCap);

}  // namespace gtam
