#pragma once

// Separating decompositions of quadrangulations and Schnyder woods of
// triangulations, with clockwise-cycle detection and minimality.

#include <vector>

#include "gtam/planar_maps.hpp"

namespace gtam {

/// Orientation and blue/red coloring of every edge of a quadrangulation.
/// Both darts of an edge carry the same color.
struct SeparatingDecomposition {
    Quadrangulation quad;
    DartDirections dir;
    DartColors color;

    const RotationMap& map() const { return quad.map; }
    /// The outgoing dart of the given color at v (-1 at s and t).
    int out_dart(int v, EColor c) const;
};

/// Orientation and blue/green/red coloring of the inner edges of a
/// triangulation; outer edges have dir 0 and color None.
struct SchnyderWood {
    Triangulation tri;
    DartDirections dir;
    DartColors color;

    const RotationMap& map() const { return tri.map; }
    int out_dart(int v, EColor c) const;
};

Report validate_sepdec(const SeparatingDecomposition& s);
Report validate_schnyder(const SchnyderWood& w);

/// Color of the corner (sigma^-1(d), d) of a Schnyder wood. Corners at
/// outer vertices take the color of that vertex.
EColor corner_color(const SchnyderWood& w, int d);

inline constexpr int kDefaultSepdecCap = 4;

/// All separating decompositions of q, in canonical order.
std::vector<SeparatingDecomposition> enumerate_sepdecs(const Quadrangulation& q);
/// All Schnyder woods of t, in canonical order.
std::vector<SchnyderWood> enumerate_schnyder(const Triangulation& t);
/// Every separating decomposition over every q in Q_{i,j}.
std::vector<SeparatingDecomposition> enumerate_all_sepdecs(int i, int j, int cap = kDefaultSepdecCap);

/// A directed cycle as its darts in traversal order.
using Cycle = std::vector<int>;

/// Simple directed cycles (over darts with dir=+1) whose bounded side lies
/// to the right of the traversal.
std::vector<Cycle> clockwise_cycles(const RotationMap& m, const DartDirections& dir);

bool is_minimal(const SeparatingDecomposition& s);
bool is_minimal(const SchnyderWood& w);

/// The unique overlay without clockwise cycle. Throws InvariantFailure if
/// the enumeration yields zero or several.
SeparatingDecomposition minimal_sepdec(const Quadrangulation& q);
SchnyderWood minimal_schnyder(const Triangulation& t);

/// Half-turn: re-root at t toward t', swap blue and red.
SeparatingDecomposition tau_sepdec(const SeparatingDecomposition& s);

/// Contour of the blue tree starting at the root corner: every tree edge is
/// listed twice, as the dart in the direction of travel.
std::vector<int> blue_contour(const SeparatingDecomposition& s);

struct IndegreeProfile {
    std::vector<int> order;    // white vertices v_0 .. v_{j+1}
    std::vector<int> blue_in;  // blue indegree of v_r
    std::vector<int> red_in;   // red indegree of v_r
};

IndegreeProfile indegree_profile(const SeparatingDecomposition& s);

/// Each inner white vertex has m ingoing blue edges and s' has none.
bool is_m_regular(const SeparatingDecomposition& s, int m);

/// The same decomposition with darts renumbered in canonical order.
SeparatingDecomposition canonicalized(const SeparatingDecomposition& s);

std::vector<int> sepdec_code(const SeparatingDecomposition& s);
std::vector<int> schnyder_code(const SchnyderWood& w);

}  // namespace gtam
