#pragma once

// Rooted planar maps as rotation systems, with the quadrangulation,
// triangulation and bipolar-orientation layers on top.
//
// Conventions (used by every other module):
//  * darts are 0-based; alpha is the opposite dart, sigma the next dart
//    clockwise around the same vertex;
//  * phi = sigma o alpha walks a face keeping it on the left, so bounded faces
//    are traversed counterclockwise and the outer face clockwise;
//  * the root corner is (sigma^-1(root), root); the outer face is the phi-orbit
//    of root;
//  * vertex ids number the sigma-orbits in order of their smallest dart, edge
//    ids number dart pairs in order of their smallest dart.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtam {

enum class VColor : std::uint8_t { Black, White };
enum class EColor : std::uint8_t { None, Blue, Red, Green };

char to_char(VColor c);
char to_char(EColor c);

class RotationMap {
public:
    RotationMap() = default;
    RotationMap(std::vector<int> alpha, std::vector<int> sigma, int root);

    int darts() const { return static_cast<int>(alpha_.size()); }
    int edges() const { return darts() / 2; }
    int root() const { return root_; }
    int alpha(int d) const { return alpha_[d]; }
    int sigma(int d) const { return sigma_[d]; }
    int sigma_inv(int d) const { return sigma_inv_[d]; }
    int phi(int d) const { return sigma_[alpha_[d]]; }
    const std::vector<int>& alpha() const { return alpha_; }
    const std::vector<int>& sigma() const { return sigma_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int vertex(int d) const { return vertex_of_[d]; }
    int head(int d) const { return vertex_of_[alpha_[d]]; }
    int face(int d) const { return face_of_[d]; }
    int edge(int d) const { return edge_of_[d]; }
    int outer_face() const { return face_of_[root_]; }

    /// Darts around each vertex, clockwise, starting from the smallest dart.
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    /// Face orbits in phi order; faces()[outer_face()] starts at root.
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    /// Darts at vertex v clockwise starting from `first`.
    std::vector<int> rotation_from(int first) const;

    RotationMap with_root(int root) const { return RotationMap(alpha_, sigma_, root); }
    RotationMap mirror() const;

    /// Structural validity: permutations, fixed-point-free involution,
    /// connectivity and Euler's relation. Returns the first violation.
    std::optional<std::string> check() const;

    bool has_loop() const;
    bool has_multi_edge() const;

    /// Dart relabeling old -> new obtained by breadth-first search from the
    /// root; two rooted maps are isomorphic iff the relabeled permutations agree.
    std::vector<int> canonical_labels() const;

private:
    void build_orbits();

    std::vector<int> alpha_, sigma_, sigma_inv_;
    int root_ = 0;
    std::vector<int> vertex_of_, face_of_, edge_of_;
    std::vector<std::vector<int>> vertices_, faces_;
};

/// The same map with dart d renamed label[d].
RotationMap relabeled(const RotationMap& m, const std::vector<int>& label);

template <class T>
std::vector<T> relabel_payload(const std::vector<T>& payload, const std::vector<int>& label) {
    std::vector<T> out(payload.size());
    for (std::size_t d = 0; d < payload.size(); ++d) out[label[d]] = payload[d];
    return out;
}

/// Canonical code of a rooted map together with per-dart decorations;
/// equal codes iff root-preserving isomorphic with matching decorations.
std::vector<int> canonical_code(const RotationMap& m, const std::vector<int>& dart_labels = {});

/// A map whose darts are numbered consecutively per edge (2k, 2k+1), built
/// from a per-vertex clockwise list of half-edge endpoints.
struct EdgeList {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Build a map from an edge list and per-vertex clockwise dart orders, where
/// dart 2k sits at edges[k].first and 2k+1 at edges[k].second.
RotationMap build_map(const EdgeList& g, const std::vector<std::vector<int>>& rotation, int root);

struct Quadrangulation {
    RotationMap map;
    std::vector<VColor> color;  // per vertex id

    int s() const { return map.vertex(map.root()); }
    int s_prime() const { return map.head(map.root()); }
    int t() const { return map.head(map.phi(map.root())); }
    int t_prime() const { return map.head(map.phi(map.phi(map.root()))); }
    int black_count() const;
    int white_count() const;
    /// (i, j) with i+2 black and j+2 white vertices.
    std::pair<int, int> params() const { return {black_count() - 2, white_count() - 2}; }
};

struct Triangulation {
    RotationMap map;
    int u_blue() const { return map.vertex(map.root()); }
    int u_green() const { return map.head(map.root()); }
    int u_red() const { return map.head(map.phi(map.root())); }
    bool is_outer(int v) const { return v == u_blue() || v == u_green() || v == u_red(); }
    int n() const { return map.vertex_count() - 3; }
};

/// dir[d] = +1 if the edge of d is directed away from vertex(d), -1 if toward
/// it, 0 if unoriented. Always dir[alpha(d)] = -dir[d].
using DartDirections = std::vector<std::int8_t>;
using DartColors = std::vector<EColor>;

struct BipolarOrientation {
    RotationMap map;
    DartDirections dir;

    int source() const { return map.vertex(map.root()); }
    int sink() const;
    int non_pole_count() const { return map.vertex_count() - 2; }
    int inner_face_count() const { return map.face_count() - 1; }
    /// Lengths a+1, b+1 of the left and right outer boundary, returned as (a, b).
    std::pair<int, int> boundary() const;
};

struct Report {
    bool ok = true;
    std::string violation;
    static Report fail(std::string why) { return {false, std::move(why)}; }
};

Report validate_quadrangulation(const Quadrangulation& q);
Report validate_triangulation(const Triangulation& t);
Report validate_bipolar(const BipolarOrientation& b);

/// Every directed edge out of a vertex, clockwise, as the darts with dir=+1.
std::vector<int> out_darts(const RotationMap& m, const DartDirections& dir, int v);
std::vector<int> in_darts(const RotationMap& m, const DartDirections& dir, int v);

/// (p, q): a face of a bipolar orientation has p+1 clockwise and q+1
/// counterclockwise edges. Throws DomainError on the outer face.
std::pair<int, int> face_type(const BipolarOrientation& b, int face);

std::vector<int> quad_code(const Quadrangulation& q);
std::vector<int> bipolar_code(const BipolarOrientation& b);
std::vector<int> triangulation_code(const Triangulation& t);

Quadrangulation mirror(const Quadrangulation& q);
Triangulation mirror(const Triangulation& t);
BipolarOrientation mirror(const BipolarOrientation& b);

inline constexpr int kDefaultQuadCap = 5;
inline constexpr int kDefaultTriangulationCap = 3;
inline constexpr int kDefaultBipolarCap = 5;

/// Rooted bicolored quadrangulations with i+2 black and j+2 white vertices,
/// generated from bipartite graphs and all their rotation systems, in
/// canonical-code order.
std::vector<Quadrangulation> enumerate_quadrangulations(int i, int j, int cap = kDefaultQuadCap);

/// Rooted simple triangulations with n+3 vertices.
std::vector<Triangulation> enumerate_triangulations(int n, int cap = kDefaultTriangulationCap);

/// Plane bipolar orientations with i non-pole vertices and j inner faces.
std::vector<BipolarOrientation> enumerate_bipolar(int i, int j, int cap = kDefaultBipolarCap);

/// The 4-cycle s, s', t, t' rooted at s.
Quadrangulation four_cycle();
/// The single edge s -> t.
BipolarOrientation single_edge();

}  // namespace gtam
