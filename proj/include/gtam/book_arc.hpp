#pragma once

// Equatorial line, 2-book embedding and blue-red arc diagrams of separating
// decompositions.

#include <cstdint>
#include <vector>

#include "gtam/orientations.hpp"
#include "gtam/walks.hpp"

namespace gtam {

/// Green edges join a Q vertex to the face-vertex of an inner face through a
/// bicolored corner. They form a path from s' to t'.
struct AugmentedMap {
    std::vector<std::pair<int, int>> green;  // (Q vertex, inner face)
    std::vector<int> path_vertices;          // s' = first, t' = last
    std::vector<int> path_faces;             // face between consecutive path vertices
};

AugmentedMap augmented(const SeparatingDecomposition& s);

/// An arc between two line positions, left < right. `dart` is the dart of
/// the edge at its tail when the arc comes from a map, else -1.
struct Arc {
    int left = 0;
    int right = 0;
    int dart = -1;
    bool operator==(const Arc& o) const { return left == o.left && right == o.right; }
};

struct BookEmbedding {
    std::vector<int> line;  // vertex ids, t first and s last
    std::vector<VColor> line_color;
    std::vector<Arc> lower;  // blue edges
    std::vector<Arc> upper;  // red edges

    /// E for every inner black vertex and N for every inner white vertex,
    /// left to right, skipping s, t, s', t'.
    Walk middle_word() const;
};

BookEmbedding book_embedding(const SeparatingDecomposition& s);

enum class Dot : std::uint8_t { Blue, Black, Red };

struct Segment {
    int blue = 0;
    int black = 0;
    int red = 0;
    bool operator==(const Segment&) const = default;
};

/// A blue-red arc diagram. Both matchings are forced by the dot word: the
/// lower one pairs blue dots (opening) with black dots (closing), the upper
/// one black dots (opening) with red dots (closing).
class ArcDiagram {
public:
    ArcDiagram() : ArcDiagram(std::vector<Segment>{Segment{}}) {}
    /// Throws DomainError if a matching does not exist.
    explicit ArcDiagram(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<Dot>& dots() const { return dots_; }
    int segment_of(int pos) const { return segment_of_[pos]; }
    /// Partner of a dot in the lower (blue-black) or upper (black-red) matching, or -1.
    int lower_partner(int pos) const { return lower_partner_[pos]; }
    int upper_partner(int pos) const { return upper_partner_[pos]; }
    std::vector<Arc> lower_arcs() const;
    std::vector<Arc> upper_arcs() const;
    int i() const;
    int j() const { return static_cast<int>(segments_.size()) - 1; }

    bool operator==(const ArcDiagram& o) const { return segments_ == o.segments_; }
    bool operator<(const ArcDiagram& o) const;

private:
    std::vector<Segment> segments_;
    std::vector<Dot> dots_;
    std::vector<int> segment_of_, lower_partner_, upper_partner_;
};

/// Parenthesis matching of `open` against `close` dots, -1 elsewhere.
/// Returns false if some dot stays unmatched.
bool match_dots(const std::vector<Dot>& dots, Dot open, Dot close, std::vector<int>& partner);

ArcDiagram chi(const SeparatingDecomposition& s);
SeparatingDecomposition chi_inverse(const ArcDiagram& a);

WalkTriple xi(const ArcDiagram& a);
/// Throws DomainError unless the triple lies in R_{i,j}.
ArcDiagram xi_inverse(const WalkTriple& r);

bool has_z_pattern(const ArcDiagram& a);

/// Rotating the diagram by a half-turn: dots reversed, blue and red swapped.
ArcDiagram half_turn(const ArcDiagram& a);

/// Same dots and lower matching; the upper matching pairs blue dots with red
/// dots. U[k] (resp. V[k]) is the segment of the lower (resp. upper) partner
/// of the k-th blue dot.
struct ModifiedDiagram {
    ArcDiagram base;
    std::vector<int> upper_partner;
    std::vector<int> U, V;
};

ModifiedDiagram modified_diagram(const ArcDiagram& a);

/// Some blue dot whose black partner lies in a later segment than its red
/// partner, i.e. U[k] > V[k].
bool has_forbidden_pattern(const ModifiedDiagram& m);

/// All diagrams in A_{i,j}, in increasing order.
std::vector<ArcDiagram> enumerate_arc_diagrams(int i, int j);

}  // namespace gtam
