#pragma once

// Text formats of every object kind, and DOT rendering. Writers are
// canonical: write(parse(write(x))) == write(x) byte for byte.

#include <optional>
#include <string>

#include "gtam/bijections.hpp"
#include "gtam/book_arc.hpp"
#include "gtam/orientations.hpp"
#include "gtam/planar_maps.hpp"
#include "gtam/walks.hpp"

namespace gtam::io {

/// A map file with its optional overlays.
struct MapFile {
    RotationMap map;
    std::optional<std::vector<VColor>> vcolor;
    std::optional<DartDirections> dir;
    std::optional<DartColors> color;
};

std::string write_walk(const Walk& w);
Walk parse_walk(const std::string& text);
std::string write_triple(const WalkTriple& r);
WalkTriple parse_triple(const std::string& text);
std::string write_interval(const Interval& p);
Interval parse_interval(const std::string& text);

std::string write_map(const MapFile& f);
MapFile parse_map(const std::string& text);

MapFile to_file(const Quadrangulation& q);
MapFile to_file(const Triangulation& t);
MapFile to_file(const SeparatingDecomposition& s);
MapFile to_file(const SchnyderWood& w);
MapFile to_file(const BipolarOrientation& b);

/// Each checks that the needed overlays are present and the object is valid
/// (DomainError otherwise).
Quadrangulation as_quadrangulation(const MapFile& f);
Triangulation as_triangulation(const MapFile& f);
SeparatingDecomposition as_sepdec(const MapFile& f);
SchnyderWood as_schnyder(const MapFile& f);
BipolarOrientation as_bipolar(const MapFile& f);

std::string write_arcs(const ArcDiagram& a);
ArcDiagram parse_arcs(const std::string& text);

std::string write_tandem(const TandemWalk& w);
TandemWalk parse_tandem(const std::string& text);

std::string write_mobile(const Mobile& m);
Mobile parse_mobile(const std::string& text);
std::string write_ternary(const TernaryTree& t);
TernaryTree parse_ternary(const std::string& text);

/// Object kind of a file by its first line: walk, triple, map, arcs,
/// tandem, mobile, ternary.
std::string detect_kind(const std::string& text);

std::string dot(const MapFile& f);
std::string dot(const Mobile& m);
std::string dot(const TernaryTree& t);

}  // namespace gtam::io
