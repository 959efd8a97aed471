#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tstar/geomaut.hpp"

namespace tstar {

using Json = nlohmann::ordered_json;

/// graph6 of the underlying graph (colors are not encoded).
std::string to_graph6(const ColoredGraph& g);
ColoredGraph from_graph6(const std::string& s);

/// DIMACS edge format, 1-based: "p edge n m" then "e u v".
std::string to_dimacs(const ColoredGraph& g);
ColoredGraph from_dimacs(std::istream& in);

/// Header "d q", then one point per line as comma-separated field indices.
std::string to_pointset_file(int d, int q, const std::vector<ProjPoint>& pts);
struct PointFile {
  int d = 0;
  int q = 0;
  std::vector<ProjPoint> points;
};
PointFile read_pointset_file(std::istream& in);

Json coords_json(const ProjPoint& p);
Json to_json(const PermGroup& g);
Json to_json(const SemilinearMap& f);
Json to_json(const GeomAut& a);
/// Vertex index -> geometric object for the incidence graph of T.
Json sidecar_json(const LinRep& T);

std::string big_to_string(const BigInt& x);

}  // namespace tstar
