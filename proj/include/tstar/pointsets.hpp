#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tstar/projspace.hpp"

namespace tstar {

/// Point set K inside H_inf (X_0 = 0) of PG(n+1,q). Members are stored with
/// their full n+2 coordinates, sorted and duplicate-free.
struct PointSet {
  int n = 0;
  std::vector<ProjPoint> members;

  std::size_t size() const { return members.size(); }
  bool contains(const ProjPoint& p) const;
  /// Members with the leading zero dropped, as points of PG(n,q).
  std::vector<ProjPoint> hinf_points() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Builds a PointSet from points of PG(n,q) (H_inf coordinates).
PointSet from_hinf(const FieldCtx& F, int n, const std::vector<ProjPoint>& pts);
/// Drops X_0 from a point of H_inf.
ProjPoint to_hinf(const ProjPoint& p);
/// Prepends X_0 = 0.
ProjPoint from_hinf_point(const ProjPoint& p);

struct NamedParams {
  int n = 2;
  int q0 = 0;  // subfield order for subgeometry
};

/// Names: conic_arc, qarc_parabola, hyperoval, two_lines, two_planes,
/// three_lines_rem3, baer_subplane, subgeometry, frame, all.
PointSet construct_named(const std::string& name, const FieldCtx& F, const NamedParams& params);
std::vector<std::string> named_sets();

/// n+2 points of S in general position, if any (first found in index order).
std::optional<std::vector<ProjPoint>> find_frame(const FieldCtx& F, int n, const std::vector<ProjPoint>& pts);

/// Closure in H_inf; throws when S contains no frame.
PointSet closure(const FieldCtx& F, const PointSet& S);

struct StarResult {
  bool holds = true;
  std::optional<Subspace> witness_plane;  // plane of PG(n,q), H_inf coordinates
};
StarResult property_star(const FieldCtx& F, const PointSet& S);

struct TangentResult {
  bool holds = true;
  std::optional<ProjPoint> witness_point;  // H_inf coordinates
};
TangentResult tangent_cover(const FieldCtx& F, const PointSet& S);

}  // namespace tstar
