#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tstar/graphauto.hpp"
#include "tstar/pointsets.hpp"

namespace tstar {

/// A line of T*_n(K): its point at infinity (in K) and its least affine point.
struct LineId {
  ProjPoint at_infinity;
  ProjPoint rep;
  friend auto operator<=>(const LineId&, const LineId&) = default;
};

/// The geometry T*_n(K). Points are the affine points of PG(n+1,q) in
/// enumeration order; lines are sorted by the index of their point at
/// infinity in K, then by representative, so line k*q^n + j goes through
/// K.members[k].
class LinRep {
 public:
  static LinRep build(const FieldCtx& F, const PointSet& K);

  const FieldCtx& field() const { return F_; }
  const PointSet& K() const { return K_; }
  int n() const { return K_.n; }
  int q() const { return F_.q(); }

  std::size_t num_points() const { return points_.size(); }
  std::size_t num_lines() const { return lines_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<LineId>& lines() const { return lines_; }

  /// Index of an affine point of PG(n+1,q).
  std::size_t point_id(const ProjPoint& p) const;
  /// Index of the K member, or npos.
  std::size_t k_index(const ProjPoint& p) const;
  /// The line through affine point `point` and K.members[k].
  std::uint32_t line_through(std::size_t k, std::size_t point) const {
    return line_of_[k * points_.size() + point];
  }
  std::size_t k_of_line(std::size_t line) const { return line / per_k_; }
  std::span<const std::uint32_t> points_on(std::size_t line) const {
    return {line_pts_.data() + line * static_cast<std::size_t>(q()), static_cast<std::size_t>(q())};
  }
  bool incident(std::size_t point, std::size_t line) const {
    return line_through(k_of_line(line), point) == line;
  }
  /// Line index of the T*-line spanned by two distinct affine points, if any.
  std::optional<std::size_t> line_joining(std::size_t a, std::size_t b) const;

  /// The incidence graph: points 0..|P|-1, then lines. With class swaps
  /// allowed every vertex gets color 0; otherwise points 0 and lines 1.
  ColoredGraph incidence_graph(bool allow_class_swap = true) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  FieldCtx F_ = FieldCtx::of_order(2);
  PointSet K_;
  std::vector<ProjPoint> points_;
  std::vector<LineId> lines_;
  std::vector<std::uint32_t> line_of_;   // [k][point] -> line
  std::vector<std::uint32_t> line_pts_;  // [line][i] -> point, sorted
  std::size_t per_k_ = 0;                // q^n
};

/// Vertices at distance exactly i from v.
std::vector<std::uint32_t> ball(const ColoredGraph& g, std::uint32_t v, int i);

struct NvtClassReport {
  std::size_t total = 0;
  std::size_t with_certificate = 0;
  /// first certified vertex and its witness, if any
  std::optional<std::pair<std::uint32_t, std::uint32_t>> example;
};

struct NvtReport {
  bool applicable = false;  // tangent cover holds
  NvtClassReport lines;
  NvtClassReport points;
  std::vector<std::optional<std::uint32_t>> line_witness;  // per line vertex
  /// every line vertex certified and no point vertex certified
  bool certificate_pattern = false;
  bool pass = false;  // applicable && certificate_pattern
};

/// Vertex w in Gamma_4(v) with all its neighbours in Gamma_3(v), if any.
std::optional<std::uint32_t> nvt_certificate(const ColoredGraph& g, std::uint32_t v);
NvtReport nvt_check(const LinRep& T);

}  // namespace tstar
