#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tstar/gf.hpp"
#include "tstar/permgrp.hpp"

namespace tstar {

/// Undirected, loop-free graph with a vertex coloring. Automorphisms and
/// isomorphisms must map each vertex to one of the same color.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
               std::vector<int> colors = {});

  std::size_t size() const { return colors_.size(); }
  std::size_t num_edges() const { return adj_.size() / 2; }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {adj_.data() + off_[v], off_[v + 1] - off_[v]};
  }
  std::size_t degree(std::uint32_t v) const { return off_[v + 1] - off_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  int color(std::uint32_t v) const { return colors_[v]; }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  /// The graph with vertex v renamed to p[v].
  ColoredGraph relabeled(const Perm& p) const;
  ColoredGraph with_colors(std::vector<int> colors) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::vector<std::size_t> off_{0};
  std::vector<std::uint32_t> adj_;
  std::vector<int> colors_;
};

bool is_automorphism(const ColoredGraph& g, const Perm& p);
/// True when p maps a onto b (edges and colors).
bool is_isomorphism(const ColoredGraph& a, const ColoredGraph& b, const Perm& p);

/// Coarsest equitable refinement of an ordered partition (which must refine
/// the color classes). Cells come back in a deterministic, relabeling-
/// invariant order.
std::vector<std::vector<std::uint32_t>> refine(const ColoredGraph& g,
                                               const std::vector<std::vector<std::uint32_t>>& partition);
/// Refinement of the color partition.
std::vector<std::vector<std::uint32_t>> refine(const ColoredGraph& g);

struct AutomorphismResult {
  std::vector<Perm> generators;
  /// Individualized vertices along the first path; a base for the group.
  std::vector<std::uint32_t> base;
  /// Orbit of base[i] under the pointwise stabilizer of base[0..i).
  std::vector<std::size_t> orbit_sizes;
  BigInt order = 1;
  std::size_t nodes = 0;

  PermGroup group(std::size_t n) const { return PermGroup(n, generators, base); }
};

AutomorphismResult automorphism_group(const ColoredGraph& g);

struct CanonicalForm {
  std::vector<std::uint32_t> labeling;  // labeling[v] = canonical label of v
  ColoredGraph graph;                   // g relabeled by labeling

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.graph == b.graph; }
};

CanonicalForm canonical_form(const ColoredGraph& g);

/// An isomorphism a -> b (as a permutation of vertex ids), if one exists.
std::optional<Perm> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace tstar
