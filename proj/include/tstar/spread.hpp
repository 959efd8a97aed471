#pragma once

#include <vector>

#include "tstar/geomaut.hpp"

namespace tstar {

/// Field reduction of PG(3,q^2) into PG(6,q) over the basis {1, omega} of
/// GF(q^2) over GF(q). H_inf of PG(3,q^2) becomes the Desarguesian line
/// spread of J_inf = PG(5,q) (X_0 = 0 in PG(6,q)).
struct SpreadData {
  FieldCtx Fq = FieldCtx::of_order(2);
  FieldCtx Fq2 = FieldCtx::of_order(4);
  FieldElement omega;
  std::vector<FieldElement> embed;  // GF(q) index -> element of GF(q^2)
  std::vector<std::pair<FieldElement, FieldElement>> split;  // GF(q^2) index -> (a, b), x = a + b omega
  /// spread[i] is the line of PG(5,q) for point i of PG(2,q^2).
  std::vector<Subspace> spread;
  /// Indices of the spread lines that come from K.
  std::vector<std::size_t> B;
  /// Affine point id of PG(3,q^2) -> affine point id of PG(6,q).
  std::vector<std::size_t> pointmap;
};

/// K is a point set of H_inf = PG(2,q^2) given over Fq2.
SpreadData barlotti_cofman(const FieldCtx& Fq, const FieldCtx& Fq2, const PointSet& K);

/// GF(q^2)^k -> GF(q)^(2k).
Vec reduce(const SpreadData& S, std::span<const FieldElement> x);

struct SpreadGroup {
  BigInt aux_order;      // order of the stabilizer of J_inf and B in PGammaL(7,q)
  BigInt induced_order;  // order of its image on the incidence graph of T
  PermGroup group;       // that image, on incidence graph vertices
  std::size_t aux_vertices = 0;
};

/// Automorphisms of T*_2(K) (over q^2) induced through the field reduction
/// by collineations of PG(6,q) stabilizing J_inf and the line set B.
SpreadGroup spread_induced_group(const LinRep& T, const SpreadData& S);

}  // namespace tstar
