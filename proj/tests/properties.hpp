#pragma once

#include <random>
#include <string>

#include "tstar/claims.hpp"

namespace tstar::props {

/// Empty when the property holds, else a description of the first failure.
using Outcome = std::string;

Outcome field_axioms(int q);
/// cl(cl(S)) == cl(S), S within cl(S), S1 within S2 implies cl(S1) within cl(S2).
Outcome closure_laws(const FieldCtx& F, const PointSet& S1, const PointSet& S2);
Outcome canonical_invariance(const ColoredGraph& g, std::mt19937_64& rng, int relabelings = 20);
/// Order from Schreier-Sims against the size of the closure of the generators.
Outcome order_vs_closure(std::size_t n, const std::vector<Perm>& gens, std::size_t limit = 10000);
Outcome equivariant(const LinRep& T, const GeomAut& a);

/// Size of the group generated by gens, by breadth-first multiplication;
/// 0 when it exceeds the limit.
std::size_t closure_size(std::size_t n, const std::vector<Perm>& gens, std::size_t limit);
Perm random_perm(std::size_t n, std::mt19937_64& rng);

/// Every property suite in one pass; returns failures (empty when all hold)
/// and fills in a count of the checks run.
std::vector<std::string> run_all(std::size_t& checks);

}  // namespace tstar::props
