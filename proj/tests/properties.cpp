#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tstar/spread.hpp"

namespace tstar::props {

namespace {

std::string fail(const std::string& what, int q, std::uint32_t a, std::uint32_t b = 0, std::uint32_t c = 0) {
  return what + " fails in GF(" + std::to_string(q) + ") at " + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c);
}

bool subset(const PointSet& a, const PointSet& b) {
  return std::all_of(a.members.begin(), a.members.end(), [&](const ProjPoint& p) { return b.contains(p); });
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

ColoredGraph petersen() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return ColoredGraph(10, e);
}

}  // namespace

Outcome field_axioms(int q) {
  const FieldCtx F = FieldCtx::of_order(q);
  const auto Q = static_cast<std::uint32_t>(q);
  auto E = [](std::uint32_t i) { return FieldElement(i); };
  for (std::uint32_t a = 0; a < Q; ++a) {
    if (F.add(E(a), F.zero()) != E(a) || F.mul(E(a), F.one()) != E(a)) return fail("identity", q, a);
    if (F.add(E(a), F.neg(E(a))) != F.zero()) return fail("additive inverse", q, a);
    if (a && F.mul(E(a), F.inv(E(a))) != F.one()) return fail("multiplicative inverse", q, a);
    for (std::uint32_t b = 0; b < Q; ++b) {
      if (F.add(E(a), E(b)) != F.add(E(b), E(a)) || F.mul(E(a), E(b)) != F.mul(E(b), E(a)))
        return fail("commutativity", q, a, b);
      if (a && b && F.mul(E(a), E(b)).is_zero()) return fail("zero divisor", q, a, b);
      for (int e = 0; e < F.h(); ++e) {
        if (F.frobenius(F.add(E(a), E(b)), e) != F.add(F.frobenius(E(a), e), F.frobenius(E(b), e)) ||
            F.frobenius(F.mul(E(a), E(b)), e) != F.mul(F.frobenius(E(a), e), F.frobenius(E(b), e)))
          return fail("frobenius homomorphism", q, a, b);
      }
      for (std::uint32_t c = 0; c < Q; ++c) {
        if (F.add(F.add(E(a), E(b)), E(c)) != F.add(E(a), F.add(E(b), E(c)))) return fail("+ associativity", q, a, b, c);
        if (F.mul(F.mul(E(a), E(b)), E(c)) != F.mul(E(a), F.mul(E(b), E(c)))) return fail("* associativity", q, a, b, c);
        if (F.mul(E(a), F.add(E(b), E(c))) != F.add(F.mul(E(a), E(b)), F.mul(E(a), E(c))))
          return fail("distributivity", q, a, b, c);
      }
    }
  }
  // the primitive element has order q-1
  FieldElement x = F.primitive();
  for (int k = 1; k < q - 1; ++k, x = F.mul(x, F.primitive()))
    if (x == F.one()) return fail("primitive order", q, F.primitive().index());
  return {};
}

Outcome closure_laws(const FieldCtx& F, const PointSet& S1, const PointSet& S2) {
  const PointSet c1 = closure(F, S1), c2 = closure(F, S2);
  if (!(closure(F, c1) == c1)) return "closure not idempotent";
  if (!subset(S1, c1)) return "set not inside its closure";
  if (subset(S1, S2) && !subset(c1, c2)) return "closure not monotone";
  return {};
}

Outcome canonical_invariance(const ColoredGraph& g, std::mt19937_64& rng, int relabelings) {
  const CanonicalForm base = canonical_form(g);
  if (!(g.relabeled(Perm(base.labeling)) == base.graph)) return "labeling does not produce the canonical graph";
  for (int i = 0; i < relabelings; ++i) {
    const Perm p = random_perm(g.size(), rng);
    const ColoredGraph h = g.relabeled(p);
    const CanonicalForm c = canonical_form(h);
    if (!(c.graph == base.graph)) return "canonical form changed under relabeling " + std::to_string(i);
    if (!(h.relabeled(Perm(c.labeling)) == c.graph)) return "labeling inconsistent after relabeling";
  }
  return {};
}

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

std::size_t closure_size(std::size_t n, const std::vector<Perm>& gens, std::size_t limit) {
  std::unordered_set<Perm, PermHash> seen{Perm(n)};
  std::vector<Perm> frontier{Perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > limit) return 0;
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Outcome order_vs_closure(std::size_t n, const std::vector<Perm>& gens, std::size_t limit) {
  const std::size_t brute = closure_size(n, gens, limit);
  if (brute == 0) return {};
  const PermGroup G(n, gens);
  if (G.order() != brute)
    return "order " + G.order().str() + " but closure has " + std::to_string(brute) + " elements";
  for (const Perm& g : gens)
    if (!G.contains(g)) return "generator not contained";
  return {};
}

Outcome equivariant(const LinRep& T, const GeomAut& a) {
  if (!incidence_equivariant(T, a)) return "not incidence-equivariant";
  if (!is_automorphism(T.incidence_graph(), a.vertex_perm())) return "vertex permutation not an automorphism";
  return {};
}

std::vector<std::string> run_all(std::size_t& checks) {
  std::vector<std::string> failures;
  checks = 0;
  auto note = [&](const std::string& where, const Outcome& o) {
    ++checks;
    if (!o.empty()) failures.push_back(where + ": " + o);
  };

  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) note("field q=" + std::to_string(q), field_axioms(q));

  for (auto [q, n] : {std::pair{4, 2}, {8, 2}, {9, 2}, {4, 3}}) {
    const FieldCtx F = FieldCtx::of_order(q);
    const PointSet fr = construct_named("frame", F, NamedParams{n, 0});
    std::vector<ProjPoint> more = fr.hinf_points();
    more.push_back(point_at(F, n, num_points(n, q) - 1));
    note("closure q=" + std::to_string(q) + " n=" + std::to_string(n), closure_laws(F, fr, from_hinf(F, n, more)));
  }

  std::mt19937_64 rng(20240611);
  {
    const FieldCtx F3 = FieldCtx::of_order(3), F4 = FieldCtx::of_order(4);
    note("canonical petersen", canonical_invariance(petersen(), rng));
    note("canonical PG(2,2)", canonical_invariance(projective_incidence_graph(FieldCtx::of_order(2), 2, {}), rng));
    note("canonical two_lines q=3",
         canonical_invariance(LinRep::build(F3, construct_named("two_lines", F3, {})).incidence_graph(), rng));
    note("canonical hyperoval q=4",
         canonical_invariance(LinRep::build(F4, construct_named("hyperoval", F4, {})).incidence_graph(), rng));
  }

  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 4 + static_cast<std::size_t>(i % 4);
    std::vector<Perm> gens{random_perm(n, rng), random_perm(n, rng)};
    if (i % 3 == 0) gens.push_back(random_perm(n, rng));
    note("permgroup sample " + std::to_string(i), order_vs_closure(n, gens));
  }
  {
    const FieldCtx F2 = FieldCtx::of_order(2);
    std::vector<Perm> gens;
    for (const auto& f : pgammal_generators(F2, 2)) {
      const auto img = point_permutation(F2, f);
      gens.emplace_back(std::vector<std::uint32_t>(img.begin(), img.end()));
    }
    note("permgroup PGL(3,2)", order_vs_closure(7, gens));
  }

  for (auto [name, q, n] : {std::tuple{"two_lines", 3, 2}, {"two_lines", 4, 2}, {"hyperoval", 4, 2},
                           {"three_lines_rem3", 3, 3}, {"conic_arc", 5, 2}}) {
    const FieldCtx F = FieldCtx::of_order(q);
    const LinRep T = LinRep::build(F, construct_named(name, F, NamedParams{n, 0}));
    const std::string where = std::string("geomaut ") + name + " q=" + std::to_string(q);
    for (const GeomAut& a : geometric_group(T).generators) note(where, equivariant(T, a));
    if (std::string(name) == "two_lines")
      for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(q); ++m) note(where + " phi", equivariant(T, phi_shear(T, FieldElement(m))));
  }
  for (int q : {4, 5}) {
    // K inside a line of H_inf, so the fold map applies
    const FieldCtx F = FieldCtx::of_order(q);
    std::vector<ProjPoint> line;
    for (const auto& p : all_points(F, 2))
      if (p[2].is_zero() && line.size() < 3) line.push_back(p);
    const LinRep T = LinRep::build(F, from_hinf(F, 2, line));
    note("geomaut fold q=" + std::to_string(q), equivariant(T, fold_map(T, default_fold_setup(T))));
  }
  {
    const FieldCtx F2 = FieldCtx::of_order(2), F4 = FieldCtx::of_order(4);
    const PointSet K = construct_named("baer_subplane", F4, {});
    const LinRep T = LinRep::build(F4, K);
    const SpreadGroup sg = spread_induced_group(T, barlotti_cofman(F2, F4, K));
    for (const Perm& p : sg.group.generators()) note("geomaut spread-induced", equivariant(T, GeomAut::from_vertex_perm(T, p)));
  }
  return failures;
}

}  // namespace tstar::props
