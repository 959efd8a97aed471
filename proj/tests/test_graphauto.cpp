#include <doctest.h>

#include "oracles.hpp"
#include "properties.hpp"

using namespace tstar;

namespace {

using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

ColoredGraph cycle(std::uint32_t n) {
  Edges e;
  for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return ColoredGraph(n, e);
}

ColoredGraph petersen() {
  Edges e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return ColoredGraph(10, e);
}

ColoredGraph random_graph(std::uint32_t n, double p, int colors, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> col(0, colors - 1);
  Edges e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  std::vector<int> c(n);
  for (auto& x : c) x = col(rng);
  return ColoredGraph(n, e, c);
}

// every generator is an automorphism and the order matches the oracle
void check_against_oracle(const ColoredGraph& g) {
  const AutomorphismResult r = automorphism_group(g);
  for (const Perm& p : r.generators) CHECK(is_automorphism(g, p));
  CHECK(r.order == oracle::count_automorphisms(g));
  CHECK(r.group(g.size()).order() == r.order);
}

}  // namespace

TEST_CASE("small named graphs") {
  CHECK(automorphism_group(petersen()).order == 120);
  CHECK(automorphism_group(cycle(4)).order == 8);
  CHECK(automorphism_group(cycle(7)).order == 14);
  CHECK(automorphism_group(ColoredGraph(6, {})).order == 720);
  CHECK(oracle::count_automorphisms(petersen()) == 120);
}

TEST_CASE("automorphism orders against backtracking on random graphs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto n = static_cast<std::uint32_t>(4 + i % 7);
    const ColoredGraph g = random_graph(n, i % 2 ? 0.3 : 0.5, 1 + i % 3, rng);
    CAPTURE(i);
    check_against_oracle(g);
  }
  // vertex-transitive and disconnected cases
  check_against_oracle(cycle(9));
  Edges two_triangles{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  check_against_oracle(ColoredGraph(6, two_triangles));
  check_against_oracle(projective_incidence_graph(FieldCtx::of_order(2), 2, {}));
}

TEST_CASE("refinement is equitable") {
  const ColoredGraph g = projective_incidence_graph(FieldCtx::of_order(3), 2, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto cells = refine(g);
  std::vector<std::size_t> cell_of(g.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (auto v : cells[c]) cell_of[v] = c;
  for (const auto& cell : cells) {
    std::vector<std::size_t> ref;
    for (auto v : cell) {
      std::vector<std::size_t> cnt(cells.size(), 0);
      for (auto w : g.neighbors(v)) ++cnt[cell_of[w]];
      if (ref.empty()) ref = cnt;
      CHECK(cnt == ref);
    }
  }
  CHECK(cells.size() > 2);
}

TEST_CASE("canonical form survives 20 relabelings") {
  std::mt19937_64 rng(9);
  CHECK(props::canonical_invariance(petersen(), rng) == "");
  CHECK(props::canonical_invariance(cycle(12), rng) == "");
  CHECK(props::canonical_invariance(projective_incidence_graph(FieldCtx::of_order(3), 2, {}), rng) == "");
  for (int i = 0; i < 10; ++i) CHECK(props::canonical_invariance(random_graph(12, 0.4, 2, rng), rng) == "");
}

TEST_CASE("isomorphism search") {
  std::mt19937_64 rng(4);
  const ColoredGraph g = projective_incidence_graph(FieldCtx::of_order(4), 2, {});
  const ColoredGraph h = g.relabeled(props::random_perm(g.size(), rng));
  const auto m = find_isomorphism(g, h);
  REQUIRE(m);
  CHECK(is_isomorphism(g, h, *m));
  Edges c6{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  Edges tt{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  CHECK_FALSE(find_isomorphism(ColoredGraph(6, c6), ColoredGraph(6, tt)));
  // colors matter
  CHECK_FALSE(find_isomorphism(cycle(4), cycle(4).with_colors({0, 0, 0, 1})));
}
