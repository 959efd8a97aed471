#include <doctest.h>

#include "properties.hpp"

using namespace tstar;

TEST_CASE("perm basics") {
  const Perm a = Perm::from_cycles(4, {{0, 1, 2}});
  const Perm b = Perm::from_cycles(4, {{2, 3}});
  CHECK((a * b)[1] == b[a[1]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.first_moved() == 0);
  CHECK(Perm(5).first_moved() == 5);
  CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 0, 1}), Error);
}

TEST_CASE("orders match brute-force closure") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 6);
    std::vector<Perm> gens;
    const int k = 1 + i % 3;
    for (int j = 0; j < k; ++j) gens.push_back(props::random_perm(n, rng));
    CAPTURE(i);
    CHECK(props::order_vs_closure(n, gens) == "");
  }
  // a product of small cyclic groups on disjoint supports
  const Perm c3 = Perm::from_cycles(9, {{0, 1, 2}}), c4 = Perm::from_cycles(9, {{3, 4, 5, 6}}),
             c2 = Perm::from_cycles(9, {{7, 8}});
  CHECK(PermGroup(9, {c3, c4, c2}).order() == 24);
  CHECK(props::closure_size(9, {c3 * c4 * c2}, 10000) == 12);
  CHECK(PermGroup(9, {c3 * c4 * c2}).order() == 12);
}

TEST_CASE("membership, orbits, elements") {
  const Perm r = Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}), s = Perm::from_cycles(6, {{1, 5}, {2, 4}});
  const PermGroup D6(6, {r, s});
  CHECK(D6.order() == 12);
  CHECK(D6.contains(r * r * s));
  CHECK_FALSE(D6.contains(Perm::from_cycles(6, {{0, 1}})));
  CHECK(D6.orbits().size() == 1);
  CHECK(D6.elements().size() == 12);
  BigInt prod = 1;
  for (auto x : D6.basic_orbit_sizes()) prod *= x;
  CHECK(prod == 12);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) CHECK(D6.contains(D6.random_element(rng)));
}

TEST_CASE("large symmetric groups") {
  const std::size_t n = 30;
  std::vector<std::uint32_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  const PermGroup S(n, {Perm::from_cycles(n, {cyc}), Perm::from_cycles(n, {{0, 1}})});
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  CHECK(S.order() == f);
}

TEST_CASE("split extension check") {
  // S3 = A3 x| <(0 1)>
  const Perm c = Perm::from_cycles(3, {{0, 1, 2}}), t = Perm::from_cycles(3, {{0, 1}});
  const SplitVerdict s3 = split_extension_check(PermGroup(3, {c, t}), PermGroup(3, {c}), PermGroup(3, {t}));
  CHECK(s3.split);
  CHECK(s3.failed_clause.empty());
  // Z4 does not split over its subgroup of order 2
  const Perm z = Perm::from_cycles(4, {{0, 1, 2, 3}});
  const PermGroup Z4(4, {z}), Z2(4, {z * z});
  const SplitVerdict v = split_extension_check(Z4, Z2, Z2);
  CHECK_FALSE(v.split);
  CHECK_FALSE(v.trivial_intersection);
  // S3 over a non-normal subgroup
  const SplitVerdict w = split_extension_check(PermGroup(3, {c, t}), PermGroup(3, {t}), PermGroup(3, {c}));
  CHECK_FALSE(w.split);
  CHECK_FALSE(w.normal);
}
