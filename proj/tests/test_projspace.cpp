#include <doctest.h>

#include "properties.hpp"

using namespace tstar;

namespace {

// Collineations of PG(n+1,q), q prime, fixing X_0 = 0 pointwise, by
// enumerating matrices up to scalars.
std::size_t persp_brute(int n, int q) {
  const FieldCtx F = FieldCtx::of_order(q);
  const int d = n + 1, len = d + 1;
  std::vector<Vec> all;
  std::size_t total = 1;
  for (int i = 0; i < len; ++i) total *= static_cast<std::size_t>(q);
  for (std::size_t k = 0; k < total; ++k) {
    Vec v(static_cast<std::size_t>(len));
    std::size_t x = k;
    for (int i = 0; i < len; ++i, x /= static_cast<std::size_t>(q)) v[static_cast<std::size_t>(i)] = FieldElement(static_cast<std::uint32_t>(x % q));
    all.push_back(v);
  }
  std::vector<ProjPoint> hinf;
  for (const auto& p : all_points(F, d))
    if (p.at_infinity()) hinf.push_back(p);

  // rows 1..d are images of e_1..e_d and must be multiples of them
  std::vector<std::vector<Vec>> choices(static_cast<std::size_t>(len));
  choices[0] = all;
  for (int i = 1; i < len; ++i)
    for (const Vec& v : all) {
      bool ok = !v[static_cast<std::size_t>(i)].is_zero();
      for (int j = 0; j < len; ++j) ok = ok && (j == i || v[static_cast<std::size_t>(j)].is_zero());
      if (ok) choices[static_cast<std::size_t>(i)].push_back(v);
    }
  std::size_t count = 0;
  std::vector<Vec> rows(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int r) -> void {
    if (r == len) {
      const Matrix M = Matrix::from_rows(rows);
      if (rank(F, M) != len) return;
      for (const auto& p : hinf)
        if (!(ProjPoint::from(F, vec_mul(F, p.coords(), M)) == p)) return;
      ++count;
      return;
    }
    for (const Vec& v : choices[static_cast<std::size_t>(r)]) {
      rows[static_cast<std::size_t>(r)] = v;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
  return count / static_cast<std::size_t>(q - 1);
}

PermGroup point_group(const FieldCtx& F, int d, const std::vector<SemilinearMap>& maps) {
  std::vector<Perm> gens;
  for (const auto& f : maps) {
    const auto img = point_permutation(F, f);
    gens.emplace_back(std::vector<std::uint32_t>(img.begin(), img.end()));
  }
  return PermGroup(num_points(d, F.q()), gens);
}

}  // namespace

TEST_CASE("point enumeration round-trips") {
  for (auto [q, d] : {std::pair{2, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    const FieldCtx F = FieldCtx::of_order(q);
    const auto pts = all_points(F, d);
    REQUIRE(pts.size() == num_points(d, q));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(point_index(q, pts[i].coords()) == i);
      CHECK(point_at(F, d, i) == pts[i]);
      if (i) CHECK(pts[i - 1] < pts[i]);
    }
    CHECK(affine_points(F, d).size() == static_cast<std::size_t>(std::pow(q, d)));
  }
}

TEST_CASE("subspace counts and meets") {
  const FieldCtx F = FieldCtx::of_order(3);
  CHECK(all_subspaces(F, 3, 1).size() == 130);  // lines of PG(3,3)
  CHECK(all_subspaces(F, 3, 2).size() == 40);
  const auto planes = all_subspaces(F, 3, 2);
  CHECK(meet(F, planes[0], planes[1]).dim() == 1);
  CHECK(join(F, planes[0], planes[1]).dim() == 3);
  for (const auto& l : all_subspaces(F, 2, 1)) CHECK(line_points(F, l).size() == 4);
}

TEST_CASE("Persp(H_inf) against brute-force enumeration") {
  CHECK(persp_brute(2, 3) == 54);
  CHECK(persp_brute(1, 2) == 4);
  CHECK(persp_order(FieldCtx::of_order(3), 2) == 54);
  CHECK(persp_order(FieldCtx::of_order(2), 1) == 4);
  CHECK(point_group(FieldCtx::of_order(3), 3, persp_generators(FieldCtx::of_order(3), 2)).order() == 54);
  CHECK(point_group(FieldCtx::of_order(2), 2, persp_generators(FieldCtx::of_order(2), 1)).order() == 4);
}

TEST_CASE("PGammaL generators produce the full group") {
  const FieldCtx F3 = FieldCtx::of_order(3);
  CHECK(point_group(F3, 2, pgammal_generators(F3, 2)).order() == 5616);
  CHECK(group_order_formula(2, F3, GroupFlavor::PGammaL) == 5616);
  const FieldCtx F4 = FieldCtx::of_order(4);
  CHECK(point_group(F4, 2, pgammal_generators(F4, 2)).order() == 120960);
  CHECK(group_order_formula(2, F4, GroupFlavor::PGL) == 60480);
}

TEST_CASE("collineations are recovered from their point permutations") {
  const FieldCtx F = FieldCtx::of_order(4);
  const PermGroup G = point_group(F, 2, pgammal_generators(F, 2));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Perm g = G.random_element(rng);
    std::vector<std::size_t> img(g.images().begin(), g.images().end());
    const auto f = collineation_from_point_map(F, 2, img);
    REQUIRE(f);
    const auto back = point_permutation(F, *f);
    CHECK(std::equal(back.begin(), back.end(), g.images().begin()));
  }
  // a transposition of two points is no collineation
  std::vector<std::size_t> swap(num_points(2, 4));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  CHECK_FALSE(collineation_from_point_map(F, 2, swap));
}

TEST_CASE("compose and invert") {
  const FieldCtx F = FieldCtx::of_order(8);
  const auto gens = pgammal_generators(F, 2);
  for (const auto& f : gens)
    for (const auto& g : gens) {
      const SemilinearMap fg = compose(F, f, g);
      for (const auto& p : all_points(F, 2)) CHECK(fg.apply(F, p) == f.apply(F, g.apply(F, p)));
    }
  for (const auto& f : gens) CHECK(compose(F, f, invert(F, f)) == SemilinearMap::identity(F, 2));
}
