#include <doctest.h>

#include "properties.hpp"

using namespace tstar;

namespace {

// Points of PG(d,q) whose normalized coordinates lie in the subfield.
std::vector<ProjPoint> subfield_points(const FieldCtx& F, int d, int q0) {
  const auto [p0, h0] = prime_power(q0);
  const auto sub = F.subfield(h0);
  std::vector<ProjPoint> out;
  for (const auto& pt : all_points(F, d))
    if (std::all_of(pt.coords().begin(), pt.coords().end(),
                    [&](FieldElement x) { return std::find(sub.begin(), sub.end(), x) != sub.end(); }))
      out.push_back(pt);
  return out;
}

std::vector<ProjPoint> standard_frame(const FieldCtx& F, int d) {
  std::vector<ProjPoint> out;
  Vec all(static_cast<std::size_t>(d + 1), F.one());
  for (int i = 0; i <= d; ++i) {
    Vec e(static_cast<std::size_t>(d + 1), F.zero());
    e[static_cast<std::size_t>(i)] = F.one();
    out.push_back(ProjPoint::from(F, e));
  }
  out.push_back(ProjPoint::from(F, all));
  return out;
}

// Lines of PG(2,q) meeting S in exactly one point, counted per point.
std::size_t points_without_tangent(const FieldCtx& F, const std::vector<ProjPoint>& S) {
  std::size_t bad = 0;
  const auto lines = all_subspaces(F, 2, 1);
  for (const auto& p : all_points(F, 2)) {
    if (std::find(S.begin(), S.end(), p) != S.end()) continue;
    bool tangent = false;
    for (const auto& l : lines) {
      if (!l.contains(F, p)) continue;
      int hits = 0;
      for (const auto& x : S) hits += l.contains(F, x) ? 1 : 0;
      tangent = tangent || hits == 1;
    }
    bad += tangent ? 0 : 1;
  }
  return bad;
}

}  // namespace

TEST_CASE("closure of a frame is the subgeometry over the prime field") {
  for (auto [q, d] : {std::pair{4, 2}, {8, 2}, {9, 2}, {4, 3}, {9, 3}, {16, 2}}) {
    const FieldCtx F = FieldCtx::of_order(q);
    CAPTURE(q);
    CAPTURE(d);
    const PointSet C = closure(F, from_hinf(F, d, standard_frame(F, d)));
    CHECK(C.hinf_points() == subfield_points(F, d, F.p()));
  }
}

TEST_CASE("closure of a moved frame is the moved subplane") {
  const FieldCtx F = FieldCtx::of_order(4);
  std::mt19937_64 rng(3);
  std::vector<Perm> gens;
  for (const auto& f : pgammal_generators(F, 2)) {
    const auto img = point_permutation(F, f);
    gens.emplace_back(std::vector<std::uint32_t>(img.begin(), img.end()));
  }
  const PermGroup G(num_points(2, 4), gens);
  const auto base = subfield_points(F, 2, 2);
  for (int i = 0; i < 10; ++i) {
    const Perm g = G.random_element(rng);
    auto move = [&](const std::vector<ProjPoint>& pts) {
      std::vector<ProjPoint> out;
      for (const auto& p : pts) out.push_back(point_at(F, 2, g[point_index(4, p.coords())]));
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(closure(F, from_hinf(F, 2, move(standard_frame(F, 2)))).hinf_points() == move(base));
  }
}

TEST_CASE("closure laws and the frame requirement") {
  const FieldCtx F = FieldCtx::of_order(9);
  const PointSet fr = construct_named("frame", F, {});
  CHECK(props::closure_laws(F, fr, construct_named("all", F, {})) == "");
  CHECK(closure(F, construct_named("all", F, {})).size() == 91);
  std::vector<ProjPoint> line;
  for (const auto& p : all_points(F, 2))
    if (p[2].is_zero()) line.push_back(p);
  CHECK_THROWS_AS(closure(F, from_hinf(F, 2, line)), Error);
  CHECK(closure(FieldCtx::of_order(4), construct_named("frame", FieldCtx::of_order(4), {})).size() == 7);
}

TEST_CASE("named sets have their sizes") {
  const FieldCtx F3 = FieldCtx::of_order(3), F4 = FieldCtx::of_order(4), F8 = FieldCtx::of_order(8),
                 F9 = FieldCtx::of_order(9);
  CHECK(construct_named("conic_arc", F3, {}).size() == 4);
  CHECK(construct_named("hyperoval", F4, {}).size() == 6);
  CHECK(construct_named("two_lines", F3, {}).size() == 7);
  CHECK(construct_named("two_planes", F3, {3, 0}).size() == 22);
  CHECK(construct_named("three_lines_rem3", F3, {3, 0}).size() == 10);
  CHECK(construct_named("baer_subplane", F4, {}).size() == 7);
  CHECK(construct_named("baer_subplane", F9, {}).size() == 13);
  CHECK(construct_named("subgeometry", F8, {2, 2}).size() == 7);
  CHECK(construct_named("qarc_parabola", F4, {}).size() == 4);
  CHECK_THROWS_AS(construct_named("hyperoval", F3, {}), Error);
  CHECK_THROWS_AS(construct_named("baer_subplane", F8, {}), Error);
  CHECK_THROWS_AS(construct_named("nonsense", F3, {}), Error);
}

TEST_CASE("property (*)") {
  const FieldCtx F3 = FieldCtx::of_order(3), F4 = FieldCtx::of_order(4);
  const PointSet tl = construct_named("two_lines", F3, {});
  const StarResult r = property_star(F3, tl);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_plane);
  // two lines minus their common point also violates it
  std::vector<ProjPoint> minus;
  for (const auto& p : tl.hinf_points())
    if (!(p == ProjPoint::from(F3, {F3.zero(), F3.zero(), F3.one()}))) minus.push_back(p);
  CHECK(minus.size() == 6);
  CHECK_FALSE(property_star(F3, from_hinf(F3, 2, minus)).holds);
  CHECK(property_star(F4, construct_named("hyperoval", F4, {})).holds);
  CHECK(property_star(F3, construct_named("conic_arc", F3, {})).holds);
  CHECK_FALSE(property_star(F3, construct_named("two_planes", F3, {3, 0})).holds);
}

TEST_CASE("tangent cover against direct line counting") {
  for (auto [name, q] : {std::pair{"two_lines", 3}, {"conic_arc", 3}, {"frame", 3}, {"hyperoval", 4},
                        {"conic_arc", 5}, {"baer_subplane", 4}, {"qarc_parabola", 4}}) {
    const FieldCtx F = FieldCtx::of_order(q);
    const PointSet K = construct_named(name, F, {});
    CAPTURE(name);
    CHECK(tangent_cover(F, K).holds == (points_without_tangent(F, K.hinf_points()) == 0));
  }
  CHECK(tangent_cover(FieldCtx::of_order(3), construct_named("two_lines", FieldCtx::of_order(3), {})).holds);
  CHECK_FALSE(tangent_cover(FieldCtx::of_order(3), construct_named("conic_arc", FieldCtx::of_order(3), {})).holds);
}
