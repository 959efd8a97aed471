#include "tstar/pointsets.hpp"

#include <algorithm>
#include <set>

namespace tstar {

bool PointSet::contains(const ProjPoint& p) const { return std::binary_search(members.begin(), members.end(), p); }

ProjPoint to_hinf(const ProjPoint& p) {
  if (!p.at_infinity()) throw Error("point is not in H_inf");
  Vec v(p.coords().begin() + 1, p.coords().end());
  return ProjPoint::normalized_unchecked(std::move(v));
}

ProjPoint from_hinf_point(const ProjPoint& p) {
  Vec v;
  v.reserve(p.coords().size() + 1);
  v.push_back(FieldElement(0));
  v.insert(v.end(), p.coords().begin(), p.coords().end());
  return ProjPoint::normalized_unchecked(std::move(v));
}

std::vector<ProjPoint> PointSet::hinf_points() const {
  std::vector<ProjPoint> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(to_hinf(m));
  return out;
}

PointSet from_hinf(const FieldCtx& F, int n, const std::vector<ProjPoint>& pts) {
  PointSet S;
  S.n = n;
  for (const auto& p : pts) {
    if (p.dim() != n) throw Error("point dimension does not match n");
    S.members.push_back(from_hinf_point(ProjPoint::from(F, p.coords())));
  }
  std::sort(S.members.begin(), S.members.end());
  S.members.erase(std::unique(S.members.begin(), S.members.end()), S.members.end());
  return S;
}

namespace {

ProjPoint pt(const FieldCtx& F, std::initializer_list<std::uint32_t> idx) {
  Vec v;
  for (auto i : idx) v.push_back(F.element(i));
  return ProjPoint::from(F, std::move(v));
}

std::vector<ProjPoint> conic(const FieldCtx& F) {
  std::vector<ProjPoint> out;
  for (int x = 0; x < F.q(); ++x) {
    const FieldElement e(x);
    out.push_back(ProjPoint::from(F, {F.one(), e, F.mul(e, e)}));
  }
  return out;
}

std::vector<ProjPoint> subgeometry_points(const FieldCtx& F, int n, int q0) {
  const auto [p0, h0] = prime_power(q0);
  if (p0 != F.p() || F.h() % h0 != 0) throw Error("GF(" + std::to_string(q0) + ") is not a subfield of GF(" +
                                                  std::to_string(F.q()) + ")");
  const auto sub = F.subfield(h0);
  std::vector<ProjPoint> out;
  for (const auto& p : all_points(F, n)) {
    bool ok = true;
    for (auto c : p.coords()) ok = ok && std::binary_search(sub.begin(), sub.end(), c);
    if (ok) out.push_back(p);
  }
  return out;
}

void require_n(const std::string& name, int n, int want) {
  if (n != want)
    throw Error(name + " is defined for n = " + std::to_string(want) + " only (got n = " + std::to_string(n) + ")");
}

}  // namespace

std::vector<std::string> named_sets() {
  return {"conic_arc", "qarc_parabola", "hyperoval", "two_lines",   "two_planes", "three_lines_rem3",
          "baer_subplane", "subgeometry", "frame", "all"};
}

PointSet construct_named(const std::string& name, const FieldCtx& F, const NamedParams& params) {
  const int n = params.n;
  if (n < 1) throw Error("n must be at least 1");
  std::vector<ProjPoint> pts;
  if (name == "conic_arc") {
    require_n(name, n, 2);
    pts = conic(F);
    pts.push_back(pt(F, {0, 0, 1}));
  } else if (name == "qarc_parabola") {
    require_n(name, n, 2);
    pts = conic(F);
  } else if (name == "hyperoval") {
    require_n(name, n, 2);
    if (F.p() != 2) throw Error("hyperoval needs q even");
    pts = conic(F);
    pts.push_back(pt(F, {0, 0, 1}));
    pts.push_back(pt(F, {0, 1, 0}));  // nucleus of X_1 X_3 = X_2^2
  } else if (name == "two_lines") {
    require_n(name, n, 2);
    for (const auto& p : all_points(F, 2))
      if (p[0].is_zero() || p[1].is_zero()) pts.push_back(p);
  } else if (name == "two_planes") {
    require_n(name, n, 3);
    for (const auto& p : all_points(F, 3))
      if (p[0].is_zero() || p[1].is_zero()) pts.push_back(p);
  } else if (name == "three_lines_rem3") {
    require_n(name, n, 3);
    // L1 = <e1,e2>, L2 = <e3,e4>, L3 = <e1,e3>
    for (const auto& p : all_points(F, 3)) {
      const bool l1 = p[2].is_zero() && p[3].is_zero();
      const bool l2 = p[0].is_zero() && p[1].is_zero();
      const bool l3 = p[1].is_zero() && p[3].is_zero();
      if (l1 || l2 || l3) pts.push_back(p);
    }
  } else if (name == "baer_subplane") {
    require_n(name, n, 2);
    if (F.h() % 2 != 0) throw Error("baer_subplane needs q to be a square");
    int q0 = 1;
    for (int i = 0; i < F.h() / 2; ++i) q0 *= F.p();
    pts = subgeometry_points(F, 2, q0);
  } else if (name == "subgeometry") {
    if (params.q0 <= 1) throw Error("subgeometry needs a subfield order q0");
    pts = subgeometry_points(F, n, params.q0);
  } else if (name == "frame") {
    for (int i = 0; i <= n; ++i) {
      Vec v(static_cast<std::size_t>(n + 1), F.zero());
      v[static_cast<std::size_t>(i)] = F.one();
      pts.push_back(ProjPoint::from(F, v));
    }
    pts.push_back(ProjPoint::from(F, Vec(static_cast<std::size_t>(n + 1), F.one())));
  } else if (name == "all") {
    pts = all_points(F, n);
  } else {
    throw Error("unknown point set name '" + name + "'");
  }
  return from_hinf(F, n, pts);
}

namespace {

bool independent(const FieldCtx& F, const std::vector<ProjPoint>& pts) {
  std::vector<Vec> rows;
  for (const auto& p : pts) rows.push_back(p.coords());
  return rank(F, Matrix::from_rows(rows)) == static_cast<int>(pts.size());
}

bool frame_search(const FieldCtx& F, int n, const std::vector<ProjPoint>& pts, std::size_t start,
                  std::vector<ProjPoint>& chosen) {
  const std::size_t need = static_cast<std::size_t>(n + 2);
  if (chosen.size() == need) return true;
  for (std::size_t i = start; i < pts.size(); ++i) {
    if (pts.size() - i < need - chosen.size()) return false;
    chosen.push_back(pts[i]);
    // every subset of size <= n+1 containing the new point must be independent
    bool ok = true;
    const std::size_t k = chosen.size();
    if (k <= need - 1) {
      ok = independent(F, chosen);
    } else {
      for (std::size_t drop = 0; drop + 1 < k && ok; ++drop) {
        std::vector<ProjPoint> sub;
        for (std::size_t j = 0; j < k; ++j)
          if (j != drop) sub.push_back(chosen[j]);
        ok = independent(F, sub);
      }
    }
    if (ok && frame_search(F, n, pts, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<ProjPoint>> find_frame(const FieldCtx& F, int n, const std::vector<ProjPoint>& pts) {
  std::vector<ProjPoint> chosen;
  if (frame_search(F, n, pts, 0, chosen)) return chosen;
  return std::nullopt;
}

PointSet closure(const FieldCtx& F, const PointSet& S) {
  const int n = S.n;
  std::vector<ProjPoint> cur = S.hinf_points();
  if (!find_frame(F, n, cur)) throw Error("closure needs a frame of PG(n,q) inside the point set");
  const std::size_t total = num_points(n, F.q());
  std::set<ProjPoint> have(cur.begin(), cur.end());

  for (;;) {
    if (have.size() == total) break;
    // step (i): every subspace spanned by points of the set, via join closure
    std::set<Subspace> spaces;
    std::vector<Subspace> frontier;
    for (const auto& p : have) {
      auto s = Subspace::of_point(p);
      if (spaces.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
      std::vector<Subspace> next;
      for (const auto& s : frontier)
        for (const auto& p : have) {
          if (s.contains(F, p)) continue;
          auto j = join(F, s, p);
          if (spaces.insert(j).second) next.push_back(std::move(j));
        }
      frontier = std::move(next);
    }
    // step (ii): points that are exact intersections of two such subspaces
    std::vector<Subspace> list(spaces.begin(), spaces.end());
    std::vector<ProjPoint> added;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].dim() < 1) continue;
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (list[j].dim() < 1) continue;
        auto m = meet(F, list[i], list[j]);
        if (m.dim() == 0) {
          auto p = m.as_point();
          if (!have.count(p)) added.push_back(p);
        }
      }
    }
    if (added.empty()) break;
    have.insert(added.begin(), added.end());
  }
  return from_hinf(F, n, std::vector<ProjPoint>(have.begin(), have.end()));
}

StarResult property_star(const FieldCtx& F, const PointSet& S) {
  const int n = S.n;
  if (n < 2) throw Error("Property (*) needs n >= 2");
  const int q = F.q();
  std::vector<char> in(num_points(n, q), 0);
  for (const auto& p : S.hinf_points()) in[point_index(q, p.coords())] = 1;

  StarResult res;
  for (const auto& plane : all_subspaces(F, n, 2)) {
    std::vector<std::size_t> I;
    for (const auto& p : plane.points(F))
      if (in[point_index(q, p.coords())]) I.push_back(point_index(q, p.coords()));
    const std::size_t k = I.size();
    if (k != static_cast<std::size_t>(2 * q + 1) && k != static_cast<std::size_t>(2 * q)) continue;
    std::sort(I.begin(), I.end());
    // lines of the plane with at least q points in I
    std::vector<std::vector<std::size_t>> cand;
    const auto pp = plane.points(F);
    std::set<Subspace> lines;
    for (std::size_t a = 0; a < pp.size(); ++a)
      for (std::size_t b = a + 1; b < pp.size(); ++b) {
        auto l = span(F, std::vector<ProjPoint>{pp[a], pp[b]});
        if (!lines.insert(l).second) continue;
        std::vector<std::size_t> idx;
        for (const auto& x : l.points(F)) idx.push_back(point_index(q, x.coords()));
        std::sort(idx.begin(), idx.end());
        std::size_t hit = 0;
        for (auto x : idx) hit += std::binary_search(I.begin(), I.end(), x) ? 1 : 0;
        if (hit + 1 >= idx.size()) cand.push_back(std::move(idx));
      }
    bool found = false;
    for (std::size_t a = 0; a < cand.size() && !found; ++a)
      for (std::size_t b = a + 1; b < cand.size() && !found; ++b) {
        std::vector<std::size_t> U;
        std::set_union(cand[a].begin(), cand[a].end(), cand[b].begin(), cand[b].end(), std::back_inserter(U));
        std::vector<std::size_t> common;
        std::set_intersection(cand[a].begin(), cand[a].end(), cand[b].begin(), cand[b].end(),
                              std::back_inserter(common));
        if (U == I) found = true;
        if (!found && common.size() == 1) {
          U.erase(std::find(U.begin(), U.end(), common[0]));
          if (U == I) found = true;
        }
      }
    if (found) {
      res.holds = false;
      res.witness_plane = plane;
      return res;
    }
  }
  return res;
}

TangentResult tangent_cover(const FieldCtx& F, const PointSet& S) {
  const int n = S.n;
  const int q = F.q();
  const std::size_t N = num_points(n, q);
  std::vector<char> in(N, 0), covered(N, 0);
  for (const auto& p : S.hinf_points()) in[point_index(q, p.coords())] = 1;
  for (const auto& l : all_subspaces(F, n, 1)) {
    std::vector<std::size_t> idx;
    std::size_t hit = 0;
    for (const auto& x : l.points(F)) {
      idx.push_back(point_index(q, x.coords()));
      hit += in[idx.back()];
    }
    if (hit == 1)
      for (auto i : idx) covered[i] = 1;
  }
  TangentResult res;
  for (std::size_t i = 0; i < N; ++i)
    if (!in[i] && !covered[i]) {
      res.holds = false;
      res.witness_point = point_at(F, n, i);
      return res;
    }
  return res;
}

}  // namespace tstar
