#include "tstar/linrep.hpp"

#include <algorithm>

namespace tstar {

LinRep LinRep::build(const FieldCtx& F, const PointSet& K) {
  if (K.members.empty()) throw Error("K must be nonempty");
  for (const auto& m : K.members) {
    if (m.dim() != K.n + 1) throw Error("K member has the wrong dimension");
    if (!m.at_infinity()) throw Error("K must lie in H_inf (X_0 = 0)");
  }
  LinRep T;
  T.F_ = F;
  T.K_ = K;
  const int d = K.n + 1;
  const int q = F.q();
  T.points_ = affine_points(F, d);
  const std::size_t np = T.points_.size();
  T.per_k_ = np / static_cast<std::size_t>(q);
  T.line_of_.assign(K.size() * np, 0);
  T.line_pts_.reserve(K.size() * np);
  T.lines_.reserve(K.size() * T.per_k_);

  std::vector<std::uint32_t> tmp(np, 0);
  for (std::size_t k = 0; k < K.size(); ++k) {
    const auto& dir = K.members[k].coords();
    std::vector<char> done(np, 0);
    std::vector<std::size_t> on;
    // points are visited in index order, so the first unvisited one is the rep
    for (std::size_t i = 0; i < np; ++i) {
      if (done[i]) continue;
      on.clear();
      for (int t = 0; t < q; ++t) {
        Vec v = T.points_[i].coords();
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = F.add(v[c], F.mul(FieldElement(t), dir[c]));
        on.push_back(affine_index(q, v));
      }
      std::sort(on.begin(), on.end());
      const auto id = static_cast<std::uint32_t>(T.lines_.size());
      for (auto p : on) {
        done[p] = 1;
        T.line_of_[k * np + p] = id;
        T.line_pts_.push_back(static_cast<std::uint32_t>(p));
      }
      T.lines_.push_back({K.members[k], T.points_[i]});
    }
  }
  return T;
}

std::size_t LinRep::point_id(const ProjPoint& p) const {
  if (p.dim() != n() + 1 || p.at_infinity()) throw Error("not an affine point of this geometry");
  return affine_index(q(), p.coords());
}

std::size_t LinRep::k_index(const ProjPoint& p) const {
  auto it = std::lower_bound(K_.members.begin(), K_.members.end(), p);
  if (it == K_.members.end() || !(*it == p)) return npos;
  return static_cast<std::size_t>(it - K_.members.begin());
}

std::optional<std::size_t> LinRep::line_joining(std::size_t a, std::size_t b) const {
  if (a == b) return std::nullopt;
  Vec v = points_[a].coords();
  const Vec& w = points_[b].coords();
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = F_.sub(v[c], w[c]);
  const std::size_t k = k_index(ProjPoint::from(F_, v));
  if (k == npos) return std::nullopt;
  return line_through(k, a);
}

ColoredGraph LinRep::incidence_graph(bool allow_class_swap) const {
  const std::size_t np = num_points();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  e.reserve(line_pts_.size());
  for (std::size_t l = 0; l < num_lines(); ++l)
    for (auto p : points_on(l)) e.emplace_back(p, static_cast<std::uint32_t>(np + l));
  std::vector<int> col(np + num_lines(), 0);
  if (!allow_class_swap)
    for (std::size_t i = np; i < col.size(); ++i) col[i] = 1;
  return ColoredGraph(np + num_lines(), e, std::move(col));
}

namespace {

std::vector<int> distances(const ColoredGraph& g, std::uint32_t v, int limit) {
  std::vector<int> dist(g.size(), -1);
  std::vector<std::uint32_t> layer{v}, next;
  dist[v] = 0;
  for (int d = 1; d <= limit && !layer.empty(); ++d) {
    next.clear();
    for (auto x : layer)
      for (auto y : g.neighbors(x))
        if (dist[y] < 0) {
          dist[y] = d;
          next.push_back(y);
        }
    layer.swap(next);
  }
  return dist;
}

}  // namespace

std::vector<std::uint32_t> ball(const ColoredGraph& g, std::uint32_t v, int i) {
  if (v >= g.size()) throw Error("vertex out of range");
  if (i < 0) throw Error("radius must be nonnegative");
  const auto dist = distances(g, v, i);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.size(); ++x)
    if (dist[x] == i) out.push_back(x);
  return out;
}

std::optional<std::uint32_t> nvt_certificate(const ColoredGraph& g, std::uint32_t v) {
  const auto dist = distances(g, v, 4);
  for (std::uint32_t w = 0; w < g.size(); ++w) {
    if (dist[w] != 4) continue;
    bool all3 = true;
    for (auto y : g.neighbors(w)) all3 = all3 && dist[y] == 3;
    if (all3) return w;
  }
  return std::nullopt;
}

NvtReport nvt_check(const LinRep& T) {
  NvtReport r;
  r.applicable = tangent_cover(T.field(), T.K()).holds;
  const ColoredGraph g = T.incidence_graph(false);
  const auto np = static_cast<std::uint32_t>(T.num_points());
  r.points.total = np;
  r.lines.total = T.num_lines();
  for (std::uint32_t v = 0; v < np; ++v)
    if (auto w = nvt_certificate(g, v)) {
      ++r.points.with_certificate;
      if (!r.points.example) r.points.example = std::make_pair(v, *w);
    }
  r.line_witness.resize(T.num_lines());
  for (std::uint32_t l = 0; l < T.num_lines(); ++l) {
    const std::uint32_t v = np + l;
    r.line_witness[l] = nvt_certificate(g, v);
    if (r.line_witness[l]) {
      ++r.lines.with_certificate;
      if (!r.lines.example) r.lines.example = std::make_pair(v, *r.line_witness[l]);
    }
  }
  r.certificate_pattern = r.lines.with_certificate == r.lines.total && r.points.with_certificate == 0;
  r.pass = r.applicable && r.certificate_pattern;
  return r;
}

}  // namespace tstar
