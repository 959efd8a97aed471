#include "tstar/geomaut.hpp"

#include <algorithm>
#include <set>

namespace tstar {

GeomAut GeomAut::identity(const LinRep& T) { return {Perm(T.num_points()), Perm(T.num_lines())}; }

GeomAut GeomAut::from_point_perm(const LinRep& T, Perm points) {
  if (points.size() != T.num_points()) throw Error("point permutation has the wrong size");
  std::vector<std::uint32_t> img(T.num_lines());
  for (std::size_t l = 0; l < T.num_lines(); ++l) {
    auto on = T.points_on(l);
    const auto target = T.line_joining(points[on[0]], points[on[1]]);
    if (!target) throw Error("point map does not send lines of T to lines of T");
    for (auto p : on)
      if (!T.incident(points[p], *target)) throw Error("point map does not send lines of T to lines of T");
    img[l] = static_cast<std::uint32_t>(*target);
  }
  return {std::move(points), Perm(std::move(img))};
}

GeomAut GeomAut::from_vertex_perm(const LinRep& T, const Perm& v) {
  const std::size_t np = T.num_points();
  if (v.size() != np + T.num_lines()) throw Error("vertex permutation has the wrong size");
  std::vector<std::uint32_t> pi(np), li(T.num_lines());
  for (std::size_t i = 0; i < np; ++i) {
    if (v[i] >= np) throw Error("vertex permutation swaps points and lines");
    pi[i] = v[i];
  }
  for (std::size_t l = 0; l < li.size(); ++l) li[l] = v[np + l] - static_cast<std::uint32_t>(np);
  return {Perm(std::move(pi)), Perm(std::move(li))};
}

Perm GeomAut::vertex_perm() const {
  const auto np = static_cast<std::uint32_t>(point_perm.size());
  std::vector<std::uint32_t> img(point_perm.images());
  for (std::size_t l = 0; l < line_perm.size(); ++l) img.push_back(np + line_perm[l]);
  return Perm(std::move(img));
}

GeomAut then(const GeomAut& a, const GeomAut& b) { return {a.point_perm * b.point_perm, a.line_perm * b.line_perm}; }

GeomAut inverse(const GeomAut& a) { return {a.point_perm.inverse(), a.line_perm.inverse()}; }

bool incidence_equivariant(const LinRep& T, const GeomAut& a) {
  if (a.point_perm.size() != T.num_points() || a.line_perm.size() != T.num_lines()) return false;
  for (std::size_t l = 0; l < T.num_lines(); ++l) {
    // both sides have q points, so containment of the images suffices
    for (auto p : T.points_on(l))
      if (!T.incident(a.point_perm[p], a.line_perm[l])) return false;
  }
  return true;
}

GeomAut induced_action(const LinRep& T, const SemilinearMap& f) {
  const FieldCtx& F = T.field();
  if (f.dim() != T.n() + 1) throw Error("map acts on the wrong space");
  for (int i = 1; i <= f.dim(); ++i)
    if (!f.matrix()(i, 0).is_zero()) throw Error("map does not stabilize H_inf");
  for (const auto& k : T.K().members)
    if (!T.K().contains(f.apply(F, k))) throw Error("map does not stabilize K");
  std::vector<std::uint32_t> img(T.num_points());
  for (std::size_t i = 0; i < T.num_points(); ++i)
    img[i] = static_cast<std::uint32_t>(T.point_id(f.apply(F, T.points()[i])));
  return GeomAut::from_point_perm(T, Perm(std::move(img)));
}

ColoredGraph projective_incidence_graph(const FieldCtx& F, int d, const std::vector<char>& marked,
                                        std::vector<Subspace>* lines_out) {
  const std::size_t np = num_points(d, F.q());
  auto lines = all_subspaces(F, d, 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  e.reserve(lines.size() * static_cast<std::size_t>(F.q() + 1));
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (const auto& p : line_points(F, lines[l]))
      e.emplace_back(static_cast<std::uint32_t>(point_index(F.q(), p.coords())), static_cast<std::uint32_t>(np + l));
  std::vector<int> col(np + lines.size(), 2);
  for (std::size_t i = 0; i < np; ++i) col[i] = marked.empty() ? 0 : (marked[i] ? 1 : 0);
  if (lines_out) *lines_out = std::move(lines);
  const std::size_t nv = col.size();
  return ColoredGraph(nv, e, std::move(col));
}

GeometricGroup geometric_group(const LinRep& T) {
  const FieldCtx& F = T.field();
  const int d = T.n() + 1;
  const auto pts = all_points(F, d);
  const std::size_t np = pts.size();
  std::vector<Subspace> lines;
  ColoredGraph base = projective_incidence_graph(F, d, {}, &lines);

  // points: affine / K / H_inf \ K; lines: T-lines / in H_inf / other
  std::vector<int> col(base.size());
  std::vector<std::size_t> tpoint(np, LinRep::npos);
  for (std::size_t i = 0; i < np; ++i) {
    if (!pts[i].at_infinity()) {
      col[i] = 0;
      tpoint[i] = T.point_id(pts[i]);
    } else {
      col[i] = T.K().contains(pts[i]) ? 1 : 2;
    }
  }
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const Subspace& L = lines[l];
    int c = 5;
    if (L.basis()(0, 0).is_zero()) {
      c = 4;  // echelon form: a line in H_inf has no pivot in column 0
    } else {
      // the second basis row is the point at infinity
      Vec inf(L.basis().row(1).begin(), L.basis().row(1).end());
      if (T.K().contains(ProjPoint::from(F, inf))) c = 3;
    }
    col[np + l] = c;
  }
  ColoredGraph aux = base.with_colors(std::move(col));
  AutomorphismResult ar = automorphism_group(aux);

  GeometricGroup out;
  out.aux_vertices = aux.size();
  std::vector<std::size_t> pg_of(T.num_points());
  for (std::size_t i = 0; i < np; ++i)
    if (tpoint[i] != LinRep::npos) pg_of[tpoint[i]] = i;
  std::vector<Perm> vperms;
  for (const Perm& g : ar.generators) {
    std::vector<std::uint32_t> img(T.num_points());
    for (std::size_t p = 0; p < T.num_points(); ++p) img[p] = static_cast<std::uint32_t>(tpoint[g[pg_of[p]]]);
    GeomAut a = GeomAut::from_point_perm(T, Perm(std::move(img)));
    vperms.push_back(a.vertex_perm());
    out.generators.push_back(std::move(a));
  }
  out.group = PermGroup(T.num_points() + T.num_lines(), std::move(vperms));
  out.order = out.group.order();
  if (out.order != ar.order) throw Error("restriction to T is not faithful");
  return out;
}

HinfStabilizer hinf_stabilizer(const FieldCtx& F, const PointSet& K) {
  const int n = K.n;
  if (n < 2) throw Error("the H_inf route needs n >= 2");
  const std::size_t np = num_points(n, F.q());
  std::vector<char> marked(np, 0);
  for (const auto& p : K.hinf_points()) marked[point_index(F.q(), p.coords())] = 1;
  ColoredGraph g = projective_incidence_graph(F, n, marked);
  AutomorphismResult ar = automorphism_group(g);
  HinfStabilizer out;
  out.order = ar.order;
  for (const Perm& gen : ar.generators) {
    std::vector<std::size_t> img(np);
    for (std::size_t i = 0; i < np; ++i) img[i] = gen[i];
    auto f = collineation_from_point_map(F, n, img);
    if (!f) throw Error("incidence automorphism of H_inf is not a collineation");
    out.generators.push_back(*f);
  }
  return out;
}

BigInt persp_order(const FieldCtx& F, int n) {
  BigInt r = F.q() - 1;
  for (int i = 0; i <= n; ++i) r *= F.q();
  return r;
}

namespace {

// Affine lines of PG(n+1,q) through the point `dir` of H_inf, as point ids.
std::vector<std::vector<std::size_t>> lines_through(const LinRep& T, const Vec& dir) {
  const FieldCtx& F = T.field();
  const std::size_t np = T.num_points();
  std::vector<char> done(np, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < np; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> on;
    for (int t = 0; t < F.q(); ++t) {
      Vec v = T.points()[i].coords();
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = F.add(v[c], F.mul(FieldElement(t), dir[c]));
      on.push_back(affine_index(F.q(), v));
      done[on.back()] = 1;
    }
    out.push_back(std::move(on));
  }
  return out;
}

// Point at infinity of the line through the given affine points, or
// nullopt when they are not collinear.
std::optional<ProjPoint> common_direction(const LinRep& T, const std::vector<std::size_t>& ids) {
  const FieldCtx& F = T.field();
  const Vec& a = T.points()[ids[0]].coords();
  std::optional<ProjPoint> dir;
  for (std::size_t k = 1; k < ids.size(); ++k) {
    Vec v = T.points()[ids[k]].coords();
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = F.sub(v[c], a[c]);
    ProjPoint d = ProjPoint::from(F, std::move(v));
    if (!dir)
      dir = d;
    else if (!(*dir == d))
      return std::nullopt;
  }
  return dir;
}

}  // namespace

Extension extend_to_infinity(const LinRep& T, const GeomAut& a) {
  const FieldCtx& F = T.field();
  const auto hpts = all_points(F, T.n());
  Extension ext;
  ext.image.resize(hpts.size());
  ext.coherent.assign(hpts.size(), 0);
  ext.total = true;
  for (std::size_t h = 0; h < hpts.size(); ++h) {
    const ProjPoint Q = from_hinf_point(hpts[h]);
    std::optional<ProjPoint> img;
    bool ok = true;
    for (const auto& line : lines_through(T, Q.coords())) {
      std::vector<std::size_t> im;
      for (auto p : line) im.push_back(a.point_perm[p]);
      auto d = common_direction(T, im);
      if (!d || (img && !(*img == *d))) {
        ok = false;
        break;
      }
      img = d;
    }
    if (ok && img) {
      ext.coherent[h] = 1;
      ext.image[h] = to_hinf(*img);
    } else {
      ext.total = false;
    }
  }
  return ext;
}

bool is_rigid(const LinRep& T, const GeomAut& a, const Subspace& pi_inf) {
  const FieldCtx& F = T.field();
  if (pi_inf.ambient() != T.n() + 1 || pi_inf.is_empty()) throw Error("pi_inf must be a subspace of H_inf");
  for (int r = 0; r < pi_inf.basis().rows(); ++r)
    if (!pi_inf.basis()(r, 0).is_zero()) throw Error("pi_inf must be a subspace of H_inf");
  const int k = pi_inf.dim();
  std::set<Subspace> seen;
  for (const auto& P : T.points()) {
    Subspace pi = join(F, pi_inf, P);
    if (!seen.insert(pi).second) continue;
    std::vector<ProjPoint> img;
    for (const auto& x : pi.points(F))
      if (!x.at_infinity()) img.push_back(T.points()[a.point_perm[T.point_id(x)]]);
    if (span(F, img).dim() != k + 1) return false;
  }
  return true;
}

std::optional<SemilinearMap> is_geometric(const LinRep& T, const GeomAut& a) {
  const FieldCtx& F = T.field();
  const int d = T.n() + 1;
  Extension ext = extend_to_infinity(T, a);
  if (!ext.total) return std::nullopt;
  const auto pts = all_points(F, d);
  std::vector<std::size_t> image(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].at_infinity()) {
      const ProjPoint h = to_hinf(pts[i]);
      image[i] = point_index(F.q(), from_hinf_point(*ext.image[point_index(F.q(), h.coords())]).coords());
    } else {
      image[i] = point_index(F.q(), T.points()[a.point_perm[T.point_id(pts[i])]].coords());
    }
  }
  auto f = collineation_from_point_map(F, d, image);
  if (!f) return std::nullopt;
  try {
    if (induced_action(T, *f) == a) return f;
  } catch (const Error&) {
  }
  return std::nullopt;
}

GeomAut phi_shear(const LinRep& T, FieldElement m) {
  const FieldCtx& F = T.field();
  if (T.n() != 2 || !(T.K() == construct_named("two_lines", F, {2, 0})))
    throw Error("the shear is defined on T*_2(two_lines) only");
  std::vector<std::uint32_t> img(T.num_points());
  for (std::size_t i = 0; i < T.num_points(); ++i) {
    Vec v = T.points()[i].coords();
    v[3] = F.add(v[3], F.mul(m, F.mul(v[1], v[2])));
    img[i] = static_cast<std::uint32_t>(affine_index(F.q(), v));
  }
  return GeomAut::from_point_perm(T, Perm(std::move(img)));
}

std::size_t shear_conic_failures(const FieldCtx& F) {
  const int q = F.q();
  const auto aff = affine_points(F, 3);
  std::size_t failures = 0;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z)
        for (int v = 1; v < q; ++v)
          for (int w = 0; w < q; ++w) {
            const FieldElement X(x), Y(y), Z(z), V(v), W(w);
            std::set<std::size_t> image, conic;
            for (int t = 0; t < q; ++t) {
              const FieldElement T(t);
              const FieldElement a = F.add(X, T), b = F.add(Y, F.mul(T, V)), c = F.add(Z, F.mul(T, W));
              image.insert(affine_index(q, Vec{F.one(), a, b, F.add(c, F.mul(a, b))}));
            }
            const FieldElement c0 = F.sub(Z, F.mul(W, X));
            const FieldElement c01 = F.sub(F.add(W, Y), F.mul(V, X));
            const FieldElement p0 = F.sub(Y, F.mul(V, X));
            for (const auto& P : aff) {
              const FieldElement X1 = P[1], X2 = P[2], X3 = P[3];
              // X0 = 1
              FieldElement quad = F.add(c0, F.mul(V, F.mul(X1, X1)));
              quad = F.add(quad, F.mul(c01, X1));
              quad = F.sub(quad, X3);
              const bool in_plane = X2 == F.add(p0, F.mul(V, X1));
              if (quad.is_zero() && in_plane) conic.insert(affine_index(q, P.coords()));
            }
            if (image != conic) ++failures;
          }
  return failures;
}

std::optional<Perm> qarc_duality(const LinRep& T) {
  const FieldCtx& F = T.field();
  if (F.p() != 2) throw Error("the q-arc duality needs q even");
  if (T.n() != 2 || !(T.K() == construct_named("qarc_parabola", F, {2, 0})))
    throw Error("the q-arc duality is defined for K = {(0,1,x,x^2)} only");
  const std::size_t np = T.num_points(), nl = T.num_lines();
  if (np != nl) return std::nullopt;
  std::vector<std::uint32_t> img(np + nl, 0);
  std::vector<char> used(np + nl, 0);
  for (std::size_t i = 0; i < np; ++i) {
    const Vec& c = T.points()[i].coords();
    const FieldElement a = c[1], b = c[2], cc = c[3];
    const ProjPoint k = ProjPoint::from(F, Vec{F.zero(), F.one(), a, F.mul(a, a)});
    const std::size_t r = affine_index(F.q(), Vec{F.one(), F.zero(), cc, F.mul(b, b)});
    const std::size_t ki = T.k_index(k);
    const std::uint32_t l = T.line_through(ki, r);
    if (used[np + l]) return std::nullopt;
    used[np + l] = 1;
    img[i] = static_cast<std::uint32_t>(np + l);
  }
  // a line goes to the common point of the images of its points
  for (std::size_t l = 0; l < nl; ++l) {
    std::vector<std::uint32_t> common;
    bool first = true;
    for (auto p : T.points_on(l)) {
      auto on = T.points_on(img[p] - np);
      std::vector<std::uint32_t> s(on.begin(), on.end());
      if (first) {
        common = s;
        first = false;
      } else {
        std::vector<std::uint32_t> keep;
        std::set_intersection(common.begin(), common.end(), s.begin(), s.end(), std::back_inserter(keep));
        common.swap(keep);
      }
    }
    if (common.size() != 1 || used[common[0]]) return std::nullopt;
    used[common[0]] = 1;
    img[np + l] = common[0];
  }
  return Perm(std::move(img));
}

FoldSetup default_fold_setup(const LinRep& T) {
  const FieldCtx& F = T.field();
  const int d = T.n() + 1;
  const Subspace pi = span(F, T.K().members);
  Vec e0(static_cast<std::size_t>(d + 1), F.zero());
  e0[0] = F.one();
  FoldSetup s;
  s.mu1 = join(F, pi, ProjPoint::from(F, e0));
  bool found = false;
  for (const auto& p : all_points(F, d))
    if (p.at_infinity() && !pi.contains(F, p)) {
      s.Q = p;
      found = true;
      break;
    }
  if (!found) throw Error("K spans H_inf; no point outside its span");
  Vec v = e0;
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = F.add(v[c], s.Q[c]);
  s.mu2 = join(F, pi, ProjPoint::from(F, v));
  return s;
}

GeomAut fold_map(const LinRep& T, const FoldSetup& s) {
  const FieldCtx& F = T.field();
  const int d = T.n() + 1;
  if (F.q() < 4) throw Error("the fold map needs q >= 4");
  const Subspace pi = span(F, T.K().members);
  if (pi.dim() > T.n() - 1) throw Error("the fold map needs dim <K> <= n-1");
  std::vector<Vec> hrows;
  for (int i = 1; i <= d; ++i) {
    Vec e(static_cast<std::size_t>(d + 1), F.zero());
    e[static_cast<std::size_t>(i)] = F.one();
    hrows.push_back(e);
  }
  const Subspace hinf = Subspace::from_rows(F, d, Matrix::from_rows(hrows));
  for (const Subspace* mu : {&s.mu1, &s.mu2}) {
    if (mu->ambient() != d || mu->dim() != pi.dim() + 1) throw Error("mu_i must be (dim <K> + 1)-spaces");
    if (!(meet(F, *mu, hinf) == pi)) throw Error("mu_i must meet H_inf exactly in <K>");
  }
  if (s.mu1 == s.mu2) throw Error("mu_1 and mu_2 must be distinct");
  if (!s.Q.at_infinity() || pi.contains(F, s.Q)) throw Error("Q must lie in H_inf outside <K>");
  if (!join(F, s.mu1, s.Q).contains(F, s.mu2)) throw Error("mu_2 must lie in <mu_1, Q>");

  std::vector<std::uint32_t> img(T.num_points());
  for (std::size_t i = 0; i < T.num_points(); ++i) {
    const ProjPoint& P = T.points()[i];
    const Subspace* other = nullptr;
    if (s.mu1.contains(F, P))
      other = &s.mu2;
    else if (s.mu2.contains(F, P))
      other = &s.mu1;
    if (!other) {
      img[i] = static_cast<std::uint32_t>(i);
      continue;
    }
    const Subspace m = meet(F, span(F, std::vector<ProjPoint>{s.Q, P}), *other);
    img[i] = static_cast<std::uint32_t>(T.point_id(m.as_point()));
  }
  return GeomAut::from_point_perm(T, Perm(std::move(img)));
}

SemilinearMap lift_fixing_point(const FieldCtx& F, const SemilinearMap& beta, const ProjPoint& c) {
  if (c.dim() != beta.dim()) throw Error("fixed point lives in the wrong space");
  if (!(beta.apply(F, c) == c)) throw Error("beta does not fix the point");
  const Vec v = beta.apply_vec(F, c.coords());
  std::size_t lead = 0;
  while (c[lead].is_zero()) ++lead;
  const FieldElement s = F.inv(v[lead]);  // c is normalized, so c[lead] == 1
  const int D = beta.dim() + 1;
  Matrix m(D + 1, D + 1);
  m(0, 0) = F.one();
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) m(i + 1, j + 1) = F.mul(beta.matrix()(i, j), s);
  return SemilinearMap(F, std::move(m), beta.autexp());
}

}  // namespace tstar
