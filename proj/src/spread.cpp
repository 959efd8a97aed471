#include "tstar/spread.hpp"

#include <algorithm>

namespace tstar {

namespace {

FieldElement eval_poly(const FieldCtx& F, const std::vector<int>& coeffs, FieldElement x) {
  FieldElement acc = F.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = F.add(F.mul(acc, x), F.element(static_cast<std::uint32_t>(*it)));
  return acc;
}

}  // namespace

SpreadData barlotti_cofman(const FieldCtx& Fq, const FieldCtx& Fq2, const PointSet& K) {
  if (Fq2.p() != Fq.p() || Fq2.h() != 2 * Fq.h()) throw Error("the big field must be GF(q^2)");
  if (K.n != 2) throw Error("K must live in PG(2,q^2)");
  SpreadData S;
  S.Fq = Fq;
  S.Fq2 = Fq2;
  const int q = Fq.q(), Q = Fq2.q();

  // GF(q) inside GF(q^2): send the class of x to a root of the modulus in the subfield
  const auto sub = Fq2.subfield(Fq.h());
  std::optional<FieldElement> root;
  for (FieldElement r : sub)
    if (eval_poly(Fq2, Fq.modulus(), r).is_zero()) {
      root = r;
      break;
    }
  if (!root) throw Error("no root of the modulus of GF(q) in GF(q^2)");
  S.embed.resize(static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a) {
    const auto c = Fq.coeffs(FieldElement(static_cast<std::uint32_t>(a)));
    FieldElement acc = Fq2.zero(), pw = Fq2.one();
    for (int ci : c) {
      acc = Fq2.add(acc, Fq2.mul(Fq2.element(static_cast<std::uint32_t>(ci)), pw));
      pw = Fq2.mul(pw, *root);
    }
    S.embed[static_cast<std::size_t>(a)] = acc;
  }
  S.omega = Fq2.primitive();
  S.split.assign(static_cast<std::size_t>(Q), {Fq.zero(), Fq.zero()});
  std::vector<char> hit(static_cast<std::size_t>(Q), 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const FieldElement x = Fq2.add(S.embed[a], Fq2.mul(S.embed[b], S.omega));
      if (hit[x.index()]) throw Error("{1, omega} is not a basis");
      hit[x.index()] = 1;
      S.split[x.index()] = {FieldElement(static_cast<std::uint32_t>(a)), FieldElement(static_cast<std::uint32_t>(b))};
    }

  for (const auto& y : all_points(Fq2, 2)) {
    Vec wy(y.coords().size());
    for (std::size_t c = 0; c < wy.size(); ++c) wy[c] = Fq2.mul(S.omega, y[c]);
    S.spread.push_back(
        Subspace::from_rows(Fq, 5, Matrix::from_rows({reduce(S, y.coords()), reduce(S, wy)})));
  }
  for (const auto& k : K.hinf_points()) S.B.push_back(point_index(Q, k.coords()));
  std::sort(S.B.begin(), S.B.end());

  const auto aff = affine_points(Fq2, 3);
  S.pointmap.resize(aff.size());
  for (std::size_t i = 0; i < aff.size(); ++i) {
    Vec tail(aff[i].coords().begin() + 1, aff[i].coords().end());
    Vec v{Fq.one()};
    const Vec r = reduce(S, tail);
    v.insert(v.end(), r.begin(), r.end());
    S.pointmap[i] = affine_index(q, v);
  }
  return S;
}

Vec reduce(const SpreadData& S, std::span<const FieldElement> x) {
  Vec out;
  out.reserve(2 * x.size());
  for (FieldElement e : x) {
    out.push_back(S.split[e.index()].first);
    out.push_back(S.split[e.index()].second);
  }
  return out;
}

SpreadGroup spread_induced_group(const LinRep& T, const SpreadData& S) {
  const FieldCtx& F = S.Fq;
  const int q = F.q();
  if (!(T.field() == S.Fq2) || T.n() != 2) throw Error("T must be T*_2(K) over GF(q^2)");
  const auto pts = all_points(F, 6);
  const std::size_t np = pts.size();
  std::vector<Subspace> lines;
  ColoredGraph base = projective_incidence_graph(F, 6, {}, &lines);

  std::vector<char> on_b(np, 0);
  std::vector<Subspace> bl;
  for (std::size_t b : S.B) {
    // spread lines live in PG(5,q); prepend X_0 = 0
    Matrix m(2, 7);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 6; ++c) m(r, c + 1) = S.spread[b].basis()(r, c);
    bl.push_back(Subspace::from_rows(F, 6, m));
    for (const auto& p : bl.back().points(F)) on_b[point_index(q, p.coords())] = 1;
  }
  std::sort(bl.begin(), bl.end());

  // points: affine / on a B line / other J_inf; lines: B / other J_inf / affine
  std::vector<int> col(base.size());
  for (std::size_t i = 0; i < np; ++i) col[i] = !pts[i].at_infinity() ? 0 : (on_b[i] ? 1 : 2);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    int c = 5;
    if (lines[l].basis()(0, 0).is_zero()) c = std::binary_search(bl.begin(), bl.end(), lines[l]) ? 3 : 4;
    col[np + l] = c;
  }
  ColoredGraph aux = base.with_colors(std::move(col));
  AutomorphismResult ar = automorphism_group(aux);

  // affine PG(6,q) point index -> T point id
  std::vector<std::size_t> pg_to_t(np, LinRep::npos), t_to_pg(T.num_points());
  std::vector<std::size_t> aff_to_pg(S.pointmap.size());
  for (std::size_t i = 0; i < np; ++i)
    if (!pts[i].at_infinity()) aff_to_pg[affine_index(q, pts[i].coords())] = i;
  for (std::size_t t = 0; t < T.num_points(); ++t) {
    t_to_pg[t] = aff_to_pg[S.pointmap[t]];
    pg_to_t[t_to_pg[t]] = t;
  }
  SpreadGroup out;
  out.aux_order = ar.order;
  out.aux_vertices = aux.size();
  std::vector<Perm> vperms;
  for (const Perm& g : ar.generators) {
    std::vector<std::uint32_t> img(T.num_points());
    for (std::size_t t = 0; t < T.num_points(); ++t) img[t] = static_cast<std::uint32_t>(pg_to_t[g[t_to_pg[t]]]);
    vperms.push_back(GeomAut::from_point_perm(T, Perm(std::move(img))).vertex_perm());
  }
  out.group = PermGroup(T.num_points() + T.num_lines(), std::move(vperms));
  out.induced_order = out.group.order();
  return out;
}

}  // namespace tstar
