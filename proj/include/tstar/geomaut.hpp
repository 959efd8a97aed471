#pragma once

#include <optional>
#include <vector>

#include "tstar/linrep.hpp"
#include "tstar/permgrp.hpp"

namespace tstar {

/// Automorphism of T*_n(K) as a pair of permutations (points, lines).
struct GeomAut {
  Perm point_perm;
  Perm line_perm;

  static GeomAut identity(const LinRep& T);
  /// Derives the line permutation; throws when some line is not mapped
  /// onto a line of T.
  static GeomAut from_point_perm(const LinRep& T, Perm points);
  /// Splits a class-preserving permutation of the incidence graph vertices.
  static GeomAut from_vertex_perm(const LinRep& T, const Perm& v);
  Perm vertex_perm() const;

  friend bool operator==(const GeomAut&, const GeomAut&) = default;
};

/// a then b.
GeomAut then(const GeomAut& a, const GeomAut& b);
GeomAut inverse(const GeomAut& a);

/// P in L <=> a(P) in a(L) for every pair.
bool incidence_equivariant(const LinRep& T, const GeomAut& a);

/// The automorphism of T induced by a collineation of PG(n+1,q) fixing H_inf and K.
GeomAut induced_action(const LinRep& T, const SemilinearMap& f);

struct GeometricGroup {
  PermGroup group;                   // on incidence graph vertices
  std::vector<GeomAut> generators;
  BigInt order;
  std::size_t aux_vertices = 0;
};

/// Image of (PGammaL(n+2,q)_{H_inf})_K in Sym(P u L), from the automorphisms
/// of the colored point-line incidence graph of PG(n+1,q).
GeometricGroup geometric_group(const LinRep& T);

/// Point-line incidence graph of PG(d,q) with the points of `marked`
/// (indices into all_points) colored apart. Points come first.
ColoredGraph projective_incidence_graph(const FieldCtx& F, int d, const std::vector<char>& marked,
                                        std::vector<Subspace>* lines_out = nullptr);

/// PGammaL(n+1,q)_K as semilinear maps of H_inf = PG(n,q) (n >= 2), from the
/// automorphisms of the colored incidence graph of H_inf.
struct HinfStabilizer {
  std::vector<SemilinearMap> generators;
  BigInt order;
};
HinfStabilizer hinf_stabilizer(const FieldCtx& F, const PointSet& K);

/// q^(n+1)(q-1).
BigInt persp_order(const FieldCtx& F, int n);

struct Extension {
  /// Per point of H_inf (index in PG(n,q)): its image when coherent.
  std::vector<std::optional<ProjPoint>> image;
  std::vector<char> coherent;
  bool total = false;
};

/// The map Q -> infinite point of a(L), over all affine lines L through Q.
/// A point is coherent when every such line goes to a line and all the
/// images share one point at infinity.
Extension extend_to_infinity(const LinRep& T, const GeomAut& a);

/// For every (k+1)-space through pi_inf (a k-space of H_inf, full
/// coordinates) not in H_inf, the image of its affine points spans a
/// (k+1)-space.
bool is_rigid(const LinRep& T, const GeomAut& a, const Subspace& pi_inf);

/// The inducing collineation when a is geometric.
std::optional<SemilinearMap> is_geometric(const LinRep& T, const GeomAut& a);

/// (1,x,y,z) -> (1,x,y,z+mxy) on T*_2(two_lines).
GeomAut phi_shear(const LinRep& T, FieldElement m);

/// Checks, for every x,y,z and v != 0, w, that the shear maps the affine
/// points of <(1,x,y,z),(0,1,v,w)> onto the affine points of
/// (z-wx)X0^2 + vX1^2 + (w+y-vx)X0X1 - X0X3 = 0 in the plane
/// X2 = (y-vx)X0 + vX1. Returns the number of failing lines.
std::size_t shear_conic_failures(const FieldCtx& F);

/// Class-swapping map on the incidence graph of T*_2({(0,1,x,x^2)}), q even:
/// (1,a,b,c) -> <(0,1,a,a^2),(1,0,c,b^2)>, lines mapped to the common point of
/// the images of their points. nullopt when that is not a bijection.
std::optional<Perm> qarc_duality(const LinRep& T);

struct FoldSetup {
  Subspace mu1, mu2;
  ProjPoint Q;
};
/// mu1 = <pi, e0>, mu2 = <pi, e0 + Q> with Q the first point of H_inf outside pi.
FoldSetup default_fold_setup(const LinRep& T);
/// P in mu1 -> <Q,P> n mu2, P in mu2 -> <Q,P> n mu1, identity elsewhere.
GeomAut fold_map(const LinRep& T, const FoldSetup& s);

/// Lift of beta (on PG(n,q), fixing c) to diag(1,B) on PG(n+1,q), with B
/// scaled so that c^theta B = c.
SemilinearMap lift_fixing_point(const FieldCtx& F, const SemilinearMap& beta, const ProjPoint& c);

}  // namespace tstar
