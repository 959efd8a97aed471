#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tstar/gf.hpp"

namespace tstar {

using Vec = std::vector<FieldElement>;

/// Dense matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(const FieldCtx& F, int n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldElement& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  FieldElement operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const FieldElement> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<FieldElement>& data() const { return data_; }

  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix multiply(const FieldCtx& F, const Matrix& a, const Matrix& b);
/// Row vector times matrix.
Vec vec_mul(const FieldCtx& F, std::span<const FieldElement> x, const Matrix& m);
/// Entrywise Frobenius a -> a^(p^e).
Matrix frobenius(const FieldCtx& F, const Matrix& m, int e);
Vec frobenius(const FieldCtx& F, std::span<const FieldElement> v, int e);

struct Echelon {
  Matrix reduced;           // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};
Echelon row_reduce(const FieldCtx& F, Matrix m);
int rank(const FieldCtx& F, const Matrix& m);
std::optional<Matrix> inverse(const FieldCtx& F, const Matrix& m);
/// Basis (in reduced echelon form) of {x : m x^T = 0}.
Matrix null_space(const FieldCtx& F, const Matrix& m);

/// Point of PG(d,q) with first nonzero coordinate equal to one.
class ProjPoint {
 public:
  ProjPoint() = default;
  static ProjPoint from(const FieldCtx& F, Vec coords);
  /// Trusted constructor for vectors already in normal form.
  static ProjPoint normalized_unchecked(Vec coords) { return ProjPoint(std::move(coords)); }

  const Vec& coords() const { return coords_; }
  FieldElement operator[](std::size_t i) const { return coords_[i]; }
  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  bool at_infinity() const { return coords_[0].is_zero(); }

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  explicit ProjPoint(Vec c) : coords_(std::move(c)) {}
  Vec coords_;
};

/// Scales v so that its first nonzero entry is one; throws on the zero vector.
Vec normalize(const FieldCtx& F, Vec v);

/// (q^(d+1)-1)/(q-1).
std::size_t num_points(int d, int q);

/// Position of a normalized vector in the lexicographic enumeration of PG(d,q).
std::size_t point_index(int q, std::span<const FieldElement> normalized);
ProjPoint point_at(const FieldCtx& F, int d, std::size_t index);

/// Index of the affine point (1,x_1,...,x_d) among the q^d affine points.
std::size_t affine_index(int q, std::span<const FieldElement> normalized);

/// Subspace of PG(d,q) stored by its reduced echelon basis; the empty
/// subspace has no rows and dimension -1.
class Subspace {
 public:
  Subspace() = default;
  static Subspace empty(int d);
  static Subspace from_rows(const FieldCtx& F, int d, Matrix rows);
  static Subspace of_point(const ProjPoint& p);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows() - 1; }
  bool is_empty() const { return basis_.rows() == 0; }
  const Matrix& basis() const { return basis_; }

  bool contains(const FieldCtx& F, std::span<const FieldElement> v) const;
  bool contains(const FieldCtx& F, const ProjPoint& p) const { return contains(F, p.coords()); }
  bool contains(const FieldCtx& F, const Subspace& s) const;
  /// The single point of a 0-dimensional subspace.
  ProjPoint as_point() const;
  std::vector<ProjPoint> points(const FieldCtx& F) const;

  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  int ambient_ = 0;
  Matrix basis_;
};

Subspace span(const FieldCtx& F, std::span<const ProjPoint> pts);
Subspace join(const FieldCtx& F, const Subspace& a, const Subspace& b);
Subspace join(const FieldCtx& F, const Subspace& a, const ProjPoint& p);
Subspace meet(const FieldCtx& F, const Subspace& a, const Subspace& b);

std::vector<ProjPoint> all_points(const FieldCtx& F, int d);
/// Points with X_0 = 1, in enumeration order (q^d of them).
std::vector<ProjPoint> affine_points(const FieldCtx& F, int d);
std::vector<ProjPoint> line_points(const FieldCtx& F, const Subspace& line);
/// All k-dimensional subspaces of PG(d,q) in canonical (sorted) order.
std::vector<Subspace> all_subspaces(const FieldCtx& F, int d, int k);

/// Element of PGammaL(d+1,q): x -> x^theta * matrix (row vectors), with
/// theta = Frobenius^autexp and the matrix scaled so its first nonzero
/// entry in row-major order is one.
class SemilinearMap {
 public:
  SemilinearMap(const FieldCtx& F, Matrix m, int autexp = 0);
  static SemilinearMap identity(const FieldCtx& F, int d);

  const Matrix& matrix() const { return m_; }
  int autexp() const { return e_; }
  int dim() const { return m_.rows() - 1; }

  Vec apply_vec(const FieldCtx& F, std::span<const FieldElement> x) const;
  ProjPoint apply(const FieldCtx& F, const ProjPoint& p) const;
  Subspace apply(const FieldCtx& F, const Subspace& s) const;

  friend bool operator==(const SemilinearMap&, const SemilinearMap&) = default;

 private:
  Matrix m_;
  int e_ = 0;
};

/// f after g.
SemilinearMap compose(const FieldCtx& F, const SemilinearMap& f, const SemilinearMap& g);
SemilinearMap invert(const FieldCtx& F, const SemilinearMap& f);

/// Generators of the collineations of PG(n+1,q) fixing H_inf: X_0 = 0
/// pointwise (elations and homologies with that axis).
std::vector<SemilinearMap> persp_generators(const FieldCtx& F, int n);
std::vector<SemilinearMap> pgammal_generators(const FieldCtx& F, int d);

enum class GroupFlavor { PGL, PGammaL };
/// |PGL(d+1,q)| or |PGammaL(d+1,q)|.
BigInt group_order_formula(int d, const FieldCtx& F, GroupFlavor flavor);

/// Rebuilds the semilinear map inducing a permutation of the points of
/// PG(d,q) (given by point index), or nullopt when the permutation is not
/// a collineation. Every point is checked.
std::optional<SemilinearMap> collineation_from_point_map(const FieldCtx& F, int d,
                                                         std::span<const std::size_t> image);

/// Permutation of point indices of PG(d,q) induced by f.
std::vector<std::size_t> point_permutation(const FieldCtx& F, const SemilinearMap& f);

}  // namespace tstar
