#include "tstar/projspace.hpp"

#include <algorithm>
#include <numeric>

namespace tstar {

Matrix Matrix::identity(const FieldCtx& F, int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  const int cols = static_cast<int>(rows.front().size());
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw Error("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix multiply(const FieldCtx& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const FieldElement aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
    }
  return c;
}

Vec vec_mul(const FieldCtx& F, std::span<const FieldElement> x, const Matrix& m) {
  if (static_cast<int>(x.size()) != m.rows()) throw Error("vector/matrix dimension mismatch");
  Vec y(m.cols());
  for (int k = 0; k < m.rows(); ++k) {
    if (x[k].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) y[j] = F.add(y[j], F.mul(x[k], m(k, j)));
  }
  return y;
}

Matrix frobenius(const FieldCtx& F, const Matrix& m, int e) {
  Matrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = F.frobenius(m(i, j), e);
  return r;
}

Vec frobenius(const FieldCtx& F, std::span<const FieldElement> v, int e) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = F.frobenius(v[i], e);
  return r;
}

Echelon row_reduce(const FieldCtx& F, Matrix m) {
  const int R = m.rows(), C = m.cols();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int sel = -1;
    for (int r = row; r < R; ++r)
      if (!m(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < C; ++c) std::swap(m(sel, c), m(row, c));
    const FieldElement s = F.inv(m(row, col));
    for (int c = 0; c < C; ++c) m(row, c) = F.mul(m(row, c), s);
    for (int r = 0; r < R; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElement f = m(r, col);
      for (int c = 0; c < C; ++c) m(r, c) = F.sub(m(r, c), F.mul(f, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix out(row, C);
  for (int r = 0; r < row; ++r)
    for (int c = 0; c < C; ++c) out(r, c) = m(r, c);
  return {std::move(out), std::move(pivots)};
}

int rank(const FieldCtx& F, const Matrix& m) { return row_reduce(F, m).reduced.rows(); }

std::optional<Matrix> inverse(const FieldCtx& F, const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw Error("inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F.one();
  }
  Echelon e = row_reduce(F, std::move(aug));
  if (e.reduced.rows() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix null_space(const FieldCtx& F, const Matrix& m) {
  const int C = m.cols();
  Echelon e = row_reduce(F, m);
  std::vector<bool> is_pivot(C, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (int f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    Vec v(C);
    v[f] = F.one();
    for (int r = 0; r < e.reduced.rows(); ++r) v[e.pivots[r]] = F.neg(e.reduced(r, f));
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix(0, C);
  return row_reduce(F, Matrix::from_rows(rows)).reduced;
}

Vec normalize(const FieldCtx& F, Vec v) {
  auto it = std::find_if(v.begin(), v.end(), [](FieldElement x) { return !x.is_zero(); });
  if (it == v.end()) throw Error("the zero vector is not a projective point");
  const FieldElement s = F.inv(*it);
  for (; it != v.end(); ++it) *it = F.mul(*it, s);
  return v;
}

ProjPoint ProjPoint::from(const FieldCtx& F, Vec coords) { return ProjPoint(normalize(F, std::move(coords))); }

std::size_t num_points(int d, int q) {
  std::size_t n = 0, pw = 1;
  for (int i = 0; i <= d; ++i) {
    n += pw;
    pw *= static_cast<std::size_t>(q);
  }
  return n;
}

std::size_t point_index(int q, std::span<const FieldElement> v) {
  const int d = static_cast<int>(v.size()) - 1;
  int lead = 0;
  while (lead <= d && v[lead].is_zero()) ++lead;
  if (lead > d) throw Error("the zero vector is not a projective point");
  std::size_t offset = 0, pw = 1;
  for (int i = 0; i < d - lead; ++i) {
    offset += pw;
    pw *= static_cast<std::size_t>(q);
  }
  std::size_t tail = 0;
  for (int i = lead + 1; i <= d; ++i) tail = tail * q + v[i].index();
  return offset + tail;
}

ProjPoint point_at(const FieldCtx& F, int d, std::size_t index) {
  const std::size_t q = static_cast<std::size_t>(F.q());
  std::size_t pw = 1;
  int len = 0;  // number of tail digits
  while (index >= pw) {
    index -= pw;
    pw *= q;
    ++len;
    if (len > d) throw Error("point index out of range");
  }
  Vec v(d + 1);
  const int lead = d - len;
  v[lead] = F.one();
  for (int i = d; i > lead; --i) {
    v[i] = FieldElement(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
  return ProjPoint::normalized_unchecked(std::move(v));
}

std::size_t affine_index(int q, std::span<const FieldElement> v) {
  std::size_t idx = 0;
  for (std::size_t i = 1; i < v.size(); ++i) idx = idx * q + v[i].index();
  return idx;
}

Subspace Subspace::empty(int d) {
  Subspace s;
  s.ambient_ = d;
  s.basis_ = Matrix(0, d + 1);
  return s;
}

Subspace Subspace::from_rows(const FieldCtx& F, int d, Matrix rows) {
  if (rows.cols() != d + 1) throw Error("dimension mismatch between subspace rows and ambient space");
  Subspace s;
  s.ambient_ = d;
  s.basis_ = row_reduce(F, std::move(rows)).reduced;
  return s;
}

Subspace Subspace::of_point(const ProjPoint& p) {
  Subspace s;
  s.ambient_ = p.dim();
  s.basis_ = Matrix::from_rows({p.coords()});
  return s;
}

bool Subspace::contains(const FieldCtx& F, std::span<const FieldElement> v) const {
  if (static_cast<int>(v.size()) != ambient_ + 1) throw Error("dimension mismatch");
  Vec x(v.begin(), v.end());
  for (int r = 0; r < basis_.rows(); ++r) {
    int piv = 0;
    while (basis_(r, piv).is_zero()) ++piv;
    const FieldElement f = x[piv];
    if (f.is_zero()) continue;
    for (int c = 0; c <= ambient_; ++c) x[c] = F.sub(x[c], F.mul(f, basis_(r, c)));
  }
  return std::all_of(x.begin(), x.end(), [](FieldElement e) { return e.is_zero(); });
}

bool Subspace::contains(const FieldCtx& F, const Subspace& s) const {
  for (int r = 0; r < s.basis_.rows(); ++r)
    if (!contains(F, s.basis_.row(r))) return false;
  return true;
}

ProjPoint Subspace::as_point() const {
  if (basis_.rows() != 1) throw Error("subspace is not a point");
  auto r = basis_.row(0);
  return ProjPoint::normalized_unchecked(Vec(r.begin(), r.end()));
}

std::vector<ProjPoint> Subspace::points(const FieldCtx& F) const {
  const int k = dim();
  std::vector<ProjPoint> out;
  if (k < 0) return out;
  const std::size_t n = num_points(k, F.q());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ProjPoint lambda = point_at(F, k, i);
    // With a reduced echelon basis, the combination's leading coefficient
    // is the leading lambda, so the result is already normalized.
    out.push_back(ProjPoint::normalized_unchecked(vec_mul(F, lambda.coords(), basis_)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace span(const FieldCtx& F, std::span<const ProjPoint> pts) {
  if (pts.empty()) throw Error("span of nothing");
  const int d = pts.front().dim();
  Matrix m(static_cast<int>(pts.size()), d + 1);
  for (int r = 0; r < m.rows(); ++r) {
    if (pts[r].dim() != d) throw Error("dimension mismatch");
    for (int c = 0; c <= d; ++c) m(r, c) = pts[r][c];
  }
  return Subspace::from_rows(F, d, std::move(m));
}

Subspace join(const FieldCtx& F, const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("dimension mismatch");
  const int d = a.ambient();
  Matrix m(a.basis().rows() + b.basis().rows(), d + 1);
  for (int r = 0; r < a.basis().rows(); ++r)
    for (int c = 0; c <= d; ++c) m(r, c) = a.basis()(r, c);
  for (int r = 0; r < b.basis().rows(); ++r)
    for (int c = 0; c <= d; ++c) m(a.basis().rows() + r, c) = b.basis()(r, c);
  return Subspace::from_rows(F, d, std::move(m));
}

Subspace join(const FieldCtx& F, const Subspace& a, const ProjPoint& p) {
  return join(F, a, Subspace::of_point(p));
}

Subspace meet(const FieldCtx& F, const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("dimension mismatch");
  const int d = a.ambient();
  if (a.is_empty() || b.is_empty()) return Subspace::empty(d);
  // (A meet B) = annihilator of (ann A + ann B).
  Matrix na = null_space(F, a.basis());
  Matrix nb = null_space(F, b.basis());
  Matrix both(na.rows() + nb.rows(), d + 1);
  for (int r = 0; r < na.rows(); ++r)
    for (int c = 0; c <= d; ++c) both(r, c) = na(r, c);
  for (int r = 0; r < nb.rows(); ++r)
    for (int c = 0; c <= d; ++c) both(na.rows() + r, c) = nb(r, c);
  if (both.rows() == 0) return Subspace::from_rows(F, d, Matrix::identity(F, d + 1));
  return Subspace::from_rows(F, d, null_space(F, both));
}

std::vector<ProjPoint> all_points(const FieldCtx& F, int d) {
  if (d < 0) throw Error("negative dimension");
  const std::size_t n = num_points(d, F.q());
  std::vector<ProjPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(point_at(F, d, i));
  return out;
}

std::vector<ProjPoint> affine_points(const FieldCtx& F, int d) {
  const std::size_t q = static_cast<std::size_t>(F.q());
  std::size_t n = 1;
  for (int i = 0; i < d; ++i) n *= q;
  std::vector<ProjPoint> out;
  out.reserve(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    Vec v(d + 1);
    v[0] = F.one();
    std::size_t t = idx;
    for (int i = d; i >= 1; --i) {
      v[i] = FieldElement(static_cast<std::uint32_t>(t % q));
      t /= q;
    }
    out.push_back(ProjPoint::normalized_unchecked(std::move(v)));
  }
  return out;
}

std::vector<ProjPoint> line_points(const FieldCtx& F, const Subspace& line) {
  if (line.dim() != 1) throw Error("line_points expects a line");
  return line.points(F);
}

std::vector<Subspace> all_subspaces(const FieldCtx& F, int d, int k) {
  std::vector<Subspace> out;
  if (k < 0 || k > d) return out;
  const int n = d + 1, r = k + 1;
  std::vector<int> piv(r);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < r; ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(i, c);
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      Matrix m(r, n);
      for (int i = 0; i < r; ++i) m(i, piv[i]) = F.one();
      for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = FieldElement(digits[f]);
      Subspace s = Subspace::from_rows(F, d, std::move(m));
      out.push_back(std::move(s));
      std::size_t f = 0;
      for (; f < digits.size(); ++f) {
        if (++digits[f] < static_cast<std::uint32_t>(F.q())) break;
        digits[f] = 0;
      }
      if (f == digits.size()) break;
    }
    int i = r - 1;
    while (i >= 0 && piv[i] == n - r + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SemilinearMap::SemilinearMap(const FieldCtx& F, Matrix m, int autexp) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) throw Error("semilinear map needs a square matrix of size >= 2");
  e_ = ((autexp % F.h()) + F.h()) % F.h();
  if (rank(F, m_) != m_.rows()) throw Error("singular matrix");
  const auto& data = m_.data();
  auto it = std::find_if(data.begin(), data.end(), [](FieldElement x) { return !x.is_zero(); });
  const FieldElement s = F.inv(*it);
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) m_(i, j) = F.mul(m_(i, j), s);
}

SemilinearMap SemilinearMap::identity(const FieldCtx& F, int d) {
  return SemilinearMap(F, Matrix::identity(F, d + 1), 0);
}

Vec SemilinearMap::apply_vec(const FieldCtx& F, std::span<const FieldElement> x) const {
  if (e_ == 0) return vec_mul(F, x, m_);
  return vec_mul(F, frobenius(F, x, e_), m_);
}

ProjPoint SemilinearMap::apply(const FieldCtx& F, const ProjPoint& p) const {
  return ProjPoint::from(F, apply_vec(F, p.coords()));
}

Subspace SemilinearMap::apply(const FieldCtx& F, const Subspace& s) const {
  if (s.ambient() != dim()) throw Error("dimension mismatch");
  Matrix img(s.basis().rows(), s.ambient() + 1);
  for (int r = 0; r < img.rows(); ++r) {
    Vec v = apply_vec(F, s.basis().row(r));
    for (int c = 0; c < img.cols(); ++c) img(r, c) = v[c];
  }
  return Subspace::from_rows(F, s.ambient(), std::move(img));
}

SemilinearMap compose(const FieldCtx& F, const SemilinearMap& f, const SemilinearMap& g) {
  if (f.dim() != g.dim()) throw Error("dimension mismatch");
  // f(g(x)) = (x^{tg} Mg)^{tf} Mf = x^{tf tg} Mg^{tf} Mf
  Matrix m = multiply(F, frobenius(F, g.matrix(), f.autexp()), f.matrix());
  return SemilinearMap(F, std::move(m), f.autexp() + g.autexp());
}

SemilinearMap invert(const FieldCtx& F, const SemilinearMap& f) {
  auto mi = inverse(F, f.matrix());
  // y = x^t M  =>  x = (y M^-1)^{t^-1} = y^{t^-1} (M^-1)^{t^-1}
  return SemilinearMap(F, frobenius(F, *mi, -f.autexp()), -f.autexp());
}

std::vector<SemilinearMap> persp_generators(const FieldCtx& F, int n) {
  const int D = n + 2;
  std::vector<SemilinearMap> gens;
  std::uint32_t basis_elem = 1;
  for (int i = 0; i < F.h(); ++i, basis_elem *= static_cast<std::uint32_t>(F.p())) {
    for (int j = 1; j < D; ++j) {
      Matrix m = Matrix::identity(F, D);
      m(0, j) = FieldElement(basis_elem);
      gens.emplace_back(F, std::move(m), 0);
    }
  }
  if (F.q() > 2) {
    Matrix m = Matrix::identity(F, D);
    m(0, 0) = F.primitive();
    gens.emplace_back(F, std::move(m), 0);
  }
  return gens;
}

std::vector<SemilinearMap> pgammal_generators(const FieldCtx& F, int d) {
  const int D = d + 1;
  std::vector<SemilinearMap> gens;
  std::uint32_t basis_elem = 1;
  for (int b = 0; b < F.h(); ++b, basis_elem *= static_cast<std::uint32_t>(F.p()))
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        if (i == j) continue;
        Matrix m = Matrix::identity(F, D);
        m(i, j) = FieldElement(basis_elem);
        gens.emplace_back(F, std::move(m), 0);
      }
  if (F.q() > 2) {
    Matrix m = Matrix::identity(F, D);
    m(0, 0) = F.primitive();
    gens.emplace_back(F, std::move(m), 0);
  }
  if (F.h() > 1) gens.emplace_back(F, Matrix::identity(F, D), 1);
  return gens;
}

BigInt group_order_formula(int d, const FieldCtx& F, GroupFlavor flavor) {
  const BigInt q = F.q();
  BigInt qn = 1;
  for (int i = 0; i <= d; ++i) qn *= q;
  BigInt gl = 1, qi = 1;
  for (int i = 0; i <= d; ++i) {
    gl *= qn - qi;
    qi *= q;
  }
  BigInt pgl = gl / (q - 1);
  return flavor == GroupFlavor::PGL ? pgl : pgl * F.h();
}

std::optional<SemilinearMap> collineation_from_point_map(const FieldCtx& F, int d,
                                                         std::span<const std::size_t> image) {
  const std::size_t n = num_points(d, F.q());
  if (image.size() != n) throw Error("point map has the wrong size");
  const int D = d + 1;
  Matrix v(D, D);
  for (int i = 0; i < D; ++i) {
    Vec e(D);
    e[i] = F.one();
    ProjPoint img = point_at(F, d, image[point_index(F.q(), e)]);
    for (int c = 0; c < D; ++c) v(i, c) = img[c];
  }
  auto vinv = inverse(F, v);
  if (!vinv) return std::nullopt;
  Vec unit(D, F.one());
  ProjPoint w = point_at(F, d, image[point_index(F.q(), unit)]);
  Vec lambda = vec_mul(F, w.coords(), *vinv);
  for (FieldElement l : lambda)
    if (l.is_zero()) return std::nullopt;
  Matrix m(D, D);
  for (int i = 0; i < D; ++i)
    for (int c = 0; c < D; ++c) m(i, c) = F.mul(lambda[i], v(i, c));
  for (int e = 0; e < F.h(); ++e) {
    SemilinearMap f(F, m, e);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ProjPoint p = point_at(F, d, i);
      ok = point_index(F.q(), normalize(F, f.apply_vec(F, p.coords()))) == image[i];
    }
    if (ok) return f;
  }
  return std::nullopt;
}

std::vector<std::size_t> point_permutation(const FieldCtx& F, const SemilinearMap& f) {
  const int d = f.dim();
  const std::size_t n = num_points(d, F.q());
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    ProjPoint p = point_at(F, d, i);
    out[i] = point_index(F.q(), normalize(F, f.apply_vec(F, p.coords())));
  }
  return out;
}

}  // namespace tstar
