#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tstar {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for violated preconditions anywhere in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of GF(p^h), stored as its index sum_i c_i p^i over the
/// polynomial basis. Index 0 is zero and index 1 is one.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t index_ = 0;
};

/// Immutable description of GF(p^h) together with precomputed operation
/// tables. Copies share the tables.
class FieldCtx {
 public:
  static constexpr int kMaxOrder = 256;

  /// Deterministic construction: the modulus is the lexicographically
  /// least (constant term first) monic irreducible of degree h.
  static FieldCtx make(int p, int h);
  /// Same as make() after splitting q into p^h.
  static FieldCtx of_order(int q);

  int p() const { return t_->p; }
  int h() const { return t_->h; }
  int q() const { return t_->q; }
  /// Coefficients, constant term first, of length h+1.
  const std::vector<int>& modulus() const { return t_->modulus; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    return FieldElement(t_->add[a.index() * t_->q + b.index()]);
  }
  FieldElement neg(FieldElement a) const { return FieldElement(t_->neg[a.index()]); }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement(t_->mul[a.index() * t_->q + b.index()]);
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// a^(p^e) for 0 <= e < h; e is reduced mod h.
  FieldElement frobenius(FieldElement a, int e) const {
    e = ((e % t_->h) + t_->h) % t_->h;
    return FieldElement(t_->frob[e * t_->q + a.index()]);
  }

  /// Smallest-index generator of the multiplicative group.
  FieldElement primitive() const { return FieldElement(t_->primitive); }

  /// Elements of the subfield of order p^d (d must divide h), by index.
  std::vector<FieldElement> subfield(int d) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.t_->p == b.t_->p && a.t_->h == b.t_->h;
  }

 private:
  struct Tables {
    int p = 0, h = 0, q = 0;
    std::vector<int> modulus;
    std::vector<std::uint8_t> add, mul, neg, inv, frob;
    std::uint32_t primitive = 1;
  };
  explicit FieldCtx(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

bool is_prime(int n);

/// Splits q = p^h; throws when q is not a prime power.
std::pair<int, int> prime_power(int q);

/// True when the monic polynomial (constant term first) has no monic factor
/// of degree 1..deg/2 over GF(p).
bool is_irreducible(std::span<const int> poly, int p);

}  // namespace tstar
