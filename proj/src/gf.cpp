#include "tstar/gf.hpp"

#include <algorithm>

namespace tstar {

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Advances a digit vector as a base-p counter; false on wrap-around.
bool next_digits(std::vector<int>& d, int p) {
  for (int& x : d) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw Error("field order must be at least 2, got " + std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  int h = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++h;
  }
  if (r != 1) throw Error(std::to_string(q) + " is not a prime power");
  return {p, h};
}

bool is_irreducible(std::span<const int> poly, int p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::vector<int> low(d, 0);
    do {
      Poly g(low.begin(), low.end());
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    } while (next_digits(low, p));
  }
  return true;
}

FieldCtx FieldCtx::of_order(int q) {
  auto [p, h] = prime_power(q);
  return make(p, h);
}

FieldCtx FieldCtx::make(int p, int h) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (h < 1) throw Error("field degree must be positive");
  long long q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error("unsupported field size p^h > " + std::to_string(kMaxOrder));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->h = h;
  t->q = static_cast<int>(q);
  const int Q = t->q;

  if (h == 1) {
    t->modulus = {0, 1};
  } else {
    // Lexicographic order on the coefficient list with the constant term
    // compared first: the counter below increments the constant term
    // fastest, so walk candidates in that order and keep the least.
    std::vector<int> low(h, 0);
    Poly best;
    do {
      Poly f(low.begin(), low.end());
      f.push_back(1);
      if (is_irreducible(f, p)) {
        if (best.empty() || std::lexicographical_compare(f.begin(), f.end(), best.begin(), best.end()))
          best = f;
      }
    } while (next_digits(low, p));
    t->modulus = best;
  }

  auto to_poly = [&](int idx) {
    Poly c(h);
    for (int i = 0; i < h; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  };
  auto to_index = [&](const Poly& c) {
    int idx = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
    return idx;
  };

  t->add.assign(Q * Q, 0);
  t->mul.assign(Q * Q, 0);
  t->neg.assign(Q, 0);
  t->inv.assign(Q, 0);
  for (int a = 0; a < Q; ++a) {
    const Poly pa = to_poly(a);
    Poly na(h);
    for (int i = 0; i < h; ++i) na[i] = (p - pa[i]) % p;
    t->neg[a] = static_cast<std::uint8_t>(to_index(na));
    for (int b = 0; b < Q; ++b) {
      const Poly pb = to_poly(b);
      Poly s(h);
      for (int i = 0; i < h; ++i) s[i] = (pa[i] + pb[i]) % p;
      t->add[a * Q + b] = static_cast<std::uint8_t>(to_index(s));
      Poly prod(2 * h - 1, 0);
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      Poly r = h == 1 ? prod : poly_mod(prod, t->modulus, p);
      r.resize(h, 0);
      t->mul[a * Q + b] = static_cast<std::uint8_t>(to_index(r));
    }
  }
  for (int a = 1; a < Q; ++a)
    for (int b = 1; b < Q; ++b)
      if (t->mul[a * Q + b] == 1) {
        t->inv[a] = static_cast<std::uint8_t>(b);
        break;
      }

  // frob[e][a] = a^(p^e)
  t->frob.assign(h * Q, 0);
  for (int a = 0; a < Q; ++a) {
    int x = a;
    for (int e = 0; e < h; ++e) {
      t->frob[e * Q + a] = static_cast<std::uint8_t>(x);
      int y = 1;
      for (int k = 0; k < p; ++k) y = t->mul[y * Q + x];
      x = y;
    }
  }

  for (int g = 1; g < Q; ++g) {
    int x = g, order = 1;
    while (x != 1) {
      x = t->mul[x * Q + g];
      ++order;
    }
    if (order == Q - 1) {
      t->primitive = static_cast<std::uint32_t>(g);
      break;
    }
  }

  return FieldCtx(std::move(t));
}

FieldElement FieldCtx::element(std::uint32_t index) const {
  if (index >= static_cast<std::uint32_t>(t_->q))
    throw Error("field element index " + std::to_string(index) + " out of range for GF(" +
                std::to_string(t_->q) + ")");
  return FieldElement(index);
}

FieldElement FieldCtx::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != t_->h) throw Error("coefficient vector has wrong length");
  std::uint32_t idx = 0;
  for (int i = t_->h - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= t_->p) throw Error("coefficient out of range");
    idx = idx * t_->p + coeffs[i];
  }
  return FieldElement(idx);
}

std::vector<int> FieldCtx::coeffs(FieldElement a) const {
  std::vector<int> c(t_->h);
  std::uint32_t idx = a.index();
  for (int i = 0; i < t_->h; ++i) {
    c[i] = static_cast<int>(idx % t_->p);
    idx /= t_->p;
  }
  return c;
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.is_zero()) throw Error("inversion of zero");
  return FieldElement(t_->inv[a.index()]);
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  FieldElement b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<FieldElement> FieldCtx::subfield(int d) const {
  if (d < 1 || t_->h % d != 0) throw Error("subfield degree must divide the field degree");
  std::vector<FieldElement> out;
  for (int a = 0; a < t_->q; ++a)
    if (frobenius(FieldElement(a), d) == FieldElement(a)) out.emplace_back(a);
  return out;
}

}  // namespace tstar
