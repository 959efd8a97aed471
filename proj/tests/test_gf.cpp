#include <doctest.h>

#include "properties.hpp"

using namespace tstar;

namespace {

using Poly = std::vector<int>;  // constant term first

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(a);
  const int inv_lead = [&] {
    for (int x = 1; x < p; ++x)
      if (x * m.back() % p == 1) return x;
    return 1;
  }();
  while (a.size() >= m.size()) {
    const int f = a.back() * inv_lead % p;
    const std::size_t s = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[s + i] = ((a[s + i] - f * m[i]) % p + p) % p;
    a = trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

// All monic polynomials of degree d, constant term first.
std::vector<Poly> monic(int d, int p) {
  std::vector<Poly> out;
  int total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (int k = 0; k < total; ++k) {
    Poly a(static_cast<std::size_t>(d) + 1, 0);
    int x = k;
    for (int i = 0; i < d; ++i, x /= p) a[static_cast<std::size_t>(i)] = x % p;
    a[static_cast<std::size_t>(d)] = 1;
    out.push_back(a);
  }
  return out;
}

bool irreducible_brute(const Poly& f, int p) {
  const int h = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= h / 2; ++d)
    for (const Poly& g : monic(d, p))
      if (poly_mod(f, g, p).empty()) return false;
  return true;
}

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256};

}  // namespace

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    CAPTURE(q);
    CHECK(props::field_axioms(q) == "");
  }
}

TEST_CASE("modulus is the least monic irreducible, constant term first") {
  for (int q : kOrders) {
    const auto [p, h] = prime_power(q);
    const FieldCtx F = FieldCtx::of_order(q);
    CAPTURE(q);
    std::optional<Poly> least;
    for (const Poly& f : monic(h, p))
      if (irreducible_brute(f, p) && (!least || f < *least)) least = f;
    REQUIRE(least);
    CHECK(F.modulus() == *least);
  }
}

TEST_CASE("multiplication agrees with polynomial arithmetic on coefficient vectors") {
  for (int q : {4, 8, 9, 16, 27, 32}) {
    const FieldCtx F = FieldCtx::of_order(q);
    const Poly m = F.modulus();
    CAPTURE(q);
    for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(q); ++a)
      for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(q); ++b) {
        Poly expect = poly_mod(poly_mul(F.coeffs(FieldElement(a)), F.coeffs(FieldElement(b)), F.p()), m, F.p());
        expect.resize(static_cast<std::size_t>(F.h()), 0);
        Poly got = F.coeffs(F.mul(FieldElement(a), FieldElement(b)));
        got.resize(static_cast<std::size_t>(F.h()), 0);
        REQUIRE(got == expect);
      }
  }
}

TEST_CASE("element index is sum c_i p^i") {
  const FieldCtx F = FieldCtx::of_order(27);
  for (std::uint32_t i = 0; i < 27; ++i) {
    const auto c = F.coeffs(FieldElement(i));
    std::uint32_t x = 0, pw = 1;
    for (int ci : c) {
      x += static_cast<std::uint32_t>(ci) * pw;
      pw *= 3;
    }
    CHECK(x == i);
    CHECK(F.from_coeffs(c) == FieldElement(i));
  }
}

TEST_CASE("subfields and frobenius") {
  const FieldCtx F = FieldCtx::of_order(16);
  CHECK(F.subfield(1).size() == 2);
  CHECK(F.subfield(2).size() == 4);
  for (FieldElement x : F.subfield(2)) CHECK(F.frobenius(x, 2) == x);
  CHECK_THROWS_AS(F.subfield(3), Error);
}

TEST_CASE("invalid orders are rejected") {
  for (int q : {0, 1, 6, 10, 12, 257, 512}) CHECK_THROWS_AS(FieldCtx::of_order(q), Error);
  CHECK_THROWS_AS(FieldCtx::of_order(2).inv(FieldElement(0)), Error);
}
