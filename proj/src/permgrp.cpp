#include "tstar/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tstar {

Perm::Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0u); }

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t x : img_) {
    if (x >= img_.size() || seen[x]) throw Error("image array is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::size_t Perm::first_moved() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return i;
  return img_.size();
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw Error("permutation domain mismatch");
  Perm r;
  r.img_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.img_[i] = b.img_[a.img_[i]];
  return r;
}

PermGroup::PermGroup(std::size_t domain_size, std::vector<Perm> generators, std::vector<std::uint32_t> initial_base)
    : n_(domain_size), initial_base_(std::move(initial_base)) {
  for (auto& g : generators) {
    if (g.size() != n_) throw Error("generator domain does not match group domain");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
}

void PermGroup::rebuild_orbit(Chain& c, Level& lv, std::size_t n) {
  lv.edge.assign(n, -2);
  lv.orbit.clear();
  lv.edge[lv.point] = -1;
  lv.orbit.push_back(lv.point);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const std::uint32_t x = lv.orbit[k];
    for (std::size_t gi : lv.gens) {
      const std::uint32_t y = c.strong[gi][x];
      if (lv.edge[y] == -2) {
        lv.edge[y] = static_cast<std::int32_t>(gi);
        lv.orbit.push_back(y);
      }
    }
  }
}

Perm PermGroup::transversal(const Chain& c, const Level& lv, std::uint32_t beta) {
  // Collect the path back to the root, then multiply forwards.
  std::vector<std::size_t> path;
  std::uint32_t x = beta;
  while (lv.edge[x] >= 0) {
    const auto gi = static_cast<std::size_t>(lv.edge[x]);
    path.push_back(gi);
    x = c.strong_inv[gi][x];
  }
  Perm u(c.strong.empty() ? 0 : c.strong.front().size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * c.strong[*it];
  return u;
}

std::pair<Perm, std::size_t> PermGroup::strip(const Chain& c, Perm g, std::size_t from) {
  for (std::size_t i = from; i < c.levels.size(); ++i) {
    const Level& lv = c.levels[i];
    std::uint32_t beta = g[lv.point];
    if (lv.edge[beta] == -2) return {std::move(g), i};
    while (lv.edge[beta] >= 0) {
      const auto gi = static_cast<std::size_t>(lv.edge[beta]);
      g = g * c.strong_inv[gi];
      beta = c.strong_inv[gi][beta];
    }
  }
  return {std::move(g), c.levels.size()};
}

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(*once_, [this] {
    auto c = std::make_shared<Chain>();
    const std::size_t n = n_;
    auto add_strong = [&](Perm p) {
      c->strong_inv.push_back(p.inverse());
      c->strong.push_back(std::move(p));
      return c->strong.size() - 1;
    };
    for (const Perm& g : gens_) add_strong(g);

    auto fixes_prefix = [&](const Perm& p, std::size_t len) {
      for (std::size_t l = 0; l < len; ++l)
        if (p[c->levels[l].point] != c->levels[l].point) return false;
      return true;
    };
    auto new_level = [&](std::uint32_t point) {
      Level lv;
      lv.point = point;
      c->levels.push_back(std::move(lv));
    };

    for (std::uint32_t b : initial_base_) {
      if (b >= n) throw Error("base point outside domain");
      bool dup = false;
      for (const auto& lv : c->levels) dup = dup || lv.point == b;
      if (!dup) new_level(b);
    }
    for (std::size_t gi = 0; gi < c->strong.size(); ++gi) {
      if (fixes_prefix(c->strong[gi], c->levels.size())) {
        // smallest point moved by this generator
        std::uint32_t m = 0;
        while (c->strong[gi][m] == m) ++m;
        new_level(m);
      }
    }
    for (std::size_t l = 0; l < c->levels.size(); ++l) {
      for (std::size_t gi = 0; gi < c->strong.size(); ++gi)
        if (fixes_prefix(c->strong[gi], l)) c->levels[l].gens.push_back(gi);
      rebuild_orbit(*c, c->levels[l], n);
    }

    std::size_t i = c->levels.size();
    while (i > 0) {
      const std::size_t li = i - 1;
      bool restarted = false;
      for (std::size_t k = 0; k < c->levels[li].orbit.size() && !restarted; ++k) {
        const std::uint32_t beta = c->levels[li].orbit[k];
        const Perm ub = transversal(*c, c->levels[li], beta);
        for (std::size_t t = 0; t < c->levels[li].gens.size() && !restarted; ++t) {
          const Perm& x = c->strong[c->levels[li].gens[t]];
          const std::uint32_t bx = x[beta];
          // Schreier generator ub * x * u_{bx}^{-1}
          Perm h = ub * x;
          {
            const Level& lv = c->levels[li];
            std::uint32_t b2 = bx;
            while (lv.edge[b2] >= 0) {
              const auto gi = static_cast<std::size_t>(lv.edge[b2]);
              h = h * c->strong_inv[gi];
              b2 = c->strong_inv[gi][b2];
            }
          }
          if (h.is_identity()) continue;
          auto [y, j] = strip(*c, std::move(h), li + 1);
          if (j == c->levels.size() && y.is_identity()) continue;
          if (j == c->levels.size()) {
            std::uint32_t m = 0;
            while (y[m] == m) ++m;
            new_level(m);
          }
          const std::size_t yi = add_strong(std::move(y));
          for (std::size_t l = li + 1; l <= j; ++l) {
            c->levels[l].gens.push_back(yi);
            rebuild_orbit(*c, c->levels[l], n);
          }
          i = j + 1;
          restarted = true;
        }
      }
      if (!restarted) --i;
    }
    chain_ = std::move(c);
  });
  return *chain_;
}

BigInt PermGroup::order() const {
  BigInt r = 1;
  for (const auto& lv : chain().levels) r *= lv.orbit.size();
  return r;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.size() != n_) throw Error("permutation domain does not match group domain");
  const Chain& c = chain();
  auto [y, j] = strip(c, g, 0);
  return j == c.levels.size() && y.is_identity();
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t x) const {
  if (x >= n_) throw Error("point outside domain");
  std::vector<bool> seen(n_, false);
  std::vector<std::uint32_t> out{x};
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const Perm& g : gens_) {
      const std::uint32_t y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
  std::vector<bool> done(n_, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (done[x]) continue;
    auto o = orbit(x);
    for (auto y : o) done[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<std::uint32_t> PermGroup::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& lv : chain().levels) b.push_back(lv.point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& lv : chain().levels) s.push_back(lv.orbit.size());
  return s;
}

std::vector<Perm> PermGroup::strong_generators() const { return chain().strong; }

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  const Chain& c = chain();
  Perm g(n_);
  for (auto it = c.levels.rbegin(); it != c.levels.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    g = g * transversal(c, *it, it->orbit[pick(rng)]);
  }
  return g;
}

std::vector<Perm> PermGroup::elements(std::size_t limit) const {
  if (order() > limit) throw Error("group too large to enumerate");
  const Chain& c = chain();
  std::vector<Perm> out{Perm(n_)};
  // every element is u_k * ... * u_1 with u_i from level i's transversal
  for (auto it = c.levels.rbegin(); it != c.levels.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(out.size() * it->orbit.size());
    for (std::uint32_t beta : it->orbit) {
      const Perm u = transversal(c, *it, beta);
      for (const Perm& e : out) next.push_back(e * u);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SplitVerdict split_extension_check(const PermGroup& G, const PermGroup& N, const PermGroup& H) {
  if (N.domain_size() != G.domain_size() || H.domain_size() != G.domain_size())
    throw Error("split extension check needs groups on one domain");
  SplitVerdict v;
  v.order_g = G.order();
  v.order_n = N.order();
  v.order_h = H.order();

  v.n_in_g = std::all_of(N.generators().begin(), N.generators().end(), [&](const Perm& g) { return G.contains(g); });
  v.h_in_g = std::all_of(H.generators().begin(), H.generators().end(), [&](const Perm& g) { return G.contains(g); });
  v.normal = v.n_in_g;
  for (const Perm& g : G.generators()) {
    const Perm gi = g.inverse();
    for (const Perm& x : N.generators())
      if (v.normal && !N.contains(gi * x * g)) v.normal = false;
  }
  std::vector<Perm> both = N.generators();
  both.insert(both.end(), H.generators().begin(), H.generators().end());
  const PermGroup NH(G.domain_size(), both);
  v.trivial_intersection = NH.order() == v.order_n * v.order_h;
  v.order_product = v.order_n * v.order_h == v.order_g;

  if (!v.n_in_g)
    v.failed_clause = "N is not a subgroup of G";
  else if (!v.h_in_g)
    v.failed_clause = "H is not a subgroup of G";
  else if (!v.normal)
    v.failed_clause = "N is not normal in G";
  else if (!v.trivial_intersection)
    v.failed_clause = "H meets N nontrivially";
  else if (!v.order_product)
    v.failed_clause = "|N||H| != |G|";
  v.split = v.failed_clause.empty();
  return v;
}

}  // namespace tstar
