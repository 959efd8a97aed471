#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tstar/gf.hpp"

namespace tstar {

/// Permutation of {0,...,n-1}. Products read left to right:
/// (a * b)[x] == b[a[x]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n);
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t size() const { return img_.size(); }
  std::uint32_t operator[](std::size_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }
  bool is_identity() const;
  Perm inverse() const;
  /// Smallest moved point, or size() when this is the identity.
  std::size_t first_moved() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> img_;
};

/// Permutation group given by generators, with a stabilizer chain built by
/// deterministic Schreier-Sims the first time it is needed.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t domain_size, std::vector<Perm> generators, std::vector<std::uint32_t> initial_base = {});

  std::size_t domain_size() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }

  BigInt order() const;
  bool contains(const Perm& g) const;
  std::vector<std::uint32_t> orbit(std::uint32_t x) const;
  std::vector<std::vector<std::uint32_t>> orbits() const;

  std::vector<std::uint32_t> base() const;
  std::vector<std::size_t> basic_orbit_sizes() const;
  std::vector<Perm> strong_generators() const;

  /// Uniformly random element, via random transversal representatives.
  Perm random_element(std::mt19937_64& rng) const;
  /// All elements; refuses groups larger than the limit.
  std::vector<Perm> elements(std::size_t limit = 1'000'000) const;

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<std::size_t> gens;     // indices into Chain::strong
    std::vector<std::int32_t> edge;    // Schreier vector: strong index, -1 = root, -2 = not in orbit
    std::vector<std::uint32_t> orbit;  // BFS order, orbit[0] == point
  };
  struct Chain {
    std::vector<Perm> strong;
    std::vector<Perm> strong_inv;
    std::vector<Level> levels;
  };

  const Chain& chain() const;
  static void rebuild_orbit(Chain& c, Level& lv, std::size_t n);
  /// u^{-1}-stripping of g from level `from`; returns residue and the level
  /// where it stopped (levels.size() when it went through).
  static std::pair<Perm, std::size_t> strip(const Chain& c, Perm g, std::size_t from);
  static Perm transversal(const Chain& c, const Level& lv, std::uint32_t beta);

  std::size_t n_ = 0;
  std::vector<Perm> gens_;
  std::vector<std::uint32_t> initial_base_;
  mutable std::shared_ptr<std::once_flag> once_ = std::make_shared<std::once_flag>();
  mutable std::shared_ptr<Chain> chain_;
};

struct SplitVerdict {
  bool split = false;
  bool n_in_g = false;
  bool h_in_g = false;
  bool normal = false;
  bool trivial_intersection = false;
  bool order_product = false;
  std::string failed_clause;  // empty when split
  BigInt order_g, order_n, order_h;
};

/// Checks G = N x| H: N normal in G, N and H meet trivially, |N||H| = |G|.
SplitVerdict split_extension_check(const PermGroup& G, const PermGroup& N, const PermGroup& H);

}  // namespace tstar
