#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "scg/permutation.hpp"

namespace scg {

using Orbit = std::vector<Point>;

/// Orbits of the group generated by `gens` on {0, ..., degree-1}, each
/// sorted, listed by smallest point.
std::vector<Orbit> orbits_of(std::size_t degree, const std::vector<Permutation>& gens);

/// A permutation group given by generators, with a base and strong generating
/// set computed by the deterministic Schreier-Sims algorithm.
///
/// Immutable after construction; safe to share between threads.
class PermGroup {
 public:
  /// Throws InputError when degrees differ, or when `gens` is empty and
  /// `degree` is 0; std::overflow_error when the order exceeds 64 bits.
  explicit PermGroup(std::vector<Permutation> gens, std::size_t degree = 0);

  static PermGroup trivial(std::size_t degree) { return PermGroup({}, degree); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }

  std::uint64_t order() const noexcept { return order_; }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool operator==(const PermGroup& other) const;

  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  bool is_transitive() const noexcept { return orbits_.size() == 1 && degree_ > 0; }

  /// True if every generator is an even permutation.
  bool is_even() const noexcept;

  const std::vector<Point>& base() const noexcept { return base_; }

  /// Calls `visit` once for every group element. Order is deterministic.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;
  std::vector<Permutation> elements() const;

 private:
  struct Level {
    Point base_point;
    std::vector<Permutation> strong_gens;
    // transversal[b] maps base_point to b; empty optional when b is outside the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<Point> orbit;
  };

  void schreier_sims();
  void rebuild_orbit(Level& level) const;
  // Returns the residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  std::vector<Point> base_;
  std::uint64_t order_ = 1;
  std::vector<Orbit> orbits_;
};

/// Brute-force closure of a generating set, capped at `limit` elements.
/// Used as an independent oracle in tests; returns std::nullopt when the cap
/// is exceeded.
std::optional<std::vector<Permutation>> brute_force_closure(std::size_t degree,
                                                            const std::vector<Permutation>& gens,
                                                            std::size_t limit = 1'000'000);

}  // namespace scg
