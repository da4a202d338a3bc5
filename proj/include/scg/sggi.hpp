#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scg/perm_group.hpp"

namespace scg {

using IndexSet = std::vector<std::size_t>;  // sorted generator labels

/// A string group generated by involutions: an ordered list of involutions
/// rho_0, ..., rho_{r-1} of a common degree in which rho_i and rho_j commute
/// whenever |i - j| > 1.
class Sggi {
 public:
  /// Throws InputError if some generator is not an involution, degrees differ,
  /// or the string property fails.
  explicit Sggi(std::vector<Permutation> gens, std::size_t degree = 0);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t rank() const noexcept { return gens_.size(); }
  const std::vector<Permutation>& gens() const noexcept { return gens_; }
  const Permutation& operator[](std::size_t i) const { return gens_[i]; }

  PermGroup group() const { return PermGroup(gens_, degree_); }

  friend bool operator==(const Sggi&, const Sggi&) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
};

struct StringPropertyResult {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
  explicit operator bool() const noexcept { return holds; }
};

/// Checks pairwise commutation of generators at distance > 1. Throws
/// InputError if a generator is not an involution (a different failure from a
/// string violation) or degrees differ.
StringPropertyResult check_string_property(const std::vector<Permutation>& gens);

/// The sub-sggi on the generators indexed by `labels`, in their original
/// relative order. Throws PreconditionError on an out-of-range label.
Sggi parabolic(const Sggi& s, const IndexSet& labels);

/// The subgroup Gamma_I.
PermGroup parabolic_group(const Sggi& s, const IndexSet& labels);

/// Gamma_i: every generator except rho_i.
PermGroup maximal_parabolic(const Sggi& s, std::size_t i);

struct IntersectionResult {
  bool holds = true;
  std::optional<std::pair<IndexSet, IndexSet>> witness;  // (I, J) with Gamma_I n Gamma_J != Gamma_{I n J}
  explicit operator bool() const noexcept { return holds; }
};

/// Exhaustive check over all pairs of index subsets I, J. Exponential in the
/// rank; reports the first failing pair in (|I|+|J|, I, J) order.
IntersectionResult check_intersection_property(const Sggi& s);

/// Recursive reduction: an sggi satisfies the intersection property iff
/// Gamma_0 and Gamma_{r-1} do and Gamma_0 n Gamma_{r-1} = Gamma_{0,r-1}.
bool check_intersection_property_fast(const Sggi& s);

bool is_string_cgroup(const Sggi& s);

/// Generators in reverse order.
Sggi dual(const Sggi& s);

struct DiagramEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t label = 0;  // order of rho_i rho_j
  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

/// Coxeter diagram: vertex per generator; edge {i, i+1} labelled with the
/// order of rho_i rho_{i+1} whenever that order exceeds 2.
struct Diagram {
  std::size_t vertices = 0;
  std::vector<DiagramEdge> edges;

  bool is_connected() const noexcept { return vertices <= 1 || edges.size() + 1 == vertices; }
  /// Schlafli-type labels {p_1, ..., p_{r-1}}; 2 where no edge is drawn.
  std::vector<std::uint64_t> schlafli() const;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram diagram(const Sggi& s);

/// Order of rho_a rho_b (lcm of the product's cycle lengths).
std::uint64_t product_order(const Permutation& a, const Permutation& b);

/// |A n B|, by enumerating the smaller group and sifting through the other.
std::uint64_t intersection_order(const PermGroup& a, const PermGroup& b);

struct Restriction {
  std::vector<Permutation> restricted;  // one per label, relabelled to 0..|orbit|-1
  std::vector<Point> points;            // new point k is old point points[k]
  IndexSet active;                      // labels whose restriction is nontrivial
  Sggi sggi;                            // the active restrictions, in label order
};

/// Restricts every generator to an invariant point set. Throws
/// PreconditionError if some generator does not preserve `orbit`.
Restriction restrict_to_orbit(const Sggi& s, const std::vector<Point>& orbit);

}  // namespace scg
