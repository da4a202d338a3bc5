#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scg {

using Point = std::uint32_t;

enum class Parity { even, odd };

/// A bijection of {0, ..., n-1}.
///
/// Permutations act on the right: composing p then q maps x to q(p(x)).
/// This is the only action convention used in the library; `p * q` means
/// "apply p first".
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws InputError unless `images` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from 0-based disjoint cycles. Throws InputError on
  /// repeated or out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Product of disjoint transpositions.
  static Permutation from_transpositions(
      std::size_t degree, std::span<const std::pair<Point, Point>> pairs);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_involution() const noexcept;  // order exactly 2
  std::uint64_t order() const;
  Parity parity() const noexcept;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that
  /// point.
  std::vector<std::vector<Point>> cycles() const;
  std::vector<Point> support() const;

  /// Same permutation acting on a larger point set; new points are fixed.
  Permutation extended(std::size_t degree) const;

  bool commutes_with(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// x -> q(p(x)). Throws InputError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

Parity parity(const Permutation& p) noexcept;

/// Conjugate g^h = h^-1 g h, i.e. the relabelling of g by h.
Permutation conjugate(const Permutation& g, const Permutation& h);

/// 1-indexed disjoint cycle text, e.g. "(1,2)(3,4)"; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// Parses "(1,2)(3,4)" or "(1 2)(3 4)" (whitespace-insensitive, 1-indexed).
/// With `degree` == 0 the degree is the largest point mentioned.
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace scg
