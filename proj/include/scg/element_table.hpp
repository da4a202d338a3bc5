#pragma once

#include <cstdint>
#include <vector>

#include "scg/perm_group.hpp"

namespace scg {

/// Every element of a permutation group stored as a packed image array, with
/// an index keyed on base images. Products cost one base-length walk and a
/// hash probe. Immutable after construction; safe to share between threads.
class ElementTable {
 public:
  static constexpr std::size_t default_cap = 2'000'000;

  /// Throws PreconditionError when the group has more than `cap` elements or
  /// its base images do not fit the 128-bit key.
  explicit ElementTable(const PermGroup& g, std::size_t cap = default_cap);

  std::size_t size() const noexcept { return count_; }
  std::size_t degree() const noexcept { return degree_; }
  std::uint32_t identity() const noexcept { return identity_; }

  /// Image of point x under element e.
  Point image(std::uint32_t e, Point x) const noexcept { return data_[e * degree_ + x]; }
  Permutation element(std::uint32_t e) const;

  /// Index of `p`, or npos when p is not in the group.
  static constexpr std::uint32_t npos = 0xffffffffu;
  std::uint32_t index_of(const Permutation& p) const;

  /// Index of a * b (a first).
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const noexcept;

  /// Indices of the elements of order two, ascending.
  const std::vector<std::uint32_t>& involutions() const noexcept { return involutions_; }

 private:
  struct Key {
    std::uint64_t lo = 0, hi = 0;
    bool operator==(const Key&) const = default;
  };
  template <class ImageFn>
  Key key_from(ImageFn&& img) const noexcept;
  std::uint32_t find(const Key& k) const noexcept;
  void insert(const Key& k, std::uint32_t value);

  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::uint32_t identity_ = 0;
  std::vector<Point> base_;
  unsigned bits_ = 0;
  std::vector<std::uint8_t> data_;  // count_ * degree_ images
  std::vector<Key> slot_keys_;
  std::vector<std::uint32_t> slot_values_;
  std::size_t mask_ = 0;
  std::vector<std::uint32_t> involutions_;
};

}  // namespace scg
