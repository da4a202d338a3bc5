#include "scg/element_table.hpp"

#include <bit>

#include "scg/errors.hpp"

namespace scg {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

template <class ImageFn>
ElementTable::Key ElementTable::key_from(ImageFn&& img) const noexcept {
  Key k;
  unsigned shift = 0;
  for (Point b : base_) {
    std::uint64_t v = img(b);
    if (shift < 64) {
      k.lo |= v << shift;
      if (shift + bits_ > 64) k.hi |= v >> (64 - shift);
    } else {
      k.hi |= v << (shift - 64);
    }
    shift += bits_;
  }
  return k;
}

std::uint32_t ElementTable::find(const Key& k) const noexcept {
  std::size_t h = mix(k.lo ^ mix(k.hi)) & mask_;
  while (slot_values_[h] != npos) {
    if (slot_keys_[h] == k) return slot_values_[h];
    h = (h + 1) & mask_;
  }
  return npos;
}

void ElementTable::insert(const Key& k, std::uint32_t value) {
  std::size_t h = mix(k.lo ^ mix(k.hi)) & mask_;
  while (slot_values_[h] != npos) h = (h + 1) & mask_;
  slot_keys_[h] = k;
  slot_values_[h] = value;
}

ElementTable::ElementTable(const PermGroup& g, std::size_t cap)
    : degree_(g.degree()), count_(g.order()), base_(g.base()) {
  if (g.order() > cap)
    throw PreconditionError("group of order " + std::to_string(g.order()) +
                            " exceeds the element table cap " + std::to_string(cap));
  if (degree_ > 256) throw PreconditionError("element table supports degree at most 256");
  bits_ = static_cast<unsigned>(std::bit_width(degree_ > 1 ? degree_ - 1 : 1));
  if (base_.size() * bits_ > 128) throw PreconditionError("base too long for the element key");

  std::size_t slots = std::bit_ceil(count_ * 2 + 1);
  mask_ = slots - 1;
  slot_keys_.assign(slots, Key{});
  slot_values_.assign(slots, npos);
  data_.resize(count_ * degree_);

  std::uint32_t next = 0;
  g.for_each_element([&](const Permutation& p) {
    for (std::size_t x = 0; x < degree_; ++x) data_[next * degree_ + x] = static_cast<std::uint8_t>(p(static_cast<Point>(x)));
    insert(key_from([&](Point b) { return p(b); }), next);
    if (p.is_identity()) identity_ = next;
    if (p.is_involution()) involutions_.push_back(next);
    ++next;
  });
}

Permutation ElementTable::element(std::uint32_t e) const {
  std::vector<Point> images(degree_);
  for (std::size_t x = 0; x < degree_; ++x) images[x] = data_[e * degree_ + x];
  return Permutation(std::move(images));
}

std::uint32_t ElementTable::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return npos;
  auto idx = find(key_from([&](Point b) { return p(b); }));
  if (idx == npos) return npos;
  for (std::size_t x = 0; x < degree_; ++x)
    if (data_[idx * degree_ + x] != p(static_cast<Point>(x))) return npos;
  return idx;
}

std::uint32_t ElementTable::multiply(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint8_t* pa = &data_[a * degree_];
  const std::uint8_t* pb = &data_[b * degree_];
  return find(key_from([&](Point x) { return pb[pa[x]]; }));
}

}  // namespace scg
