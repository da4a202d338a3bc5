#include "scg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "scg/errors.hpp"

namespace scg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw InputError("images do not form a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InputError("cycle point " + std::to_string(x + 1) + " exceeds degree " +
                         std::to_string(degree));
      if (used[x])
        throw InputError("point " + std::to_string(x + 1) + " repeated in cycles");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::from_transpositions(
    std::size_t degree, std::span<const std::pair<Point, Point>> pairs) {
  std::vector<std::vector<Point>> cycles;
  cycles.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a == b) throw InputError("transposition with equal endpoints");
    cycles.push_back({a, b});
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (Point x = 0; x < images_.size(); ++x) inv.images_[images_[x]] = x;
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Permutation::is_involution() const noexcept {
  bool moved = false;
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] == x) continue;
    if (images_[images_[x]] != x) return false;
    moved = true;
  }
  return moved;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, std::uint64_t{c.size()});
  return result;
}

Parity Permutation::parity() const noexcept {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> out;
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) out.push_back(x);
  return out;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw InputError("cannot shrink a permutation");
  Permutation p(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

bool Permutation::commutes_with(const Permutation& other) const {
  if (other.degree() != degree()) throw InputError("degree mismatch");
  for (Point x = 0; x < images_.size(); ++x)
    if (other.images_[images_[x]] != images_[other.images_[x]]) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InputError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < images.size(); ++x) images[x] = q(p(x));
  return Permutation(std::move(images));
}

Parity parity(const Permutation& p) noexcept { return p.parity(); }

Permutation conjugate(const Permutation& g, const Permutation& h) {
  // h^-1 g h sends h(x) to h(g(x)).
  if (g.degree() != h.degree()) throw InputError("degree mismatch");
  std::vector<Point> images(g.degree());
  for (Point x = 0; x < images.size(); ++x) images[h(x)] = h(g(x));
  return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
  auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("expected '(' at offset " + std::to_string(i) + " in \"" +
                       std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw InputError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        if (cycle.empty()) throw InputError("leading ',' in cycle");
        ++i;
        skip_ws();
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("expected a point number at offset " + std::to_string(i) + " in \"" +
                         std::string(text) + "\"");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 1'000'000) throw InputError("point number too large");
        ++i;
      }
      if (value == 0) throw InputError("points are 1-indexed; got 0");
      max_point = std::max(max_point, value);
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (degree == 0) degree = max_point;
  if (max_point > degree)
    throw InputError("point " + std::to_string(max_point) + " exceeds degree " +
                     std::to_string(degree));
  return Permutation::from_cycles(degree, cycles);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace scg
