#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "scg/permutation.hpp"
#include "scg/sggi.hpp"

namespace scg::test {

// 0-based cycles
inline Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

inline Sggi s4_coxeter() {
  return Sggi({cyc(4, {{0, 1}}), cyc(4, {{1, 2}}), cyc(4, {{2, 3}})});
}

inline Sggi sn_coxeter(std::size_t n) {
  std::vector<Permutation> g;
  for (Point i = 0; i + 1 < n; ++i) g.push_back(cyc(n, {{i, i + 1}}));
  return Sggi(g, n);
}

// rungs (i, i+4) labelled 0, rails labelled 1..3
inline Sggi prism() {
  return Sggi({cyc(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}), cyc(8, {{0, 1}, {4, 5}}),
               cyc(8, {{1, 2}, {5, 6}}), cyc(8, {{2, 3}, {6, 7}})});
}

inline Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

inline Permutation random_involution(std::size_t n, std::mt19937_64& rng) {
  auto p = random_perm(n, rng);
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::uniform_int_distribution<std::size_t> k(1, n / 2);
  std::size_t pairs = k(rng);
  for (std::size_t j = 0; j < pairs; ++j) std::swap(img[p(2 * j)], img[p(2 * j + 1)]);
  return Permutation(img);
}

}  // namespace scg::test
