#include <doctest.h>

#include <map>
#include <numeric>

#include "scg/block_system.hpp"
#include "scg/errors.hpp"
#include "scg/perm_group.hpp"
#include "support.hpp"

using namespace scg;
using scg::test::cyc;

TEST_CASE("compose applies the left factor first") {
  auto id = Permutation(3);
  auto a = cyc(3, {{0, 1}});
  auto b = cyc(3, {{1, 2}});
  CHECK(compose(id, a) == a);
  CHECK(compose(a, a).is_identity());
  // x -> b(a(x)): 0 -> 1 -> 2, 2 -> 2 -> 1, 1 -> 0 -> 0
  CHECK(compose(a, b) == cyc(3, {{0, 2, 1}}));
  CHECK(a * b == compose(a, b));
  CHECK_THROWS_AS(compose(a, Permutation(4)), InputError);
}

TEST_CASE("parity") {
  CHECK(Permutation(5).parity() == Parity::even);
  CHECK(cyc(4, {{0, 1}}).parity() == Parity::odd);
  CHECK(cyc(4, {{0, 1}, {2, 3}}).parity() == Parity::even);
  CHECK(cyc(5, {{0, 1, 2, 3, 4}}).parity() == Parity::even);
}

TEST_CASE("cycle text round trip, both separators") {
  auto p = parse_cycles("(1,2)(3,4,5)");
  CHECK(p == parse_cycles("(1 2)(3 4 5)"));
  CHECK(p == cyc(5, {{0, 1}, {2, 3, 4}}));
  CHECK(to_cycle_string(p) == "(1,2)(3,4,5)");
  CHECK(to_cycle_string(Permutation(3)) == "()");
  CHECK(parse_cycles("(1,2)", 6).degree() == 6);
  CHECK_THROWS_AS(parse_cycles("(1,2"), InputError);
  CHECK_THROWS_AS(parse_cycles("(1,1)"), InputError);
  CHECK_THROWS_AS(parse_cycles("1,2)"), InputError);
  CHECK_THROWS_AS(parse_cycles("(1,9)", 4), InputError);
}

TEST_CASE("bad image arrays are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InputError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), InputError);
}

TEST_CASE("conjugation relabels cycles") {
  auto g = cyc(4, {{0, 1}});
  auto h = cyc(4, {{1, 2, 3}});
  // g^h = h^-1 g h sends h(0) -> h(1)
  CHECK(conjugate(g, h) == cyc(4, {{0, 2}}));
}

TEST_CASE("group orders") {
  CHECK(PermGroup({cyc(3, {{0, 1, 2}})}).order() == 3);
  CHECK(PermGroup({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}).order() == 120);
  CHECK(PermGroup({cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})}).order() == 60);
  CHECK(PermGroup::trivial(4).order() == 1);
}

TEST_CASE("Schreier-Sims agrees with brute-force closure on random groups") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + trial % 6;
    std::vector<Permutation> gens;
    std::size_t k = 1 + trial % 3;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(test::random_perm(n, rng));
    PermGroup g(gens, n);
    auto closure = brute_force_closure(n, gens);
    REQUIRE(closure);
    CHECK(g.order() == closure->size());
    for (const auto& e : *closure) CHECK(g.contains(e));
    auto els = g.elements();
    CHECK(els.size() == closure->size());
  }
}

TEST_CASE("membership rejects elements outside the group") {
  PermGroup a5({cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})});
  CHECK(a5.contains(cyc(5, {{0, 1}, {2, 3}})));
  CHECK_FALSE(a5.contains(cyc(5, {{0, 1}})));
  CHECK(a5.is_even());
  PermGroup s5({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(a5.is_subgroup_of(s5));
  CHECK_FALSE(s5.is_subgroup_of(a5));
}

namespace {

// union-find over generator edges
std::vector<std::vector<Point>> uf_orbits(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::size_t x = 0; x < n; ++x) parent[find(x)] = find(g(static_cast<Point>(x)));
  std::map<std::size_t, std::vector<Point>> groups;
  for (std::size_t x = 0; x < n; ++x) groups[find(x)].push_back(static_cast<Point>(x));
  std::vector<std::vector<Point>> out;
  for (auto& [_, v] : groups) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("orbits") {
  CHECK(orbits_of(3, {}) == std::vector<Orbit>{{0}, {1}, {2}});
  CHECK(orbits_of(4, {cyc(4, {{0, 1}, {2, 3}})}) == std::vector<Orbit>{{0, 1}, {2, 3}});
  CHECK(orbits_of(5, {cyc(5, {{0, 1}}), cyc(5, {{2, 3}}), cyc(5, {{1, 2}})}) ==
        std::vector<Orbit>{{0, 1, 2, 3}, {4}});
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + t % 9;
    std::vector<Permutation> gens{test::random_involution(n, rng), test::random_involution(n, rng)};
    CHECK(orbits_of(n, gens) == uf_orbits(n, gens));
  }
}

TEST_CASE("block systems") {
  PermGroup s4({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  CHECK(minimal_block_systems(s4).empty());
  CHECK(is_primitive(s4));
  PermGroup d8({cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})});
  auto sys = all_block_systems(d8);
  bool found = false;
  for (const auto& b : sys)
    if (b.blocks == std::vector<std::vector<Point>>{{0, 2}, {1, 3}}) found = true;
  CHECK(found);
  CHECK_FALSE(is_primitive(d8));
  PermGroup c5({cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(minimal_block_systems(c5).empty());
  CHECK_THROWS_AS(minimal_block_systems(PermGroup({cyc(4, {{0, 1}})})), PreconditionError);
}

namespace {

// every invariant partition with equal parts, by brute force over set partitions
std::size_t brute_block_count(const PermGroup& g) {
  std::size_t n = g.degree(), count = 0;
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t x, std::size_t used) {
    if (x == n) {
      if (used == 1 || used == n) return;
      std::vector<std::size_t> sizes(used, 0);
      for (auto l : label) ++sizes[l];
      for (auto s : sizes)
        if (s != sizes[0]) return;
      for (const auto& gen : g.generators()) {
        std::vector<std::size_t> image(used, n);
        for (std::size_t p = 0; p < n; ++p) {
          auto& img = image[label[p]];
          auto l = label[gen(static_cast<Point>(p))];
          if (img == n) img = l;
          else if (img != l) return;
        }
      }
      ++count;
      return;
    }
    for (std::size_t l = 0; l <= used && l < n; ++l) {
      label[x] = l;
      rec(x + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("all block systems match a brute-force partition scan") {
  std::vector<PermGroup> groups{
      PermGroup({cyc(6, {{0, 1, 2, 3, 4, 5}})}),
      PermGroup({cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})}),
      PermGroup({cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), cyc(8, {{1, 7}, {2, 6}, {3, 5}})}),
      scg::test::prism().group(),
  };
  for (const auto& g : groups) CHECK(all_block_systems(g).size() == brute_block_count(g));
}
