#include "scg/block_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "scg/errors.hpp"

namespace scg {

std::vector<std::size_t> BlockSystem::block_of() const {
  std::vector<std::size_t> out(degree);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Point x : blocks[b]) out[x] = b;
  return out;
}

bool BlockSystem::is_invariant_under(const std::vector<Permutation>& gens) const {
  auto owner = block_of();
  for (const auto& g : gens) {
    for (const auto& block : blocks) {
      std::size_t target = owner[g(block.front())];
      for (Point x : block)
        if (owner[g(x)] != target) return false;
    }
  }
  return true;
}

Permutation BlockSystem::block_action(const Permutation& g) const {
  auto owner = block_of();
  std::vector<Point> images(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    images[b] = static_cast<Point>(owner[g(blocks[b].front())]);
  return Permutation(std::move(images));
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

BlockSystem from_classes(std::size_t degree, std::vector<std::size_t>& parent) {
  std::vector<std::vector<Point>> blocks;
  std::vector<std::size_t> slot(degree, degree);
  for (Point x = 0; x < degree; ++x) {
    auto r = find_root(parent, x);
    if (slot[r] == degree) {
      slot[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(x);
  }
  return BlockSystem{degree, std::move(blocks)};
}

}  // namespace

BlockSystem minimal_block_system(const PermGroup& g, const std::vector<Point>& seed) {
  // Atkinson's algorithm: merge classes and propagate the merge through the
  // generators until the partition is invariant.
  const std::size_t n = g.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<std::pair<Point, Point>> pending;
  for (std::size_t i = 1; i < seed.size(); ++i) pending.emplace_back(seed[0], seed[i]);
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    auto ra = find_root(parent, a);
    auto rb = find_root(parent, b);
    if (ra == rb) continue;
    parent[std::max(ra, rb)] = std::min(ra, rb);
    for (const auto& s : g.generators()) pending.emplace_back(s(a), s(b));
  }
  return from_classes(n, parent);
}

std::vector<BlockSystem> all_block_systems(const PermGroup& g) {
  if (!g.is_transitive()) throw PreconditionError("block systems require a transitive group");
  const std::size_t n = g.degree();
  // Blocks containing point 0 form a lattice; walk it from the minimal blocks
  // of pairs {0, b} upwards by joining one extra point at a time.
  std::set<std::vector<Point>> seen;
  std::vector<BlockSystem> found;
  std::vector<std::vector<Point>> frontier;
  for (Point b = 1; b < n; ++b) frontier.push_back({0, b});
  while (!frontier.empty()) {
    auto seed = std::move(frontier.back());
    frontier.pop_back();
    BlockSystem sys = minimal_block_system(g, seed);
    const auto& home = sys.blocks.front();
    if (home.size() == n) continue;
    if (!seen.insert(home).second) continue;
    found.push_back(sys);
    std::vector<bool> in_home(n, false);
    for (Point x : home) in_home[x] = true;
    for (Point b = 1; b < n; ++b) {
      if (in_home[b]) continue;
      auto next = home;
      next.push_back(b);
      frontier.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size() != b.block_size()) return a.block_size() < b.block_size();
    return a.blocks < b.blocks;
  });
  return found;
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  auto all = all_block_systems(g);
  std::vector<BlockSystem> maximal;
  for (const auto& sys : all) {
    const auto& home = sys.blocks.front();
    bool covered = std::any_of(all.begin(), all.end(), [&](const BlockSystem& other) {
      const auto& h = other.blocks.front();
      return h.size() > home.size() && std::includes(h.begin(), h.end(), home.begin(), home.end());
    });
    if (!covered) maximal.push_back(sys);
  }
  return maximal;
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) return false;
  if (g.degree() <= 2) return true;
  for (Point b = 1; b < g.degree(); ++b)
    if (minimal_block_system(g, {0, b}).part_count() > 1) return false;
  return true;
}

}  // namespace scg
