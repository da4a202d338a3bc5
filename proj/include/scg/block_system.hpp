#pragma once

#include <vector>

#include "scg/perm_group.hpp"

namespace scg {

/// A nontrivial system of imprimitivity: a partition of the points into
/// `part_count()` blocks of equal size, permuted by the group.
struct BlockSystem {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> blocks;  // each sorted; ordered by first point

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  std::size_t part_count() const { return blocks.size(); }

  /// Index of the block containing each point.
  std::vector<std::size_t> block_of() const;

  /// True if every generator maps each block onto a block.
  bool is_invariant_under(const std::vector<Permutation>& gens) const;

  /// Action of `g` on the blocks, as a permutation of degree part_count().
  Permutation block_action(const Permutation& g) const;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Smallest block containing every point of `seed` (seed.size() >= 2), as a
/// full block system. Trivial (a single block) when no proper block exists.
BlockSystem minimal_block_system(const PermGroup& g, const std::vector<Point>& seed);

/// Every nontrivial block system whose induced block action is primitive
/// (i.e. the blocks are maximal). Empty iff the group is primitive.
/// Throws PreconditionError on intransitive input.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);

/// All nontrivial block systems, ordered by block size then lexicographically.
std::vector<BlockSystem> all_block_systems(const PermGroup& g);

bool is_primitive(const PermGroup& g);

}  // namespace scg
