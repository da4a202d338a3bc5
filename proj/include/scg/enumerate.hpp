#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scg/element_table.hpp"
#include "scg/sggi.hpp"

namespace scg {

enum class DedupMode { none, relabel };
std::string to_string(DedupMode mode);
DedupMode parse_dedup_mode(const std::string& text);

struct EnumerateOptions {
  DedupMode dedup = DedupMode::relabel;
  double budget_seconds = 60.0;
  /// Extra permutations normalising the target; conjugation by them is used
  /// for symmetry breaking alongside the target itself.
  std::vector<Permutation> normalizer;
  /// Stop after the first representative (used by max_rank).
  bool stop_at_first = false;
  /// Require adjacent generators not to commute. Defaults to on for
  /// primitive targets of degree below 60, whose string C-group
  /// representations always have a connected diagram.
  std::optional<bool> connected;
  /// Skip ranks with |G| < 2^(2r-1) up front. Off by default: the bound
  /// fails for small simplex groups (S_4 at rank 3, S_5 at rank 4).
  bool conder_prune = false;
  std::size_t element_cap = ElementTable::default_cap;
  int threads = 0;  // 0: OpenMP default
};

struct EnumerationResult {
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::size_t rank = 0;
  DedupMode dedup = DedupMode::relabel;
  std::vector<Sggi> representatives;  // sorted by dedup key
  bool exhaustive = true;
  bool connected_mode = false;
  bool conder_excluded = false;  // rank ruled out by the Conder bound alone
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Canonical form. `relabel`: equal keys iff the sggis are conjugate under
/// the symmetric group on points, possibly after reversing one of them.
/// `none`: the generator images themselves.
std::vector<std::uint32_t> dedup_key(const Sggi& s, DedupMode mode);

/// Backtracking search with interval-subgroup bitsets, run over an OpenMP
/// task list.
EnumerationResult enumerate_parallel(const PermGroup& target, std::size_t rank,
                                     const EnumerateOptions& options = {});
/// Same kernel on one thread; the reference for the parallel schedule.
EnumerationResult enumerate_serial(const PermGroup& target, std::size_t rank,
                                   const EnumerateOptions& options = {});
/// Brute force over tuples of involutions, checked with the generic sggi
/// routines. Only usable for small groups; ignores `connected` and
/// symmetry breaking.
EnumerationResult enumerate_reference(const PermGroup& target, std::size_t rank,
                                      const EnumerateOptions& options = {});

/// enumerate_parallel; throws PreconditionError for rank 0.
EnumerationResult enumerate_string_cgroups(const PermGroup& target, std::size_t rank,
                                           const EnumerateOptions& options = {});

/// Throws BudgetExhausted when the result is not exhaustive.
void require_exhaustive(const EnumerationResult& result);

struct RankEvidence {
  std::size_t rank = 0;
  bool found = false;
  bool exhaustive = true;
  bool conder_excluded = false;
  double seconds = 0.0;
  std::uint64_t nodes = 0;
};

struct MaxRankResult {
  std::size_t degree = 0;
  std::uint64_t order = 0;
  /// Largest r >= 3 with a representation, else 0.
  std::size_t rank = 0;
  /// Largest r in {1, 2} with a representation when `rank` is 0, else 0.
  std::size_t small_rank = 0;
  std::optional<Sggi> witness;
  std::vector<RankEvidence> evidence;  // one entry per searched rank, descending
  bool exhaustive = true;
  bool connected_mode = false;
};

/// Starting rank of the descending search: min(floor(log2 |G|), n - 1).
std::size_t rank_search_ceiling(const PermGroup& target);

/// Descending search over ranks; the budget in `options` applies per rank.
MaxRankResult max_rank(const PermGroup& target, const EnumerateOptions& options = {});

}  // namespace scg
