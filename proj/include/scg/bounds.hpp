#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace scg {

/// 2^(2d-1): the Conder lower bound on the order of a rank-d string C-group.
/// Throws PreconditionError for d = 0 and std::overflow_error past 64 bits.
std::uint64_t conder_floor(std::size_t d);

/// n * prod_{i=0}^{floor(log2 n)-1} (n - 2^i), the bound of case (c) of
/// Maroti's theorem on primitive groups. Throws PreconditionError for n < 2.
std::uint64_t maroti_case_c(std::size_t n);

/// Rank of the alternating group A_n: 0 for n = 3, 4, 6, 7, 8; 3 for n = 5;
/// 4, 5, 6 for n = 9, 10, 11; floor((n-1)/2) from 12 on. Throws
/// PreconditionError for n < 3.
std::size_t an_rank_formula(std::size_t n);

/// n/2 + 1 (floored): largest rank for a transitive subgroup of S_n other
/// than A_n and S_n.
std::size_t transitive_ceiling(std::size_t n);

/// d <= (n-3)/2, the ceiling for primitive proper subgroups of A_n, n >= 12.
bool primitive_rank_ok(std::size_t n, std::size_t d);

/// 2^(2 floor(n/2) - 3), the order threshold in the caption of the table of
/// primitive groups; 1 for n < 4.
std::uint64_t table1_threshold(std::size_t n);

struct BoundReport {
  std::size_t degree = 0;
  std::optional<std::uint64_t> order;
  std::optional<std::size_t> rank;
  std::optional<std::uint64_t> conder;  // conder_floor(rank)
  std::optional<std::uint64_t> maroti;  // maroti_case_c(degree), when representable
  std::optional<std::size_t> an_rank;   // an_rank_formula(degree), degree >= 3
  std::size_t transitive = 0;
  std::uint64_t caption_threshold = 0;
  // Verdicts, present when the inputs they need are given.
  std::optional<bool> conder_holds;          // order >= conder
  std::optional<bool> maroti_holds;          // order <= maroti
  std::optional<bool> caption_holds;         // order >= caption_threshold
  std::optional<bool> primitive_rank_holds;  // rank <= (n-3)/2
};

BoundReport bound_report(std::size_t degree, std::optional<std::uint64_t> order = std::nullopt,
                         std::optional<std::size_t> rank = std::nullopt);

/// Deterministic JSON object with sorted keys.
std::string to_json(const BoundReport& report);

}  // namespace scg
