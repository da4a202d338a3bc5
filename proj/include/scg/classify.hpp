#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scg/block_system.hpp"
#include "scg/sggi.hpp"

namespace scg {

/// Split of the generators of Gamma_i (or of the whole group) relative to a
/// block system: L is built greedily so that its block images generate the
/// block action, C commutes elementwise with L, R is the rest.
struct GeneratorPartition {
  IndexSet L;
  IndexSet C;
  IndexSet R;
  std::size_t block_size = 0;   // k
  std::size_t block_count = 0;  // m
  std::uint64_t block_action_order = 0;
  bool L_within_bound = true;  // |L| <= m - 1
  bool C_within_bound = true;  // |C| <= k - 1
};

/// `dropped` names the generator left out (Gamma_i); std::nullopt uses every
/// generator. Throws PreconditionError when the selected generators are not
/// transitive, the blocks are trivial, or the blocks are not invariant.
GeneratorPartition partition_generators(const Sggi& s, std::optional<std::size_t> dropped,
                                        const BlockSystem& blocks);

struct GenAnResult {
  std::vector<Permutation> generators;  // input generators plus the two appended ones
  std::uint64_t order = 0;
  bool has_odd = false;        // some generator is odd
  bool symmetric = false;      // order is (n+4)!
  bool alternating = false;    // order is (n+4)!/2
  bool matches_prediction = false;
};

/// Appends (i, n+1)(n+2, n+3) and (n+1, n+2)(n+3, n+4) (1-indexed; `point`
/// is 0-based) to a transitive sggi of degree n >= 5. Throws
/// PreconditionError for n < 5, an intransitive input, or a point out of
/// range.
GenAnResult extend_genAn(const Sggi& phi, Point point);

enum class SesquiCase { isomorphic, times_tau };

struct SesquiResult {
  Sggi result;
  SesquiCase which = SesquiCase::isomorphic;
  std::uint64_t order_phi = 0;
  std::uint64_t order_star = 0;
  bool tau_in_star = false;
};

/// Multiplies generator k by tau. Degrees are padded to the larger one.
/// Throws PreconditionError when tau is not an involution, does not commute
/// with every generator, lies in the group, or k is out of range.
SesquiResult sesqui_extension(const Sggi& phi, std::size_t k, const Permutation& tau);

}  // namespace scg
