#include "scg/classify.hpp"

#include <algorithm>

#include "scg/errors.hpp"

namespace scg {

GeneratorPartition partition_generators(const Sggi& s, std::optional<std::size_t> dropped,
                                        const BlockSystem& blocks) {
  if (dropped && *dropped >= s.rank()) throw PreconditionError("dropped label out of range");
  IndexSet selected;
  for (std::size_t j = 0; j < s.rank(); ++j)
    if (!dropped || j != *dropped) selected.push_back(j);
  std::vector<Permutation> gens;
  for (auto j : selected) gens.push_back(s[j]);
  if (orbits_of(s.degree(), gens).size() != 1)
    throw PreconditionError("the selected generators are not transitive");
  if (blocks.degree != s.degree()) throw PreconditionError("block system has the wrong degree");
  if (blocks.part_count() <= 1 || blocks.block_size() <= 1)
    throw PreconditionError("block system is trivial");
  if (!blocks.is_invariant_under(gens)) throw PreconditionError("blocks are not invariant");

  GeneratorPartition out;
  out.block_size = blocks.block_size();
  out.block_count = blocks.part_count();
  const std::size_t m = out.block_count;
  std::vector<Permutation> images;
  std::uint64_t order = 1;
  for (auto j : selected) {
    auto img = blocks.block_action(s[j]);
    auto trial = images;
    trial.push_back(img);
    auto next = PermGroup(trial, m).order();
    if (next > order) {
      images = std::move(trial);
      order = next;
      out.L.push_back(j);
    }
  }
  out.block_action_order = order;
  for (auto j : selected) {
    if (std::find(out.L.begin(), out.L.end(), j) != out.L.end()) continue;
    bool central = std::all_of(out.L.begin(), out.L.end(),
                               [&](std::size_t l) { return s[j].commutes_with(s[l]); });
    (central ? out.C : out.R).push_back(j);
  }
  out.L_within_bound = out.L.size() + 1 <= m;
  out.C_within_bound = out.C.size() + 1 <= out.block_size;
  return out;
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

GenAnResult extend_genAn(const Sggi& phi, Point point) {
  const std::size_t n = phi.degree();
  if (n < 5) throw PreconditionError("extend_genAn needs degree at least 5");
  if (n + 4 > 20) throw PreconditionError("extend_genAn supports degree at most 16");
  if (point >= n) throw PreconditionError("attachment point out of range");
  if (orbits_of(n, phi.gens()).size() != 1) throw PreconditionError("input is not transitive");
  GenAnResult out;
  for (const auto& g : phi.gens()) out.generators.push_back(g.extended(n + 4));
  const auto m = static_cast<Point>(n);
  out.generators.push_back(Permutation::from_cycles(n + 4, {{point, m}, {m + 1, m + 2}}));
  out.generators.push_back(Permutation::from_cycles(n + 4, {{m, m + 1}, {m + 2, m + 3}}));
  out.has_odd = std::any_of(out.generators.begin(), out.generators.end(),
                            [](const Permutation& p) { return p.parity() == Parity::odd; });
  out.order = PermGroup(out.generators, n + 4).order();
  out.symmetric = out.order == factorial(n + 4);
  out.alternating = out.order == factorial(n + 4) / 2;
  out.matches_prediction = out.has_odd ? out.symmetric : out.alternating;
  return out;
}

SesquiResult sesqui_extension(const Sggi& phi, std::size_t k, const Permutation& tau) {
  if (k >= phi.rank()) throw PreconditionError("sesqui index out of range");
  const std::size_t n = std::max(phi.degree(), tau.degree());
  const Permutation t = tau.extended(n);
  if (!t.is_involution()) throw PreconditionError("tau is not an involution");
  std::vector<Permutation> gens;
  for (const auto& g : phi.gens()) gens.push_back(g.extended(n));
  for (const auto& g : gens)
    if (!g.commutes_with(t)) throw PreconditionError("tau does not centralise the group");
  PermGroup base(gens, n);
  if (base.contains(t)) throw PreconditionError("tau lies in the group");
  gens[k] = gens[k] * t;
  Sggi star(gens, n);
  PermGroup star_group = star.group();
  SesquiResult out{star, SesquiCase::isomorphic, base.order(), star_group.order(),
                   star_group.contains(t)};
  out.which = out.order_star == out.order_phi ? SesquiCase::isomorphic : SesquiCase::times_tau;
  return out;
}

}  // namespace scg
