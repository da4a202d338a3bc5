#include "scg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "scg/errors.hpp"

namespace scg {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<Orbit> orbits_of(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> parent(degree);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    for (Point x = 0; x < degree; ++x) {
      auto a = find_root(parent, x);
      auto b = find_root(parent, g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Orbit> out;
  std::vector<std::size_t> slot(degree, std::numeric_limits<std::size_t>::max());
  for (Point x = 0; x < degree; ++x) {
    auto r = find_root(parent, x);
    if (slot[r] == std::numeric_limits<std::size_t>::max()) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

PermGroup::PermGroup(std::vector<Permutation> gens, std::size_t degree)
    : degree_(degree), gens_(std::move(gens)) {
  if (degree_ == 0) {
    if (gens_.empty()) throw InputError("empty generator list with degree 0");
    degree_ = gens_.front().degree();
  }
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw InputError("generator degree mismatch");
  schreier_sims();
  orbits_ = orbits_of(degree_, gens_);
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base_point] = Permutation(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point delta = level.orbit[k];
    for (const auto& s : level.strong_gens) {
      Point gamma = s(delta);
      if (!level.transversal[gamma]) {
        level.transversal[gamma] = *level.transversal[delta] * s;
        level.orbit.push_back(gamma);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    Point beta = g(levels_[i].base_point);
    const auto& u = levels_[i].transversal[beta];
    if (!u) return {std::move(g), i};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  auto moved_point = [&](const Permutation& g) -> Point {
    for (Point x = 0; x < degree_; ++x)
      if (g(x) != x) return x;
    throw std::logic_error("identity has no moved point");
  };

  std::vector<Permutation> nontrivial;
  for (const auto& g : gens_)
    if (!g.is_identity()) nontrivial.push_back(g);

  for (const auto& g : nontrivial) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return g(l.base_point) == l.base_point; });
    if (fixes_base) levels_.push_back(Level{moved_point(g), {}, {}, {}});
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : nontrivial) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g(levels_[j].base_point) != levels_[j].base_point) fixes_prefix = false;
      if (fixes_prefix) levels_[i].strong_gens.push_back(g);
    }
  }
  for (auto& l : levels_) rebuild_orbit(l);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; !restarted && oi < levels_[ui].orbit.size(); ++oi) {
      Point beta = levels_[ui].orbit[oi];
      for (std::size_t si = 0; !restarted && si < levels_[ui].strong_gens.size(); ++si) {
        const Permutation x = levels_[ui].strong_gens[si];
        Permutation ux = *levels_[ui].transversal[beta] * x;
        Permutation u_image = *levels_[ui].transversal[x(beta)];
        if (ux == u_image) continue;
        Permutation h = ux * u_image.inverse();
        auto [residue, j] = strip(std::move(h), ui + 1);
        bool extend = j < levels_.size();
        if (!extend && !residue.is_identity()) {
          extend = true;
          levels_.push_back(Level{moved_point(residue), {}, {}, {}});
        }
        if (extend) {
          std::size_t top = std::min(j, levels_.size() - 1);
          for (std::size_t l = ui + 1; l <= top; ++l) {
            levels_[l].strong_gens.push_back(residue);
            rebuild_orbit(levels_[l]);
          }
          i = static_cast<std::ptrdiff_t>(top);
          restarted = true;
        }
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  base_.clear();
  for (const auto& l : levels_) {
    base_.push_back(l.base_point);
    std::uint64_t len = l.orbit.size();
    if (order_ > std::numeric_limits<std::uint64_t>::max() / len)
      throw std::overflow_error("group order exceeds 64 bits");
    order_ *= len;
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = strip(p, 0);
  return level == levels_.size() && residue.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree_ != degree_) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::operator==(const PermGroup& other) const {
  return order_ == other.order_ && is_subgroup_of(other);
}

bool PermGroup::is_even() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Permutation& g) { return g.parity() == Parity::even; });
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  // Every element factors uniquely as u_{k-1} ... u_1 u_0 with u_i from the
  // level-i transversal.
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t depth,
                                                                 const Permutation& acc) {
    if (depth == 0) {
      visit(acc);
      return;
    }
    const Level& l = levels_[depth - 1];
    for (Point b : l.orbit) rec(depth - 1, acc * *l.transversal[b]);
  };
  rec(levels_.size(), Permutation(degree_));
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(order_);
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::optional<std::vector<Permutation>> brute_force_closure(std::size_t degree,
                                                            const std::vector<Permutation>& gens,
                                                            std::size_t limit) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id(degree);
  seen.insert(id);
  queue.push_back(id);
  std::vector<Permutation> out{id};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > limit) return std::nullopt;
        out.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

}  // namespace scg
