#include "scg/sggi.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "scg/errors.hpp"

namespace scg {

namespace {

std::size_t common_degree(const std::vector<Permutation>& gens, std::size_t degree) {
  if (degree == 0 && !gens.empty()) degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw InputError("generators have different degrees");
  return degree;
}

IndexSet labels_of_mask(std::uint32_t mask) {
  IndexSet out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

}  // namespace

Sggi::Sggi(std::vector<Permutation> gens, std::size_t degree)
    : degree_(common_degree(gens, degree)), gens_(std::move(gens)) {
  auto sp = check_string_property(gens_);
  if (!sp.holds)
    throw InputError("string property fails for generators " +
                     std::to_string(sp.violating_pair->first) + " and " +
                     std::to_string(sp.violating_pair->second));
}

StringPropertyResult check_string_property(const std::vector<Permutation>& gens) {
  common_degree(gens, 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_involution())
      throw InputError("generator " + std::to_string(i) + " is not an involution");
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 2; j < gens.size(); ++j)
      if (!gens[i].commutes_with(gens[j])) return {false, std::pair{i, j}};
  return {};
}

Sggi parabolic(const Sggi& s, const IndexSet& labels) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= s.rank())
      throw PreconditionError("label " + std::to_string(labels[i]) + " out of range");
    if (i > 0 && labels[i] <= labels[i - 1])
      throw PreconditionError("labels must be strictly increasing");
    gens.push_back(s[labels[i]]);
  }
  return Sggi(std::move(gens), s.degree());
}

PermGroup parabolic_group(const Sggi& s, const IndexSet& labels) {
  return parabolic(s, labels).group();
}

PermGroup maximal_parabolic(const Sggi& s, std::size_t i) {
  if (i >= s.rank()) throw PreconditionError("label out of range");
  IndexSet labels;
  for (std::size_t j = 0; j < s.rank(); ++j)
    if (j != i) labels.push_back(j);
  return parabolic_group(s, labels);
}

std::uint64_t intersection_order(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::uint64_t count = 0;
  small.for_each_element([&](const Permutation& p) {
    if (large.contains(p)) ++count;
  });
  return count;
}

IntersectionResult check_intersection_property(const Sggi& s) {
  const std::size_t r = s.rank();
  if (r > 8) {
    if (check_intersection_property_fast(s)) return {};
    // Fall back to the maximal-parabolic pair that the reduction flags.
    IndexSet i0, ilast;
    for (std::size_t k = 1; k < r; ++k) i0.push_back(k);
    for (std::size_t k = 0; k + 1 < r; ++k) ilast.push_back(k);
    return {false, std::pair{i0, ilast}};
  }
  const std::uint32_t full = (1u << r);
  std::vector<std::optional<PermGroup>> groups(full);
  auto group = [&](std::uint32_t mask) -> const PermGroup& {
    if (!groups[mask]) groups[mask] = parabolic_group(s, labels_of_mask(mask));
    return *groups[mask];
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < full; ++a)
    for (std::uint32_t b = 0; b < full; ++b) {
      if ((a & b) == a || (a & b) == b) continue;  // nested: trivially equal
      if (std::popcount(a) < std::popcount(b)) continue;
      if (std::popcount(a) == std::popcount(b) && labels_of_mask(a) > labels_of_mask(b)) continue;
      pairs.emplace_back(a, b);
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](auto x, auto y) {
    auto tx = std::popcount(x.first) + std::popcount(x.second);
    auto ty = std::popcount(y.first) + std::popcount(y.second);
    if (tx != ty) return tx < ty;
    if (std::popcount(x.first) != std::popcount(y.first))
      return std::popcount(x.first) > std::popcount(y.first);
    if (x.first != y.first) return labels_of_mask(x.first) < labels_of_mask(y.first);
    return labels_of_mask(x.second) < labels_of_mask(y.second);
  });

  for (auto [a, b] : pairs) {
    std::uint64_t expected = group(a & b).order();
    if (intersection_order(group(a), group(b)) != expected)
      return {false, std::pair{labels_of_mask(a), labels_of_mask(b)}};
  }
  return {};
}

bool check_intersection_property_fast(const Sggi& s) {
  const std::size_t r = s.rank();
  if (r <= 1) return true;
  // ok[a][b]: the interval of labels a..b satisfies the intersection property.
  std::map<std::pair<std::size_t, std::size_t>, PermGroup> cache;
  auto interval = [&](std::size_t a, std::size_t b) -> const PermGroup& {
    auto key = std::pair{a, b};
    auto it = cache.find(key);
    if (it == cache.end()) {
      IndexSet labels;
      for (std::size_t k = a; k <= b; ++k) labels.push_back(k);
      if (a > b) labels.clear();
      it = cache.emplace(key, parabolic_group(s, labels)).first;
    }
    return it->second;
  };
  std::vector<std::vector<bool>> ok(r, std::vector<bool>(r, true));
  for (std::size_t len = 2; len <= r; ++len) {
    for (std::size_t a = 0; a + len <= r; ++a) {
      std::size_t b = a + len - 1;
      if (!ok[a + 1][b] || !ok[a][b - 1]) {
        ok[a][b] = false;
        continue;
      }
      if (len == 2) {
        ok[a][b] = s[a] != s[b];
        continue;
      }
      std::uint64_t inner = interval(a + 1, b - 1).order();
      ok[a][b] = intersection_order(interval(a, b - 1), interval(a + 1, b)) == inner;
    }
  }
  return ok[0][r - 1];
}

bool is_string_cgroup(const Sggi& s) { return check_intersection_property_fast(s); }

Sggi dual(const Sggi& s) {
  std::vector<Permutation> gens(s.gens().rbegin(), s.gens().rend());
  return Sggi(std::move(gens), s.degree());
}

std::uint64_t product_order(const Permutation& a, const Permutation& b) { return (a * b).order(); }

std::vector<std::uint64_t> Diagram::schlafli() const {
  std::vector<std::uint64_t> out(vertices > 0 ? vertices - 1 : 0, 2);
  for (const auto& e : edges) out[e.i] = e.label;
  return out;
}

Diagram diagram(const Sggi& s) {
  Diagram d{s.rank(), {}};
  for (std::size_t i = 0; i + 1 < s.rank(); ++i) {
    auto m = product_order(s[i], s[i + 1]);
    if (m > 2) d.edges.push_back({i, i + 1, m});
  }
  return d;
}

Restriction restrict_to_orbit(const Sggi& s, const std::vector<Point>& orbit) {
  std::vector<Point> points = orbit;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::int64_t> slot(s.degree(), -1);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k] >= s.degree()) throw PreconditionError("orbit point out of range");
    slot[points[k]] = static_cast<std::int64_t>(k);
  }
  Restriction out{{}, points, {}, Sggi({}, points.size())};
  std::vector<Permutation> active_gens;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    std::vector<Point> images(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      auto y = slot[s[i](points[k])];
      if (y < 0)
        throw PreconditionError("point set is not invariant under generator " + std::to_string(i));
      images[k] = static_cast<Point>(y);
    }
    Permutation alpha(std::move(images));
    if (!alpha.is_identity()) {
      out.active.push_back(i);
      active_gens.push_back(alpha);
    }
    out.restricted.push_back(std::move(alpha));
  }
  out.sggi = Sggi(std::move(active_gens), points.size());
  return out;
}

}  // namespace scg
