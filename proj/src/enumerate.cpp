#include "scg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>

#include <omp.h>

#include "scg/block_system.hpp"
#include "scg/errors.hpp"

namespace scg {

std::string to_string(DedupMode mode) { return mode == DedupMode::none ? "none" : "relabel"; }

DedupMode parse_dedup_mode(const std::string& text) {
  if (text == "none") return DedupMode::none;
  if (text == "relabel") return DedupMode::relabel;
  throw InputError("unknown dedup mode '" + text + "'");
}

// ---------------------------------------------------------------------------
// Canonical keys

namespace {

constexpr std::uint32_t kFixed = 0xffffffffu;

// BFS code of the component containing `root`, visiting labels in the order
// given by `labels`.
std::vector<std::uint32_t> bfs_code(const std::vector<std::vector<Point>>& nbr,
                                    const std::vector<std::size_t>& labels, Point root,
                                    std::vector<std::uint32_t>& order_of) {
  std::vector<Point> seen{root};
  order_of[root] = 0;
  std::vector<std::uint32_t> code;
  for (std::size_t head = 0; head < seen.size(); ++head) {
    Point x = seen[head];
    for (auto l : labels) {
      Point y = nbr[l][x];
      if (y == x) {
        code.push_back(kFixed);
        continue;
      }
      if (order_of[y] == kFixed) {
        order_of[y] = static_cast<std::uint32_t>(seen.size());
        seen.push_back(y);
      }
      code.push_back(order_of[y]);
    }
  }
  for (Point x : seen) order_of[x] = kFixed;
  return code;
}

std::vector<std::uint32_t> canonical_code(const Sggi& s, bool reversed) {
  const std::size_t n = s.degree(), r = s.rank();
  std::vector<std::vector<Point>> nbr(r, std::vector<Point>(n));
  for (std::size_t l = 0; l < r; ++l)
    for (Point x = 0; x < n; ++x) nbr[l][x] = s[l](x);
  std::vector<std::size_t> labels(r);
  std::iota(labels.begin(), labels.end(), 0);
  if (reversed) std::reverse(labels.begin(), labels.end());

  std::vector<std::uint32_t> order_of(n, kFixed);
  std::vector<std::vector<std::uint32_t>> parts;
  for (const auto& orbit : orbits_of(n, s.gens())) {
    std::vector<std::uint32_t> best;
    for (Point root : orbit) {
      auto code = bfs_code(nbr, labels, root, order_of);
      if (best.empty() || code < best) best = std::move(code);
    }
    best.insert(best.begin(), static_cast<std::uint32_t>(orbit.size()));
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<std::uint32_t> out{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r)};
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<std::uint32_t> dedup_key(const Sggi& s, DedupMode mode) {
  if (mode == DedupMode::none) {
    std::vector<std::uint32_t> out{static_cast<std::uint32_t>(s.degree()),
                                   static_cast<std::uint32_t>(s.rank())};
    for (const auto& g : s.gens()) out.insert(out.end(), g.images().begin(), g.images().end());
    return out;
  }
  return std::min(canonical_code(s, false), canonical_code(s, true));
}

// ---------------------------------------------------------------------------
// Search kernel

namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::vector<std::uint64_t>;

inline bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

bool default_connected(const PermGroup& g) {
  return g.degree() < 60 && is_primitive(g);
}

// Shared, read-only search data.
struct Context {
  const ElementTable& table;
  std::size_t rank;
  bool connected;
  bool symmetry;  // break symmetry by conjugation
  std::uint64_t order;
  std::vector<std::uint32_t> inv;           // involution -> element
  std::vector<std::int32_t> inv_of;         // element -> involution or -1
  std::vector<Bits> commute;                // involution x involution
  std::size_t inv_words = 0;
  std::size_t elem_words = 0;
  Clock::time_point deadline;
  std::vector<Permutation> relabel_gens;    // generators of the relabelling group
};

struct Subgroup {
  std::vector<std::uint32_t> elems;
  Bits bits;
};

// Conjugation of involution t by c, as an involution index.
std::int32_t conj_index(const Context& ctx, std::uint32_t t, const Permutation& c) {
  auto p = conjugate(ctx.table.element(ctx.inv[t]), c);
  auto e = ctx.table.index_of(p);
  return e == ElementTable::npos ? -1 : ctx.inv_of[e];
}

// Orbit representatives of `group` (given as a full element list) on the
// candidate involutions, ascending.
std::vector<std::uint32_t> orbit_reps(const Context& ctx, const std::vector<std::uint32_t>& cands,
                                      const std::vector<Permutation>& group) {
  if (group.size() <= 1) return cands;
  std::vector<bool> covered(ctx.inv.size(), false);
  std::vector<std::uint32_t> reps;
  for (auto t : cands) {
    if (covered[t]) continue;
    reps.push_back(t);
    for (const auto& c : group) {
      auto u = conj_index(ctx, t, c);
      if (u >= 0) covered[static_cast<std::size_t>(u)] = true;
    }
  }
  return reps;
}

struct TaskResult {
  std::vector<std::vector<std::uint32_t>> tuples;  // involution indices
  std::uint64_t nodes = 0;
  bool timed_out = false;
};

class Search {
 public:
  Search(const Context& ctx, std::atomic<bool>& stop, bool stop_at_first)
      : ctx_(ctx), stop_(stop), stop_at_first_(stop_at_first) {
    const std::size_t r = ctx.rank;
    groups_.assign(r, std::vector<Subgroup>(r));
    chosen_.assign(r, 0);
    centralizers_.assign(r + 1, {});
    for (auto& level : groups_)
      for (auto& g : level) g.bits.assign(ctx.elem_words, 0);
  }

  // Runs the subtree with rho_0 = t0 and rho_1 = t1 (t1 unused at rank 1).
  TaskResult run(std::uint32_t t0, std::optional<std::uint32_t> t1,
                 const std::vector<Permutation>* c1) {
    result_ = {};
    if (!place(0, t0)) return std::move(result_);
    if (ctx_.rank == 1) {
      record();
      return std::move(result_);
    }
    c1_ = c1;
    if (place(1, *t1)) descend(2);
    return std::move(result_);
  }

 private:
  bool out_of_time() {
    if ((++result_.nodes & 255) == 0 && Clock::now() > ctx_.deadline) {
      result_.timed_out = true;
      stop_ = true;
    }
    return stop_.load(std::memory_order_relaxed);
  }

  void record() {
    result_.tuples.emplace_back(chosen_.begin(), chosen_.end());
    if (stop_at_first_) stop_ = true;
  }

  std::size_t limit(std::size_t a, std::size_t b) const {
    // Each missing generator at least doubles the order of a string C-group.
    const std::size_t missing = ctx_.rank - (b - a + 1);
    return missing >= 63 ? 0 : static_cast<std::size_t>(ctx_.order >> missing);
  }

  // <H, t> into out, as right cosets of H. Returns false once the size
  // exceeds `cap`.
  bool close(const Subgroup& h, std::size_t a, std::size_t j, Subgroup& out, std::size_t cap) {
    const auto& T = ctx_.table;
    out.elems = h.elems;
    std::copy(h.bits.begin(), h.bits.end(), out.bits.begin());
    const std::uint32_t t = ctx_.inv[chosen_[j]];
    std::vector<std::uint32_t> reps{T.identity()};
    auto add_coset = [&](std::uint32_t y) {
      for (auto x : h.elems) {
        auto z = T.multiply(x, y);
        set(out.bits, z);
        out.elems.push_back(z);
      }
      reps.push_back(y);
      return out.elems.size() <= cap;
    };
    if (test(out.bits, t)) return true;
    if (!add_coset(t)) return false;
    for (std::size_t i = 1; i < reps.size(); ++i)
      for (std::size_t k = a; k <= j; ++k) {
        auto y = T.multiply(reps[i], ctx_.inv[chosen_[k]]);
        if (!test(out.bits, y) && !add_coset(y)) return false;
      }
    return true;
  }

  static std::size_t meet(const Subgroup& x, const Subgroup& y) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < x.bits.size(); ++w) c += std::popcount(x.bits[w] & y.bits[w]);
    return c;
  }

  // Sets rho_j = t and checks every interval ending at j.
  bool place(std::size_t j, std::uint32_t t) {
    chosen_[j] = t;
    const std::size_t r = ctx_.rank;
    const bool last = j + 1 == r;
    Subgroup& single = groups_[j][j];
    std::fill(single.bits.begin(), single.bits.end(), 0);
    single.elems = {ctx_.table.identity(), ctx_.inv[t]};
    set(single.bits, single.elems[0]);
    set(single.bits, single.elems[1]);
    if (r == 1) return ctx_.order == 2;
    for (std::size_t a = j; a-- > 0;) {
      // Intersection: <a..j-1> n <a+1..j> = <a+1..j-1>.
      const std::size_t inner = a + 1 <= j - 1 ? groups_[j - 1][a + 1].elems.size() : 1;
      if (meet(groups_[j - 1][a], groups_[j][a + 1]) != inner) return false;
      if (last && a == 0) {
        // Generation of the target: <0..r-1> exceeds half the order.
        return !close(groups_[j - 1][0], 0, j, groups_[j][0], ctx_.order / 2);
      }
      if (!close(groups_[j - 1][a], a, j, groups_[j][a], limit(a, j))) return false;
    }
    return true;
  }

  void descend(std::size_t j) {
    if (j == ctx_.rank) {
      record();
      return;
    }
    if (out_of_time()) return;
    // Commuting with rho_0..rho_{j-2}.
    Bits cand(ctx_.inv_words, ~std::uint64_t{0});
    for (std::size_t k = 0; k + 1 < j; ++k)
      for (std::size_t w = 0; w < cand.size(); ++w) cand[w] &= ctx_.commute[chosen_[k]][w];
    const auto& prev_row = ctx_.commute[chosen_[j - 1]];
    std::vector<std::uint32_t> list;
    for (std::size_t w = 0; w < cand.size(); ++w) {
      std::uint64_t bits = cand[w];
      if (ctx_.connected) bits &= ~prev_row[w];
      while (bits) {
        auto t = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        if (t >= ctx_.inv.size()) break;
        if (t == chosen_[j - 1] || test(groups_[j - 1][0].bits, ctx_.inv[t])) continue;
        list.push_back(t);
      }
    }
    // Symmetry: centralizer of the prefix inside the relabelling group.
    auto& cj = centralizers_[j];
    cj.clear();
    const auto& before = j == 2 ? *c1_ : centralizers_[j - 1];
    if (ctx_.symmetry && before.size() > 1) {
      auto prev = ctx_.table.element(ctx_.inv[chosen_[j - 1]]);
      for (const auto& c : before)
        if (c.commutes_with(prev)) cj.push_back(c);
      list = orbit_reps(ctx_, list, cj);
    }
    for (auto t : list) {
      if (stop_.load(std::memory_order_relaxed)) return;
      if (place(j, t)) descend(j + 1);
    }
  }

  const Context& ctx_;
  std::atomic<bool>& stop_;
  bool stop_at_first_;
  std::vector<std::vector<Subgroup>> groups_;  // groups_[j][a]: <rho_a..rho_j>
  std::vector<std::uint32_t> chosen_;
  std::vector<std::vector<Permutation>> centralizers_;
  const std::vector<Permutation>* c1_ = nullptr;  // centralizer of rho_0, shared
  TaskResult result_;
};

struct Task {
  std::uint32_t t0;
  std::optional<std::uint32_t> t1;
  std::size_t c1;  // index into the shared centralizer list
};

EnumerationResult run_kernel(const PermGroup& target, std::size_t rank,
                             const EnumerateOptions& options, bool parallel) {
  const auto start = Clock::now();
  if (rank == 0) throw PreconditionError("rank must be at least 1");
  EnumerationResult result;
  result.degree = target.degree();
  result.order = target.order();
  result.rank = rank;
  result.dedup = options.dedup;
  result.connected_mode = rank >= 3 && options.connected.value_or(default_connected(target));

  auto finish = [&]() {
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  };
  if (options.conder_prune && rank >= 3 &&
      (2 * rank - 1 >= 64 || target.order() < (std::uint64_t{1} << (2 * rank - 1)))) {
    result.conder_excluded = true;
    return finish();
  }
  if (rank < 64 && target.order() < (std::uint64_t{1} << rank)) return finish();

  ElementTable table(target, options.element_cap);
  for (const auto& p : options.normalizer) {
    if (p.degree() != target.degree()) throw InputError("normaliser degree mismatch");
    for (const auto& g : target.generators())
      if (!target.contains(conjugate(g, p)))
        throw InputError("relabelling permutation " + to_cycle_string(p) +
                         " does not normalise the target");
  }

  Context ctx{table, rank, result.connected_mode, options.dedup == DedupMode::relabel,
              target.order(), {}, {}, {}, 0, 0, Clock::now(), {}};
  ctx.deadline = start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(options.budget_seconds));
  ctx.inv = table.involutions();
  ctx.inv_of.assign(table.size(), -1);
  for (std::size_t k = 0; k < ctx.inv.size(); ++k) ctx.inv_of[ctx.inv[k]] = static_cast<std::int32_t>(k);
  ctx.inv_words = (ctx.inv.size() + 63) / 64;
  ctx.elem_words = (table.size() + 63) / 64;
  {
    std::vector<Permutation> perms;
    for (auto e : ctx.inv) perms.push_back(table.element(e));
    ctx.commute.assign(ctx.inv.size(), Bits(ctx.inv_words, 0));
    for (std::size_t x = 0; x < perms.size(); ++x)
      for (std::size_t y = x; y < perms.size(); ++y)
        if (perms[x].commutes_with(perms[y])) {
          set(ctx.commute[x], y);
          set(ctx.commute[y], x);
        }
  }
  ctx.relabel_gens = target.generators();
  for (const auto& p : options.normalizer) ctx.relabel_gens.push_back(p);

  // Level 0 and 1 candidates; tasks are (rho_0, rho_1) pairs.
  std::vector<std::uint32_t> level0(ctx.inv.size());
  std::iota(level0.begin(), level0.end(), 0);
  std::vector<std::vector<Permutation>> c1_lists;
  if (ctx.symmetry) {
    // Orbits of the relabelling group on involutions via its generators.
    std::vector<std::uint32_t> parent(ctx.inv.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> root = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : ctx.relabel_gens)
      for (std::uint32_t t = 0; t < ctx.inv.size(); ++t) {
        auto u = conj_index(ctx, t, g);
        if (u < 0) continue;
        auto a = root(t), b = root(static_cast<std::uint32_t>(u));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    level0.clear();
    for (std::uint32_t t = 0; t < ctx.inv.size(); ++t)
      if (root(t) == t) level0.push_back(t);
  }

  std::vector<Task> tasks;
  if (rank == 1) {
    for (auto t0 : level0) tasks.push_back({t0, std::nullopt, 0});
  } else {
    std::optional<PermGroup> relabel;
    if (ctx.symmetry) relabel.emplace(ctx.relabel_gens, target.degree());
    for (auto t0 : level0) {
      std::vector<std::uint32_t> cands;
      const auto& row = ctx.commute[t0];
      for (std::uint32_t t = 0; t < ctx.inv.size(); ++t) {
        if (t == t0) continue;
        if (ctx.connected && test(row, t)) continue;
        cands.push_back(t);
      }
      std::vector<Permutation> c1;
      if (ctx.symmetry) {
        auto rho0 = table.element(ctx.inv[t0]);
        relabel->for_each_element([&](const Permutation& c) {
          if (c.commutes_with(rho0)) c1.push_back(c);
        });
        cands = orbit_reps(ctx, cands, c1);
      }
      c1_lists.push_back(std::move(c1));
      for (auto t1 : cands) tasks.push_back({t0, t1, c1_lists.size() - 1});
    }
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<bool> stop{false};
  // With stop_at_first the earliest task that succeeds wins, so that the
  // witness does not depend on the schedule.
  std::atomic<std::size_t> first_hit{tasks.size()};
  auto run_task = [&](std::size_t k, Search& search, std::atomic<bool>& local_stop) {
    if (stop.load() || k > first_hit.load()) return;
    local_stop = false;
    const auto& task = tasks[k];
    results[k] = search.run(task.t0, task.t1, rank == 1 ? nullptr : &c1_lists[task.c1]);
    if (results[k].timed_out) stop = true;
    if (options.stop_at_first && !results[k].tuples.empty()) {
      auto cur = first_hit.load();
      while (k < cur && !first_hit.compare_exchange_weak(cur, k)) {
      }
    }
  };

  if (parallel) {
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
      std::atomic<bool> local_stop{false};
      Search search(ctx, local_stop, options.stop_at_first);
#pragma omp for schedule(dynamic, 1)
      for (std::size_t k = 0; k < tasks.size(); ++k) {
        if (Clock::now() > ctx.deadline) {
          results[k].timed_out = true;
          stop = true;
          continue;
        }
        run_task(k, search, local_stop);
      }
    }
  } else {
    std::atomic<bool> local_stop{false};
    Search search(ctx, local_stop, options.stop_at_first);
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      if (Clock::now() > ctx.deadline) {
        results[k].timed_out = true;
        stop = true;
        break;
      }
      run_task(k, search, local_stop);
      if (options.stop_at_first && first_hit.load() < tasks.size()) break;
    }
  }

  bool timed_out = false;
  std::vector<std::vector<std::uint32_t>> tuples;
  for (std::size_t k = 0; k < results.size(); ++k) {
    result.nodes += results[k].nodes;
    timed_out = timed_out || results[k].timed_out;
    if (options.stop_at_first && k != first_hit.load()) continue;
    for (auto& tup : results[k].tuples) tuples.push_back(std::move(tup));
  }
  if (options.stop_at_first && !tuples.empty()) {
    tuples.resize(1);
    timed_out = false;  // the answer does not depend on unfinished tasks
  }
  // Tasks skipped after a deadline never ran.
  if (stop.load() && !options.stop_at_first) timed_out = true;
  if (options.stop_at_first && tuples.empty() && stop.load()) timed_out = true;
  result.exhaustive = !timed_out;

  std::map<std::vector<std::uint32_t>, Sggi> unique;
  for (const auto& tup : tuples) {
    std::vector<Permutation> gens;
    for (auto t : tup) gens.push_back(table.element(ctx.inv[t]));
    Sggi s(std::move(gens), target.degree());
    unique.emplace(dedup_key(s, options.dedup), std::move(s));
  }
  for (auto& [key, s] : unique) result.representatives.push_back(std::move(s));
  return finish();
}

}  // namespace

EnumerationResult enumerate_parallel(const PermGroup& target, std::size_t rank,
                                     const EnumerateOptions& options) {
  return run_kernel(target, rank, options, true);
}

EnumerationResult enumerate_serial(const PermGroup& target, std::size_t rank,
                                   const EnumerateOptions& options) {
  return run_kernel(target, rank, options, false);
}

EnumerationResult enumerate_string_cgroups(const PermGroup& target, std::size_t rank,
                                           const EnumerateOptions& options) {
  return enumerate_parallel(target, rank, options);
}

EnumerationResult enumerate_reference(const PermGroup& target, std::size_t rank,
                                      const EnumerateOptions& options) {
  const auto start = Clock::now();
  if (rank == 0) throw PreconditionError("rank must be at least 1");
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(options.budget_seconds));
  EnumerationResult result;
  result.degree = target.degree();
  result.order = target.order();
  result.rank = rank;
  result.dedup = options.dedup;

  std::vector<Permutation> involutions;
  target.for_each_element([&](const Permutation& p) {
    if (p.is_involution()) involutions.push_back(p);
  });
  std::sort(involutions.begin(), involutions.end());

  std::map<std::vector<std::uint32_t>, Sggi> unique;
  std::vector<Permutation> tuple;
  std::function<bool()> dfs = [&]() -> bool {
    ++result.nodes;
    if (Clock::now() > deadline) {
      result.exhaustive = false;
      return false;
    }
    if (tuple.size() == rank) {
      Sggi s(tuple, target.degree());
      if (s.group().order() == target.order() && check_intersection_property(s).holds) {
        unique.emplace(dedup_key(s, options.dedup), s);
        if (options.stop_at_first) return false;
      }
      return true;
    }
    for (const auto& t : involutions) {
      bool ok = true;
      for (std::size_t k = 0; k + 1 < tuple.size() && ok; ++k) ok = tuple[k].commutes_with(t);
      if (!ok) continue;
      tuple.push_back(t);
      bool go_on = dfs();
      tuple.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  dfs();
  for (auto& [key, s] : unique) result.representatives.push_back(std::move(s));
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

void require_exhaustive(const EnumerationResult& result) {
  if (!result.exhaustive)
    throw BudgetExhausted("rank " + std::to_string(result.rank) + " search stopped after " +
                          std::to_string(result.seconds) + " s without finishing");
}

std::size_t rank_search_ceiling(const PermGroup& target) {
  std::size_t log2 = static_cast<std::size_t>(std::bit_width(target.order())) - 1;
  std::size_t whiston = target.degree() > 0 ? target.degree() - 1 : 0;
  return std::min(log2, whiston);
}

MaxRankResult max_rank(const PermGroup& target, const EnumerateOptions& options) {
  MaxRankResult out;
  out.degree = target.degree();
  out.order = target.order();
  out.connected_mode = options.connected.value_or(default_connected(target));
  auto opts = options;
  opts.stop_at_first = true;
  opts.connected = out.connected_mode;
  const std::size_t top = rank_search_ceiling(target);
  for (std::size_t r = top; r >= 1; --r) {
    auto res = enumerate_parallel(target, r, opts);
    RankEvidence ev{r, !res.representatives.empty(), res.exhaustive, res.conder_excluded,
                    res.seconds, res.nodes};
    out.evidence.push_back(ev);
    if (!res.exhaustive) out.exhaustive = false;
    if (ev.found) {
      if (r >= 3) out.rank = r;
      else out.small_rank = r;
      out.witness = res.representatives.front();
      break;
    }
    if (r == 1) break;
  }
  return out;
}

}  // namespace scg
