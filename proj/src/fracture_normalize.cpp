#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "scg/errors.hpp"
#include "scg/fracture.hpp"

namespace scg {

namespace {

std::size_t iteration_cap(const FractureGraph& q) {
  return std::max<std::size_t>(8, q.vertex_count() * q.rank() * q.rank());
}

bool consecutive(Label a, Label b) { return (a > b ? a - b : b - a) < 2; }

// Single exchanges: a chosen i-edge for an unchosen orbit-crossing i-edge.
std::vector<std::pair<Edge, Edge>> exchanges(const FractureGraph& q) {
  std::vector<std::pair<Edge, Edge>> out;
  for (Label i = 0; i < q.rank(); ++i) {
    auto chosen = q.chosen_with_label(i);
    for (const auto& e2 : q.base().crossing_edges(i)) {
      if (q.is_chosen(e2)) continue;
      for (const auto& e1 : chosen) out.push_back({e1, e2});
    }
  }
  return out;
}

std::optional<FractureGraph> try_replace(const FractureGraph& q, std::vector<Edge> removed,
                                         std::vector<Edge> added, const std::string& op) {
  try {
    return q.replaced(removed, added, op, "exchange search");
  } catch (const InvariantViolation&) {
    return std::nullopt;
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

// Tries the candidates in order (single exchanges, then pairs on distinct
// labels or distinct edges) and returns the first accepted one.
std::optional<FractureGraph> exchange_search(const FractureGraph& q,
                                             const std::function<bool(const FractureGraph&)>& accept) {
  auto singles = exchanges(q);
  for (const auto& [e1, e2] : singles)
    if (auto next = try_replace(q, {e1}, {e2}, "exchange"); next && accept(*next)) return next;
  for (std::size_t a = 0; a < singles.size(); ++a)
    for (std::size_t b = a + 1; b < singles.size(); ++b) {
      const auto& [e1, e2] = singles[a];
      const auto& [f1, f2] = singles[b];
      if (e1 == f1 || e2 == f2) continue;
      if (auto next = try_replace(q, {e1, f1}, {e2, f2}, "exchange2"); next && accept(*next))
        return next;
    }
  return std::nullopt;
}

std::vector<AltSquare> chosen_squares(const FractureGraph& q) {
  std::vector<AltSquare> out;
  for (const auto& sq : alternating_squares(q.chosen_graph())) out.push_back(sq);
  return out;
}

// move_square at every square vertex along every chosen step edge leaving the
// square, for both kept labels.
std::vector<FractureGraph> square_moves(const FractureGraph& q) {
  std::vector<FractureGraph> out;
  for (const auto& sq : chosen_squares(q)) {
    for (Point v : sq.vertices)
      for (const auto& step : q.chosen()) {
        if (!step.touches(v)) continue;
        Point w = step.other(v);
        if (std::find(sq.vertices.begin(), sq.vertices.end(), w) != sq.vertices.end()) continue;
        for (Label keep : {sq.i, sq.j}) {
          if (consecutive(keep, step.label)) continue;
          try {
            out.push_back(move_square(q, sq, step, keep));
          } catch (const PreconditionError&) {
          } catch (const InvariantViolation&) {
          }
        }
      }
  }
  return out;
}

std::vector<FractureGraph> label_changes(const FractureGraph& q) {
  std::vector<FractureGraph> out;
  for (const auto& sq : chosen_squares(q)) {
    if (sq.j != sq.i + 2) continue;
    const Label i = sq.i + 1;
    for (Point u : sq.vertices)
      for (Label l = 0; l < q.rank(); ++l) {
        if (consecutive(l, i)) continue;
        try {
          out.push_back(change_labels(q, ChangeLabelsSite{u, i, l}));
        } catch (const PreconditionError&) {
        } catch (const InvariantViolation&) {
        }
      }
  }
  return out;
}

}  // namespace

FractureGraph normalize_no_big_cycles(const FractureGraph& q) {
  if (q.kind() != FractureKind::two) throw PreconditionError("normalisation needs a 2-fracture graph");
  const LabeledGraph& g = q.base().graph;
  FractureGraph cur = q;
  for (std::size_t iter = 0; iter < iteration_cap(q); ++iter) {
    const auto before = census(cur).big_cycles;
    if (before == 0) return cur;
    auto accept = [&](const FractureGraph& next) { return census(next).big_cycles < before; };
    std::optional<FractureGraph> next;
    for (const auto& cyc : simple_cycles(cur.vertex_count(), cur.chosen())) {
      if (cyc.size() <= 4) continue;
      for (std::size_t k = 0; k < cyc.size() && !next; ++k) {
        const Edge& e = cyc[k];
        const Edge& f = cyc[(k + 1) % cyc.size()];
        if (consecutive(e.label, f.label)) continue;
        const Point v = e.touches(f.u) ? f.u : f.v;
        const Point a = e.other(v), b = f.other(v);
        const Point c = g.neighbour(a, f.label);
        if (c == a || g.neighbour(b, e.label) != c) continue;
        // Complete the square v-a-c-b by trading the cycle's other i- and
        // j-edges for its two missing sides.
        const Edge bc = Edge::make(b, c, e.label), ac = Edge::make(a, c, f.label);
        const std::vector<Edge> square{e, ac, bc, f};
        try {
          FractureGraph t = cur;
          if (!t.is_chosen(bc)) t = put_in_cycle(t, square, e, bc);
          if (!t.is_chosen(ac)) t = put_in_cycle(t, square, f, ac);
          if (accept(t)) next = t;
        } catch (const PreconditionError&) {
        } catch (const InvariantViolation&) {
        }
      }
      if (next) break;
    }
    if (!next) next = exchange_search(cur, accept);
    if (!next) throw TerminationFailure("no rewrite removes a big cycle");
    cur = *next;
  }
  throw TerminationFailure("big-cycle normalisation hit its iteration cap");
}

FractureGraph normalize_one_square_per_component(const FractureGraph& q) {
  FractureGraph cur = normalize_no_big_cycles(q);
  auto measure = [](const CycleCensus& c) { return std::pair{c.squares, c.min_square_distance}; };
  for (std::size_t iter = 0; iter < iteration_cap(q); ++iter) {
    const auto c = census(cur);
    if (c.max_squares_per_component <= 1) return cur;
    const auto before = measure(c);
    auto accept = [&](const FractureGraph& next) {
      auto n = census(next);
      return n.big_cycles == 0 && measure(n) < before;
    };
    std::optional<FractureGraph> next;
    for (auto& cand : square_moves(cur))
      if (accept(cand)) {
        next = std::move(cand);
        break;
      }
    if (!next)
      for (auto& changed : label_changes(cur)) {
        if (accept(changed)) {
          next = changed;
          break;
        }
        for (auto& cand : square_moves(changed))
          if (accept(cand)) {
            next = std::move(cand);
            break;
          }
        if (next) break;
      }
    if (!next) next = exchange_search(cur, accept);
    if (!next) throw TerminationFailure("no rewrite reduces squares or their distance");
    cur = *next;
  }
  throw TerminationFailure("square normalisation hit its iteration cap");
}

FractureGraph normalize_disconnected(const FractureGraph& q) {
  FractureGraph cur = normalize_one_square_per_component(q);
  for (std::size_t iter = 0; iter < iteration_cap(q); ++iter) {
    const auto c = census(cur);
    // A connected result means the caller's premise was wrong; it is returned as is.
    if (c.tree_components > 0 || c.components == 1) return cur;
    auto accept = [&](const FractureGraph& next) {
      auto n = census(next);
      return n.big_cycles == 0 && n.max_squares_per_component <= 1 &&
             (n.tree_components > 0 || n.components < c.components);
    };
    std::optional<FractureGraph> next = exchange_search(cur, accept);
    if (!next)
      for (auto& cand : square_moves(cur))
        if (auto renorm = normalize_one_square_per_component(cand); accept(renorm)) {
          next = renorm;
          break;
        }
    if (!next) throw TerminationFailure("no rewrite joins components or frees a tree");
    cur = *next;
  }
  throw TerminationFailure("disconnected normalisation hit its iteration cap");
}

}  // namespace scg
