#include "scg/fracture.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "scg/errors.hpp"

namespace scg {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}:" + std::to_string(e.label);
}

std::size_t per_label(FractureKind kind) { return kind == FractureKind::simple ? 1 : 2; }

// Edges chosen from `candidates` according to the tie-break policy.
std::vector<Edge> pick(std::vector<Edge> candidates, std::size_t count, std::mt19937_64* rng) {
  std::sort(candidates.begin(), candidates.end());
  if (rng == nullptr) return {candidates.begin(), candidates.begin() + static_cast<long>(count)};
  std::vector<Edge> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
    auto idx = dist(*rng);
    out.push_back(candidates[idx]);
    candidates.erase(candidates.begin() + static_cast<long>(idx));
  }
  return out;
}

FractureResult find_generic(const Sggi& s, FractureKind kind, TieBreak tie_break) {
  if (s.rank() == 0 || orbits_of(s.degree(), s.gens()).size() != 1)
    throw PreconditionError("fracture graphs need a transitive group");
  auto base = std::make_shared<const FractureBase>(s);
  std::optional<std::mt19937_64> rng;
  if (tie_break.seed) rng.emplace(*tie_break.seed);
  const std::size_t need = per_label(kind);
  std::vector<Edge> chosen;
  for (Label i = 0; i < s.rank(); ++i) {
    auto crossing = base->crossing_edges(i);
    if (crossing.empty())
      return NoneReason{i, "Gamma_" + std::to_string(i) + " is transitive"};
    if (crossing.size() < need)
      return NoneReason{i, "rho_" + std::to_string(i) + " has only " +
                               std::to_string(crossing.size()) +
                               " 2-cycle(s) crossing Gamma_" + std::to_string(i) + " orbits"};
    for (const auto& e : pick(crossing, need, rng ? &*rng : nullptr)) chosen.push_back(e);
  }
  return FractureGraph(base, kind, std::move(chosen));
}

// Checks that `cycle` is a closed simple cycle of G and returns its i-edges.
std::vector<Edge> cycle_edges_with_label(const LabeledGraph& g, const std::vector<Edge>& cycle,
                                         Label label) {
  if (cycle.size() < 3) throw PreconditionError("a cycle needs at least three edges");
  std::map<Point, int> degree;
  for (const auto& e : cycle) {
    if (!g.has_edge(e)) throw PreconditionError("cycle edge " + edge_text(e) + " is not in G");
    ++degree[e.u];
    ++degree[e.v];
  }
  if (std::set<Edge>(cycle.begin(), cycle.end()).size() != cycle.size())
    throw PreconditionError("cycle repeats an edge");
  for (auto [v, d] : degree)
    if (d != 2) throw PreconditionError("edges do not form a simple cycle");
  if (components(g.vertex_count(), cycle).size() != g.vertex_count() - degree.size() + 1)
    throw PreconditionError("edges form more than one cycle");
  std::vector<Edge> out;
  for (const auto& e : cycle)
    if (e.label == label) out.push_back(e);
  return out;
}

void check_exchange_pattern(const FractureGraph& q, const std::vector<Edge>& cycle, const Edge& e1,
                            const Edge& e2) {
  if (e1.label != e2.label) throw PreconditionError("e1 and e2 carry different labels");
  auto same = cycle_edges_with_label(q.base().graph, cycle, e1.label);
  std::set<Edge> got(same.begin(), same.end());
  if (same.size() != 2 || !got.count(e1) || !got.count(e2))
    throw PreconditionError("cycle must contain exactly the two " + std::to_string(e1.label) +
                            "-edges e1 and e2");
  if (!q.is_chosen(e1)) throw PreconditionError("e1 " + edge_text(e1) + " is not chosen");
  if (q.is_chosen(e2)) throw PreconditionError("e2 " + edge_text(e2) + " is already chosen");
}

std::vector<Point> bfs_path(std::size_t n, const std::vector<Edge>& edges, Point from, Point to,
                            std::vector<Edge>* path_edges) {
  std::vector<std::vector<std::pair<Point, std::size_t>>> adj(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    adj[edges[k].u].push_back({edges[k].v, k});
    adj[edges[k].v].push_back({edges[k].u, k});
  }
  std::vector<std::int64_t> via(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<Point> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (auto [y, k] : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        via[y] = static_cast<std::int64_t>(k);
        queue.push_back(y);
      }
  }
  if (!seen[to]) return {};
  std::vector<Point> verts{to};
  for (Point x = to; x != from;) {
    const Edge& e = edges[static_cast<std::size_t>(via[x])];
    if (path_edges) path_edges->push_back(e);
    x = e.other(x);
    verts.push_back(x);
  }
  std::reverse(verts.begin(), verts.end());
  return verts;
}

}  // namespace

FractureBase::FractureBase(Sggi s) : sggi(std::move(s)), graph(to_graph(sggi)) {
  const std::size_t r = sggi.rank();
  orbit_id.assign(r, std::vector<std::size_t>(sggi.degree()));
  for (Label i = 0; i < r; ++i) {
    std::vector<Permutation> others;
    for (Label j = 0; j < r; ++j)
      if (j != i) others.push_back(sggi[j]);
    auto orbs = orbits_of(sggi.degree(), others);
    for (std::size_t k = 0; k < orbs.size(); ++k)
      for (Point x : orbs[k]) orbit_id[i][x] = k;
  }
}

std::vector<Edge> FractureBase::crossing_edges(Label i) const {
  std::vector<Edge> out;
  for (const auto& e : graph.edges_with_label(i))
    if (crosses(e)) out.push_back(e);
  return out;
}

FractureGraph::FractureGraph(std::shared_ptr<const FractureBase> base, FractureKind kind,
                             std::vector<Edge> chosen, std::vector<TraceRecord> trace)
    : base_(std::move(base)), kind_(kind), chosen_(std::move(chosen)), trace_(std::move(trace)) {
  for (auto& e : chosen_) e = Edge::make(e.u, e.v, e.label);
  std::sort(chosen_.begin(), chosen_.end());
  if (std::adjacent_find(chosen_.begin(), chosen_.end()) != chosen_.end())
    throw InvariantViolation("an edge is chosen twice");
  std::vector<std::size_t> count(rank(), 0);
  for (const auto& e : chosen_) {
    if (!base_->graph.has_edge(e))
      throw InvariantViolation("chosen edge " + edge_text(e) + " is not in G");
    if (!base_->crosses(e))
      throw InvariantViolation("chosen edge " + edge_text(e) + " stays inside a Gamma_" +
                               std::to_string(e.label) + " orbit");
    ++count[e.label];
  }
  for (Label i = 0; i < rank(); ++i)
    if (count[i] != per_label(kind_))
      throw InvariantViolation("label " + std::to_string(i) + " has " + std::to_string(count[i]) +
                               " chosen edges");
}

bool FractureGraph::is_chosen(const Edge& e) const {
  return std::binary_search(chosen_.begin(), chosen_.end(), Edge::make(e.u, e.v, e.label));
}

std::vector<Edge> FractureGraph::chosen_with_label(Label i) const {
  std::vector<Edge> out;
  for (const auto& e : chosen_)
    if (e.label == i) out.push_back(e);
  return out;
}

std::vector<Edge> FractureGraph::unchosen() const {
  std::vector<Edge> out;
  for (const auto& e : base_->graph.edges())
    if (!is_chosen(e)) out.push_back(e);
  return out;
}

LabeledGraph FractureGraph::chosen_graph() const {
  return LabeledGraph(vertex_count(), rank(), chosen_);
}

FractureGraph FractureGraph::replaced(const std::vector<Edge>& removed,
                                      const std::vector<Edge>& added, std::string op,
                                      std::string pattern) const {
  std::vector<Edge> next;
  std::set<Edge> drop(removed.begin(), removed.end());
  for (const auto& e : chosen_)
    if (!drop.count(e)) next.push_back(e);
  if (next.size() + removed.size() != chosen_.size())
    throw PreconditionError("removed edge is not chosen");
  for (const auto& e : added) next.push_back(Edge::make(e.u, e.v, e.label));
  auto trace = trace_;
  trace.push_back(TraceRecord{std::move(op), std::move(pattern), removed, added});
  return FractureGraph(base_, kind_, std::move(next), std::move(trace));
}

FractureResult find_fracture_graph(const Sggi& s, TieBreak tie_break) {
  return find_generic(s, FractureKind::simple, tie_break);
}

FractureResult find_2fracture_graph(const Sggi& s, TieBreak tie_break) {
  return find_generic(s, FractureKind::two, tie_break);
}

FractureGraph swap_edge(const FractureGraph& q, const std::vector<Edge>& cycle, const Edge& e1,
                        const Edge& e2) {
  check_exchange_pattern(q, cycle, e1, e2);
  return q.replaced({e1}, {e2}, "swap", "cycle of length " + std::to_string(cycle.size()));
}

FractureGraph put_in_cycle(const FractureGraph& q, const std::vector<Edge>& cycle, const Edge& e1,
                           const Edge& e2) {
  if (q.kind() != FractureKind::two) throw PreconditionError("put_in_cycle needs a 2-fracture graph");
  check_exchange_pattern(q, cycle, e1, e2);
  Edge other{};
  for (const auto& e : q.chosen_with_label(e1.label))
    if (e != e1) other = e;
  return q.replaced({other}, {e2}, "put_in_cycle",
                    "cycle of length " + std::to_string(cycle.size()));
}

FractureGraph move_square(const FractureGraph& q, const AltSquare& square, const Edge& step,
                          std::optional<Label> keep) {
  if (q.kind() != FractureKind::two) throw PreconditionError("move_square needs a 2-fracture graph");
  const LabeledGraph& g = q.base().graph;
  for (const auto& e : square.edges())
    if (!q.is_chosen(e)) throw PreconditionError("square edge " + edge_text(e) + " is not chosen");
  if (!q.is_chosen(step)) throw PreconditionError("step edge " + edge_text(step) + " is not chosen");
  const auto& sv = square.vertices;
  auto on_square = [&](Point x) { return std::find(sv.begin(), sv.end(), x) != sv.end(); };
  if (on_square(step.u) == on_square(step.v))
    throw PreconditionError("step edge must have exactly one endpoint on the square");
  const Point v = on_square(step.u) ? step.u : step.v;
  const Point w = step.other(v);
  const Label l = step.label;
  auto consecutive = [](Label a, Label b) { return (a > b ? a - b : b - a) < 2; };

  Label kept;
  if (keep) {
    if (*keep != square.i && *keep != square.j)
      throw PreconditionError("kept label is not a label of the square");
    if (consecutive(*keep, l))
      throw PreconditionError("label " + std::to_string(l) + " is consecutive with " +
                              std::to_string(*keep));
    kept = *keep;
  } else if (!consecutive(square.i, l)) {
    kept = square.i;
  } else if (!consecutive(square.j, l)) {
    kept = square.j;
  } else {
    throw PreconditionError("label " + std::to_string(l) + " is consecutive with both square labels");
  }

  const Point x = g.neighbour(v, kept);
  const Point w2 = g.neighbour(w, kept);
  if (w2 == w || g.neighbour(x, l) != w2)
    throw PreconditionError("G has no alternating square through the step edge");
  Edge old_kept{};
  for (const auto& e : square.edges())
    if (e.label == kept && !e.touches(v)) old_kept = e;
  const Edge new_kept = Edge::make(w, w2, kept);
  const Edge new_l = Edge::make(x, w2, l);
  std::vector<Edge> removed{old_kept}, added{new_kept};
  if (!q.is_chosen(new_l)) {
    for (const auto& e : q.chosen_with_label(l))
      if (e != step) removed.push_back(e);
    added.push_back(new_l);
  }
  auto before = census(q).squares;
  auto out = q.replaced(removed, added, "move_square",
                        "q_{" + std::to_string(square.i) + "," + std::to_string(square.j) +
                            "} along " + edge_text(step));
  if (census(out).squares > before)
    throw InvariantViolation("moving the square increased the number of squares");
  return out;
}

FractureGraph change_labels(const FractureGraph& q, const ChangeLabelsSite& site) {
  if (q.kind() != FractureKind::two) throw PreconditionError("change_labels needs a 2-fracture graph");
  const LabeledGraph& g = q.base().graph;
  const Point u = site.corner;
  const Label i = site.i, l = site.l;
  if (i == 0 || i + 1 >= q.rank()) throw PreconditionError("labels i-1 and i+1 must exist");
  if (u >= q.vertex_count()) throw PreconditionError("corner out of range");
  // Chosen square q_{i-1,i+1} at the corner.
  const Point a = g.neighbour(u, i - 1), b = g.neighbour(u, i + 1);
  const Point c = g.neighbour(a, i + 1);
  if (a == u || b == u || c == a || g.neighbour(b, i - 1) != c ||
      !q.is_chosen(Edge::make(u, a, i - 1)) || !q.is_chosen(Edge::make(u, b, i + 1)) ||
      !q.is_chosen(Edge::make(a, c, i + 1)) || !q.is_chosen(Edge::make(b, c, i - 1)))
    throw PreconditionError("corner is not on a chosen square q_{i-1,i+1}");
  const Point p = g.neighbour(u, i);
  if (p == u || !q.is_chosen(Edge::make(u, p, i)))
    throw PreconditionError("no chosen i-edge at the corner");
  const Point s = g.neighbour(p, l);
  if (s == p || !q.is_chosen(Edge::make(p, s, l)))
    throw PreconditionError("no chosen l-edge after the i-edge");
  if ((l > i ? l - i : i - l) < 2) throw PreconditionError("l must not be consecutive with i");
  const Point t = g.neighbour(u, l);
  if (t == u || g.neighbour(t, i) != s)
    throw PreconditionError("G has no square q_{i,l} at the corner");
  const Edge ts = Edge::make(t, s, i), ut = Edge::make(u, t, l);
  if (q.is_chosen(ts) || q.is_chosen(ut)) throw PreconditionError("target edges already chosen");
  return q.replaced({Edge::make(u, p, i), Edge::make(p, s, l)}, {ts, ut}, "change_labels",
                    "corner " + std::to_string(u) + " i=" + std::to_string(i) +
                        " l=" + std::to_string(l));
}

std::vector<std::vector<Edge>> simple_cycles(std::size_t vertices, const std::vector<Edge>& edges,
                                             std::size_t cap) {
  std::vector<std::vector<std::pair<Point, std::size_t>>> adj(vertices);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    adj[edges[k].u].push_back({edges[k].v, k});
    adj[edges[k].v].push_back({edges[k].u, k});
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<Edge>> out;
  std::vector<bool> on_path(vertices, false);
  std::vector<std::size_t> path;
  // Cycles are rooted at their smallest vertex; each is found twice
  // (once per direction) and deduplicated by edge set.
  std::function<void(Point, Point)> dfs = [&](Point start, Point x) {
    for (auto [y, k] : adj[x]) {
      if (!path.empty() && k == path.back()) continue;
      if (y == start && !path.empty()) {
        path.push_back(k);
        auto key = path;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) {
          std::vector<Edge> cyc;
          for (auto idx : path) cyc.push_back(edges[idx]);
          out.push_back(std::move(cyc));
          if (out.size() > cap) throw TerminationFailure("too many cycles to enumerate");
        }
        path.pop_back();
        continue;
      }
      if (y < start || on_path[y]) continue;
      on_path[y] = true;
      path.push_back(k);
      dfs(start, y);
      path.pop_back();
      on_path[y] = false;
    }
  };
  for (Point s = 0; s < vertices; ++s) {
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  return out;
}

namespace {

std::set<Point> cycle_vertices(const std::vector<Edge>& cycle) {
  std::set<Point> out;
  for (const auto& e : cycle) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

}  // namespace

CycleCensus census(const FractureGraph& q) {
  CycleCensus c;
  const std::size_t n = q.vertex_count();
  auto cycles = simple_cycles(n, q.chosen());
  auto comps = components(n, q.chosen());
  c.components = comps.size();
  std::vector<std::size_t> comp_of(n);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (Point x : comps[k]) comp_of[x] = k;
  std::vector<std::size_t> comp_edges(comps.size(), 0), comp_squares(comps.size(), 0);
  for (const auto& e : q.chosen()) ++comp_edges[comp_of[e.u]];
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (comp_edges[k] + 1 == comps[k].size()) ++c.tree_components;

  std::vector<std::vector<Point>> squares;
  for (const auto& cyc : cycles) {
    if (cyc.size() > 4) {
      ++c.big_cycles;
    } else if (cyc.size() == 4) {
      ++c.squares;
      auto vs = cycle_vertices(cyc);
      squares.emplace_back(vs.begin(), vs.end());
      ++comp_squares[comp_of[cyc.front().u]];
    } else {
      ++c.other_cycles;
    }
  }
  for (auto count : comp_squares) c.max_squares_per_component = std::max(c.max_squares_per_component, count);

  // Minimal distance between two squares lying in one component.
  std::optional<std::size_t> best;
  std::vector<std::vector<Point>> adj(n);
  for (const auto& e : q.chosen()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (std::size_t a = 0; a < squares.size(); ++a) {
    std::vector<std::int64_t> dist(n, -1);
    std::deque<Point> queue;
    for (Point x : squares[a]) {
      dist[x] = 0;
      queue.push_back(x);
    }
    while (!queue.empty()) {
      Point x = queue.front();
      queue.pop_front();
      for (Point y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    for (std::size_t b = a + 1; b < squares.size(); ++b) {
      if (comp_of[squares[a][0]] != comp_of[squares[b][0]]) continue;
      std::size_t d = n;
      for (Point x : squares[b]) d = std::min(d, static_cast<std::size_t>(dist[x]));
      best = best ? std::min(*best, d) : d;
    }
  }
  c.min_square_distance = best.value_or(0);
  return c;
}

std::string to_string(ConnectedClass c) {
  switch (c) {
    case ConnectedClass::tree: return "tree";
    case ConnectedClass::pattern_C2xS: return "pattern_C2xS";
    case ConnectedClass::pattern_C2wr: return "pattern_C2wr";
    case ConnectedClass::other: return "other";
  }
  return "other";
}

std::optional<std::pair<ConnectedClass, Label>> match_ladder(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count(), r = g.label_count();
  if (n < 4 || n % 2 != 0 || n / 2 != r) return std::nullopt;
  const std::size_t m = n / 2;
  for (Label rung : {Label{0}, static_cast<Label>(r - 1)}) {
    // Rail labels in order, starting next to the rung label.
    std::vector<Label> rail_labels;
    for (std::size_t k = 1; k < r; ++k) rail_labels.push_back(rung == 0 ? k : r - 1 - k);
    std::vector<Edge> rail_edges, rung_edges;
    for (const auto& e : g.edges()) (e.label == rung ? rung_edges : rail_edges).push_back(e);
    auto comps = components(n, rail_edges);
    if (comps.size() != 2) continue;
    std::vector<std::vector<Point>> rails;
    for (const auto& comp : comps) {
      if (comp.size() != m) break;
      // Walk from the vertex whose first rail edge carries rail_labels[0] and
      // which has no other rail edge.
      std::optional<Point> start;
      for (Point x : comp) {
        std::size_t deg = 0;
        for (Label l : rail_labels)
          if (g.neighbour(x, l) != x) ++deg;
        if (deg == 1 && g.neighbour(x, rail_labels[0]) != x) start = x;
      }
      if (!start) break;
      std::vector<Point> walk{*start};
      bool ok = true;
      for (Label l : rail_labels) {
        Point nxt = g.neighbour(walk.back(), l);
        if (nxt == walk.back()) {
          ok = false;
          break;
        }
        walk.push_back(nxt);
      }
      if (!ok || std::set<Point>(walk.begin(), walk.end()).size() != m) break;
      rails.push_back(std::move(walk));
    }
    if (rails.size() != 2) continue;
    std::vector<bool> column_has_rung(m, false);
    bool ok = true;
    for (const auto& e : rung_edges) {
      auto col_a = std::find(rails[0].begin(), rails[0].end(), e.u) - rails[0].begin();
      auto col_b = std::find(rails[1].begin(), rails[1].end(), e.v) - rails[1].begin();
      if (col_a == static_cast<long>(m) || col_b == static_cast<long>(m)) {
        col_a = std::find(rails[0].begin(), rails[0].end(), e.v) - rails[0].begin();
        col_b = std::find(rails[1].begin(), rails[1].end(), e.u) - rails[1].begin();
      }
      if (col_a != col_b || col_a == static_cast<long>(m)) {
        ok = false;
        break;
      }
      column_has_rung[static_cast<std::size_t>(col_a)] = true;
    }
    if (!ok) continue;
    auto rungs = static_cast<std::size_t>(std::count(column_has_rung.begin(), column_has_rung.end(), true));
    if (rungs == m) return std::pair{ConnectedClass::pattern_C2xS, rung};
    if (rungs + 1 == m && !column_has_rung[0]) return std::pair{ConnectedClass::pattern_C2wr, rung};
  }
  return std::nullopt;
}

Classification classify_connected(const FractureGraph& q) {
  if (q.kind() != FractureKind::two) throw PreconditionError("classification needs a 2-fracture graph");
  if (components(q.vertex_count(), q.chosen()).size() != 1)
    throw PreconditionError("classification needs a connected 2-fracture graph");
  Classification out;
  out.group_order = q.base().sggi.group().order();
  if (q.chosen().size() + 1 == q.vertex_count()) {
    out.kind = ConnectedClass::tree;
    return out;
  }
  if (auto ladder = match_ladder(q.base().graph)) {
    out.kind = ladder->first;
    out.rung_label = ladder->second;
  }
  return out;
}

bool FractureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InvariantCheck& c) { return !c.applicable || c.passed; });
}

FractureReport check_fracture_invariants(const FractureGraph& q) {
  return check_fracture_invariants(q.base(), q.kind(), q.chosen());
}

FractureReport check_fracture_invariants(const FractureBase& base, FractureKind kind,
                                         const std::vector<Edge>& chosen) {
  FractureReport report;
  const LabeledGraph& g = base.graph;
  const std::size_t n = g.vertex_count(), r = g.label_count();

  InvariantCheck type{"type", true, true, {}, {}};
  std::vector<std::size_t> count(r, 0);
  std::set<Edge> distinct;
  for (const auto& e : chosen) {
    if (!g.has_edge(e) || !base.crosses(e) || !distinct.insert(e).second) {
      type.passed = false;
      type.witness = {e};
      type.detail = "edge not in G, inside one orbit, or repeated";
      break;
    }
    ++count[e.label];
  }
  for (Label i = 0; i < r && type.passed; ++i)
    if (count[i] != per_label(kind)) {
      type.passed = false;
      type.detail = "label " + std::to_string(i) + " has " + std::to_string(count[i]) + " edges";
    }
  report.checks.push_back(type);

  // Every path in G between the ends of a chosen i-edge uses another i-edge.
  InvariantCheck paths{"paths", true, true, {}, {}};
  for (const auto& e : chosen) {
    std::vector<Edge> others;
    for (const auto& f : g.edges())
      if (f.label != e.label) others.push_back(f);
    std::vector<Edge> path;
    if (!bfs_path(n, others, e.u, e.v, &path).empty()) {
      paths.passed = false;
      path.push_back(e);
      paths.witness = path;
      paths.detail = "path avoiding label " + std::to_string(e.label);
      break;
    }
  }
  report.checks.push_back(paths);

  const bool two = kind == FractureKind::two;
  InvariantCheck isoncy{"isoncy", two, true, {}, {}};
  InvariantCheck common{"common", two, true, {}, {}};
  InvariantCheck cons{"cons", two, true, {}, {}};
  if (two) {
    std::set<std::pair<Point, Point>> pairs;
    for (const auto& e : chosen)
      if (!pairs.insert({e.u, e.v}).second) {
        isoncy.passed = false;
        isoncy.witness = {e};
        isoncy.detail = "multiple edge";
      }
    for (const auto& e : chosen) {
      if (!isoncy.passed) break;
      std::vector<Edge> others;
      for (const auto& f : chosen)
        if (f.label != e.label) others.push_back(f);
      std::vector<Edge> path;
      if (!bfs_path(n, others, e.u, e.v, &path).empty()) {
        isoncy.passed = false;
        path.push_back(e);
        isoncy.witness = path;
        isoncy.detail = "cycle with a single " + std::to_string(e.label) + "-edge";
      }
    }

    auto cycles = simple_cycles(n, chosen);
    for (std::size_t a = 0; a < cycles.size() && common.passed; ++a) {
      std::set<Edge> ea(cycles[a].begin(), cycles[a].end());
      for (std::size_t b = a + 1; b < cycles.size() && common.passed; ++b) {
        std::vector<std::size_t> shared(r, 0);
        std::vector<Edge> inter;
        for (const auto& e : cycles[b])
          if (ea.count(e)) {
            ++shared[e.label];
            inter.push_back(e);
          }
        bool square_edge_shared = !inter.empty() && (cycles[a].size() == 4 || cycles[b].size() == 4);
        for (Label i = 0; i < r; ++i)
          if (shared[i] == 1 || square_edge_shared) {
            common.passed = false;
            common.witness = inter;
            common.detail = square_edge_shared ? "square edge shared with another cycle"
                                               : "a single " + std::to_string(i) + "-edge is shared";
            break;
          }
      }
    }

    for (const auto& cyc : cycles) {
      if (cyc.size() <= 4) continue;
      bool found = false;
      for (std::size_t k = 0; k < cyc.size() && !found; ++k) {
        const Edge& e = cyc[k];
        const Edge& f = cyc[(k + 1) % cyc.size()];
        Label d = e.label > f.label ? e.label - f.label : f.label - e.label;
        if (d >= 2) found = true;
      }
      if (!found) {
        cons.passed = false;
        cons.witness = cyc;
        cons.detail = "big cycle whose adjacent labels are all consecutive";
        break;
      }
    }
  }
  report.checks.push_back(isoncy);
  report.checks.push_back(common);
  report.checks.push_back(cons);
  return report;
}

std::string trace_to_jsonl(const std::vector<TraceRecord>& trace) {
  std::string out;
  auto edges_json = [](const std::vector<Edge>& es) {
    auto arr = nlohmann::json::array();
    for (const auto& e : es) arr.push_back({e.u, e.v, e.label});
    return arr;
  };
  for (const auto& t : trace) {
    nlohmann::json j;
    j["op"] = t.op;
    j["pattern"] = t.pattern;
    j["removed"] = edges_json(t.removed);
    j["added"] = edges_json(t.added);
    out += j.dump() + "\n";
  }
  return out;
}

std::string fracture_to_dot(const FractureGraph& q) {
  DotStyle style;
  style.graph_name = q.kind() == FractureKind::two ? "two_fracture" : "fracture";
  style.dashed = q.unchosen();
  return to_dot(q.base().graph, style);
}

}  // namespace scg
