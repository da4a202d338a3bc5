#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scg/labeled_graph.hpp"
#include "scg/sggi.hpp"

namespace scg {

enum class FractureKind { simple, two };

/// How to pick among several orbit-crossing i-edges. Without a seed the
/// lexicographically smallest edges win; with a seed the choice is uniform
/// random from a generator seeded with it.
struct TieBreak {
  std::optional<std::uint64_t> seed;
};

/// One applied rewrite, serialised as a JSON line by trace_to_jsonl().
struct TraceRecord {
  std::string op;
  std::string pattern;
  std::vector<Edge> removed;
  std::vector<Edge> added;
};

/// The sggi, its permutation representation graph, and the Gamma_i orbit of
/// every point for every label. Shared read-only by all fracture graphs
/// derived from the same sggi.
struct FractureBase {
  explicit FractureBase(Sggi s);

  Sggi sggi;
  LabeledGraph graph;
  std::vector<std::vector<std::size_t>> orbit_id;  // orbit_id[i][x]: Gamma_i orbit of x

  bool crosses(const Edge& e) const { return orbit_id[e.label][e.u] != orbit_id[e.label][e.v]; }
  /// Edges of G with label i whose endpoints lie in different Gamma_i orbits.
  std::vector<Edge> crossing_edges(Label i) const;
};

/// A fracture graph (one orbit-crossing i-edge per label) or a 2-fracture
/// graph (two per label), as a chosen subgraph of the permutation
/// representation graph. Values are cheap to copy; rewrites return new values.
class FractureGraph {
 public:
  /// Throws InvariantViolation unless `chosen` satisfies the type invariants.
  FractureGraph(std::shared_ptr<const FractureBase> base, FractureKind kind,
                std::vector<Edge> chosen, std::vector<TraceRecord> trace = {});

  const FractureBase& base() const noexcept { return *base_; }
  std::shared_ptr<const FractureBase> base_ptr() const noexcept { return base_; }
  FractureKind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return base_->graph.vertex_count(); }
  std::size_t rank() const noexcept { return base_->sggi.rank(); }

  const std::vector<Edge>& chosen() const noexcept { return chosen_; }
  bool is_chosen(const Edge& e) const;
  std::vector<Edge> chosen_with_label(Label i) const;
  /// Edges of G that are not chosen (drawn dashed).
  std::vector<Edge> unchosen() const;
  LabeledGraph chosen_graph() const;

  const std::vector<TraceRecord>& trace() const noexcept { return trace_; }

  /// Replaces edges and appends a trace record; validates the result.
  FractureGraph replaced(const std::vector<Edge>& removed, const std::vector<Edge>& added,
                         std::string op, std::string pattern) const;

  friend bool operator==(const FractureGraph& a, const FractureGraph& b) {
    return a.base_ == b.base_ && a.kind_ == b.kind_ && a.chosen_ == b.chosen_;
  }

 private:
  std::shared_ptr<const FractureBase> base_;
  FractureKind kind_;
  std::vector<Edge> chosen_;  // sorted
  std::vector<TraceRecord> trace_;
};

struct NoneReason {
  Label label = 0;
  std::string explanation;
};

using FractureResult = std::variant<FractureGraph, NoneReason>;

/// Simple fracture graph: one orbit-crossing edge per label. Returns the
/// failing label when some Gamma_i is transitive. Throws PreconditionError
/// when the whole group is intransitive.
FractureResult find_fracture_graph(const Sggi& s, TieBreak tie_break = {});

/// 2-fracture graph: two orbit-crossing edges per label. Returns the failing
/// label when some rho_i has fewer than two crossing 2-cycles.
FractureResult find_2fracture_graph(const Sggi& s, TieBreak tie_break = {});

// Rewrites. Each validates its pattern and throws PreconditionError when the
// input does not match.

/// `cycle` is a cycle of G holding exactly two i-edges e1 (chosen) and e2
/// (not chosen); e1 is replaced by e2.
FractureGraph swap_edge(const FractureGraph& q, const std::vector<Edge>& cycle, const Edge& e1,
                        const Edge& e2);

/// As swap_edge, but the chosen i-edge other than e1 is replaced by e2.
FractureGraph put_in_cycle(const FractureGraph& q, const std::vector<Edge>& cycle,
                           const Edge& e1, const Edge& e2);

/// Slides a fully chosen alternating square one step along the chosen edge
/// `step` (label l, one endpoint on the square). The square's edges labelled
/// `keep` stay parallel; `keep` defaults to a square label not consecutive
/// with l. Throws PreconditionError when l is consecutive with `keep`.
FractureGraph move_square(const FractureGraph& q, const AltSquare& square, const Edge& step,
                          std::optional<Label> keep = std::nullopt);

/// The four-edge relabelling around a chosen square q_{i-1,i+1}: at `corner`
/// the chosen i-edge {corner,p} and chosen l-edge {p,s} are exchanged for the
/// l-edge {corner,t} and i-edge {t,s} of G.
struct ChangeLabelsSite {
  Point corner = 0;
  Label i = 0;
  Label l = 0;
};
FractureGraph change_labels(const FractureGraph& q, const ChangeLabelsSite& site);

/// Simple cycles of a graph as edge lists in traversal order; throws
/// TerminationFailure past `cap` cycles.
std::vector<std::vector<Edge>> simple_cycles(std::size_t vertices, const std::vector<Edge>& edges,
                                             std::size_t cap = 100'000);

struct CycleCensus {
  std::size_t big_cycles = 0;   // more than four vertices
  std::size_t squares = 0;      // exactly four vertices
  std::size_t other_cycles = 0; // fewer than four vertices (never in a valid 2-fracture graph)
  std::size_t components = 0;
  std::size_t tree_components = 0;
  std::size_t max_squares_per_component = 0;
  std::size_t min_square_distance = 0;  // between squares of one component; 0 if none
};
CycleCensus census(const FractureGraph& q);

/// Repeatedly breaks big cycles through a pair of adjacent edges with
/// nonconsecutive labels until every cycle is an alternating square.
FractureGraph normalize_no_big_cycles(const FractureGraph& q);

/// Produces a graph without big cycles whose components each hold at most
/// one square. Strictly decreases (square count, minimal distance between
/// squares of a component) per iteration.
FractureGraph normalize_one_square_per_component(const FractureGraph& q);

/// For a disconnected graph normalised as above, rewires until some
/// component is a tree and the others hold exactly one square.
FractureGraph normalize_disconnected(const FractureGraph& q);

enum class ConnectedClass { tree, pattern_C2xS, pattern_C2wr, other };
std::string to_string(ConnectedClass c);

struct Classification {
  ConnectedClass kind = ConnectedClass::other;
  std::uint64_t group_order = 0;
  std::optional<Label> rung_label;  // for the ladder patterns
};

/// Classifies a connected, normalised 2-fracture graph: a tree, one of the
/// two ladder permutation representation graphs, or other.
Classification classify_connected(const FractureGraph& q);

/// Matches the permutation representation graph against the closed ladder
/// (every column has a rung) and the ladder missing its first rung.
std::optional<std::pair<ConnectedClass, Label>> match_ladder(const LabeledGraph& g);

struct InvariantCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::vector<Edge> witness;
  std::string detail;
};

struct FractureReport {
  std::vector<InvariantCheck> checks;
  bool all_passed() const;
};

/// Type invariants plus the path, cycle-parity, common-edge and
/// consecutive-label properties, each with a witness on failure. Only the
/// type invariants and the path property apply to simple fracture graphs.
FractureReport check_fracture_invariants(const FractureGraph& q);

/// Same checks on an arbitrary edge selection (which may break the type
/// invariants). Used to exercise the checker on corrupted graphs.
FractureReport check_fracture_invariants(const FractureBase& base, FractureKind kind,
                                         const std::vector<Edge>& chosen);

std::string trace_to_jsonl(const std::vector<TraceRecord>& trace);
std::string fracture_to_dot(const FractureGraph& q);

}  // namespace scg
