#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "scg/sggi.hpp"

namespace scg {

using Label = std::size_t;

/// An undirected labelled edge, stored with u < v.
struct Edge {
  Point u = 0;
  Point v = 0;
  Label label = 0;

  static Edge make(Point a, Point b, Label label) {
    return a < b ? Edge{a, b, label} : Edge{b, a, label};
  }
  bool touches(Point x) const noexcept { return u == x || v == x; }
  Point other(Point x) const noexcept { return x == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge-labelled multigraph in which each label class is a partial matching.
/// Serves both as the permutation representation graph of an sggi and as the
/// chosen subgraph of a fracture graph.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Throws InputError on loops, out-of-range endpoints or labels, or a vertex
  /// carrying two edges of the same label.
  LabeledGraph(std::size_t vertices, std::size_t labels, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t label_count() const noexcept { return r_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbour of `x` along its `label` edge, or `x` itself when there is none.
  Point neighbour(Point x, Label label) const { return partner_[label][x]; }
  bool has_edge(const Edge& e) const;

  std::vector<Edge> edges_with_label(Label label) const;
  std::vector<Edge> incident(Point x) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<Edge> edges_;  // sorted
  std::vector<std::vector<Point>> partner_;
};

/// A 4-cycle whose opposite edges share a label; vertices listed in cycle
/// order with edges (v0,v1),(v2,v3) labelled `i` and (v1,v2),(v3,v0) labelled `j`.
struct AltSquare {
  std::array<Point, 4> vertices{};
  Label i = 0;
  Label j = 0;

  std::array<Edge, 4> edges() const;
  friend auto operator<=>(const AltSquare&, const AltSquare&) = default;
};

/// One i-edge per 2-cycle of each rho_i, on vertices 0..n-1.
LabeledGraph to_graph(const Sggi& s);

/// rho_i is the product of the i-labelled edges as transpositions. Throws
/// InputError if the result violates the string property.
Sggi from_graph(const LabeledGraph& g);

/// Every alternating square, each reported once with i < j and the smallest
/// vertex first.
std::vector<AltSquare> alternating_squares(const LabeledGraph& g);

bool is_connected(const LabeledGraph& g);

/// Connected components (sorted vertex lists, by smallest vertex).
std::vector<std::vector<Point>> components(std::size_t vertices, const std::vector<Edge>& edges);

struct DotStyle {
  std::string graph_name = "G";
  std::vector<Edge> dashed;  // drawn with style=dashed
};

/// Graphviz export: one edge per (u, v, label) with label="i", vertices in
/// increasing order, 1-indexed vertex names.
std::string to_dot(const LabeledGraph& g, const DotStyle& style = {});

/// {"n": ..., "edges": [[u, v, label], ...]} with 0-based vertices.
std::string to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);

}  // namespace scg
