#include "scg/labeled_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "scg/errors.hpp"

namespace scg {

LabeledGraph::LabeledGraph(std::size_t vertices, std::size_t labels, std::vector<Edge> edges)
    : n_(vertices), r_(labels), edges_(std::move(edges)) {
  partner_.assign(r_, std::vector<Point>(n_));
  for (auto& row : partner_) std::iota(row.begin(), row.end(), Point{0});
  for (auto& e : edges_) {
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (e.u >= n_ || e.v >= n_) throw InputError("edge endpoint out of range");
    if (e.label >= r_) throw InputError("edge label out of range");
    e = Edge::make(e.u, e.v, e.label);
    auto& row = partner_[e.label];
    if (row[e.u] != e.u || row[e.v] != e.v)
      throw InputError("label " + std::to_string(e.label) + " is not a matching at edge {" +
                       std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    row[e.u] = e.v;
    row[e.v] = e.u;
  }
  std::sort(edges_.begin(), edges_.end());
}

bool LabeledGraph::has_edge(const Edge& e) const {
  return e.label < r_ && e.u < n_ && e.v < n_ && partner_[e.label][e.u] == e.v && e.u != e.v;
}

std::vector<Edge> LabeledGraph::edges_with_label(Label label) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.label == label) out.push_back(e);
  return out;
}

std::vector<Edge> LabeledGraph::incident(Point x) const {
  std::vector<Edge> out;
  for (Label l = 0; l < r_; ++l)
    if (partner_[l][x] != x) out.push_back(Edge::make(x, partner_[l][x], l));
  return out;
}

std::array<Edge, 4> AltSquare::edges() const {
  const auto& v = vertices;
  return {Edge::make(v[0], v[1], i), Edge::make(v[1], v[2], j), Edge::make(v[2], v[3], i),
          Edge::make(v[3], v[0], j)};
}

LabeledGraph to_graph(const Sggi& s) {
  std::vector<Edge> edges;
  for (Label l = 0; l < s.rank(); ++l)
    for (const auto& c : s[l].cycles()) edges.push_back(Edge::make(c[0], c[1], l));
  return LabeledGraph(s.degree(), s.rank(), std::move(edges));
}

Sggi from_graph(const LabeledGraph& g) {
  std::vector<Permutation> gens;
  for (Label l = 0; l < g.label_count(); ++l) {
    std::vector<Point> images(g.vertex_count());
    for (Point x = 0; x < g.vertex_count(); ++x) images[x] = g.neighbour(x, l);
    gens.emplace_back(std::move(images));
  }
  return Sggi(std::move(gens), g.vertex_count());
}

std::vector<AltSquare> alternating_squares(const LabeledGraph& g) {
  std::set<AltSquare> found;
  const std::size_t r = g.label_count();
  for (Point a = 0; a < g.vertex_count(); ++a) {
    for (Label i = 0; i < r; ++i) {
      Point b = g.neighbour(a, i);
      if (b == a) continue;
      for (Label j = i + 1; j < r; ++j) {
        Point c = g.neighbour(b, j);
        if (c == b) continue;
        Point d = g.neighbour(c, i);
        if (d == c || g.neighbour(d, j) != a) continue;
        std::array<Point, 4> cyc{a, b, c, d};
        if (std::set<Point>(cyc.begin(), cyc.end()).size() != 4) continue;
        // Rotate so the smallest vertex comes first, keeping (v0,v1) an i-edge.
        std::array<Point, 4> best = cyc;
        std::array<std::array<Point, 4>, 2> options{{{a, b, c, d}, {c, d, a, b}}};
        for (const auto& o : options)
          if (o < best) best = o;
        // Also allow the reversed orientation, which keeps (v0,v1) an i-edge.
        std::array<Point, 4> rev1{b, a, d, c}, rev2{d, c, b, a};
        if (rev1 < best) best = rev1;
        if (rev2 < best) best = rev2;
        found.insert(AltSquare{best, i, j});
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<Point>> components(std::size_t vertices, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Point>> out;
  std::vector<std::size_t> slot(vertices, vertices);
  for (Point x = 0; x < vertices; ++x) {
    auto root = find(x);
    if (slot[root] == vertices) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(x);
  }
  return out;
}

bool is_connected(const LabeledGraph& g) {
  return g.vertex_count() <= 1 || components(g.vertex_count(), g.edges()).size() == 1;
}

std::string to_dot(const LabeledGraph& g, const DotStyle& style) {
  std::set<Edge> dashed(style.dashed.begin(), style.dashed.end());
  std::ostringstream os;
  os << "graph " << style.graph_name << " {\n";
  os << "  node [shape=circle];\n";
  for (Point x = 0; x < g.vertex_count(); ++x) os << "  " << x + 1 << ";\n";
  for (const auto& e : g.edges()) {
    os << "  " << e.u + 1 << " -- " << e.v + 1 << " [label=\"" << e.label << "\"";
    if (dashed.count(e)) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["labels"] = g.label_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v, e.label});
  return j.dump();
}

LabeledGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("graph JSON: ") + ex.what());
  }
  if (!j.contains("n") || !j.contains("edges")) throw InputError("graph JSON needs \"n\" and \"edges\"");
  std::vector<Edge> edges;
  std::size_t labels = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) throw InputError("graph edge must be [u, v, label]");
    auto label = e[2].get<std::size_t>();
    labels = std::max(labels, label + 1);
    edges.push_back(Edge{e[0].get<Point>(), e[1].get<Point>(), label});
  }
  if (j.contains("labels")) labels = std::max(labels, j["labels"].get<std::size_t>());
  return LabeledGraph(j["n"].get<std::size_t>(), labels, std::move(edges));
}

}  // namespace scg
