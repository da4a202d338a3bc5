#include <doctest.h>

#include <set>

#include "scg/errors.hpp"
#include "scg/io.hpp"
#include "scg/labeled_graph.hpp"
#include "scg/sggi.hpp"
#include "support.hpp"

using namespace scg;
using scg::test::cyc;

namespace {

// Intersection property straight from the definition: element sets of every
// parabolic, compared pairwise.
bool oracle_intersection(const Sggi& s) {
  const std::size_t r = s.rank();
  std::vector<std::set<Permutation>> sets(std::size_t{1} << r);
  for (std::size_t mask = 0; mask < sets.size(); ++mask) {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) gens.push_back(s[i]);
    auto c = brute_force_closure(s.degree(), gens);
    sets[mask] = std::set<Permutation>(c->begin(), c->end());
  }
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) {
      std::size_t both = 0;
      for (const auto& x : sets[a]) both += sets[b].count(x);
      if (both != sets[a & b].size()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("string property") {
  CHECK(check_string_property({cyc(4, {{0, 1}}), cyc(4, {{1, 2}}), cyc(4, {{2, 3}})}).holds);
  auto bad = check_string_property({cyc(4, {{0, 1}}), cyc(4, {{2, 3}}), cyc(4, {{1, 2}})});
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.violating_pair);
  CHECK(*bad.violating_pair == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(check_string_property({cyc(2, {{0, 1}})}).holds);
  CHECK_THROWS_AS(check_string_property({cyc(3, {{0, 1, 2}})}), InputError);
  CHECK_THROWS_AS(Sggi({cyc(4, {{0, 1}}), cyc(4, {{2, 3}}), cyc(4, {{1, 2}})}), InputError);
}

TEST_CASE("parabolic subgroups") {
  auto s = test::s4_coxeter();
  CHECK(parabolic(s, {0, 1, 2}) == s);
  CHECK(parabolic_group(s, {}).order() == 1);
  CHECK(parabolic_group(s, {0, 2}).order() == 4);
  CHECK(maximal_parabolic(s, 1).order() == 4);
  CHECK(maximal_parabolic(s, 0).order() == 6);
  CHECK_THROWS_AS(parabolic(s, {5}), PreconditionError);
}

TEST_CASE("intersection property") {
  CHECK(check_intersection_property(test::s4_coxeter()).holds);
  Sggi v4({cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}}), cyc(4, {{0, 3}, {1, 2}})});
  auto res = check_intersection_property(v4);
  CHECK_FALSE(res.holds);
  REQUIRE(res.witness);
  CHECK(res.witness->first == IndexSet{0, 1});
  CHECK(res.witness->second == IndexSet{2});
  CHECK_FALSE(check_intersection_property_fast(v4));
  CHECK(is_string_cgroup(Sggi({cyc(5, {{0, 1}, {2, 3}}), cyc(5, {{1, 2}, {3, 4}})})));
}

TEST_CASE("intersection checks agree with the element-set oracle") {
  std::mt19937_64 rng(3);
  int agreed = 0;
  for (int t = 0; t < 400 && agreed < 80; ++t) {
    std::size_t n = 4 + t % 4;
    std::size_t r = 2 + t % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(test::random_involution(n, rng));
    // force the string property by retrying
    if (!check_string_property(gens).holds) continue;
    Sggi s(gens, n);
    bool oracle = oracle_intersection(s);
    CHECK(check_intersection_property(s).holds == oracle);
    CHECK(check_intersection_property_fast(s) == oracle);
    ++agreed;
  }
  CHECK(agreed >= 40);
}

TEST_CASE("dual") {
  auto s = test::s4_coxeter();
  CHECK(dual(s) == Sggi({cyc(4, {{2, 3}}), cyc(4, {{1, 2}}), cyc(4, {{0, 1}})}));
  CHECK(dual(dual(s)) == s);
  Sggi one({cyc(2, {{0, 1}})});
  CHECK(dual(one) == one);
}

TEST_CASE("diagram") {
  auto d = diagram(test::s4_coxeter());
  CHECK(d.schlafli() == std::vector<std::uint64_t>{3, 3});
  CHECK(d.is_connected());
  auto e = diagram(Sggi({cyc(4, {{0, 1}}), cyc(4, {{2, 3}})}));
  CHECK(e.edges.empty());
  CHECK_FALSE(e.is_connected());
  // rows are 1-based in the table, (1,2)(3,4) and (2,3)(4,5)
  auto d10 = diagram(Sggi({parse_cycles("(1,2)(3,4)", 5), parse_cycles("(2,3)(4,5)", 5)}));
  REQUIRE(d10.edges.size() == 1);
  CHECK(d10.edges[0].label == 5);
  CHECK(product_order(cyc(6, {{0, 1}}), cyc(6, {{2, 3, 4}})) == 6);
}

TEST_CASE("restriction to an orbit") {
  Sggi s({cyc(6, {{0, 1}, {2, 3}}), cyc(6, {{2, 3}, {4, 5}})});
  auto r = restrict_to_orbit(s, {2, 3});
  CHECK(r.active == IndexSet{0, 1});
  CHECK(r.restricted[0] == cyc(2, {{0, 1}}));
  CHECK(r.restricted[1] == cyc(2, {{0, 1}}));
  auto whole = restrict_to_orbit(s, {0, 1, 2, 3, 4, 5});
  CHECK(whole.sggi == s);
  CHECK_THROWS_AS(restrict_to_orbit(s, {1, 2}), PreconditionError);
}

TEST_CASE("permutation representation graphs") {
  auto g1 = to_graph(Sggi({cyc(2, {{0, 1}})}));
  CHECK(g1.edges() == std::vector<Edge>{{0, 1, 0}});
  auto g = to_graph(test::s4_coxeter());
  CHECK(g.edges() == std::vector<Edge>{{0, 1, 0}, {1, 2, 1}, {2, 3, 2}});
  auto p = to_graph(test::prism());
  CHECK(p.edges().size() == 10);
  CHECK(from_graph(p) == test::prism());
  auto squares = alternating_squares(p);
  std::set<std::pair<Label, Label>> types;
  for (const auto& q : squares) types.insert({q.i, q.j});
  CHECK(types == std::set<std::pair<Label, Label>>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(alternating_squares(g).empty());
  LabeledGraph sq(4, 3, {{0, 1, 0}, {1, 2, 2}, {2, 3, 0}, {0, 3, 2}});
  REQUIRE(alternating_squares(sq).size() == 1);
  CHECK(alternating_squares(sq)[0].i == 0);
  CHECK(alternating_squares(sq)[0].j == 2);
}

TEST_CASE("graph to generators") {
  LabeledGraph e(2, 1, {{0, 1, 0}});
  CHECK(from_graph(e)[0] == cyc(2, {{0, 1}}));
  LabeledGraph path(5, 2, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 4, 1}});
  auto s = from_graph(path);
  CHECK(s[0] == cyc(5, {{0, 1}, {2, 3}}));
  CHECK(s[1] == cyc(5, {{1, 2}, {3, 4}}));
  CHECK(s.group().order() == 10);
  LabeledGraph a9(9, 4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 4, 1}, {4, 5, 2}, {5, 6, 3}, {6, 7, 2}, {7, 8, 3}});
  CHECK(from_graph(a9).group().order() == 181440);
  CHECK_THROWS_AS(LabeledGraph(3, 1, {{0, 1, 0}, {1, 2, 0}}), InputError);
  CHECK_THROWS_AS(LabeledGraph(3, 1, {{0, 0, 0}}), InputError);
}

TEST_CASE("DOT and JSON export") {
  auto g = to_graph(test::s4_coxeter());
  auto dot = to_dot(g);
  CHECK(dot.find("1 -- 2 [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("3 -- 4 [label=\"2\"]") != std::string::npos);
  DotStyle style;
  style.dashed = {{1, 2, 1}};
  CHECK(to_dot(g, style).find("style=dashed") != std::string::npos);
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 2}"), InputError);
}

TEST_CASE("sggi file formats") {
  auto s = test::s4_coxeter();
  CHECK(parse_sggi(sggi_to_json(s)) == s);
  CHECK(parse_sggi("# S4\n(1,2)\n(2,3)\n(3,4)\n") == s);
  CHECK(parse_sggi("degree 5\n(1,2)\n(2,3)\n").degree() == 5);
  CHECK_THROWS_AS(parse_sggi("(1,2\n"), InputError);
  CHECK_THROWS_AS(parse_sggi("{\"degree\": 4}"), InputError);
}
