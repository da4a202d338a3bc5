#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "scg/errors.hpp"
#include "scg/fracture.hpp"
#include "scg/io.hpp"

using namespace scg;
using scg::test::cyc;

namespace {

FractureGraph two_fracture(const Sggi& s, std::optional<std::uint64_t> seed = std::nullopt) {
  auto r = find_2fracture_graph(s, TieBreak{seed});
  REQUIRE(std::holds_alternative<FractureGraph>(r));
  return std::get<FractureGraph>(r);
}

const std::vector<Sggi>& corpus() {
  static const auto c = test::fracture_corpus();
  return c;
}

}  // namespace

TEST_CASE("simple fracture graphs") {
  auto r = find_fracture_graph(test::s4_coxeter());
  REQUIRE(std::holds_alternative<FractureGraph>(r));
  auto q = std::get<FractureGraph>(r);
  CHECK(q.chosen() == std::vector<Edge>{{0, 1, 0}, {1, 2, 1}, {2, 3, 2}});
  CHECK(check_fracture_invariants(q).all_passed());

  auto d10 = find_fracture_graph(Sggi({parse_cycles("(1,2)(3,4)", 5), parse_cycles("(2,3)(4,5)", 5)}));
  REQUIRE(std::holds_alternative<FractureGraph>(d10));
  const auto& chosen = std::get<FractureGraph>(d10).chosen();
  REQUIRE(chosen.size() == 2);
  // a path: the two edges share a vertex
  CHECK((chosen[0].touches(chosen[1].u) || chosen[0].touches(chosen[1].v)));

  // Gamma_2 = <(0 1)(2 3), (1 2)> is transitive
  Sggi t({cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{1, 2}}), cyc(4, {{0, 1}})});
  auto none = find_fracture_graph(t);
  REQUIRE(std::holds_alternative<NoneReason>(none));
  CHECK(std::get<NoneReason>(none).label == 2);

  CHECK_THROWS_AS(find_fracture_graph(Sggi({cyc(4, {{0, 1}}), cyc(4, {{2, 3}})})), PreconditionError);
}

TEST_CASE("2-fracture graphs") {
  auto none = find_2fracture_graph(test::s4_coxeter());
  REQUIRE(std::holds_alternative<NoneReason>(none));
  CHECK(std::get<NoneReason>(none).label == 0);

  auto q = two_fracture(test::prism());
  CHECK(q.chosen().size() == 8);
  auto rungs = q.chosen_with_label(0);
  CHECK(rungs.size() == 2);
  for (const auto& e : rungs) CHECK(e.v == e.u + 4);
  CHECK(check_fracture_invariants(q).all_passed());
}

TEST_CASE("seeded tie-breaks are reproducible") {
  auto a = two_fracture(test::prism(), 5);
  auto b = two_fracture(test::prism(), 5);
  CHECK(a.chosen() == b.chosen());
}

TEST_CASE("invariant checker reports corrupted selections") {
  auto q = two_fracture(test::prism());
  auto chosen = q.chosen();
  chosen.pop_back();
  auto rep = check_fracture_invariants(q.base(), FractureKind::two, chosen);
  CHECK_FALSE(rep.all_passed());
  CHECK_FALSE(rep.checks.front().passed);
  // an edge inside a Gamma_i orbit
  auto bad = q.chosen();
  bad.push_back({0, 1, 1});
  CHECK_FALSE(check_fracture_invariants(q.base(), FractureKind::two, bad).all_passed());
  CHECK_THROWS_AS(FractureGraph(q.base_ptr(), FractureKind::two, chosen), InvariantViolation);
}

TEST_CASE("swap within a cycle of G") {
  std::size_t swaps = 0;
  for (const auto& s : corpus()) {
    auto q = two_fracture(s);
    auto cycles = simple_cycles(q.vertex_count(), q.base().graph.edges());
    for (const auto& c : cycles) {
      for (Label i = 0; i < q.rank(); ++i) {
        std::vector<Edge> with;
        for (const auto& e : c)
          if (e.label == i) with.push_back(e);
        if (with.size() != 2 || q.is_chosen(with[0]) == q.is_chosen(with[1])) continue;
        auto e1 = q.is_chosen(with[0]) ? with[0] : with[1];
        auto e2 = q.is_chosen(with[0]) ? with[1] : with[0];
        auto out = swap_edge(q, c, e1, e2);
        CHECK(out.is_chosen(e2));
        CHECK_FALSE(out.is_chosen(e1));
        CHECK(check_fracture_invariants(out).all_passed());
        CHECK(out.trace().size() == q.trace().size() + 1);
        // e2 already chosen now
        CHECK_THROWS_AS(swap_edge(out, c, e1, e2), PreconditionError);
        ++swaps;
      }
    }
    if (swaps > 50) break;
  }
  CHECK(swaps > 0);
}

TEST_CASE("moving squares") {
  std::size_t moves = 0, refused = 0;
  for (const auto& s : corpus()) {
    auto q = two_fracture(s);
    q = normalize_no_big_cycles(q);
    auto chosen_g = q.chosen_graph();
    for (const auto& sq : alternating_squares(chosen_g)) {
      for (const auto& step : q.chosen()) {
        bool touches = false;
        for (auto v : sq.vertices) touches |= step.touches(v);
        if (!touches || step.label == sq.i || step.label == sq.j) continue;
        bool on_square = false;
        for (const auto& e : sq.edges()) on_square |= e == step;
        if (on_square) continue;
        const Label l = step.label;
        for (Label keep : {sq.i, sq.j}) {
          try {
            auto out = move_square(q, sq, step, keep);
            CHECK(check_fracture_invariants(out).all_passed());
            CHECK(census(out).squares == census(q).squares);
            ++moves;
          } catch (const PreconditionError&) {
            if (l + 1 == keep || keep + 1 == l) ++refused;
          }
        }
      }
    }
    if (moves > 40) break;
  }
  CHECK(moves > 0);
  MESSAGE("square moves applied: " << moves << ", consecutive-label refusals: " << refused);
}

TEST_CASE("normalisation postconditions over the corpus") {
  std::size_t disconnected = 0;
  for (const auto& s : corpus()) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto q = two_fracture(s, seed);
      auto a = normalize_no_big_cycles(q);
      CHECK(census(a).big_cycles == 0);
      CHECK(check_fracture_invariants(a).all_passed());
      auto b = normalize_one_square_per_component(q);
      auto cb = census(b);
      CHECK(cb.big_cycles == 0);
      CHECK(cb.max_squares_per_component <= 1);
      CHECK(check_fracture_invariants(b).all_passed());
      if (cb.components > 1) {
        ++disconnected;
        auto c = normalize_disconnected(b);
        auto cc = census(c);
        CHECK(check_fracture_invariants(c).all_passed());
        CHECK(cc.big_cycles == 0);
        CHECK(cc.max_squares_per_component <= 1);
        if (cc.components > 1) CHECK(cc.tree_components >= 1);
      }
    }
  }
  MESSAGE("disconnected normalised graphs: " << disconnected);
}

TEST_CASE("acyclic input is a fixed point") {
  auto q = two_fracture(test::prism());
  auto once = normalize_no_big_cycles(q);
  CHECK(normalize_no_big_cycles(once).chosen() == once.chosen());
}

TEST_CASE("cycle census on the prism") {
  auto q = two_fracture(test::prism());
  auto cycles = simple_cycles(8, q.base().graph.edges());
  // one cycle per pair of rungs
  CHECK(cycles.size() == 6);
  auto c = census(q);
  CHECK(c.other_cycles == 0);
}

TEST_CASE("ladder classification") {
  auto closed = two_fracture(test::prism());
  auto q = normalize_one_square_per_component(closed);
  if (census(q).components == 1) {
    auto cls = classify_connected(q);
    CHECK(cls.kind == ConnectedClass::pattern_C2xS);
    CHECK(cls.group_order == 48);
  }
  auto m = match_ladder(to_graph(test::prism()));
  REQUIRE(m);
  CHECK(m->first == ConnectedClass::pattern_C2xS);
  CHECK(m->second == 0);
  auto open = match_ladder(to_graph(test::open_ladder()));
  REQUIRE(open);
  CHECK(open->first == ConnectedClass::pattern_C2wr);
  CHECK(test::prism().group().order() == 48);
  CHECK(test::open_ladder().group().order() == 384);
  auto closure = brute_force_closure(8, test::open_ladder().gens());
  REQUIRE(closure);
  CHECK(closure->size() == 384);
  CHECK_FALSE(match_ladder(to_graph(test::s4_coxeter())));
}

TEST_CASE("trace and DOT output") {
  auto q = two_fracture(test::prism());
  auto n = normalize_one_square_per_component(q);
  auto lines = trace_to_jsonl(n.trace());
  std::size_t count = 0;
  for (char ch : lines) count += ch == '\n';
  CHECK(count == n.trace().size());
  auto dot = fracture_to_dot(n);
  CHECK(dot.find("style=dashed") != std::string::npos);
}
