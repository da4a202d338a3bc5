#include <doctest.h>

#include "corpus.hpp"
#include "scg/block_system.hpp"
#include "scg/bounds.hpp"
#include "scg/classify.hpp"
#include "scg/errors.hpp"
#include "scg/io.hpp"
#include "scg/tables.hpp"

using namespace scg;
using scg::test::cyc;

namespace {

std::uint64_t fact(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("generator partition on the prism") {
  auto s = test::prism();
  // rung blocks {i, i+4}
  BlockSystem rungs{8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}};
  REQUIRE(rungs.is_invariant_under(s.gens()));
  auto p = partition_generators(s, std::nullopt, rungs);
  CHECK(p.block_count == 4);
  CHECK(p.block_size == 2);
  CHECK(p.block_action_order == 24);
  CHECK(p.L == IndexSet{1, 2, 3});
  CHECK(p.C == IndexSet{0});
  CHECK(p.R.empty());
  CHECK(p.L_within_bound);
  CHECK(p.C_within_bound);

  BlockSystem one{8, {{0, 1, 2, 3, 4, 5, 6, 7}}};
  CHECK_THROWS_AS(partition_generators(s, std::nullopt, one), PreconditionError);
  BlockSystem wrong{8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}};
  CHECK_THROWS_AS(partition_generators(s, std::nullopt, wrong), PreconditionError);
  // without rho_1 the rails fall apart
  CHECK_THROWS_AS(partition_generators(s, std::size_t{1}, rungs), PreconditionError);
}

TEST_CASE("L and C stay within their bounds on imprimitive corpus inputs") {
  std::size_t checked = 0;
  for (const auto& s : test::fracture_corpus()) {
    auto g = s.group();
    for (const auto& b : minimal_block_systems(g)) {
      auto p = partition_generators(s, std::nullopt, b);
      CHECK(p.L.size() + p.C.size() + p.R.size() == s.rank());
      CHECK(p.L_within_bound);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("genAn examples") {
  auto s5 = extend_genAn(test::sn_coxeter(5), 4);
  CHECK(s5.order == 362880);
  CHECK(s5.symmetric);
  CHECK(s5.matches_prediction);
  // D10, even and transitive on 5 points
  Sggi even({cyc(5, {{0, 1}, {2, 3}}), cyc(5, {{1, 2}, {3, 4}})}, 5);
  auto a9 = extend_genAn(even, 0);
  CHECK(a9.order == 181440);
  CHECK(a9.alternating);
  CHECK(a9.matches_prediction);
  CHECK_THROWS_AS(extend_genAn(test::s4_coxeter(), 0), PreconditionError);
  CHECK_THROWS_AS(extend_genAn(test::sn_coxeter(5), 5), PreconditionError);
}

TEST_CASE("genAn over random transitive sggis") {
  auto inputs = test::random_string_cgroups(12, 99, false);
  REQUIRE(inputs.size() == 12);
  for (const auto& s : inputs) {
    auto n = s.degree();
    for (Point i : {Point{0}, static_cast<Point>(n - 1)}) {
      auto res = extend_genAn(s, i);
      bool odd = false;
      for (const auto& g : res.generators) odd |= g.parity() == Parity::odd;
      CHECK(res.order == (odd ? fact(n + 4) : fact(n + 4) / 2));
      CHECK(res.matches_prediction);
    }
  }
}

TEST_CASE("sesqui extension examples") {
  Sggi one({cyc(4, {{0, 1}})});
  auto a = sesqui_extension(one, 0, cyc(4, {{2, 3}}));
  CHECK(a.result[0] == cyc(4, {{0, 1}, {2, 3}}));
  CHECK(a.which == SesquiCase::isomorphic);
  CHECK(a.order_star == 2);

  Sggi s3({cyc(3, {{0, 1}}), cyc(3, {{1, 2}})});
  auto b = sesqui_extension(s3, 1, cyc(5, {{3, 4}}));
  CHECK(b.order_star == 12);
  CHECK(b.which == SesquiCase::times_tau);

  CHECK_THROWS_AS(sesqui_extension(s3, 0, cyc(3, {{1, 2}})), PreconditionError);
  CHECK_THROWS_AS(sesqui_extension(s3, 2, cyc(5, {{3, 4}})), PreconditionError);
  // tau already in the group
  Sggi k({cyc(4, {{0, 1}}), cyc(4, {{2, 3}})});
  CHECK_THROWS_AS(sesqui_extension(k, 0, cyc(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST_CASE("sesqui property on generated triples") {
  auto inputs = test::random_string_cgroups(10, 5, false);
  std::size_t triples = 0;
  for (const auto& s : inputs) {
    const auto n = s.degree();
    // a transposition on two fresh points is central
    auto tau = cyc(n + 2, {{static_cast<Point>(n), static_cast<Point>(n + 1)}});
    for (std::size_t k = 0; k < s.rank(); ++k) {
      auto res = sesqui_extension(s, k, tau);
      CHECK((res.order_star == res.order_phi || res.order_star == 2 * res.order_phi));
      if (!res.tau_in_star) CHECK(is_string_cgroup(res.result) == is_string_cgroup(s));
      ++triples;
    }
  }
  CHECK(triples >= 30);
}

TEST_CASE("closed-form bounds") {
  CHECK(conder_floor(1) == 2);
  CHECK(conder_floor(4) == 128);
  CHECK(conder_floor(8) == 32768);
  CHECK_THROWS_AS(conder_floor(0), PreconditionError);
  CHECK(maroti_case_c(2) == 2);
  CHECK(maroti_case_c(12) == 10560);
  CHECK(maroti_case_c(33) == 33ull * 32 * 31 * 29 * 25 * 17);
  CHECK(maroti_case_c(33) == 403471200ull);
  for (std::size_t n = 2; n < 64; ++n) CHECK(maroti_case_c(n) <= maroti_case_c(n + 1));
  CHECK(an_rank_formula(5) == 3);
  CHECK(an_rank_formula(11) == 6);
  CHECK(an_rank_formula(12) == 5);
  CHECK_THROWS_AS(an_rank_formula(2), PreconditionError);
  CHECK(transitive_ceiling(12) == 7);
  CHECK(transitive_ceiling(4) == 3);
  CHECK(transitive_ceiling(10) == 6);
  CHECK(primitive_rank_ok(12, 4));
  CHECK_FALSE(primitive_rank_ok(12, 5));
  CHECK(table1_threshold(12) == 512);
}

TEST_CASE("bound report JSON") {
  auto rep = bound_report(12, 660, 4);
  CHECK(rep.conder == 128);
  CHECK(rep.conder_holds == true);
  CHECK(rep.maroti_holds == true);
  CHECK(rep.caption_holds == true);
  CHECK(rep.primitive_rank_holds == true);
  auto json = to_json(rep);
  CHECK(json.find("\"verdicts\"") != std::string::npos);
  CHECK(json == to_json(bound_report(12, 660, 4)));
  CHECK_FALSE(bound_report(5).conder_holds.has_value());
}

TEST_CASE("Table 2 rows") {
  auto rows = verify_table2();
  REQUIRE(rows.size() == 16);
  for (const auto& r : rows) {
    CAPTURE(r.row);
    CHECK(r.passed);
    CHECK(r.order == r.expected_order);
  }
  CHECK(table2_json(rows, false) == table2_json(verify_table2(), false));
}

TEST_CASE("alternating ranks for small degrees") {
  TableOptions o;
  o.budget_seconds = 60;
  for (const auto& r : verify_an_ranks(3, 6, o)) {
    CAPTURE(r.n);
    CHECK(r.status == "match");
    CHECK(r.computed == an_rank_formula(r.n));
  }
}

TEST_CASE("Table 1 default tier") {
  TableOptions o;
  o.budget_seconds = 120;
  auto rows = verify_table1(o);
  std::size_t matched = 0;
  for (const auto& r : rows) {
    CAPTURE(r.row.name);
    CHECK(r.row.tier == Tier::default_tier);
    CHECK(r.status == "match");
    matched += r.status == "match";
  }
  CHECK(matched == rows.size());
  CHECK(table1_rows().size() == 15);
}

TEST_CASE("group specs") {
  CHECK(build_group(parse_group_spec("An:6")).order() == 360);
  CHECK(build_group(parse_group_spec("Sn:5")).order() == 120);
  CHECK(build_group(parse_group_spec("gens:psl2_11.json")).order() == 660);
  CHECK_THROWS_AS(parse_group_spec("An:x"), InputError);
  CHECK_THROWS_AS(parse_group_spec("nope"), InputError);
  CHECK_THROWS_AS(parse_group_spec("gens:missing.json"), InputError);
  auto g = load_group_file(data_dir() + "/groups/m12.json");
  CHECK(build_group(g).order() == 95040);
}
