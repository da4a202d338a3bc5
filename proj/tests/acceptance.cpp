// Acceptance run: one PASS/FAIL line per criterion. Exits 1 if any failed.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "scg/bounds.hpp"
#include "scg/classify.hpp"
#include "scg/errors.hpp"
#include "scg/tables.hpp"

using namespace scg;
using scg::test::cyc;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << why;
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o) {
  std::printf("criterion %2d %s: %s (%s)\n", id, o.passed ? "PASS" : "FAIL", title.c_str(),
              o.detail.str().c_str());
  std::fflush(stdout);
  failures += !o.passed;
}

// Orders of every string C-group produced below, with their rank.
struct Produced {
  std::uint64_t order;
  std::size_t rank;
  std::string source;
};
std::vector<Produced> produced;

void record(const EnumerationResult& r, const std::string& source) {
  for (const auto& s : r.representatives) produced.push_back({r.order, s.rank(), source});
}

PermGroup an(std::size_t n) { return build_group(parse_group_spec("An:" + std::to_string(n))); }

void record_ranks(const PermGroup& g, std::size_t top, const std::string& name,
                  const EnumerateOptions& o) {
  for (std::size_t r = 3; r <= top; ++r) record(enumerate_parallel(g, r, o), name);
}

// Descending search, then every rank from 3 up to the answer is recorded.
MaxRankResult ranked(const PermGroup& g, const std::string& name, const EnumerateOptions& o) {
  auto m = max_rank(g, o);
  record_ranks(g, m.rank, name, o);
  return m;
}

std::uint64_t fact(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void criterion1() {
  Outcome o;
  const std::size_t expect[] = {0, 0, 3, 0};
  EnumerateOptions opts;
  opts.budget_seconds = 60;
  for (std::size_t n = 3; n <= 6; ++n) {
    auto t0 = Clock::now();
    auto m = ranked(an(n), "A" + std::to_string(n), opts);
    double s = since(t0);
    o.detail << "A" << n << "=" << m.rank << " ";
    if (!m.exhaustive) o.fail("A" + std::to_string(n) + " not exhaustive");
    if (m.rank != expect[n - 3]) o.fail("A" + std::to_string(n) + " rank " + std::to_string(m.rank));
    if (s > 60) o.fail("A" + std::to_string(n) + " over 60 s");
  }
  report(1, "rank of A_3..A_6", o);
}

void criterion2() {
  Outcome o;
  EnumerateOptions opts;
  opts.budget_seconds = 1800;
  for (std::size_t n : {7, 8}) {
    auto t0 = Clock::now();
    auto m = ranked(an(n), "A" + std::to_string(n), opts);
    double s = since(t0);
    o.detail << "A" << n << "=" << m.rank << " in " << s << " s; ";
    if (!m.exhaustive) o.fail("A" + std::to_string(n) + " not exhaustive");
    if (m.rank != 0) o.fail("A" + std::to_string(n) + " rank " + std::to_string(m.rank));
  }
  auto row4 = from_graph(load_graph(data_dir() + "/table2/row04.json"));
  const bool witness = is_string_cgroup(row4) && row4.rank() == 4 && row4.group().order() == 181440;
  o.detail << "row 4 witness " << (witness ? "ok" : "bad") << "; ";
  if (!witness) o.fail("row 4 is not a rank 4 witness for A9");
  record_ranks(an(9), 4, "A9", opts);
  auto t0 = Clock::now();
  auto r5 = enumerate_parallel(an(9), 5, opts);
  record(r5, "A9");
  o.detail << "A9 rank 5: " << r5.representatives.size() << " found, "
           << (r5.exhaustive ? "exhaustive" : "non-exhaustive") << " in " << since(t0) << " s";
  if (!r5.representatives.empty()) o.fail("A9 has a rank 5 representation");
  // a non-exhaustive run is allowed, but is reported
  report(2, "extended tier A_7, A_8, A_9", o);
}

void criterion3() {
  Outcome o;
  TableOptions opts;
  opts.budget_seconds = 900;
  for (const auto& row : table1_rows()) {
    if (row.tier != Tier::default_tier) continue;
    auto r = verify_table1_row(row, opts);
    o.detail << row.name << "=" << (r.computed ? std::to_string(*r.computed) : "?") << " ";
    if (r.computed && *r.computed >= 3) {
      auto spec = load_group_file(data_dir() + "/groups/" + row.file);
      EnumerateOptions eo;
      eo.normalizer = spec.normalizer;
      eo.budget_seconds = 900;
      record_ranks(build_group(spec), *r.computed, row.name, eo);
    }
    if (r.status != "match") o.fail(row.name + " " + r.status);
    if (r.seconds > 900) o.fail(row.name + " over 15 min");
  }
  report(3, "Table 1 default tier", o);
}

void criterion4() {
  Outcome o;
  auto t0 = Clock::now();
  auto rows = verify_table2();
  double s = since(t0);
  std::size_t ok = 0;
  for (const auto& r : rows) {
    ok += r.passed;
    if (!r.passed) o.fail("row " + std::to_string(r.row));
  }
  if (o.passed) o.detail << ok << "/" << rows.size() << " rows in " << s << " s";
  if (rows.size() != 16) o.fail("expected 16 rows");
  if (s > 60) o.fail("over 60 s");
  report(4, "Table 2", o);
}

void criterion5() {
  Outcome o;
  auto closed = match_ladder(to_graph(test::prism()));
  auto open = match_ladder(to_graph(test::open_ladder()));
  auto c48 = brute_force_closure(8, test::prism().gens());
  auto c384 = brute_force_closure(8, test::open_ladder().gens());
  if (!closed || closed->first != ConnectedClass::pattern_C2xS) o.fail("closed ladder not matched");
  if (!open || open->first != ConnectedClass::pattern_C2wr) o.fail("open ladder not matched");
  if (!c48 || c48->size() != 48) o.fail("closed ladder order");
  if (!c384 || c384->size() != 384) o.fail("open ladder order");
  if (o.passed) o.detail << "orders 48 and 384";
  report(5, "ladder patterns at degree 8", o);
}

void criterion6() {
  Outcome o;
  for (const auto& p : produced) {
    if (p.order < conder_floor(p.rank)) {
      o.fail(p.source + " rank " + std::to_string(p.rank) + " order " + std::to_string(p.order));
    }
  }
  if (produced.empty()) o.fail("no representations recorded");
  if (o.passed) o.detail << produced.size() << " representations, 0 below the floor";
  report(6, "Conder floor on enumerated representations", o);

  // the floor does not hold at low rank in general: simplex groups
  EnumerateOptions opts;
  std::ostringstream info;
  for (std::size_t n : {4, 5}) {
    auto g = build_group(parse_group_spec("Sn:" + std::to_string(n)));
    auto r = enumerate_serial(g, n - 1, opts);
    info << "S" << n << " rank " << n - 1 << ": order " << r.order << " vs floor "
         << conder_floor(n - 1) << "; ";
  }
  std::printf("note: simplex groups below the floor (not part of the run above): %s\n",
              info.str().c_str());
}

void criterion7() {
  Outcome o;
  auto corpus = test::fracture_corpus();
  std::size_t graphs = 0, outputs = 0, disconnected = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const auto& s = corpus[k];
      std::string where = "seed " + std::to_string(seed) + " input " + std::to_string(k);
      try {
        auto r = find_2fracture_graph(s, TieBreak{seed});
        if (!std::holds_alternative<FractureGraph>(r)) {
          o.fail(where + ": no 2-fracture graph");
          continue;
        }
        const auto& q = std::get<FractureGraph>(r);
        ++graphs;
        if (!check_fracture_invariants(q).all_passed()) o.fail(where + ": invariants");
        auto a = normalize_no_big_cycles(q);
        if (census(a).big_cycles != 0 || !check_fracture_invariants(a).all_passed())
          o.fail(where + ": big cycles remain");
        auto b = normalize_one_square_per_component(q);
        auto cb = census(b);
        if (cb.big_cycles != 0 || cb.max_squares_per_component > 1 ||
            !check_fracture_invariants(b).all_passed())
          o.fail(where + ": square normalisation");
        outputs += 2;
        if (cb.components > 1) {
          ++disconnected;
          auto c = normalize_disconnected(b);
          auto cc = census(c);
          ++outputs;
          if (!check_fracture_invariants(c).all_passed() || cc.big_cycles != 0 ||
              cc.max_squares_per_component > 1 || (cc.components > 1 && cc.tree_components == 0))
            o.fail(where + ": disconnected normalisation");
        }
      } catch (const std::exception& e) {
        o.fail(where + ": " + e.what());
      }
    }
  }
  if (o.passed)
    o.detail << corpus.size() << " inputs x 200 seeds, " << graphs << " graphs, " << outputs
             << " normalised outputs, " << disconnected << " disconnected";
  report(7, "fracture invariants and normalisation", o);
}

// Transitive sggis of degree 5..8: Coxeter S_n, plus random string C-groups.
std::vector<Sggi> genan_inputs() {
  std::vector<Sggi> out;
  for (std::size_t n = 5; n <= 8; ++n) out.push_back(test::sn_coxeter(n));
  std::mt19937_64 rng(77);
  for (std::size_t tries = 0; out.size() < 20 && tries < 100000; ++tries) {
    std::size_t n = 5 + tries % 4;
    std::size_t r = 2 + tries % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(test::random_involution(n, rng));
    if (!check_string_property(gens).holds) continue;
    bool trivial = false;
    for (const auto& g : gens) trivial |= g.is_identity();
    if (trivial) continue;
    Sggi s(gens, n);
    if (!s.group().is_transitive()) continue;
    out.push_back(s);
  }
  return out;
}

void criterion8() {
  Outcome o;
  auto inputs = genan_inputs();
  std::size_t even = 0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto& s = inputs[k];
    auto res = extend_genAn(s, static_cast<Point>(k % s.degree()));
    bool odd = false;
    for (const auto& g : res.generators) odd |= g.parity() == Parity::odd;
    even += !odd;
    const auto n = s.degree();
    if (res.order != (odd ? fact(n + 4) : fact(n + 4) / 2))
      o.fail("input " + std::to_string(k) + " order " + std::to_string(res.order));
  }
  if (inputs.size() != 20) o.fail("generated " + std::to_string(inputs.size()) + " inputs");
  if (o.passed) o.detail << inputs.size() << " inputs, " << even << " all-even";
  report(8, "genAn orders", o);
}

void criterion9() {
  Outcome o;
  auto phis = test::random_string_cgroups(20, 404, false);
  std::size_t triples = 0, outside = 0, doubled = 0;
  for (std::size_t t = 0; triples < 50 && t < 1000; ++t) {
    const auto& phi = phis[t % phis.size()];
    const auto n = phi.degree();
    const std::size_t k = t % phi.rank();
    // tau on one or two pairs of fresh points
    std::vector<std::vector<Point>> cycles;
    const std::size_t extra = 2 + 2 * (t % 2);
    for (std::size_t i = 0; i < extra; i += 2)
      cycles.push_back({static_cast<Point>(n + i), static_cast<Point>(n + i + 1)});
    auto tau = cyc(n + extra, cycles);
    std::optional<SesquiResult> got;
    try {
      got = sesqui_extension(phi, k, tau);
    } catch (const PreconditionError&) {
      continue;
    }
    const auto& res = *got;
    ++triples;
    if (res.order_star != res.order_phi && res.order_star != 2 * res.order_phi)
      o.fail("triple " + std::to_string(triples) + " order");
    doubled += res.order_star == 2 * res.order_phi;
    if (!res.tau_in_star) {
      ++outside;
      if (is_string_cgroup(res.result) != is_string_cgroup(phi))
        o.fail("triple " + std::to_string(triples) + " string C-group status");
    }
  }
  if (triples != 50) o.fail("only " + std::to_string(triples) + " triples");
  if (o.passed)
    o.detail << triples << " triples, " << doubled << " doubled, " << outside << " with tau outside";
  report(9, "sesqui extensions", o);
}

void criterion10() {
  Outcome o;
  const std::size_t table[] = {0, 0, 3, 0, 0, 0, 4, 5, 6, 5};
  for (std::size_t n = 3; n <= 12; ++n)
    if (an_rank_formula(n) != table[n - 3]) o.fail("n=" + std::to_string(n));
  for (std::size_t n = 12; n <= 100; ++n)
    if (an_rank_formula(n) != (n - 1) / 2) o.fail("n=" + std::to_string(n));
  if (maroti_case_c(12) != 10560) o.fail("maroti_case_c(12)");
  if (conder_floor(4) != 128) o.fail("conder_floor(4)");
  if (o.passed) o.detail << "exact";
  report(10, "formula identities", o);
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
  } catch (const std::exception& e) {
    std::printf("aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
