#include "scg/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include <json.hpp>

#include "scg/block_system.hpp"
#include "scg/bounds.hpp"
#include "scg/errors.hpp"
#include "scg/io.hpp"
#include "scg/labeled_graph.hpp"

namespace scg {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string to_string(Tier tier) { return tier == Tier::extended ? "extended" : "default"; }

Tier parse_tier(const std::string& text) {
  if (text == "default") return Tier::default_tier;
  if (text == "extended") return Tier::extended;
  throw InputError("unknown tier '" + text + "'");
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {12, "PSL(2,11)", "psl2_11.json", 4, Tier::default_tier},
      {12, "PGL(2,11)", "pgl2_11.json", 3, Tier::default_tier},
      {12, "M11", "m11_12.json", 0, Tier::extended},
      {12, "M12", "m12.json", 4, Tier::extended},
      {13, "PSL(3,3)", "psl3_3.json", 0, Tier::default_tier},
      {14, "PGL(2,13)", "pgl2_13.json", 3, Tier::default_tier},
      {15, "A7", "a7_15.json", 0, Tier::default_tier},
      {15, "PSL(4,2)", "psl4_2.json", 0, Tier::extended},
      {16, "2^4:S6", "2e4_s6.json", 5, Tier::default_tier},
      {16, "2^4:A7", "2e4_a7.json", 0, Tier::extended},
      {16, "2^4:PSL(4,2)", "2e4_psl4_2.json", 0, Tier::extended},
      {17, "PGammaL(2,16)", "pgaml2_16.json", 0, Tier::default_tier},
      {22, "M22:2", "m22_2.json", 4, Tier::extended},
      {23, "M23", "m23.json", 0, Tier::extended},
      {24, "M24", "m24.json", 5, Tier::extended},
  };
  return rows;
}

Table1Outcome verify_table1_row(const Table1Row& row, const TableOptions& options) {
  const auto start = Clock::now();
  Table1Outcome out;
  out.row = row;
  const std::string dir = options.data_dir.empty() ? data_dir() : options.data_dir;
  const auto path = std::filesystem::path(dir) / "groups" / row.file;
  auto done = [&](std::string status) {
    out.status = std::move(status);
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
  };
  if (!std::filesystem::exists(path)) {
    out.notice = "missing generator file " + row.file;
    return done("skipped");
  }
  GroupSpec spec = load_group_file(path.string());
  PermGroup g = build_group(spec);
  out.order = g.order();
  if (g.degree() != row.degree) throw InputError(row.file + " has the wrong degree");
  out.caption_holds = g.order() >= table1_threshold(row.degree);
  if (g.order() > ElementTable::default_cap) {
    out.notice = "order " + std::to_string(g.order()) + " exceeds the element table cap";
    return done("skipped");
  }
  EnumerateOptions eo;
  eo.budget_seconds = options.budget_seconds;
  eo.threads = options.threads;
  eo.normalizer = spec.normalizer;
  auto res = max_rank(g, eo);
  out.witness = res.witness;
  if (!res.exhaustive && res.rank == 0) {
    out.notice = "search did not finish within the budget";
    return done("budget");
  }
  out.computed = res.rank;
  if (row.degree >= 12) out.primitive_rank_holds = primitive_rank_ok(row.degree, res.rank);
  return done(res.rank == row.expected_rank ? "match" : "mismatch");
}

std::vector<Table1Outcome> verify_table1(const TableOptions& options) {
  std::vector<Table1Outcome> out;
  for (const auto& row : table1_rows()) {
    if (row.tier == Tier::extended && options.tier != Tier::extended) continue;
    out.push_back(verify_table1_row(row, options));
  }
  return out;
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Table2Outcome verify_table2_graph(std::size_t row, const std::string& name,
                                  std::uint64_t expected_order, const LabeledGraph& g) {
  const auto start = Clock::now();
  Table2Outcome out;
  out.row = row;
  out.name = name;
  out.degree = g.vertex_count();
  out.expected_order = expected_order;
  auto add = [&](std::string check, bool ok, std::string detail = {}) {
    out.checks.push_back({std::move(check), ok, std::move(detail)});
  };
  Sggi s = from_graph(g);
  out.rank = s.rank();
  PermGroup group = s.group();
  out.order = group.order();

  auto ip = check_intersection_property(s);
  add("string_cgroup", ip.holds, ip.holds ? "" : "intersection property fails");
  bool even = std::all_of(s.gens().begin(), s.gens().end(),
                          [](const Permutation& p) { return p.parity() == Parity::even; });
  add("even", even);
  add("transitive", group.is_transitive());
  add("connected_diagram", diagram(s).is_connected());
  bool intransitive = true;
  std::string which;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (maximal_parabolic(s, i).is_transitive()) {
      intransitive = false;
      which = "Gamma_" + std::to_string(i) + " is transitive";
    }
  add("intransitive_parabolics", intransitive, which);
  add("rank_bound", 2 * s.rank() + 1 >= out.degree,
      "rank " + std::to_string(s.rank()) + ", degree " + std::to_string(out.degree));
  add("order", out.order == expected_order,
      "expected " + std::to_string(expected_order) + ", got " + std::to_string(out.order));
  out.passed = std::all_of(out.checks.begin(), out.checks.end(),
                           [](const Table2Check& c) { return c.passed; });
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::vector<Table2Outcome> verify_table2(const std::string& dir_in) {
  const std::string dir = dir_in.empty() ? data_dir() : dir_in;
  std::vector<Table2Outcome> out;
  for (std::size_t row = 1; row <= 16; ++row) {
    char file[32];
    std::snprintf(file, sizeof file, "row%02zu.json", row);
    const auto path = std::filesystem::path(dir) / "table2" / file;
    json meta;
    try {
      meta = json::parse(read_text_file(path.string()));
    } catch (const json::exception& e) {
      throw InputError("bad table row file " + path.string() + ": " + e.what());
    }
    const std::string name = meta.value("name", "");
    std::uint64_t expected = 0;
    if (name == "D10") expected = 10;
    else if (name == "L2(5)") expected = 60;
    else if (name.size() > 1 && name[0] == 'A') expected = factorial(std::stoul(name.substr(1))) / 2;
    else throw InputError("unknown group name '" + name + "' in " + path.string());
    out.push_back(verify_table2_graph(row, name, expected, graph_from_json(meta.dump())));
  }
  return out;
}

std::vector<AnOutcome> verify_an_ranks(std::size_t from, std::size_t to,
                                       const TableOptions& options) {
  std::vector<AnOutcome> out;
  for (std::size_t n = std::max<std::size_t>(from, 3); n <= to; ++n) {
    const auto start = Clock::now();
    AnOutcome o;
    o.n = n;
    o.expected = an_rank_formula(n);
    GroupSpec spec = parse_group_spec("An:" + std::to_string(n));
    EnumerateOptions eo;
    eo.budget_seconds = options.budget_seconds;
    eo.threads = options.threads;
    eo.normalizer = spec.normalizer;
    auto res = max_rank(build_group(spec), eo);
    o.exhaustive = res.exhaustive;
    if (!res.exhaustive && res.rank == 0) {
      o.status = "budget";
    } else {
      o.computed = res.rank;
      o.status = res.rank == o.expected ? "match" : "mismatch";
    }
    o.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(o);
  }
  return out;
}

namespace {

json seconds_value(double s) { return std::round(s * 1000.0) / 1000.0; }

}  // namespace

std::string table1_json(const std::vector<Table1Outcome>& rows, bool timings) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["row"] = r.row.name;
    j["degree"] = r.row.degree;
    j["expected"] = r.row.expected_rank;
    j["computed"] = r.computed ? json(*r.computed) : json(nullptr);
    j["status"] = r.status;
    if (r.order) j["order"] = *r.order;
    if (r.caption_holds) j["caption_holds"] = *r.caption_holds;
    if (r.primitive_rank_holds) j["primitive_rank_holds"] = *r.primitive_rank_holds;
    if (!r.notice.empty()) j["notice"] = r.notice;
    if (timings) j["seconds"] = seconds_value(r.seconds);
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string table2_json(const std::vector<Table2Outcome>& rows, bool timings) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["row"] = r.row;
    j["name"] = r.name;
    j["expected"] = r.expected_order;
    j["computed"] = r.order;
    j["rank"] = r.rank;
    j["status"] = r.passed ? "pass" : "fail";
    json checks = json::object();
    for (const auto& c : r.checks) checks[c.name] = c.passed;
    j["checks"] = checks;
    if (timings) j["seconds"] = seconds_value(r.seconds);
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string an_json(const std::vector<AnOutcome>& rows, bool timings) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["row"] = "A" + std::to_string(r.n);
    j["n"] = r.n;
    j["expected"] = r.expected;
    j["computed"] = r.computed ? json(*r.computed) : json(nullptr);
    j["exhaustive"] = r.exhaustive;
    j["status"] = r.status;
    if (timings) j["seconds"] = seconds_value(r.seconds);
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace scg
