// scg: string C-groups, fracture graphs and enumeration from the command line.
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scg/bounds.hpp"
#include "scg/enumerate.hpp"
#include "scg/errors.hpp"
#include "scg/fracture.hpp"
#include "scg/io.hpp"
#include "scg/tables.hpp"

using nlohmann::json;
using namespace scg;

namespace {

constexpr int kOk = 0, kProperty = 1, kInput = 2, kBudget = 3;

json gens_json(const Sggi& s) {
  json arr = json::array();
  for (const auto& g : s.gens()) arr.push_back(to_cycle_string(g));
  return arr;
}

json index_set_json(const IndexSet& s) { return json(s); }

json edges_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back({e.u, e.v, e.label});
  return arr;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

int cmd_check(const std::string& file) {
  json report;
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  {
    // Parse without enforcing the string property so that violations are
    // reported as property failures rather than input errors.
    auto text = read_text_file(file);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
        degree = j.at("degree").get<std::size_t>();
        for (const auto& g : j.at("generators")) gens.push_back(parse_cycles(g.get<std::string>(), degree));
      } catch (const json::exception& e) {
        throw InputError(std::string("bad sggi JSON: ") + e.what());
      }
    } else {
      std::istringstream in(text);
      std::string line;
      std::vector<std::string> lines;
      while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        line = line.substr(b);
        if (line.rfind("degree", 0) == 0) {
          try {
            degree = std::stoul(line.substr(6));
          } catch (const std::exception&) {
            throw InputError("bad degree line");
          }
        } else {
          lines.push_back(line);
        }
      }
      if (lines.empty()) throw InputError("no generators given");
      if (degree == 0)
        for (const auto& l : lines) degree = std::max(degree, parse_cycles(l).degree());
      for (const auto& l : lines) gens.push_back(parse_cycles(l, degree));
    }
  }
  report["degree"] = degree;
  report["rank"] = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_involution()) {
      report["involutions"] = false;
      report["failed"] = "involution";
      report["witness"] = i;
      report["string_cgroup"] = false;
      std::cout << report.dump(2) << "\n";
      return kProperty;
    }
  report["involutions"] = true;
  auto sp = check_string_property(gens);
  report["string_property"] = sp.holds;
  if (!sp.holds) {
    report["failed"] = "string_property";
    report["witness"] = {sp.violating_pair->first, sp.violating_pair->second};
    report["string_cgroup"] = false;
    std::cout << report.dump(2) << "\n";
    return kProperty;
  }
  Sggi s(gens, degree);
  auto ip = check_intersection_property(s);
  report["intersection_property"] = ip.holds;
  report["order"] = s.group().order();
  report["schlafli"] = diagram(s).schlafli();
  report["string_cgroup"] = ip.holds;
  if (!ip.holds) {
    report["failed"] = "intersection_property";
    report["witness"] = {index_set_json(ip.witness->first), index_set_json(ip.witness->second)};
    std::cout << report.dump(2) << "\n";
    return kProperty;
  }
  std::cout << report.dump(2) << "\n";
  return kOk;
}

EnumerateOptions enum_options(double budget, int threads, const GroupSpec& spec) {
  if (budget <= 0) throw InputError("budget must be positive");
  EnumerateOptions o;
  o.budget_seconds = budget;
  o.threads = threads;
  o.normalizer = spec.normalizer;
  return o;
}

int cmd_rank(const std::string& spec_text, double budget, int threads, bool timings) {
  GroupSpec spec = parse_group_spec(spec_text);
  PermGroup g = build_group(spec);
  auto res = max_rank(g, enum_options(budget, threads, spec));
  json j;
  j["spec"] = spec_text;
  j["degree"] = res.degree;
  j["order"] = res.order;
  j["rank"] = res.rank;
  j["small_rank"] = res.small_rank;
  j["exhaustive"] = res.exhaustive;
  j["connected_mode"] = res.connected_mode;
  j["witness"] = res.witness ? gens_json(*res.witness) : json(nullptr);
  json ev = json::array();
  for (const auto& e : res.evidence) {
    json x;
    x["rank"] = e.rank;
    x["found"] = e.found;
    x["exhaustive"] = e.exhaustive;
    if (timings) x["seconds"] = std::round(e.seconds * 1000.0) / 1000.0;
    ev.push_back(x);
  }
  j["evidence"] = ev;
  if (spec.alternating_family && spec.family_degree >= 3) {
    auto formula = an_rank_formula(spec.family_degree);
    j["formula"] = formula;
    j["match"] = formula == res.rank;
  }
  std::cout << j.dump(2) << "\n";
  if (!res.exhaustive && res.rank == 0) return kBudget;
  return kOk;
}

int cmd_enumerate(const std::string& spec_text, std::size_t rank, const std::string& dedup,
                  const std::string& variant, double budget, int threads) {
  GroupSpec spec = parse_group_spec(spec_text);
  PermGroup g = build_group(spec);
  auto opts = enum_options(budget, threads, spec);
  opts.dedup = parse_dedup_mode(dedup);
  if (rank == 0) throw InputError("rank must be positive");
  EnumerationResult res;
  if (variant == "parallel") res = enumerate_parallel(g, rank, opts);
  else if (variant == "serial") res = enumerate_serial(g, rank, opts);
  else if (variant == "reference") res = enumerate_reference(g, rank, opts);
  else throw InputError("unknown variant '" + variant + "'");
  json j;
  j["spec"] = spec_text;
  j["degree"] = res.degree;
  j["order"] = res.order;
  j["rank"] = res.rank;
  j["dedup"] = to_string(res.dedup);
  j["exhaustive"] = res.exhaustive;
  j["count"] = res.representatives.size();
  json reps = json::array();
  for (const auto& s : res.representatives) {
    json r;
    r["generators"] = gens_json(s);
    r["schlafli"] = diagram(s).schlafli();
    reps.push_back(r);
  }
  j["representatives"] = reps;
  std::cout << j.dump(2) << "\n";
  return res.exhaustive ? kOk : kBudget;
}

json checks_json(const FractureReport& report) {
  json arr = json::array();
  for (const auto& c : report.checks) {
    json x;
    x["name"] = c.name;
    x["applicable"] = c.applicable;
    x["passed"] = c.passed;
    if (!c.witness.empty()) x["witness"] = edges_json(c.witness);
    if (!c.detail.empty()) x["detail"] = c.detail;
    arr.push_back(x);
  }
  return arr;
}

int cmd_fracture(const std::string& file, const std::string& mode, bool normalize,
                 std::optional<std::uint64_t> seed, const std::string& dot_out,
                 const std::string& trace_out) {
  Sggi s = load_sggi(file);
  TieBreak tb{seed};
  if (mode != "simple" && mode != "two" && mode != "2") throw InputError("mode must be simple or two");
  FractureResult found = mode == "simple" ? find_fracture_graph(s, tb) : find_2fracture_graph(s, tb);
  json j;
  j["mode"] = mode == "simple" ? "simple" : "two";
  if (auto* none = std::get_if<NoneReason>(&found)) {
    j["found"] = false;
    j["label"] = none->label;
    j["reason"] = none->explanation;
    std::cout << j.dump(2) << "\n";
    return kProperty;
  }
  FractureGraph q = std::get<FractureGraph>(found);
  j["found"] = true;
  if (normalize && q.kind() == FractureKind::two) {
    q = normalize_one_square_per_component(q);
    if (census(q).components > 1) q = normalize_disconnected(q);
  }
  j["chosen"] = edges_json(q.chosen());
  auto report = check_fracture_invariants(q);
  j["invariants"] = checks_json(report);
  if (q.kind() == FractureKind::two) {
    auto c = census(q);
    j["census"] = {{"big_cycles", c.big_cycles},
                   {"squares", c.squares},
                   {"components", c.components},
                   {"tree_components", c.tree_components},
                   {"max_squares_per_component", c.max_squares_per_component}};
    if (c.components == 1) {
      auto cls = classify_connected(q);
      j["classification"] = to_string(cls.kind);
      j["group_order"] = cls.group_order;
      if (cls.rung_label) j["rung_label"] = *cls.rung_label;
    }
  }
  if (!dot_out.empty()) write_file(dot_out, fracture_to_dot(q));
  if (!trace_out.empty()) write_file(trace_out, trace_to_jsonl(q.trace()));
  std::cout << j.dump(2) << "\n";
  return report.all_passed() ? kOk : kProperty;
}

int cmd_graph(const std::string& file, const std::string& format, bool from_graph_input) {
  if (from_graph_input) {
    Sggi s = from_graph(load_graph(file));
    std::cout << sggi_to_json(s) << "\n";
    return kOk;
  }
  Sggi s = load_sggi(file);
  LabeledGraph g = to_graph(s);
  if (format == "dot") {
    std::cout << to_dot(g);
  } else if (format == "json") {
    json j = json::parse(to_json(g));
    json squares = json::array();
    for (const auto& sq : alternating_squares(g))
      squares.push_back({{"vertices", sq.vertices}, {"labels", {sq.i, sq.j}}});
    j["squares"] = squares;
    j["connected"] = is_connected(g);
    std::cout << j.dump(2) << "\n";
  } else {
    throw InputError("format must be dot or json");
  }
  return kOk;
}

int cmd_tables(const std::string& which, const std::string& tier, std::size_t min_n,
               std::size_t max_n, double budget, int threads, bool timings) {
  TableOptions o;
  o.tier = parse_tier(tier);
  o.budget_seconds = budget;
  o.threads = threads;
  bool all_ok = true, budget_hit = false;
  if (which == "1") {
    auto rows = verify_table1(o);
    std::cout << table1_json(rows, timings) << "\n";
    for (const auto& r : rows) {
      std::cerr << r.row.name << " (degree " << r.row.degree << "): expected " << r.row.expected_rank
                << ", " << r.status;
      if (r.computed) std::cerr << " (computed " << *r.computed << ")";
      if (!r.notice.empty()) std::cerr << " [" << r.notice << "]";
      std::cerr << "\n";
      if (r.status == "mismatch") all_ok = false;
      if (r.status == "budget") budget_hit = true;
    }
  } else if (which == "2") {
    auto rows = verify_table2();
    std::cout << table2_json(rows, timings) << "\n";
    std::size_t passed = 0;
    for (const auto& r : rows) {
      if (r.passed) ++passed;
      else {
        all_ok = false;
        std::cerr << "row " << r.row << " failed:";
        for (const auto& c : r.checks)
          if (!c.passed) std::cerr << " " << c.name;
        std::cerr << "\n";
      }
    }
    std::cerr << passed << "/" << rows.size() << " rows pass\n";
  } else if (which == "thm1") {
    auto rows = verify_an_ranks(min_n, max_n, o);
    std::cout << an_json(rows, timings) << "\n";
    for (const auto& r : rows) {
      std::cerr << "A" << r.n << ": expected " << r.expected << ", " << r.status << "\n";
      if (r.status == "mismatch") all_ok = false;
      if (r.status == "budget") budget_hit = true;
    }
  } else {
    throw InputError("table must be 1, 2 or thm1");
  }
  if (!all_ok) return kProperty;
  return budget_hit ? kBudget : kOk;
}

int cmd_bounds(std::size_t degree, std::optional<std::uint64_t> order,
               std::optional<std::size_t> rank) {
  std::cout << to_json(bound_report(degree, order, rank)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string C-groups of permutation groups"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0: all available)");

  std::string file, spec, mode = "two", format = "json", dedup = "relabel", variant = "parallel";
  std::string dot_out, trace_out, which, tier = "default";
  double budget = 60.0;
  bool normalize = false, from_graph_input = false, timings = false;
  std::optional<std::uint64_t> seed, order;
  std::optional<std::size_t> rank_opt;
  std::size_t rank = 0, degree = 0, min_n = 3, max_n = 6;

  auto* check = app.add_subcommand("check", "test the string C-group property");
  check->add_option("file", file, "sggi JSON or cycle text")->required();

  auto* rank_cmd = app.add_subcommand("rank", "largest rank of a string C-group representation");
  rank_cmd->add_option("group", spec, "An:n, Sn:n or gens:FILE")->required();
  rank_cmd->add_option("--budget", budget, "seconds per rank");
  rank_cmd->add_flag("--timings", timings, "include timings in the report");

  auto* enum_cmd = app.add_subcommand("enumerate", "all representations of a given rank");
  enum_cmd->add_option("group", spec, "An:n, Sn:n or gens:FILE")->required();
  enum_cmd->add_option("--rank", rank, "rank")->required();
  enum_cmd->add_option("--dedup", dedup, "none or relabel");
  enum_cmd->add_option("--variant", variant, "parallel, serial or reference");
  enum_cmd->add_option("--budget", budget, "seconds");

  auto* frac = app.add_subcommand("fracture", "fracture graphs");
  frac->add_option("file", file, "sggi JSON or cycle text")->required();
  frac->add_option("--mode", mode, "simple or two");
  frac->add_flag("--normalize", normalize, "run the normalisation pipeline");
  frac->add_option("--seed", seed, "random tie-break seed");
  frac->add_option("--dot", dot_out, "write DOT here");
  frac->add_option("--trace", trace_out, "write the rewrite trace (JSON lines) here");

  auto* graph = app.add_subcommand("graph", "permutation representation graphs");
  graph->add_option("file", file, "sggi file, or graph JSON with --from-graph")->required();
  graph->add_option("--format", format, "dot or json");
  graph->add_flag("--from-graph", from_graph_input, "convert a graph JSON file to generators");

  auto* tables = app.add_subcommand("tables", "reproduce the tables");
  tables->add_option("--table", which, "1, 2 or thm1")->required();
  tables->add_option("--tier", tier, "default or extended");
  tables->add_option("--min-n", min_n, "smallest n for thm1");
  tables->add_option("--max-n", max_n, "largest n for thm1");
  tables->add_option("--budget", budget, "seconds per rank");
  tables->add_flag("--timings", timings, "include timings in the report");

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds");
  bounds->add_option("--degree", degree, "degree n")->required();
  bounds->add_option("--order", order, "group order");
  bounds->add_option("--rank", rank_opt, "rank d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*check) return cmd_check(file);
    if (*rank_cmd) return cmd_rank(spec, budget, threads, timings);
    if (*enum_cmd) return cmd_enumerate(spec, rank, dedup, variant, budget, threads);
    if (*frac) return cmd_fracture(file, mode, normalize, seed, dot_out, trace_out);
    if (*graph) return cmd_graph(file, format, from_graph_input);
    if (*tables) {
      if (budget <= 0) throw InputError("budget must be positive");
      return cmd_tables(which, tier, min_n, max_n, budget, threads, timings);
    }
    if (*bounds) return cmd_bounds(degree, order, rank_opt);
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kProperty;
  }
  return kInput;
}
