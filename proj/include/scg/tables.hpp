#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scg/enumerate.hpp"
#include "scg/labeled_graph.hpp"

namespace scg {

enum class Tier { default_tier, extended };
std::string to_string(Tier tier);
Tier parse_tier(const std::string& text);

struct Table1Row {
  std::size_t degree = 0;
  std::string name;
  std::string file;  // under <data_dir>/groups
  std::size_t expected_rank = 0;
  Tier tier = Tier::default_tier;
};

/// The fifteen rows of the table of primitive groups of degree at most 33
/// with large order, in table order.
const std::vector<Table1Row>& table1_rows();

struct Table1Outcome {
  Table1Row row;
  std::string status;  // match, mismatch, budget, skipped
  std::optional<std::size_t> computed;
  std::optional<std::uint64_t> order;
  std::optional<bool> caption_holds;
  std::optional<bool> primitive_rank_holds;  // rank <= (n-3)/2
  std::string notice;
  double seconds = 0.0;
  std::optional<Sggi> witness;
};

struct TableOptions {
  Tier tier = Tier::default_tier;
  double budget_seconds = 900.0;  // per rank
  int threads = 0;
  std::string data_dir;  // empty: data_dir()
};

/// Rows of the requested tier (the extended tier includes the default one).
std::vector<Table1Outcome> verify_table1(const TableOptions& options);
Table1Outcome verify_table1_row(const Table1Row& row, const TableOptions& options);

struct Table2Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Table2Outcome {
  std::size_t row = 0;
  std::string name;
  std::size_t degree = 0;
  std::size_t rank = 0;
  std::uint64_t expected_order = 0;
  std::uint64_t order = 0;
  std::vector<Table2Check> checks;
  bool passed = false;
  double seconds = 0.0;
};

/// Loads <data_dir>/table2/rowNN.json for NN = 01..16 and checks each row.
std::vector<Table2Outcome> verify_table2(const std::string& data_dir = {});
Table2Outcome verify_table2_graph(std::size_t row, const std::string& name,
                                  std::uint64_t expected_order, const LabeledGraph& g);

struct AnOutcome {
  std::size_t n = 0;
  std::size_t expected = 0;
  std::optional<std::size_t> computed;
  bool exhaustive = true;
  std::string status;  // match, mismatch, budget
  double seconds = 0.0;
};

/// Computes the rank of A_n by exhaustive search for n in [from, to].
std::vector<AnOutcome> verify_an_ranks(std::size_t from, std::size_t to,
                                       const TableOptions& options);

/// Deterministic JSON arrays {row, expected, computed, status[, seconds]}.
std::string table1_json(const std::vector<Table1Outcome>& rows, bool timings);
std::string table2_json(const std::vector<Table2Outcome>& rows, bool timings);
std::string an_json(const std::vector<AnOutcome>& rows, bool timings);

}  // namespace scg
