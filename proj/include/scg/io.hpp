#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scg/labeled_graph.hpp"
#include "scg/sggi.hpp"

namespace scg {

std::string read_text_file(const std::string& path);

/// {"degree": n, "images": [...]} with 0-based images.
std::string permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const std::string& text);

/// {"degree": n, "generators": ["(1,2)(3,4)", ...]} in label order.
std::string sggi_to_json(const Sggi& s);
/// Accepts the JSON form above, or plain text with one generator in cycle
/// notation per line (blank lines and lines starting with '#' ignored; an
/// optional first line "degree N"). Throws InputError.
Sggi parse_sggi(const std::string& text);
Sggi load_sggi(const std::string& path);

/// A target group for enumeration: generators, optional relabelling
/// permutations known to normalise it, and where it came from.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> normalizer;
  std::optional<std::uint64_t> declared_order;
  std::string provenance;
  bool alternating_family = false;  // parsed from "An:n"
  std::size_t family_degree = 0;
};

/// Directory holding shipped data: $SCG_DATA_DIR when set, else the
/// directory configured at build time.
std::string data_dir();

/// Parses "An:n", "Sn:n" or "gens:FILE". FILE is tried as given, then
/// under <data_dir>/groups/. Throws InputError.
GroupSpec parse_group_spec(const std::string& spec);

/// Loads a generator file {"degree", "generators", "normalizer"?, "order"?,
/// "name"?, "provenance"?}. Throws InputError when the computed order
/// disagrees with "order".
GroupSpec load_group_file(const std::string& path);

PermGroup build_group(const GroupSpec& spec);

/// {"n": ..., "labels": ..., "edges": [[u, v, label], ...]} files.
LabeledGraph load_graph(const std::string& path);

}  // namespace scg
