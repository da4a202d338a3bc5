#include "scg/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scg/errors.hpp"

namespace scg {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string permutation_to_json(const Permutation& p) {
  json j;
  j["degree"] = p.degree();
  j["images"] = p.images();
  return j.dump();
}

Permutation permutation_from_json(const std::string& text) {
  try {
    auto j = json::parse(text);
    auto images = j.at("images").get<std::vector<Point>>();
    if (j.at("degree").get<std::size_t>() != images.size())
      throw InputError("degree does not match the number of images");
    return Permutation(std::move(images));
  } catch (const json::exception& e) {
    throw InputError(std::string("bad permutation JSON: ") + e.what());
  }
}

std::string sggi_to_json(const Sggi& s) {
  json j;
  j["degree"] = s.degree();
  j["generators"] = json::array();
  for (const auto& g : s.gens()) j["generators"].push_back(to_cycle_string(g));
  return j.dump(2);
}

namespace {

std::vector<Permutation> parse_generator_list(const json& list, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& g : list) out.push_back(parse_cycles(g.get<std::string>(), degree));
  return out;
}

}  // namespace

Sggi parse_sggi(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      auto j = json::parse(text);
      const auto degree = j.at("degree").get<std::size_t>();
      if (degree == 0) throw InputError("degree must be positive");
      return Sggi(parse_generator_list(j.at("generators"), degree), degree);
    } catch (const json::exception& e) {
      throw InputError(std::string("bad sggi JSON: ") + e.what());
    }
  }
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    line = line.substr(b);
    if (line.rfind("degree", 0) == 0) {
      try {
        degree = std::stoul(line.substr(6));
      } catch (const std::exception&) {
        throw InputError("bad degree line '" + line + "'");
      }
      continue;
    }
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("no generators given");
  if (degree == 0) {
    for (const auto& l : lines) degree = std::max(degree, parse_cycles(l).degree());
  }
  std::vector<Permutation> gens;
  for (const auto& l : lines) gens.push_back(parse_cycles(l, degree));
  return Sggi(std::move(gens), degree);
}

Sggi load_sggi(const std::string& path) { return parse_sggi(read_text_file(path)); }

std::string data_dir() {
  if (const char* env = std::getenv("SCG_DATA_DIR"); env && *env) return env;
  return SCG_DEFAULT_DATA_DIR;
}

GroupSpec load_group_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw InputError("bad group file '" + path + "': " + e.what());
  }
  GroupSpec g;
  try {
    g.degree = j.at("degree").get<std::size_t>();
    if (g.degree == 0) throw InputError("degree must be positive");
    g.generators = parse_generator_list(j.at("generators"), g.degree);
    if (j.contains("normalizer")) g.normalizer = parse_generator_list(j["normalizer"], g.degree);
    if (j.contains("order")) g.declared_order = j["order"].get<std::uint64_t>();
    g.name = j.value("name", std::filesystem::path(path).stem().string());
    g.provenance = j.value("provenance", "");
  } catch (const json::exception& e) {
    throw InputError("bad group file '" + path + "': " + e.what());
  }
  if (g.declared_order) {
    auto order = build_group(g).order();
    if (order != *g.declared_order)
      throw InputError("group file '" + path + "' declares order " +
                       std::to_string(*g.declared_order) + " but generates " +
                       std::to_string(order));
  }
  return g;
}

GroupSpec parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("group spec '" + spec + "' lacks ':'");
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "An" || kind == "Sn") {
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(arg, &used);
      if (used != arg.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad degree in group spec '" + spec + "'");
    }
    if (n < 1 || n > 64) throw InputError("degree in '" + spec + "' must be in 1..64");
    GroupSpec g;
    g.name = spec;
    g.degree = n;
    g.provenance = "standard generators";
    auto cycle = [&](Point from, Point to) {
      std::vector<Point> c;
      for (Point x = from; x <= to; ++x) c.push_back(x);
      return Permutation::from_cycles(n, {c});
    };
    if (kind == "Sn") {
      if (n >= 2) {
        g.generators.push_back(cycle(0, 1));
        if (n >= 3) g.generators.push_back(cycle(0, static_cast<Point>(n - 1)));
      }
    } else {
      g.alternating_family = true;
      g.family_degree = n;
      if (n >= 3) {
        g.generators.push_back(cycle(0, 2));
        if (n >= 4)
          g.generators.push_back(n % 2 == 1 ? cycle(0, static_cast<Point>(n - 1))
                                            : cycle(1, static_cast<Point>(n - 1)));
        g.normalizer.push_back(cycle(0, 1));
      }
    }
    return g;
  }
  if (kind == "gens") {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return load_group_file(arg);
    auto shipped = fs::path(data_dir()) / "groups" / arg;
    if (fs::exists(shipped)) return load_group_file(shipped.string());
    throw InputError("missing generator file '" + arg + "'");
  }
  throw InputError("unknown group kind '" + kind + "'");
}

PermGroup build_group(const GroupSpec& spec) { return PermGroup(spec.generators, spec.degree); }

LabeledGraph load_graph(const std::string& path) { return graph_from_json(read_text_file(path)); }

}  // namespace scg
