#include "scg/bounds.hpp"

#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "scg/errors.hpp"

namespace scg {

std::uint64_t conder_floor(std::size_t d) {
  if (d == 0) throw PreconditionError("rank must be positive");
  if (2 * d - 1 >= 64) throw std::overflow_error("conder_floor exceeds 64 bits");
  return std::uint64_t{1} << (2 * d - 1);
}

std::uint64_t maroti_case_c(std::size_t n) {
  if (n < 2) throw PreconditionError("degree must be at least 2");
  const auto terms = static_cast<std::size_t>(std::bit_width(n)) - 1;  // floor(log2 n)
  unsigned __int128 product = n;
  for (std::size_t i = 0; i < terms; ++i) {
    product *= n - (std::size_t{1} << i);
    if (product > ~std::uint64_t{0}) throw std::overflow_error("maroti_case_c exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(product);
}

std::size_t an_rank_formula(std::size_t n) {
  if (n < 3) throw PreconditionError("A_n rank is defined for n >= 3");
  switch (n) {
    case 3: case 4: case 6: case 7: case 8: return 0;
    case 5: return 3;
    case 9: return 4;
    case 10: return 5;
    case 11: return 6;
    default: return (n - 1) / 2;
  }
}

std::size_t transitive_ceiling(std::size_t n) { return n / 2 + 1; }

bool primitive_rank_ok(std::size_t n, std::size_t d) { return 2 * d + 3 <= n; }

std::uint64_t table1_threshold(std::size_t n) {
  if (n < 4) return 1;
  return std::uint64_t{1} << (2 * (n / 2) - 3);
}

BoundReport bound_report(std::size_t degree, std::optional<std::uint64_t> order,
                         std::optional<std::size_t> rank) {
  BoundReport r;
  r.degree = degree;
  r.order = order;
  r.rank = rank;
  if (rank && *rank > 0 && 2 * *rank - 1 < 64) r.conder = conder_floor(*rank);
  if (degree >= 2) {
    try {
      r.maroti = maroti_case_c(degree);
    } catch (const std::overflow_error&) {
    }
  }
  if (degree >= 3) r.an_rank = an_rank_formula(degree);
  r.transitive = transitive_ceiling(degree);
  r.caption_threshold = table1_threshold(degree);
  if (order) {
    if (r.conder) r.conder_holds = *order >= *r.conder;
    if (r.maroti) r.maroti_holds = *order <= *r.maroti;
    r.caption_holds = *order >= r.caption_threshold;
  }
  if (rank) r.primitive_rank_holds = primitive_rank_ok(degree, *rank);
  return r;
}

std::string to_json(const BoundReport& r) {
  nlohmann::json j;
  j["degree"] = r.degree;
  auto put = [&](const char* key, const auto& opt) {
    if (opt) j[key] = *opt;
  };
  put("order", r.order);
  put("rank", r.rank);
  put("conder_floor", r.conder);
  put("maroti_case_c", r.maroti);
  put("an_rank_formula", r.an_rank);
  j["transitive_ceiling"] = r.transitive;
  j["caption_threshold"] = r.caption_threshold;
  nlohmann::json verdicts = nlohmann::json::object();
  if (r.conder_holds) verdicts["conder"] = *r.conder_holds;
  if (r.maroti_holds) verdicts["maroti_case_c"] = *r.maroti_holds;
  if (r.caption_holds) verdicts["caption"] = *r.caption_holds;
  if (r.primitive_rank_holds) verdicts["primitive_rank"] = *r.primitive_rank_holds;
  j["verdicts"] = verdicts;
  return j.dump(2);
}

}  // namespace scg
