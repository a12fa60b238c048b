#ifndef PGRO_EXPERIMENT_HPP
#define PGRO_EXPERIMENT_HPP

// Repeated pipeline runs with fresh random generators, summarised as
// min / max / mean / sample standard deviation of the basis size.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "pipeline.hpp"
#include "random.hpp"

namespace pgro {

inline std::string selection_tag(Selection s) {
  return s == Selection::Arbitrary ? "arbitrary" : "smallest";
}

inline Selection parse_selection(std::string_view tag) {
  if (tag == "arbitrary") return Selection::Arbitrary;
  if (tag == "smallest") return Selection::SmallestExponent;
  throw InputError("unknown selection method: " + std::string(tag));
}

struct ExperimentReport {
  std::string group;
  OrderingKind ordering = OrderingKind::LL;
  /// Unset for Jennings.
  std::optional<Selection> selection;
  std::size_t attempts = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes;
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0;
  double stddev = 0;
};

/// Attempt i draws from stream_rng(seed, i), so results do not depend on the
/// order attempts are run in.
inline ExperimentReport run_experiment(const PGroup& G, const std::string& label, OrderingKind ordering,
                                       std::optional<Selection> selection, std::size_t attempts,
                                       std::uint64_t seed) {
  if (attempts < 1) throw InputError("attempts must be at least 1");
  ExperimentReport rep;
  rep.group = label;
  rep.ordering = ordering;
  if (ordering != OrderingKind::Jennings) rep.selection = selection.value_or(default_selection(ordering));
  rep.attempts = attempts;
  rep.seed = seed;
  PipelineOptions opt;
  opt.ordering = ordering;
  opt.selection = rep.selection;
  for (std::size_t i = 0; i < attempts; ++i) {
    Rng rng = stream_rng(seed, i);
    rep.sizes.push_back(run_pipeline(G, opt, rng).basis.size());
  }
  if (ordering == OrderingKind::Jennings) {
    const std::size_t expected = jennings_basis_size(G.exponent());
    for (std::size_t s : rep.sizes)
      if (s != expected)
        throw InternalError("Jennings basis of size " + std::to_string(s) + ", expected " + std::to_string(expected));
  }
  auto [lo, hi] = std::minmax_element(rep.sizes.begin(), rep.sizes.end());
  rep.min = *lo;
  rep.max = *hi;
  const double n = static_cast<double>(attempts);
  rep.mean = std::accumulate(rep.sizes.begin(), rep.sizes.end(), 0.0) / n;
  if (attempts > 1) {
    double ss = 0;
    for (std::size_t s : rep.sizes) ss += (static_cast<double>(s) - rep.mean) * (static_cast<double>(s) - rep.mean);
    rep.stddev = std::sqrt(ss / (n - 1));
  }
  return rep;
}

inline std::string format_report(const ExperimentReport& r) {
  std::ostringstream out;
  out << r.group << ' ' << ordering_tag(r.ordering) << ' ' << (r.selection ? selection_tag(*r.selection) : "-")
      << " attempts=" << r.attempts << " min=" << r.min << " max=" << r.max << std::fixed << std::setprecision(2)
      << " mean=" << r.mean << " stddev=" << r.stddev;
  return out.str();
}

inline nlohmann::json to_json(const ExperimentReport& r) {
  return {
      {"group", r.group},
      {"ordering", std::string(ordering_tag(r.ordering))},
      {"selection", r.selection ? nlohmann::json(selection_tag(*r.selection)) : nlohmann::json(nullptr)},
      {"attempts", r.attempts},
      {"seed", r.seed},
      {"sizes", r.sizes},
      {"min", r.min},
      {"max", r.max},
      {"mean", r.mean},
      {"stddev", r.stddev},
  };
}

}  // namespace pgro

#endif  // PGRO_EXPERIMENT_HPP
