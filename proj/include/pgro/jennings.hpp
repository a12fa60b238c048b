#ifndef PGRO_JENNINGS_HPP
#define PGRO_JENNINGS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "group.hpp"
#include "random.hpp"

namespace pgro {

/// Dimension subgroups F_1 = G >= F_2 >= ... >= F_L = 1.
struct JenningsSeries {
  /// terms[r-1] is F_r; the last entry is trivial.
  std::vector<Subgroup> terms;

  /// F_r for r >= 1, trivial beyond the stored range.
  const Subgroup& term(std::size_t r) const { return terms[std::min(r, terms.size()) - 1]; }
  /// First index with F_L trivial.
  std::size_t length() const noexcept { return terms.size(); }
};

/// F_1 = G, F_r = [F_{r-1}, G] (F_{ceil(r/p)})^p.
inline JenningsSeries jennings_series(const PGroup& G) {
  if (G.order() <= 1) throw EmptyGroup("Jennings series of the trivial group");
  const unsigned p = G.prime();
  JenningsSeries series;
  series.terms.push_back(subgroup_closure(G, G.generators()));
  for (std::size_t r = 2; !series.terms.back().is_trivial(); ++r) {
    std::vector<Element> seeds;
    for (Element x : series.terms[r - 2].elements())
      for (Element g : G.generators()) seeds.push_back(G.commutator(x, g));
    const Subgroup& base = series.terms[(r + p - 1) / p - 1];
    for (Element x : base.elements()) seeds.push_back(G.power(x, p));
    // Most seeds are duplicates; drop them before closing.
    std::vector<char> seen(G.order(), 0);
    std::vector<Element> unique;
    for (Element s : seeds)
      if (!seen[s]) {
        seen[s] = 1;
        unique.push_back(s);
      }
    series.terms.push_back(normal_closure(G, unique));
  }
  return series;
}

/// Jennings pc-generators g_1..g_n, layer by layer, with dim(g_i) = r for
/// g_i in F_r - F_{r+1}.
struct JenningsGenerators {
  std::vector<Element> elements;
  std::vector<unsigned> dimensions;

  /// layer_counts()[r-1] = number of generators of dimension r.
  std::vector<unsigned> layer_counts() const {
    std::vector<unsigned> d(dimensions.empty() ? 0 : dimensions.back(), 0);
    for (unsigned r : dimensions) ++d[r - 1];
    return d;
  }
};

inline JenningsGenerators jennings_pc_generators(const PGroup& G, const JenningsSeries& series, Rng& rng) {
  JenningsGenerators out;
  for (std::size_t r = 1; r < series.length(); ++r) {
    const Subgroup& upper = series.terms[r - 1];
    const Subgroup& lower = series.terms[r];
    if (upper.order() == lower.order()) continue;
    for (Element g : detail::extend_randomly(upper, lower, Selection::Arbitrary, rng, nullptr)) {
      out.elements.push_back(g);
      out.dimensions.push_back(static_cast<unsigned>(r));
    }
  }
  if (out.elements.size() != G.exponent())
    throw InternalError("Jennings generator count differs from log_p |G|");
  return out;
}

inline JenningsGenerators jennings_pc_generators(const PGroup& G, std::uint64_t seed) {
  Rng rng(seed);
  return jennings_pc_generators(G, jennings_series(G), rng);
}

/// Coefficients of prod_r (1 + t^r + ... + t^{(p-1)r})^{d_r}, where
/// layer_counts[r-1] = d_r. Coefficient k predicts dim J^k / J^{k+1}.
inline std::vector<std::uint64_t> layer_polynomial(std::span<const unsigned> layer_counts, unsigned p) {
  std::vector<std::uint64_t> poly{1};
  for (std::size_t i = 0; i < layer_counts.size(); ++i) {
    const std::size_t r = i + 1;
    for (unsigned k = 0; k < layer_counts[i]; ++k) {
      std::vector<std::uint64_t> next(poly.size() + (p - 1) * r, 0);
      for (std::size_t a = 0; a < poly.size(); ++a)
        for (std::size_t e = 0; e < p; ++e) next[a + e * r] += poly[a];
      poly = std::move(next);
    }
  }
  return poly;
}

}  // namespace pgro

#endif  // PGRO_JENNINGS_HPP
