#ifndef PGRO_PIPELINE_HPP
#define PGRO_PIPELINE_HPP

// group -> generators -> algebra context -> nontips -> Groebner basis.

#include <cstdint>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "grobner.hpp"
#include "group.hpp"
#include "jennings.hpp"
#include "nontips.hpp"
#include "random.hpp"

namespace pgro {

struct PipelineOptions {
  OrderingKind ordering = OrderingKind::LL;
  /// Unset: smallest exponent for LL, arbitrary for RLL. Jennings ignores it.
  std::optional<Selection> selection;
  bool use_given_generators = false;
  std::uint64_t seed = 0;
  bool verify_jennings = true;
};

inline Selection default_selection(OrderingKind k) {
  return k == OrderingKind::LL ? Selection::SmallestExponent : Selection::Arbitrary;
}

struct PipelineResult {
  std::vector<Element> generators;
  /// Generator dimensions; Jennings only.
  std::vector<unsigned> dimensions;
  AlgebraContext context;
  NontipTree tree;
  GrobnerBasis basis;
};

namespace detail {

inline NontipTree find_nontips(const AlgebraContext& ctx, const PipelineOptions& opt,
                               const std::vector<unsigned>& dims) {
  switch (opt.ordering) {
    case OrderingKind::LL: return nontips_ll(ctx);
    case OrderingKind::RLL: return nontips_rll(ctx);
    case OrderingKind::Jennings: return nontips_jennings(ctx, dims, opt.verify_jennings);
  }
  throw InputError("unknown ordering");
}

}  // namespace detail

/// The group must outlive the result (the context points into it).
inline PipelineResult run_pipeline(const PGroup& G, const PipelineOptions& opt, Rng& rng) {
  if (G.order() <= 1) throw EmptyGroup("trivial group");
  std::vector<Element> gens;
  std::vector<unsigned> dims;
  if (opt.ordering == OrderingKind::Jennings) {
    if (opt.use_given_generators)
      throw InputError("the Jennings ordering needs Jennings pc-generators, not the defining generators");
    auto jg = jennings_pc_generators(G, jennings_series(G), rng);
    gens = std::move(jg.elements);
    dims = std::move(jg.dimensions);
  } else if (opt.use_given_generators) {
    gens.assign(G.generators().begin(), G.generators().end());
  } else {
    gens = minimal_generators(G, opt.selection.value_or(default_selection(opt.ordering)), rng);
  }
  AlgebraContext ctx(G, gens);
  NontipTree tree = detail::find_nontips(ctx, opt, dims);
  GrobnerBasis basis = grobner_basis(ctx, tree, nontip_action_matrices(ctx, tree));
  return {std::move(gens), std::move(dims), std::move(ctx), std::move(tree), std::move(basis)};
}

inline PipelineResult run_pipeline(const PGroup& G, const PipelineOptions& opt) {
  Rng rng(opt.seed);
  return run_pipeline(G, opt, rng);
}

/// Je(G) = n(n+1)/2 for |G| = p^n.
inline std::size_t jennings_basis_size(unsigned n) { return std::size_t{n} * (n + 1) / 2; }

}  // namespace pgro

#endif  // PGRO_PIPELINE_HPP
