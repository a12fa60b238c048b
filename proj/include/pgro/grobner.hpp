#ifndef PGRO_GROBNER_HPP
#define PGRO_GROBNER_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "fp_linalg.hpp"
#include "nontips.hpp"
#include "ordering.hpp"

namespace pgro {

/// Coordinates with respect to the nontip basis.
class ChangeOfBasis {
 public:
  ChangeOfBasis(const AlgebraContext& ctx, const NontipTree& tree) : state_(ctx.prime(), ctx.dimension()) {
    if (tree.size() != ctx.dimension()) throw InternalError("nontip count differs from |G|");
    images_.reserve(tree.size());
    for (const auto& node : tree.nodes()) {
      FpVector v = node.parent == NontipNode::none ? ctx.identity_vector()
                                                   : ctx.apply_generator(images_[node.parent], node.which_child);
      auto r = state_.insert(v);
      if (!std::holds_alternative<Independent>(r))
        throw InternalError("nontip images are linearly dependent at " + render(node.word));
      images_.push_back(std::move(v));
    }
  }

  const FpVector& image(std::size_t i) const { return images_.at(i); }

  Coefficients coordinates(const FpVector& v) const {
    auto c = state_.express(v);
    if (!c) throw InternalError("vector outside the span of the nontips");
    return std::move(*c);
  }

 private:
  EchelonState state_;
  std::vector<FpVector> images_;
};

/// Right action of each generator on the nontip basis:
/// rows[i][w] = coordinates of w * a_i.
struct NontipActions {
  Residue prime = 2;
  std::vector<std::vector<Coefficients>> rows;

  FpMatrix dense(std::size_t i) const {
    const std::size_t n = rows.at(i).size();
    FpMatrix m(prime, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (auto [c, v] : rows[i][r]) m.set(r, c, v);
    return m;
  }
};

inline NontipActions nontip_action_matrices(const AlgebraContext& ctx, const NontipTree& tree,
                                            const ChangeOfBasis& basis) {
  NontipActions out;
  out.prime = ctx.prime();
  out.rows.assign(ctx.alphabet(), std::vector<Coefficients>(tree.size()));
  for (std::size_t a = 0; a < ctx.alphabet(); ++a) {
    for (const auto& node : tree.nodes()) {
      if (node.children[a] != NontipNode::none)
        out.rows[a][node.index] = Coefficients{{node.children[a], 1}};
      else
        out.rows[a][node.index] = basis.coordinates(ctx.apply_generator(basis.image(node.index), a));
    }
  }
  return out;
}

inline NontipActions nontip_action_matrices(const AlgebraContext& ctx, const NontipTree& tree) {
  return nontip_action_matrices(ctx, tree, ChangeOfBasis(ctx, tree));
}

/// w - nu(w), stored as the tip and nu(w) over nontip indices.
struct GrobnerElement {
  Word tip;
  Coefficients nu;
};

/// Completely reduced Groebner basis. For RLL it is a Groebner basis only
/// together with the words of length >= nilpotency.
struct GrobnerBasis {
  OrderingSpec ordering;
  Residue prime = 2;
  std::size_t nilpotency = 0;
  std::vector<Word> nontips;  // array order of the tree
  std::vector<GrobnerElement> elements;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t alphabet() const noexcept { return ordering.alphabet; }
  bool needs_length_bound() const noexcept { return ordering.kind == OrderingKind::RLL; }
};

/// For each minimal tip w = u*a, nu(w) is row u of the action of a.
inline GrobnerBasis grobner_basis(const AlgebraContext& ctx, const NontipTree& tree, const NontipActions& actions) {
  GrobnerBasis gb;
  gb.ordering = tree.ordering();
  gb.prime = ctx.prime();
  gb.nilpotency = ctx.nilpotency();
  gb.nontips = tree.words();
  for (Word& tip : minimal_tips(tree)) {
    auto u = tree.find(tip.drop_last());
    if (!u) throw InternalError("minimal tip without nontip prefix");
    Letter a = tip[tip.length() - 1];
    gb.elements.push_back({std::move(tip), actions.rows.at(a).at(*u)});
  }
  return gb;
}

/// A formal linear combination of words.
using WordCombination = std::vector<std::pair<Residue, Word>>;

inline WordCombination as_combination(const GrobnerBasis& gb, const GrobnerElement& e) {
  WordCombination out{{1, e.tip}};
  for (auto [i, c] : e.nu) out.emplace_back(fp::neg(c, gb.prime), gb.nontips.at(i));
  return out;
}

inline FpVector evaluate(const AlgebraContext& ctx, const WordCombination& element) {
  FpVector v(ctx.prime(), ctx.dimension());
  for (const auto& [c, w] : element) v.axpy(c, evaluate_word(ctx, w));
  return v;
}

/// Normal form over the nontips, by linear algebra rather than rewriting.
inline Coefficients reduce(const AlgebraContext& ctx, const ChangeOfBasis& basis, const WordCombination& element) {
  return basis.coordinates(evaluate(ctx, element));
}

inline Coefficients reduce(const AlgebraContext& ctx, const NontipTree& tree, const WordCombination& element) {
  return reduce(ctx, ChangeOfBasis(ctx, tree), element);
}

}  // namespace pgro

#endif  // PGRO_GROBNER_HPP
