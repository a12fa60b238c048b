#ifndef PGRO_ALGEBRA_HPP
#define PGRO_ALGEBRA_HPP

// The group algebra F_p[G] in the group-element basis, with algebra
// generators a_i = g_i - 1 acting by right multiplication.

#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"
#include "fp_linalg.hpp"
#include "group.hpp"
#include "ordering.hpp"

namespace pgro {

/// Right action of the chosen generators on F_p[G]. Holds a pointer to the
/// group, which must outlive the context.
///
/// The action matrix of a_i has row x equal to e_{x g_i} - e_x. It is kept
/// as the permutation x -> x g_i and only densified on request.
class AlgebraContext {
 public:
  AlgebraContext(const PGroup& G, std::vector<Element> generators)
      : group_(&G), generators_(std::move(generators)) {
    if (G.order() <= 1) throw EmptyGroup("algebra context over the trivial group");
    if (generators_.empty()) throw NotGenerating("no algebra generators");
    for (Element g : generators_)
      if (g >= G.order()) throw InputError("generator index out of range");
    if (!subgroup_closure(G, generators_).is_whole())
      throw NotGenerating("chosen elements do not generate the group");
    right_mult_.resize(generators_.size(), std::vector<Element>(G.order()));
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t x = 0; x < G.order(); ++x)
        right_mult_[i][x] = G.multiply(static_cast<Element>(x), generators_[i]);
    nilpotency_ = compute_nilpotency();
  }

  const PGroup& group() const noexcept { return *group_; }
  Residue prime() const noexcept { return group_->prime(); }
  std::size_t dimension() const noexcept { return group_->order(); }
  std::size_t alphabet() const noexcept { return generators_.size(); }
  std::span<const Element> generators() const noexcept { return generators_; }

  /// Smallest N with J^N = 0.
  std::size_t nilpotency() const noexcept { return nilpotency_; }

  /// v * a_i.
  FpVector apply_generator(const FpVector& v, std::size_t i) const {
    const Residue p = prime();
    std::vector<Residue> out(dimension(), 0);
    const auto& table = right_mult_.at(i);
    for (std::size_t x = 0; x < out.size(); ++x) {
      Residue c = v[x];
      if (!c) continue;
      out[table[x]] = fp::add(out[table[x]], c, p);
      out[x] = fp::sub(out[x], c, p);
    }
    return FpVector(p, std::move(out));
  }

  FpMatrix action_matrix(std::size_t i) const {
    FpMatrix m(prime(), dimension(), dimension());
    const auto& table = right_mult_.at(i);
    for (std::size_t x = 0; x < dimension(); ++x) {
      m.add(x, table[x], 1);
      m.add(x, x, prime() - 1);
    }
    return m;
  }

  FpVector identity_vector() const { return FpVector::unit(prime(), dimension(), PGroup::identity); }

 private:
  // Span of length-r word images, S_{r+1} = S_r * A; J^r = 0 iff S_r = 0.
  std::size_t compute_nilpotency() const {
    std::vector<FpVector> layer{identity_vector()};
    std::size_t r = 0;
    while (!layer.empty()) {
      ++r;
      EchelonState next(prime(), dimension());
      for (const auto& v : layer)
        for (std::size_t i = 0; i < alphabet(); ++i) next.insert(apply_generator(v, i));
      layer = next.basis();
      if (r > dimension()) throw InternalError("algebra generators are not nilpotent");
    }
    return r;
  }

  const PGroup* group_;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> right_mult_;
  std::size_t nilpotency_ = 0;
};

inline AlgebraContext build_context(const PGroup& G, std::span<const Element> generators) {
  return AlgebraContext(G, std::vector<Element>(generators.begin(), generators.end()));
}

/// Image of a word in F_p[G]: e_1 * a_{w_1} * a_{w_2} * ...
inline FpVector evaluate_word(const AlgebraContext& ctx, const Word& w) {
  FpVector v = ctx.identity_vector();
  for (Letter a : w.letters()) {
    if (a >= ctx.alphabet()) throw InputError("letter outside the alphabet: " + render(w));
    v = ctx.apply_generator(v, a);
  }
  return v;
}

/// Powers of the radical J^0 = F_p[G] > J^1 > ... > J^N = 0, each as a
/// reduced echelon basis. Built as right-ideal powers J^{r+1} = J^r A.
struct RadicalSeries {
  std::vector<EchelonState> powers;  // powers[r] spans J^r, r = 0..N

  std::size_t dimension(std::size_t r) const { return r < powers.size() ? powers[r].rank() : 0; }
  bool contains(std::size_t r, const FpVector& v) const {
    return r < powers.size() ? powers[r].contains(v) : v.is_zero();
  }
};

inline RadicalSeries radical_series(const AlgebraContext& ctx) {
  RadicalSeries series;
  EchelonState whole(ctx.prime(), ctx.dimension());
  for (std::size_t x = 0; x < ctx.dimension(); ++x)
    whole.insert(FpVector::unit(ctx.prime(), ctx.dimension(), x));
  series.powers.push_back(std::move(whole));
  while (series.powers.back().rank() > 0) {
    EchelonState next(ctx.prime(), ctx.dimension());
    for (const auto& v : series.powers.back().basis())
      for (std::size_t i = 0; i < ctx.alphabet(); ++i) next.insert(ctx.apply_generator(v, i));
    series.powers.push_back(std::move(next));
  }
  return series;
}

/// dim J^r / J^{r+1} for r = 0 .. N-1.
inline std::vector<std::size_t> radical_layers(const RadicalSeries& series) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r + 1 < series.powers.size(); ++r)
    out.push_back(series.dimension(r) - series.dimension(r + 1));
  return out;
}

inline std::vector<std::size_t> radical_layers(const AlgebraContext& ctx) {
  return radical_layers(radical_series(ctx));
}

}  // namespace pgro

#endif  // PGRO_ALGEBRA_HPP
