#ifndef PGRO_GROUP_HPP
#define PGRO_GROUP_HPP

// Finite p-groups given by permutation generators: element enumeration,
// subgroup closures, the Frattini subgroup and minimal generating sets.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "random.hpp"

namespace pgro {

using Element = std::uint32_t;

inline constexpr std::size_t default_order_ceiling = std::size_t{1} << 20;

class PGroup;
PGroup close_group(std::span<const Permutation> generators, std::size_t ceiling);

/// A p-group as an explicit element list. Element 0 is the identity and the
/// rest appear in breadth-first order from it, right-multiplying by the
/// defining generators in the order given.
class PGroup {
 public:
  static constexpr Element identity = 0;

  /// Prime dividing the order; 0 for the trivial group.
  unsigned prime() const noexcept { return p_; }
  /// n with |G| = p^n.
  unsigned exponent() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return elements_.front().degree(); }

  const Permutation& element(Element x) const { return elements_.at(x); }
  std::span<const Permutation> elements() const noexcept { return elements_; }

  /// Indices of the defining generators.
  std::span<const Element> generators() const noexcept { return generators_; }

  std::optional<Element> index_of(const Permutation& perm) const {
    auto it = index_.find(perm);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Element multiply(Element x, Element y) const { return lookup(elements_[x] * elements_[y]); }
  Element inverse(Element x) const { return inverses_[x]; }

  Element power(Element x, std::uint64_t k) const {
    Permutation r = Permutation::identity(degree());
    Permutation b = elements_[x];
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return lookup(r);
  }

  /// [x, y] = x^-1 y^-1 x y
  Element commutator(Element x, Element y) const {
    return lookup(elements_[inverses_[x]] * elements_[inverses_[y]] * elements_[x] * elements_[y]);
  }

  /// g^-1 x g
  Element conjugate(Element x, Element g) const {
    return lookup(elements_[inverses_[g]] * elements_[x] * elements_[g]);
  }

 private:
  friend PGroup close_group(std::span<const Permutation>, std::size_t);

  Element lookup(const Permutation& perm) const {
    auto it = index_.find(perm);
    if (it == index_.end()) throw InternalError("product left the group");
    return it->second;
  }

  unsigned p_ = 0;
  unsigned n_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Element> generators_;
  std::vector<Element> inverses_;
  std::unordered_map<Permutation, Element, PermutationHash> index_;
};

/// Enumerates the group generated by `generators`.
inline PGroup close_group(std::span<const Permutation> generators,
                          std::size_t ceiling = default_order_ceiling) {
  if (generators.empty()) throw InputError("close_group: no generators");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw InputError("close_group: generators of unequal degree");

  PGroup G;
  G.elements_.push_back(Permutation::identity(degree));
  G.index_.emplace(G.elements_.front(), 0);
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto& g : generators) {
      Permutation y = G.elements_[head] * g;
      if (G.index_.contains(y)) continue;
      if (G.elements_.size() >= ceiling)
        throw TooLarge("group order exceeds ceiling " + std::to_string(ceiling));
      G.index_.emplace(y, static_cast<Element>(G.elements_.size()));
      G.elements_.push_back(std::move(y));
    }
  }

  std::size_t order = G.elements_.size();
  if (order > 1) {
    std::size_t p = 2;
    while (order % p) ++p;
    std::size_t m = order;
    unsigned n = 0;
    while (m % p == 0) {
      m /= p;
      ++n;
    }
    if (m != 1) throw NotAPGroup("group order " + std::to_string(order) + " is not a prime power");
    G.p_ = static_cast<unsigned>(p);
    G.n_ = n;
  }

  for (const auto& g : generators) G.generators_.push_back(G.index_.at(g));
  G.inverses_.resize(order);
  for (std::size_t x = 0; x < order; ++x) G.inverses_[x] = G.lookup(G.elements_[x].inverse());
  return G;
}

/// Multiplication table with 0-based entries: at(x, y) = x*y.
struct CayleyTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t at(std::size_t x, std::size_t y) const { return entries[x * order + y]; }
};

/// Right regular action x -> x*g for each chosen generator g, as permutations
/// of the table's element indices. Checks the table is a Latin square with an
/// identity; associativity is assumed.
inline std::vector<Permutation> regular_action(const CayleyTable& table,
                                               std::span<const std::size_t> generators) {
  const std::size_t n = table.order;
  if (n == 0 || table.entries.size() != n * n) throw MalformedTable("table has wrong size");
  std::vector<char> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      auto v = table.at(x, y);
      if (v >= n || seen[v]) throw MalformedTable("row " + std::to_string(x + 1) + " is not a bijection");
      seen[v] = 1;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      auto v = table.at(x, y);
      if (seen[v]) throw MalformedTable("column " + std::to_string(y + 1) + " is not a bijection");
      seen[v] = 1;
    }
  }
  bool has_identity = false;
  for (std::size_t e = 0; e < n && !has_identity; ++e) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) ok = table.at(e, y) == y && table.at(y, e) == y;
    has_identity = ok;
  }
  if (!has_identity) throw MalformedTable("table has no identity element");

  std::vector<Permutation> out;
  for (std::size_t g : generators) {
    if (g >= n) throw MalformedTable("generator index out of range");
    std::vector<Permutation::Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = table.at(x, g);
    out.emplace_back(std::move(images));
  }
  return out;
}

inline std::size_t element_order(const PGroup& G, Element x) {
  const Permutation& g = G.element(x);
  Permutation y = g;
  std::size_t k = 1;
  while (!y.is_identity()) {
    y = y * g;
    ++k;
  }
  return k;
}

inline std::vector<std::size_t> element_orders(const PGroup& G) {
  std::vector<std::size_t> out(G.order());
  for (std::size_t x = 0; x < G.order(); ++x) out[x] = element_order(G, static_cast<Element>(x));
  return out;
}

/// A subgroup as membership flags over the parent's element indices,
/// together with a generating set for it.
class Subgroup {
 public:
  explicit Subgroup(const PGroup& parent) : parent_(&parent), flags_(parent.order(), 0) {
    flags_[PGroup::identity] = 1;
    members_.push_back(PGroup::identity);
  }

  const PGroup& parent() const noexcept { return *parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element x) const { return flags_.at(x) != 0; }
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_->order(); }

  /// Members in discovery order (identity first).
  std::span<const Element> elements() const noexcept { return members_; }
  std::span<const Element> generators() const noexcept { return gens_; }

  /// Replaces this subgroup by <this, g>.
  void adjoin(Element g) {
    if (contains(g)) return;
    gens_.push_back(g);
    const PGroup& G = *parent_;
    // Members so far already form a subgroup; close under the enlarged set.
    for (std::size_t head = 0; head < members_.size(); ++head) {
      for (Element s : gens_) {
        Element y = G.multiply(members_[head], s);
        if (flags_[y]) continue;
        flags_[y] = 1;
        members_.push_back(y);
      }
    }
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.flags_ == b.flags_;
  }

 private:
  const PGroup* parent_;
  std::vector<char> flags_;
  std::vector<Element> members_;
  std::vector<Element> gens_;
};

inline Subgroup subgroup_closure(const PGroup& G, std::span<const Element> seeds) {
  Subgroup H(G);
  for (Element s : seeds) H.adjoin(s);
  return H;
}

/// Smallest normal subgroup containing the seeds.
inline Subgroup normal_closure(const PGroup& G, std::span<const Element> seeds) {
  Subgroup H = subgroup_closure(G, seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Element> gens(H.generators().begin(), H.generators().end());
    for (Element h : gens) {
      for (Element g : G.generators()) {
        Element c = G.conjugate(h, g);
        if (!H.contains(c)) {
          H.adjoin(c);
          changed = true;
        }
      }
    }
  }
  return H;
}

/// Phi(G) = G^p [G,G], the normal closure of the p-th powers and pairwise
/// commutators of the defining generators.
inline Subgroup frattini(const PGroup& G) {
  std::vector<Element> seeds;
  auto gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(G.power(gens[i], G.prime()));
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(G.commutator(gens[i], gens[j]));
  }
  return normal_closure(G, seeds);
}

enum class Selection { Arbitrary, SmallestExponent };

namespace detail {

/// Extends `H` inside `ambient` (both subgroups of the same group) by random
/// elements of ambient - H until H = ambient. Returns the chosen elements.
inline std::vector<Element> extend_randomly(const Subgroup& ambient, Subgroup H, Selection method,
                                            Rng& rng, const std::vector<std::size_t>* orders) {
  std::vector<Element> chosen;
  while (H.order() < ambient.order()) {
    std::vector<Element> candidates;
    for (Element x : ambient.elements())
      if (!H.contains(x)) candidates.push_back(x);
    std::sort(candidates.begin(), candidates.end());
    if (method == Selection::SmallestExponent) {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (Element x : candidates) best = std::min(best, (*orders)[x]);
      std::erase_if(candidates, [&](Element x) { return (*orders)[x] != best; });
    }
    Element g = candidates[uniform_below(rng, candidates.size())];
    chosen.push_back(g);
    H.adjoin(g);
  }
  return chosen;
}

}  // namespace detail

/// Minimal generating set: start from H = Phi(G) and repeatedly adjoin an
/// element of G - H, chosen uniformly (Arbitrary) or uniformly among those of
/// least order (SmallestExponent), until H = G.
inline std::vector<Element> minimal_generators(const PGroup& G, Selection method, Rng& rng) {
  if (G.order() <= 1) throw EmptyGroup("trivial group has no minimal generators");
  Subgroup whole(G);
  for (Element g : G.generators()) whole.adjoin(g);
  std::vector<std::size_t> orders;
  if (method == Selection::SmallestExponent) orders = element_orders(G);
  return detail::extend_randomly(whole, frattini(G), method, rng, &orders);
}

inline std::vector<Element> minimal_generators(const PGroup& G, Selection method, std::uint64_t seed) {
  Rng rng(seed);
  return minimal_generators(G, method, rng);
}

}  // namespace pgro

#endif  // PGRO_GROUP_HPP
