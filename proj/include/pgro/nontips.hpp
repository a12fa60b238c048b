#ifndef PGRO_NONTIPS_HPP
#define PGRO_NONTIPS_HPP

// Nontips: the words whose images are independent of the images of all
// smaller words. They form a basis of F_p[G] and are closed under taking
// subwords, so they are stored as a prefix tree that is also addressable as
// an array. Array order is ascending for LL and descending for RLL and
// Jennings; in every case the empty word sits at position 0.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "fp_linalg.hpp"
#include "ordering.hpp"

namespace pgro {

struct NontipNode {
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  Word word;
  std::size_t index = 0;
  std::size_t parent = none;
  /// Last letter of the word, i.e. which child of the parent this is.
  Letter which_child = 0;
  /// children[a] is the index of word*a, or `none` when word*a is a tip.
  std::vector<std::size_t> children;

  std::size_t length() const noexcept { return word.length(); }
};

class NontipTree {
 public:
  NontipTree(OrderingSpec ordering, std::vector<Word> words) : ordering_(std::move(ordering)) {
    nodes_.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      NontipNode node;
      node.word = std::move(words[i]);
      node.index = i;
      node.children.assign(ordering_.alphabet, NontipNode::none);
      if (!lookup_.emplace(node.word, i).second)
        throw InternalError("repeated nontip " + render(node.word));
      nodes_.push_back(std::move(node));
    }
    if (nodes_.empty() || !nodes_.front().word.empty())
      throw InternalError("nontip array must start with the empty word");
    for (auto& node : nodes_) {
      if (node.word.empty()) continue;
      auto parent = find(node.word.drop_last());
      if (!parent) throw InternalError("nontips not prefix-closed at " + render(node.word));
      node.parent = *parent;
      node.which_child = node.word[node.length() - 1];
      nodes_[*parent].children[node.which_child] = node.index;
    }
  }

  const OrderingSpec& ordering() const noexcept { return ordering_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t alphabet() const noexcept { return ordering_.alphabet; }
  const NontipNode& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<NontipNode>& nodes() const noexcept { return nodes_; }

  std::optional<std::size_t> find(const Word& w) const {
    auto it = lookup_.find(w);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Word> words() const {
    std::vector<Word> out;
    for (const auto& n : nodes_) out.push_back(n.word);
    return out;
  }

 private:
  OrderingSpec ordering_;
  std::vector<NontipNode> nodes_;
  std::unordered_map<Word, std::size_t, WordHash> lookup_;
};

/// LL: candidates are the extensions w*a of accepted nontips, taken in
/// ascending LL order (tips form a monoid ideal, so nothing else can be a
/// nontip). Each candidate is a nontip iff its image is independent of
/// everything accepted so far.
inline NontipTree nontips_ll(const AlgebraContext& ctx) {
  const std::size_t target = ctx.dimension();
  EchelonState state(ctx.prime(), ctx.dimension());
  std::vector<Word> words{Word{}};
  std::vector<FpVector> images{ctx.identity_vector()};
  state.insert(images.front());

  std::vector<std::size_t> frontier{0};
  while (words.size() < target) {
    std::vector<std::size_t> next;
    for (std::size_t w : frontier) {
      for (std::size_t a = 0; a < ctx.alphabet() && words.size() < target; ++a) {
        FpVector v = ctx.apply_generator(images[w], a);
        if (std::holds_alternative<Dependent>(state.insert(v))) continue;
        next.push_back(words.size());
        words.push_back(words[w].appended(static_cast<Letter>(a)));
        images.push_back(std::move(v));
      }
    }
    if (next.empty()) throw InternalError("LL nontip search ran dry before |G| nontips");
    frontier = std::move(next);
  }
  return NontipTree(OrderingSpec::ll(ctx.alphabet()), std::move(words));
}

/// RLL, one length at a time: a length-r word w*a (w a length r-1 nontip)
/// is a tip iff its image lies in J^{r+1} plus the span of the length-r
/// nontips already accepted, candidates being visited in ascending RLL order.
inline NontipTree nontips_rll(const AlgebraContext& ctx, const RadicalSeries& radical) {
  std::vector<std::vector<Word>> layers{{Word{}}};
  std::vector<std::vector<FpVector>> images{{ctx.identity_vector()}};
  for (std::size_t r = 1; r < radical.powers.size() - 1; ++r) {
    const std::size_t target = radical.dimension(r) - radical.dimension(r + 1);
    EchelonState state(ctx.prime(), ctx.dimension());
    for (const auto& v : radical.powers[r + 1].basis()) state.insert(v);
    std::vector<Word> accepted;
    std::vector<FpVector> accepted_images;
    const auto& prev = layers[r - 1];
    // prev is stored in ascending lex order; RLL-ascending means
    // lex-descending within a length.
    for (std::size_t i = prev.size(); i-- > 0 && accepted.size() < target;) {
      for (std::size_t a = ctx.alphabet(); a-- > 0 && accepted.size() < target;) {
        FpVector v = ctx.apply_generator(images[r - 1][i], a);
        if (std::holds_alternative<Dependent>(state.insert(v))) continue;
        accepted.push_back(prev[i].appended(static_cast<Letter>(a)));
        accepted_images.push_back(std::move(v));
      }
    }
    if (accepted.size() != target) throw InternalError("RLL layer " + std::to_string(r) + " is short");
    std::reverse(accepted.begin(), accepted.end());
    std::reverse(accepted_images.begin(), accepted_images.end());
    layers.push_back(std::move(accepted));
    images.push_back(std::move(accepted_images));
  }
  std::vector<Word> words;
  for (auto& layer : layers)
    for (auto& w : layer) words.push_back(std::move(w));
  if (words.size() != ctx.dimension()) throw InternalError("RLL nontip count differs from |G|");
  return NontipTree(OrderingSpec::rll(ctx.alphabet()), std::move(words));
}

inline NontipTree nontips_rll(const AlgebraContext& ctx) { return nontips_rll(ctx, radical_series(ctx)); }

/// Jennings: the nontips are a_n^{e_n} ... a_1^{e_1} with 0 <= e_i < p.
/// They are written down directly, sorted, and (unless `verify` is off)
/// checked against the algebra to be independent in ascending order.
inline NontipTree nontips_jennings(const AlgebraContext& ctx, const std::vector<unsigned>& dimensions,
                                   bool verify = true) {
  OrderingSpec spec = OrderingSpec::jennings(dimensions);
  const std::size_t n = ctx.alphabet();
  if (dimensions.size() != n) throw InputError("one dimension per generator required");
  const unsigned p = ctx.prime();
  std::vector<Word> words;
  std::vector<unsigned> e(n, 0);
  while (true) {
    std::vector<Letter> letters;
    for (std::size_t i = n; i-- > 0;) letters.insert(letters.end(), e[i], static_cast<Letter>(i));
    words.emplace_back(std::move(letters));
    std::size_t k = 0;
    while (k < n && ++e[k] == p) e[k++] = 0;
    if (k == n) break;
  }
  if (words.size() != ctx.dimension()) throw InternalError("Jennings generators do not match |G|");
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return compare(spec, a, b) > 0; });

  if (verify) {
    EchelonState state(ctx.prime(), ctx.dimension());
    for (std::size_t i = words.size(); i-- > 0;)
      if (std::holds_alternative<Dependent>(state.insert(evaluate_word(ctx, words[i]))))
        throw InternalError("claimed Jennings nontip " + render(words[i]) + " is dependent");
  }
  return NontipTree(std::move(spec), std::move(words));
}

/// Brute force: every word shorter than N, sorted by the ordering, offered
/// in ascending order to a fresh echelon state. Returns the nontips in
/// ascending order.
inline std::vector<Word> oracle_nontips(const AlgebraContext& ctx, const OrderingSpec& spec,
                                        std::size_t max_order = 16, std::size_t max_alphabet = 3) {
  if (ctx.dimension() > max_order || ctx.alphabet() > max_alphabet)
    throw TooLargeForOracle("group or alphabet too large for the brute-force oracle");
  if (spec.alphabet != ctx.alphabet()) throw InputError("ordering alphabet differs from context");
  std::vector<Word> all{Word{}};
  for (std::size_t begin = 0, len = 1; len < ctx.nilpotency(); ++len) {
    std::size_t end = all.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t a = 0; a < ctx.alphabet(); ++a) all.push_back(all[i].appended(static_cast<Letter>(a)));
    begin = end;
  }
  std::sort(all.begin(), all.end(), OrderingLess{&spec});
  EchelonState state(ctx.prime(), ctx.dimension());
  std::vector<Word> out;
  for (const auto& w : all) {
    if (out.size() == ctx.dimension()) break;
    if (std::holds_alternative<Independent>(state.insert(evaluate_word(ctx, w)))) out.push_back(w);
  }
  return out;
}

/// A tip w*a (w a nontip) is minimal iff dropping its first letter leaves a
/// nontip: every proper subword of w*a lies inside w or inside that suffix.
inline std::vector<Word> minimal_tips(const NontipTree& tree) {
  std::vector<Word> out;
  for (const auto& node : tree.nodes()) {
    for (std::size_t a = 0; a < tree.alphabet(); ++a) {
      if (node.children[a] != NontipNode::none) continue;
      Word tip = node.word.appended(static_cast<Letter>(a));
      if (tree.find(tip.drop_first())) out.push_back(std::move(tip));
    }
  }
  std::sort(out.begin(), out.end(), OrderingLess{&tree.ordering()});
  return out;
}

}  // namespace pgro

#endif  // PGRO_NONTIPS_HPP
