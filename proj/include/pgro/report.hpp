#ifndef PGRO_REPORT_HPP
#define PGRO_REPORT_HPP

// Text output: the nontips file, the basis file and the group summary.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "grobner.hpp"
#include "group.hpp"
#include "jennings.hpp"
#include "nontips.hpp"
#include "ordering.hpp"

namespace pgro {

/// Header `nontips <p> <n> <alphabet> <N> <ordering>`, then per nontip in
/// array order: index, length, word, parent index (-1 for the root) and the
/// one-based letter that leads from the parent (0 for the root).
inline std::string format_nontips(const NontipTree& tree, const AlgebraContext& ctx) {
  std::ostringstream out;
  out << "nontips " << ctx.prime() << ' ' << ctx.group().exponent() << ' ' << tree.alphabet() << ' '
      << ctx.nilpotency() << ' ' << ordering_tag(tree.ordering().kind) << '\n';
  for (const auto& node : tree.nodes()) {
    out << node.index << ' ' << node.length() << ' ' << render(node.word) << ' ';
    if (node.parent == NontipNode::none)
      out << "-1 0\n";
    else
      out << node.parent << ' ' << node.which_child + 1 << '\n';
  }
  return out.str();
}

/// One element per line, `<tip> = <c>*<nontip> + ...`, terms in descending
/// order; nu = 0 prints as `0`.
inline std::string format_element(const GrobnerBasis& gb, const GrobnerElement& e) {
  std::vector<std::pair<std::size_t, Residue>> terms(e.nu.begin(), e.nu.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return compare(gb.ordering, gb.nontips[a.first], gb.nontips[b.first]) > 0;
  });
  std::string s = render(e.tip) + " = ";
  if (terms.empty()) return s + "0";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    s += std::to_string(terms[i].second) + "*" + render(gb.nontips[terms[i].first]);
  }
  return s;
}

inline std::string format_basis(const GrobnerBasis& gb) {
  std::ostringstream out;
  if (gb.needs_length_bound()) out << "modulo words of length >= " << gb.nilpotency << '\n';
  for (const auto& e : gb.elements) out << format_element(gb, e) << '\n';
  return out.str();
}

struct GroupInfo {
  std::size_t order = 0;
  unsigned prime = 0;
  unsigned exponent = 0;
  std::size_t degree = 0;
  std::size_t nilpotency = 0;
  std::vector<unsigned> jennings_layers;
  std::vector<std::size_t> radical_layers;
  std::size_t jennings_basis_size = 0;
};

inline GroupInfo group_info(const PGroup& G) {
  if (G.order() <= 1) throw EmptyGroup("trivial group");
  GroupInfo info;
  info.order = G.order();
  info.prime = G.prime();
  info.exponent = G.exponent();
  info.degree = G.degree();
  AlgebraContext ctx(G, std::vector<Element>(G.generators().begin(), G.generators().end()));
  info.nilpotency = ctx.nilpotency();
  info.radical_layers = radical_layers(ctx);
  Rng rng(0);
  info.jennings_layers = jennings_pc_generators(G, jennings_series(G), rng).layer_counts();
  info.jennings_basis_size = std::size_t{info.exponent} * (info.exponent + 1) / 2;
  return info;
}

inline std::string format_info(const GroupInfo& info) {
  auto join = [](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::ostringstream out;
  out << "order: " << info.order << " = " << info.prime << '^' << info.exponent << '\n'
      << "prime: " << info.prime << '\n'
      << "degree: " << info.degree << '\n'
      << "nilpotency degree N: " << info.nilpotency << '\n'
      << "jennings layers d_r: " << join(info.jennings_layers) << '\n'
      << "radical layers: " << join(info.radical_layers) << '\n'
      << "Je: " << info.jennings_basis_size << '\n';
  return out.str();
}

}  // namespace pgro

#endif  // PGRO_REPORT_HPP
