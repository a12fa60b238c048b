// One PASS/FAIL line per criterion; nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pgro/pgro.hpp"

using namespace pgro;

namespace {

constexpr double c1_limit_s = 1;
constexpr double c2_limit_s = 10;
constexpr double c3_limit_s = 30;
constexpr double c5_limit_s = 60;
constexpr double c7_limit_s = 300;
constexpr std::size_t c2_seeds = 5;
constexpr std::size_t c7_attempts = 20;
constexpr std::uint64_t c7_seed = 2024;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<Element> given(const PGroup& G) { return {G.generators().begin(), G.generators().end()}; }

std::set<Word> tip_set(const GrobnerBasis& gb) {
  std::set<Word> out;
  for (const auto& e : gb.elements) out.insert(e.tip);
  return out;
}

PGroup cyclic_four() {
  std::vector<Permutation> g{Permutation({1, 2, 3, 0})};
  return close_group(g);
}

void criterion1() {
  PGroup C4 = cyclic_four();
  PipelineOptions opt;
  opt.ordering = OrderingKind::Jennings;
  auto res = run_pipeline(C4, opt);
  require(tip_set(res.basis) == std::set<Word>{Word{0, 0}, Word{0, 1}, Word{1, 1}}, "minimal tips");
  auto ascending = res.tree.words();
  std::reverse(ascending.begin(), ascending.end());
  require(ascending == std::vector<Word>{Word{1, 0}, Word{1}, Word{0}, Word{}}, "nontip order");
  std::map<Word, std::set<Word>> relations;
  for (const auto& e : res.basis.elements) {
    std::set<Word> terms;
    for (auto [i, c] : e.nu) {
      require(c == 1, "coefficient");
      terms.insert(res.basis.nontips[i]);
    }
    relations[e.tip] = terms;
  }
  std::map<Word, std::set<Word>> expected{
      {Word{0, 0}, {Word{1}}}, {Word{0, 1}, {Word{1, 0}}}, {Word{1, 1}, {}}};
  require(relations == expected, "basis elements");
}

void criterion2() {
  for (const auto& e : load_corpus()) {
    PGroup G = e.load();
    const std::size_t n = G.exponent();
    std::set<Word> expected;
    for (std::size_t i = 0; i < n; ++i) expected.insert(Word(std::vector<Letter>(G.prime(), static_cast<Letter>(i))));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) expected.insert(Word{static_cast<Letter>(j), static_cast<Letter>(k)});
    for (std::uint64_t seed = 0; seed < c2_seeds; ++seed) {
      PipelineOptions opt;
      opt.ordering = OrderingKind::Jennings;
      opt.seed = seed;
      auto res = run_pipeline(G, opt);
      require(res.basis.size() == n + n * (n - 1) / 2, e.label + " size");
      require(tip_set(res.basis) == expected, e.label + " tips");
    }
  }
}

void criterion3() {
  for (const auto& e : load_corpus()) {
    PGroup G = e.load();
    for (auto kind : {OrderingKind::LL, OrderingKind::RLL, OrderingKind::Jennings}) {
      PipelineOptions opt;
      opt.ordering = kind;
      auto res = run_pipeline(G, opt);
      const std::string tag = e.label + " " + std::string(ordering_tag(kind));
      require(res.tree.size() == G.order(), tag + " count");
      std::vector<FpVector> images;
      for (const auto& node : res.tree.nodes()) {
        for (const auto& sub : subwords_proper(node.word)) require(res.tree.find(sub).has_value(), tag + " closure");
        images.push_back(evaluate_word(res.context, node.word));
      }
      require(span_dimension(images) == G.order(), tag + " rank");
      for (const auto& el : res.basis.elements)
        require(evaluate(res.context, as_combination(res.basis, el)).is_zero(), tag + " nonzero element");
    }
  }
}

void criterion4() {
  for (const auto& e : load_corpus()) {
    PGroup G = e.load();
    PipelineOptions opt;
    opt.ordering = OrderingKind::RLL;
    auto res = run_pipeline(G, opt);
    std::vector<std::uint64_t> profile;
    for (const auto& node : res.tree.nodes()) {
      if (node.length() >= profile.size()) profile.resize(node.length() + 1, 0);
      ++profile[node.length()];
    }
    auto poly = layer_polynomial(jennings_pc_generators(G, 0).layer_counts(), G.prime());
    require(profile == poly, e.label);
  }
}

void check_oracle(const AlgebraContext& ctx, const std::string& tag) {
  require(nontips_ll(ctx).words() == oracle_nontips(ctx, OrderingSpec::ll(ctx.alphabet())), tag + " ll");
  auto rll = oracle_nontips(ctx, OrderingSpec::rll(ctx.alphabet()));
  std::reverse(rll.begin(), rll.end());
  require(nontips_rll(ctx).words() == rll, tag + " rll");
}

void criterion5() {
  for (const auto& e : load_corpus()) {
    if (e.order > 16) continue;
    PGroup G = e.load();
    check_oracle(AlgebraContext(G, given(G)), e.label + " given");
    for (auto method : {Selection::Arbitrary, Selection::SmallestExponent})
      for (std::uint64_t seed = 0; seed < 3; ++seed)
        check_oracle(AlgebraContext(G, minimal_generators(G, method, seed)), e.label);
  }
  PGroup C4 = cyclic_four();
  Element g = C4.generators()[0];
  check_oracle(AlgebraContext(C4, {g, C4.power(g, 3)}), "C4 {g, g^3}");
}

void criterion6() {
  auto entry = find_corpus_entry("C2^3:C4");
  require(entry.has_value(), "missing group");
  PGroup G = entry->load();
  // Defining generators are a and phi; conjugation by phi sends a -> b -> c.
  require(G.generators().size() == 2, "generator count");
  const Element a = G.generators()[0], phi = G.generators()[1];
  const Element phi_inv = G.inverse(phi);
  const Element b = G.conjugate(a, phi_inv), c = G.conjugate(b, phi_inv);
  require(G.conjugate(c, phi_inv) == G.multiply(a, G.multiply(b, c)), "c -> abc");
  auto series = jennings_series(G);
  std::vector<Element> f2{G.multiply(a, b), G.multiply(a, c), G.multiply(phi, phi)};
  std::vector<Element> f3{G.multiply(a, c)};
  require(series.term(2).order() == 8, "F2 order");
  require(series.term(2) == subgroup_closure(G, f2), "F2 generators");
  require(series.term(3).order() == 2, "F3 order");
  require(series.term(3) == subgroup_closure(G, f3), "F3 generators");
  require(series.term(4).is_trivial(), "F4 trivial");
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    require(jennings_pc_generators(G, seed).dimensions == std::vector<unsigned>{1, 1, 2, 2, 3}, "dimensions");
  require(group_info(G).jennings_basis_size == 15, "Je");
}

std::string criterion7() {
  std::ostringstream detail;
  std::size_t groups = 0;
  for (const auto& e : load_corpus()) {
    if (e.order != 32) continue;
    PGroup G = e.load();
    std::map<OrderingKind, std::size_t> best;
    for (auto kind : {OrderingKind::LL, OrderingKind::RLL})
      for (auto sel : {Selection::Arbitrary, Selection::SmallestExponent}) {
        auto rep = run_experiment(G, e.label, kind, sel, c7_attempts, c7_seed);
        auto [it, fresh] = best.emplace(kind, rep.min);
        if (!fresh) it->second = std::min(it->second, rep.min);
      }
    const long long d = static_cast<long long>(best[OrderingKind::LL]) - static_cast<long long>(best[OrderingKind::RLL]);
    detail << ' ' << e.label << ":d=" << d;
    require(d >= 0, e.label + " d=" + std::to_string(d));
    ++groups;
  }
  require(groups >= 5, "too few order-32 groups");
  return detail.str();
}

void criterion8() {
  for (const auto& e : load_corpus()) {
    if (e.order > 64) continue;
    PGroup G = e.load();
    auto series = jennings_series(G);
    AlgebraContext ctx(G, given(G));
    auto radical = radical_series(ctx);
    for (std::size_t r = 1; r <= series.length(); ++r)
      for (Element g = 0; g < G.order(); ++g) {
        FpVector v = ctx.identity_vector();
        v.set(PGroup::identity, fp::neg(1, G.prime()));
        v.add(g, 1);
        require(series.term(r).contains(g) == radical.contains(r, v), e.label + " r=" + std::to_string(r));
      }
  }
}

struct Criterion {
  int number;
  std::string name;
  double limit_s;  // 0 = no limit
  std::function<std::string()> run;
};

template <class F>
std::function<std::string()> quiet(F f) {
  return [f] {
    f();
    return std::string();
  };
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "C4 Jennings example exact", c1_limit_s, quiet(criterion1)},
      {2, "Jennings basis size and tips across seeds", c2_limit_s, quiet(criterion2)},
      {3, "nontip count, closure, rank, zero evaluation", c3_limit_s, quiet(criterion3)},
      {4, "RLL length profile equals layer polynomial", 0, quiet(criterion4)},
      {5, "LL/RLL nontips equal brute-force oracle", c5_limit_s, quiet(criterion5)},
      {6, "order-32 example series, dimensions and Je", 0, quiet(criterion6)},
      {7, "eLL - eRLL >= 0 on order-32 groups", c7_limit_s, criterion7},
      {8, "Jennings series equals radical membership", 0, quiet(criterion8)},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string status = "PASS", note;
    try {
      note = c.run();
    } catch (const Failure& f) {
      status = "FAIL";
      note = " " + f.what;
    } catch (const std::exception& ex) {
      status = "FAIL";
      note = std::string(" exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status == "PASS" && c.limit_s > 0 && secs >= c.limit_s) {
      status = "FAIL";
      note += " over time limit";
    }
    if (status != "PASS") ++failures;
    std::cout << status << " criterion " << c.number << ": " << c.name << " (" << std::fixed;
    std::cout.precision(3);
    std::cout << secs << " s)" << note << '\n';
  }
  return failures == 0 ? 0 : 1;
}
