#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "pgro/corpus.hpp"
#include "pgro/jennings.hpp"
#include "test_groups.hpp"

using namespace pgro;
using namespace pgro::testing;

TEST(JenningsSeries, ElementaryAbelian) {
  for (auto [p, n] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 2u}}) {
    PGroup G = elementary_abelian(p, n);
    auto s = jennings_series(G);
    ASSERT_EQ(s.length(), 2u);
    EXPECT_TRUE(s.term(1).is_whole());
    EXPECT_TRUE(s.term(2).is_trivial());
  }
}

TEST(JenningsSeries, CyclicFour) {
  PGroup C4 = cyclic_group(4);
  auto s = jennings_series(C4);
  ASSERT_EQ(s.length(), 3u);
  Element g = C4.generators()[0];
  EXPECT_EQ(s.term(2).order(), 2u);
  EXPECT_TRUE(s.term(2).contains(C4.multiply(g, g)));
  EXPECT_TRUE(s.term(3).is_trivial());
}

TEST(JenningsSeries, Semidirect32) {
  auto sd = semidirect32();
  const PGroup& G = sd.group;
  auto s = jennings_series(G);
  std::vector<Element> f2{G.multiply(sd.a, sd.b), G.multiply(sd.a, sd.c), G.multiply(sd.phi, sd.phi)};
  std::vector<Element> f3{G.multiply(sd.a, sd.c)};
  ASSERT_EQ(s.length(), 4u);
  EXPECT_EQ(s.term(2), subgroup_closure(G, f2));
  EXPECT_EQ(s.term(2).order(), 8u);
  EXPECT_EQ(s.term(3), subgroup_closure(G, f3));
  EXPECT_EQ(s.term(3).order(), 2u);
  EXPECT_TRUE(s.term(4).is_trivial());
}

TEST(JenningsSeries, CentralSeriesProperties) {
  for (const auto& e : load_corpus()) {
    if (e.order > 64) continue;
    PGroup G = e.load();
    const unsigned p = G.prime();
    auto s = jennings_series(G);
    const std::size_t L = s.length();
    for (std::size_t r = 1; r < L; ++r) {
      const Subgroup& Fr = s.term(r);
      // p-th powers: F_r -> F_pr
      for (Element x : Fr.elements()) EXPECT_TRUE(s.term(p * r).contains(G.power(x, p))) << e.label;
      // [F_r, F_s] <= F_{r+s}
      for (std::size_t q = r; q < L; ++q)
        for (Element x : Fr.elements())
          for (Element y : s.term(q).elements())
            ASSERT_TRUE(s.term(r + q).contains(G.commutator(x, y))) << e.label << " r=" << r << " s=" << q;
      // F_{r+1} <= F_r, normal in G
      for (Element x : s.term(r + 1).elements()) {
        EXPECT_TRUE(Fr.contains(x));
        for (Element g : G.generators()) EXPECT_TRUE(s.term(r + 1).contains(G.conjugate(x, g)));
      }
    }
  }
}

TEST(JenningsGenerators, CyclicFour) {
  PGroup C4 = cyclic_group(4);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto jg = jennings_pc_generators(C4, seed);
    ASSERT_EQ(jg.elements.size(), 2u);
    EXPECT_EQ(jg.dimensions, (std::vector<unsigned>{1, 2}));
    EXPECT_EQ(C4.multiply(jg.elements[0], jg.elements[0]), jg.elements[1]);
    EXPECT_EQ(jg.layer_counts(), (std::vector<unsigned>{1, 1}));
  }
}

TEST(JenningsGenerators, Semidirect32) {
  auto sd = semidirect32();
  auto jg = jennings_pc_generators(sd.group, 11);
  EXPECT_EQ(jg.dimensions, (std::vector<unsigned>{1, 1, 2, 2, 3}));
  EXPECT_EQ(jg.layer_counts(), (std::vector<unsigned>{2, 2, 1}));
  EXPECT_EQ(jg.elements.back(), sd.group.multiply(sd.a, sd.c));
}

TEST(JenningsGenerators, ElementaryAbelianSquare) {
  PGroup G = elementary_abelian(3, 2);
  auto jg = jennings_pc_generators(G, 5);
  EXPECT_EQ(jg.dimensions, (std::vector<unsigned>{1, 1}));
  EXPECT_TRUE(subgroup_closure(G, jg.elements).is_whole());
}

TEST(JenningsGenerators, PowerAndCommutatorContainments) {
  for (const auto& e : load_corpus()) {
    PGroup G = e.load();
    auto series = jennings_series(G);
    std::vector<unsigned> first_counts;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Rng rng(seed);
      auto jg = jennings_pc_generators(G, series, rng);
      const auto& g = jg.elements;
      const std::size_t n = g.size();
      ASSERT_EQ(n, G.exponent()) << e.label;
      std::vector<Subgroup> tail;  // tail[i] = <g_i, ..., g_n>
      for (std::size_t i = 0; i <= n; ++i)
        tail.push_back(subgroup_closure(G, std::span<const Element>(g).subspan(i)));
      EXPECT_TRUE(tail[0].is_whole()) << e.label;
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(tail[i + 1].contains(G.power(g[i], G.prime()))) << e.label;
        for (std::size_t j = i + 1; j < n; ++j) EXPECT_TRUE(tail[j + 1].contains(G.commutator(g[i], g[j]))) << e.label;
        // dim(g_i) = r  <=>  g_i in F_r - F_{r+1}
        EXPECT_TRUE(series.term(jg.dimensions[i]).contains(g[i]));
        EXPECT_FALSE(series.term(jg.dimensions[i] + 1).contains(g[i]));
      }
      if (seed == 0) first_counts = jg.layer_counts();
      EXPECT_EQ(jg.layer_counts(), first_counts) << e.label;
    }
  }
}

TEST(LayerPolynomial, Examples) {
  std::vector<unsigned> c4{1, 1}, v4{2}, g32{2, 2, 1}, c3c3{2};
  EXPECT_EQ(layer_polynomial(c4, 2), (std::vector<std::uint64_t>{1, 1, 1, 1}));
  EXPECT_EQ(layer_polynomial(v4, 2), (std::vector<std::uint64_t>{1, 2, 1}));
  // Frozen from exponent-tuple enumeration.
  EXPECT_EQ(layer_polynomial(g32, 2), (std::vector<std::uint64_t>{1, 2, 3, 5, 5, 5, 5, 3, 2, 1}));
  EXPECT_EQ(layer_polynomial(c3c3, 3), (std::vector<std::uint64_t>{1, 2, 3, 2, 1}));
}

TEST(LayerPolynomial, SymmetricAndSumsToOrder) {
  for (const auto& e : load_corpus()) {
    PGroup G = e.load();
    auto jg = jennings_pc_generators(G, 0);
    auto counts = jg.layer_counts();
    auto poly = layer_polynomial(counts, G.prime());
    EXPECT_EQ(std::accumulate(poly.begin(), poly.end(), std::uint64_t{0}), G.order()) << e.label;
    for (std::size_t k = 0; k < poly.size(); ++k) EXPECT_EQ(poly[k], poly[poly.size() - 1 - k]) << e.label;
  }
}
