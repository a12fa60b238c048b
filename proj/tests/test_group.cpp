#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "pgro/corpus.hpp"
#include "pgro/group.hpp"
#include "test_groups.hpp"

using namespace pgro;
using namespace pgro::testing;

namespace {

bool is_power_of(std::size_t x, unsigned p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

// Brute force: every subgroup is generated by at most three elements when
// |G| <= 16, and maximal subgroups of a p-group have index p.
std::vector<Subgroup> maximal_subgroups(const PGroup& G) {
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> out;
  const auto n = static_cast<Element>(G.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      for (Element z = y; z < n; ++z) {
        std::vector<Element> seeds{x, y, z};
        Subgroup H = subgroup_closure(G, seeds);
        if (H.order() * G.prime() != G.order()) continue;
        std::vector<Element> key(H.elements().begin(), H.elements().end());
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(H);
      }
  return out;
}

}  // namespace

TEST(CloseGroup, CyclicFour) {
  std::vector<Permutation> g{Permutation({1, 2, 3, 0})};
  PGroup G = close_group(g);
  EXPECT_EQ(G.prime(), 2u);
  EXPECT_EQ(G.exponent(), 2u);
  EXPECT_EQ(G.order(), 4u);
  EXPECT_TRUE(G.element(PGroup::identity).is_identity());
}

TEST(CloseGroup, KleinFour) {
  PGroup G = klein_four();
  EXPECT_EQ(G.prime(), 2u);
  EXPECT_EQ(G.exponent(), 2u);
  EXPECT_EQ(G.order(), 4u);
}

TEST(CloseGroup, RejectsNonPGroup) {
  std::vector<Permutation> g{cycle(5, {0, 1, 2}), cycle(5, {3, 4})};
  EXPECT_THROW(close_group(g), NotAPGroup);
}

TEST(CloseGroup, RespectsCeiling) {
  std::vector<Permutation> g{cycle(8, {0, 1, 2, 3, 4, 5, 6, 7})};
  EXPECT_THROW(close_group(g, 4), TooLarge);
  EXPECT_NO_THROW(close_group(g, 8));
}

TEST(CloseGroup, RejectsBadInput) {
  std::vector<Permutation> none;
  EXPECT_THROW(close_group(none), InputError);
  std::vector<Permutation> mixed{cycle(3, {0, 1}), cycle(4, {0, 1})};
  EXPECT_THROW(close_group(mixed), InputError);
  EXPECT_THROW(Permutation({0, 0, 1}), InputError);
}

TEST(CloseGroup, DeterministicBreadthFirstIndexing) {
  std::vector<Permutation> g{cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})};
  PGroup a = close_group(g), b = close_group(g);
  ASSERT_EQ(a.order(), 8u);
  for (std::size_t i = 0; i < a.order(); ++i) EXPECT_EQ(a.element(static_cast<Element>(i)), b.element(static_cast<Element>(i)));
  // Index 1 and 2 are the generators themselves.
  EXPECT_EQ(a.element(1), g[0]);
  EXPECT_EQ(a.element(2), g[1]);
}

TEST(CloseGroup, TrivialGroup) {
  std::vector<Permutation> g{Permutation::identity(3)};
  PGroup G = close_group(g);
  EXPECT_EQ(G.order(), 1u);
  EXPECT_EQ(G.prime(), 0u);
  Rng rng(1);
  EXPECT_THROW(minimal_generators(G, Selection::Arbitrary, rng), EmptyGroup);
}

TEST(RegularAction, SmallTables) {
  CayleyTable c2{2, {0, 1, 1, 0}};
  std::vector<std::size_t> g1{1};
  auto perms = regular_action(c2, g1);
  ASSERT_EQ(perms.size(), 1u);
  EXPECT_EQ(perms[0].one_based(), (std::vector<long long>{2, 1}));

  CayleyTable c4{4, {}};
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y) c4.entries.push_back((x + y) % 4);
  auto p4 = regular_action(c4, g1);
  EXPECT_EQ(p4[0].one_based(), (std::vector<long long>{2, 3, 4, 1}));
}

TEST(RegularAction, MalformedTables) {
  std::vector<std::size_t> g{0};
  CayleyTable dup{2, {0, 0, 1, 0}};
  EXPECT_THROW(regular_action(dup, g), MalformedTable);
  // x*y = x - y mod 3 is a Latin square with no identity.
  CayleyTable noid{3, {}};
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) noid.entries.push_back(static_cast<std::uint32_t>((x - y + 3) % 3));
  EXPECT_THROW(regular_action(noid, g), MalformedTable);
  CayleyTable short_table{3, {0, 1, 2}};
  EXPECT_THROW(regular_action(short_table, g), MalformedTable);
}

TEST(RegularAction, Semidirect32FromRelations) {
  CayleyTable t = semidirect32_table();
  // Brute-force group axioms.
  for (std::size_t x = 0; x < 32; ++x)
    for (std::size_t y = 0; y < 32; ++y)
      for (std::size_t z = 0; z < 32; ++z) ASSERT_EQ(t.at(t.at(x, y), z), t.at(x, t.at(y, z)));
  for (std::size_t y = 0; y < 32; ++y) ASSERT_EQ(t.at(0, y), y);
  std::vector<std::size_t> gens{1, 8};
  auto perms = regular_action(t, gens);
  ASSERT_EQ(perms.size(), 2u);
  EXPECT_EQ(perms[0].degree(), 32u);
  PGroup G = close_group(perms);
  EXPECT_EQ(G.order(), 32u);
  // phi a phi^-1 = b
  auto s = semidirect32();
  EXPECT_EQ(s.group.conjugate(s.a, s.group.inverse(s.phi)), s.b);
  EXPECT_EQ(s.group.conjugate(s.c, s.group.inverse(s.phi)), s.group.multiply(s.a, s.group.multiply(s.b, s.c)));
}

TEST(ElementOrder, Examples) {
  PGroup C4 = cyclic_group(4);
  EXPECT_EQ(element_order(C4, PGroup::identity), 1u);
  Element g = C4.generators()[0];
  EXPECT_EQ(element_order(C4, g), 4u);
  EXPECT_EQ(element_order(C4, C4.multiply(g, g)), 2u);
}

TEST(ElementOrder, PowersOfPAcrossCorpus) {
  for (const auto& e : load_corpus()) {
    PGroup G = e.load();
    for (std::size_t o : element_orders(G)) EXPECT_TRUE(is_power_of(o, G.prime())) << e.label;
  }
}

TEST(SubgroupClosure, Examples) {
  PGroup C4 = cyclic_group(4);
  EXPECT_EQ(subgroup_closure(C4, {}).order(), 1u);
  EXPECT_TRUE(subgroup_closure(C4, C4.generators()).is_whole());
  Element g = C4.generators()[0];
  std::vector<Element> sq{C4.multiply(g, g)};
  EXPECT_EQ(subgroup_closure(C4, sq).order(), 2u);
}

TEST(Frattini, Examples) {
  EXPECT_TRUE(frattini(klein_four()).is_trivial());
  EXPECT_TRUE(frattini(elementary_abelian(3, 3)).is_trivial());

  PGroup C4 = cyclic_group(4);
  Subgroup phi = frattini(C4);
  Element g = C4.generators()[0];
  EXPECT_EQ(phi.order(), 2u);
  EXPECT_TRUE(phi.contains(C4.multiply(g, g)));
}

TEST(Frattini, Semidirect32) {
  auto s = semidirect32();
  const PGroup& G = s.group;
  std::vector<Element> seeds{G.multiply(s.a, s.b), G.multiply(s.a, s.c), G.multiply(s.phi, s.phi)};
  Subgroup expected = subgroup_closure(G, seeds);
  EXPECT_EQ(expected.order(), 8u);
  EXPECT_EQ(frattini(G), expected);

  // Independently: G^2 [G,G] from all squares and all commutators.
  std::vector<Element> brute;
  for (Element x = 0; x < G.order(); ++x) {
    brute.push_back(G.multiply(x, x));
    for (Element y = 0; y < G.order(); ++y) brute.push_back(G.commutator(x, y));
  }
  EXPECT_EQ(subgroup_closure(G, brute), expected);
}

TEST(Frattini, EqualsIntersectionOfMaximalSubgroups) {
  for (const auto& e : load_corpus()) {
    if (e.order > 16) continue;
    PGroup G = e.load();
    auto maxes = maximal_subgroups(G);
    ASSERT_FALSE(maxes.empty()) << e.label;
    Subgroup phi = frattini(G);
    for (Element x = 0; x < G.order(); ++x) {
      bool in_all = std::all_of(maxes.begin(), maxes.end(), [&](const Subgroup& M) { return M.contains(x); });
      EXPECT_EQ(in_all, phi.contains(x)) << e.label << " element " << x;
    }
  }
}

TEST(MinimalGenerators, CyclicFour) {
  PGroup C4 = cyclic_group(4);
  for (auto method : {Selection::Arbitrary, Selection::SmallestExponent}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto gens = minimal_generators(C4, method, seed);
      ASSERT_EQ(gens.size(), 1u);
      EXPECT_EQ(element_order(C4, gens[0]), 4u);
    }
  }
}

TEST(MinimalGenerators, KleinFour) {
  PGroup V = klein_four();
  auto gens = minimal_generators(V, Selection::Arbitrary, 3);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_NE(gens[0], gens[1]);
  for (Element g : gens) EXPECT_EQ(element_order(V, g), 2u);
}

TEST(MinimalGenerators, SmallestExponentOnSemidirect32) {
  auto s = semidirect32();
  const PGroup& G = s.group;
  auto orders = element_orders(G);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto gens = minimal_generators(G, Selection::SmallestExponent, seed);
    ASSERT_EQ(gens.size(), 2u);
    Subgroup H = frattini(G);
    for (Element g : gens) {
      std::size_t best = G.order();
      for (Element x = 0; x < G.order(); ++x)
        if (!H.contains(x)) best = std::min(best, orders[x]);
      EXPECT_EQ(orders[g], best);
      H.adjoin(g);
    }
    EXPECT_EQ(orders[gens[0]], 2u);
  }
}

TEST(MinimalGenerators, MinimalAndDeterministicAcrossCorpus) {
  for (const auto& e : load_corpus()) {
    PGroup G = e.load();
    const std::size_t quotient = G.order() / frattini(G).order();
    std::size_t n1 = 0;
    for (std::size_t q = quotient; q > 1; q /= G.prime()) ++n1;
    for (auto method : {Selection::Arbitrary, Selection::SmallestExponent}) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto gens = minimal_generators(G, method, seed);
        EXPECT_EQ(gens, minimal_generators(G, method, seed)) << e.label;
        ASSERT_EQ(gens.size(), n1) << e.label;
        EXPECT_TRUE(subgroup_closure(G, gens).is_whole()) << e.label;
        for (std::size_t drop = 0; drop < gens.size(); ++drop) {
          auto fewer = gens;
          fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
          EXPECT_FALSE(subgroup_closure(G, fewer).is_whole()) << e.label;
        }
      }
    }
  }
}
