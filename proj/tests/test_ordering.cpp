#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pgro/ordering.hpp"

using namespace pgro;

namespace {

Word random_word(std::mt19937& rng, std::size_t alphabet, std::size_t max_len) {
  std::vector<Letter> letters(rng() % (max_len + 1));
  for (auto& a : letters) a = static_cast<Letter>(rng() % alphabet);
  return Word(std::move(letters));
}

std::vector<OrderingSpec> sample_specs() {
  return {OrderingSpec::ll(4), OrderingSpec::rll(4), OrderingSpec::jennings({1, 1, 2, 3}),
          OrderingSpec::jennings({1, 2, 2, 2})};
}

}  // namespace

TEST(Compare, Examples) {
  Word a1a2{0, 1}, a2a1{1, 0};
  EXPECT_EQ(compare(OrderingSpec::ll(2), a1a2, a2a1), std::strong_ordering::less);
  EXPECT_EQ(compare(OrderingSpec::rll(2), a1a2, a2a1), std::strong_ordering::greater);
  EXPECT_EQ(compare(OrderingSpec::ll(2), Word{0}, Word{1, 1}), std::strong_ordering::less);
  EXPECT_EQ(compare(OrderingSpec::ll(2), a1a2, a1a2), std::strong_ordering::equal);
}

TEST(Compare, JenningsCyclicFour) {
  auto spec = OrderingSpec::jennings({1, 2});
  std::vector<Word> nontips{Word{}, Word{0}, Word{1}, Word{1, 0}};
  std::sort(nontips.begin(), nontips.end(), OrderingLess{&spec});
  EXPECT_EQ(nontips, (std::vector<Word>{Word{1, 0}, Word{1}, Word{0}, Word{}}));
}

TEST(Compare, RejectsLettersOutsideAlphabet) {
  EXPECT_THROW(compare(OrderingSpec::ll(2), Word{2}, Word{0}), InputError);
  EXPECT_THROW(OrderingSpec::jennings({2, 1}), InputError);
  EXPECT_THROW(OrderingSpec::jennings({0, 1}), InputError);
}

TEST(Compare, StrictTotalOrder) {
  std::mt19937 rng(2024);
  for (const auto& spec : sample_specs()) {
    std::vector<Word> sample;
    for (int i = 0; i < 60; ++i) sample.push_back(random_word(rng, spec.alphabet, 6));
    for (const auto& x : sample) {
      EXPECT_EQ(compare(spec, x, x), std::strong_ordering::equal);
      for (const auto& y : sample) {
        auto xy = compare(spec, x, y);
        EXPECT_EQ(xy == 0, x == y);
        EXPECT_EQ(xy < 0, compare(spec, y, x) > 0);
        for (const auto& z : sample) {
          if (xy < 0 && compare(spec, y, z) < 0) { ASSERT_TRUE(compare(spec, x, z) < 0); }
        }
      }
    }
  }
}

TEST(Compare, Admissible) {
  std::mt19937 rng(77);
  for (const auto& spec : sample_specs()) {
    for (int trial = 0; trial < 3000; ++trial) {
      Word u = random_word(rng, spec.alphabet, 3), w = random_word(rng, spec.alphabet, 3);
      Word v1 = random_word(rng, spec.alphabet, 4), v2 = random_word(rng, spec.alphabet, 4);
      if (compare(spec, v1, v2) > 0) std::swap(v1, v2);
      EXPECT_TRUE(compare(spec, u.concat(v1).concat(w), u.concat(v2).concat(w)) <= 0);
    }
  }
}

TEST(Compare, RllReversesLl) {
  std::mt19937 rng(5);
  auto ll = OrderingSpec::ll(3), rll = OrderingSpec::rll(3);
  for (int i = 0; i < 2000; ++i) {
    Word x = random_word(rng, 3, 5), y = random_word(rng, 3, 5);
    EXPECT_EQ(compare(ll, x, y) < 0, compare(rll, x, y) > 0);
  }
}

TEST(WordDimension, Examples) {
  std::vector<unsigned> dims{1, 2};
  EXPECT_EQ(word_dimension(Word{}, dims), 0u);
  EXPECT_EQ(word_dimension(Word{1, 0}, dims), 3u);
  EXPECT_EQ(word_dimension(Word{0, 0}, dims), 2u);
}

TEST(WordDimension, AtLeastLength) {
  std::mt19937 rng(8);
  std::vector<unsigned> dims{1, 1, 2, 3};
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, 4, 8);
    EXPECT_GE(word_dimension(w, dims), w.length());
  }
}

TEST(SubwordsProper, Examples) {
  EXPECT_EQ(subwords_proper(Word{0}), (std::vector<Word>{Word{}}));
  EXPECT_EQ(subwords_proper(Word{0, 1}), (std::vector<Word>{Word{}, Word{0}, Word{1}}));
  EXPECT_EQ(subwords_proper(Word{0, 0}), (std::vector<Word>{Word{}, Word{0}}));
  EXPECT_TRUE(subwords_proper(Word{}).empty());
}

TEST(Render, RoundTrip) {
  EXPECT_EQ(render(Word{}), "1");
  EXPECT_EQ(render(Word{1, 0, 11}), "a2*a1*a12");
  EXPECT_EQ(parse_word("a2*a1*a12"), (Word{1, 0, 11}));
  EXPECT_EQ(parse_word("1"), Word{});
  EXPECT_THROW(parse_word("a0"), InputError);
  EXPECT_THROW(parse_word("a1*"), InputError);
  EXPECT_THROW(parse_word("b1"), InputError);
}
