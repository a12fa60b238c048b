#ifndef PGRO_ORDERING_HPP
#define PGRO_ORDERING_HPP

// Words over the algebra-generator alphabet and the three admissible word
// orderings: length-lexicographic (LL), its reverse (RLL), and the Jennings
// ordering driven by generator dimensions.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace pgro {

using Letter = std::uint16_t;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word appended(Letter a) const {
    Word w = *this;
    w.letters_.push_back(a);
    return w;
  }

  Word concat(const Word& other) const {
    Word w = *this;
    w.letters_.insert(w.letters_.end(), other.letters_.begin(), other.letters_.end());
    return w;
  }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  /// Without the first letter.
  Word drop_first() const { return subword(1, length() - 1); }
  /// Without the last letter.
  Word drop_last() const { return subword(0, length() - 1); }

  /// Plain letter-sequence order; a container key, not a monomial ordering.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ w.length();
    for (Letter a : w.letters()) {
      h ^= a;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// `a1*a2*a1`; the empty word renders as `1`.
inline std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) s += '*';
    s += 'a';
    s += std::to_string(w[i] + 1);
  }
  return s;
}

/// Inverse of render().
inline Word parse_word(std::string_view text) {
  if (text == "1") return {};
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'a') throw InputError("bad word: " + std::string(text));
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string digits(text.substr(pos + 1, end - pos - 1));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; }) || std::stoul(digits) == 0)
      throw InputError("bad word: " + std::string(text));
    letters.push_back(static_cast<Letter>(std::stoul(digits) - 1));
    pos = end + 1;
    if (end + 1 == text.size()) throw InputError("bad word: " + std::string(text));
  }
  return Word(std::move(letters));
}

enum class OrderingKind { LL, RLL, Jennings };

inline std::string_view ordering_tag(OrderingKind k) {
  switch (k) {
    case OrderingKind::LL: return "ll";
    case OrderingKind::RLL: return "rll";
    case OrderingKind::Jennings: return "jennings";
  }
  return "?";
}

inline OrderingKind parse_ordering(std::string_view tag) {
  if (tag == "ll") return OrderingKind::LL;
  if (tag == "rll") return OrderingKind::RLL;
  if (tag == "jennings") return OrderingKind::Jennings;
  throw InputError("unknown ordering: " + std::string(tag));
}

struct OrderingSpec {
  OrderingKind kind = OrderingKind::LL;
  std::size_t alphabet = 0;
  /// Per-generator dimensions, Jennings only; non-decreasing, all >= 1.
  std::vector<unsigned> dimensions;

  static OrderingSpec ll(std::size_t alphabet) { return {OrderingKind::LL, alphabet, {}}; }
  static OrderingSpec rll(std::size_t alphabet) { return {OrderingKind::RLL, alphabet, {}}; }
  static OrderingSpec jennings(std::vector<unsigned> dims) {
    if (dims.empty() || dims.front() < 1 || !std::is_sorted(dims.begin(), dims.end()))
      throw InputError("Jennings dimensions must be >= 1 and non-decreasing");
    std::size_t k = dims.size();
    return {OrderingKind::Jennings, k, std::move(dims)};
  }
};

inline unsigned word_dimension(const Word& w, const std::vector<unsigned>& dims) {
  unsigned d = 0;
  for (Letter a : w.letters()) d += dims.at(a);
  return d;
}

namespace detail {

inline std::strong_ordering compare_lex(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.letters().begin(), a.letters().end(),
                                                b.letters().begin(), b.letters().end());
}

inline std::strong_ordering compare_ll(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return compare_lex(a, b);
}

inline void check_letters(const OrderingSpec& spec, const Word& w) {
  for (Letter a : w.letters())
    if (a >= spec.alphabet) throw InputError("letter outside the alphabet: " + render(w));
}

}  // namespace detail

/// Compares w1 with w2 under the ordering.
inline std::strong_ordering compare(const OrderingSpec& spec, const Word& w1, const Word& w2) {
  detail::check_letters(spec, w1);
  detail::check_letters(spec, w2);
  switch (spec.kind) {
    case OrderingKind::LL:
      return detail::compare_ll(w1, w2);
    case OrderingKind::RLL:
      return detail::compare_ll(w2, w1);
    case OrderingKind::Jennings: {
      // Higher dimension is smaller; then shorter is smaller; then
      // lexicographically larger is smaller.
      unsigned d1 = word_dimension(w1, spec.dimensions);
      unsigned d2 = word_dimension(w2, spec.dimensions);
      if (auto c = d2 <=> d1; c != 0) return c;
      if (auto c = w1.length() <=> w2.length(); c != 0) return c;
      return detail::compare_lex(w2, w1);
    }
  }
  return std::strong_ordering::equal;
}

/// Strict-weak "less" under an ordering, for std::sort and friends.
struct OrderingLess {
  const OrderingSpec* spec;
  bool operator()(const Word& a, const Word& b) const { return compare(*spec, a, b) < 0; }
};

/// All contiguous proper subwords, including the empty word, without repeats.
inline std::vector<Word> subwords_proper(const Word& w) {
  std::set<Word> out;
  const std::size_t n = w.length();
  if (n == 0) return {};
  for (std::size_t len = 0; len < n; ++len)
    for (std::size_t pos = 0; pos + len <= n; ++pos) out.insert(w.subword(pos, len));
  return {out.begin(), out.end()};
}

}  // namespace pgro

#endif  // PGRO_ORDERING_HPP
