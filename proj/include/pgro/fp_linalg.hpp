#ifndef PGRO_FP_LINALG_HPP
#define PGRO_FP_LINALG_HPP

// Dense vectors and matrices over a prime field F_p, and an incremental
// reduced-row-echelon builder that remembers how every reduced row was
// obtained from the vectors originally inserted.
//
// For p = 2 the echelon rows are packed 64 residues per machine word; the
// external contract (residues 0 and 1) is unchanged.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace pgro {

using Residue = std::uint32_t;

/// Sparse linear combination: index -> nonzero residue.
using Coefficients = std::map<std::size_t, Residue>;

namespace fp {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Residue add(Residue a, Residue b, Residue p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= p ? s - p : s);
}

inline Residue sub(Residue a, Residue b, Residue p) {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p - b);
}

inline Residue neg(Residue a, Residue p) { return a == 0 ? 0 : p - a; }

inline Residue mul(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(std::uint64_t{a} * b % p);
}

inline Residue pow(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Multiplicative inverse; a must be nonzero mod the prime p.
inline Residue inv(Residue a, Residue p) { return pow(a, p - 2, p); }

inline void check_modulus(Residue p) {
  if (p < 2 || p > (Residue{1} << 31) || !is_prime(p))
    throw InputError("modulus " + std::to_string(p) + " is not a supported prime");
}

}  // namespace fp

class FpVector {
 public:
  FpVector(Residue p, std::size_t length) : p_(p), entries_(length, 0) {
    if (p < 2) throw InputError("modulus must be at least 2");
  }

  /// Entries are reduced mod p.
  FpVector(Residue p, std::vector<Residue> entries) : p_(p), entries_(std::move(entries)) {
    if (p < 2) throw InputError("modulus must be at least 2");
    for (auto& e : entries_) e %= p_;
  }

  static FpVector unit(Residue p, std::size_t length, std::size_t i) {
    FpVector v(p, length);
    v.set(i, 1);
    return v;
  }

  Residue modulus() const noexcept { return p_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Residue operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Residue> entries() const noexcept { return entries_; }

  void set(std::size_t i, Residue value) { entries_.at(i) = value % p_; }
  void add(std::size_t i, Residue value) { entries_.at(i) = fp::add(entries_[i], value % p_, p_); }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
  }

  /// this += c * x
  void axpy(Residue c, const FpVector& x) {
    check_compatible(x);
    c %= p_;
    if (c == 0) return;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (x.entries_[i]) entries_[i] = fp::add(entries_[i], fp::mul(c, x.entries_[i], p_), p_);
  }

  FpVector& operator+=(const FpVector& x) {
    axpy(1, x);
    return *this;
  }

  FpVector& scale(Residue c) {
    c %= p_;
    for (auto& e : entries_) e = fp::mul(e, c, p_);
    return *this;
  }

  friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
  friend bool operator==(const FpVector&, const FpVector&) = default;

  void check_compatible(const FpVector& x) const {
    if (x.p_ != p_ || x.entries_.size() != entries_.size())
      throw InputError("vector dimension or modulus mismatch");
  }

 private:
  Residue p_;
  std::vector<Residue> entries_;
};

class FpMatrix {
 public:
  FpMatrix(Residue p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (p < 2) throw InputError("modulus must be at least 2");
  }

  static FpMatrix identity(Residue p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  /// Builds from row-major residues; entries are reduced mod p.
  static FpMatrix from_rows(Residue p, const std::vector<std::vector<Residue>>& rows) {
    FpMatrix m(p, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw InputError("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  Residue modulus() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, Residue v) { data_.at(r * cols_ + c) = v % p_; }
  void add(std::size_t r, std::size_t c, Residue v) {
    auto& e = data_.at(r * cols_ + c);
    e = fp::add(e, v % p_, p_);
  }

  std::span<const Residue> row(std::size_t r) const {
    return std::span<const Residue>(data_).subspan(r * cols_, cols_);
  }

  FpVector row_vector(std::size_t r) const {
    auto s = row(r);
    return FpVector(p_, std::vector<Residue>(s.begin(), s.end()));
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  Residue p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Row vector times matrix: returns v * m.
inline FpVector apply_matrix(const FpMatrix& m, const FpVector& v) {
  if (v.modulus() != m.modulus() || v.size() != m.rows())
    throw InputError("apply_matrix: dimension or modulus mismatch");
  const Residue p = m.modulus();
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Residue c = v[r];
    if (c == 0) continue;
    auto row = m.row(r);
    for (std::size_t j = 0; j < m.cols(); ++j) acc[j] = (acc[j] + std::uint64_t{c} * row[j]) % p;
  }
  std::vector<Residue> out(acc.begin(), acc.end());
  return FpVector(p, std::move(out));
}

/// Outcome of offering a vector to an EchelonState.
struct Independent {
  /// Position of the vector among the accepted (independent) ones.
  std::size_t index;
};

struct Dependent {
  /// The offered vector equals sum(coeff * accepted[index]).
  Coefficients coefficients;
};

using InsertResult = std::variant<Independent, Dependent>;

/// Incremental Gaussian elimination. Stored rows are kept in reduced
/// row-echelon form; alongside each row we carry its expression in terms of
/// the accepted vectors, so dependencies come back in the original basis.
/// Accepted vectors are numbered 0, 1, ... in acceptance order.
class EchelonState {
 public:
  EchelonState(Residue p, std::size_t dimension)
      : p_(p), dim_(dimension), words_((dimension + 63) / 64), pivot_row_(dimension, npos) {
    fp::check_modulus(p);
  }

  Residue modulus() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  InsertResult insert(const FpVector& v) {
    check(v);
    if (packed()) return insert_packed(v);
    return insert_wide(v);
  }

  /// Coefficients of v in terms of the accepted vectors, or nullopt if v is
  /// outside their span. Does not modify the state.
  std::optional<Coefficients> express(const FpVector& v) const {
    check(v);
    if (packed()) {
      auto work = load_packed(v);
      reduce_packed(work);
      if (!value_zero_packed(work)) return std::nullopt;
      return transform_packed(work);
    }
    auto work = load_wide(v);
    reduce_wide(work);
    if (!value_zero_wide(work)) return std::nullopt;
    return transform_wide(work, true);
  }

  bool contains(const FpVector& v) const { return express(v).has_value(); }

  /// The reduced rows, sorted by pivot column.
  std::vector<FpVector> basis() const {
    std::vector<FpVector> out;
    out.reserve(rank());
    for (std::size_t c = 0; c < dim_; ++c) {
      std::size_t r = pivot_row_[c];
      if (r == npos) continue;
      std::vector<Residue> e(dim_, 0);
      for (std::size_t j = 0; j < dim_; ++j) e[j] = packed() ? bit(packed_[r], j) : wide_[r][j];
      out.emplace_back(p_, std::move(e));
    }
    return out;
  }

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < dim_; ++c)
      if (pivot_row_[c] != npos) cols.push_back(c);
    return cols;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  using Packed = std::vector<std::uint64_t>;  // [value words | transform words]
  using Wide = std::vector<Residue>;          // [value dim | transform dim]

  bool packed() const noexcept { return p_ == 2; }

  void check(const FpVector& v) const {
    if (v.modulus() != p_ || v.size() != dim_)
      throw InputError("echelon: dimension or modulus mismatch");
  }

  static Residue bit(const Packed& row, std::size_t j) {
    return static_cast<Residue>((row[j / 64] >> (j % 64)) & 1u);
  }

  // --- p = 2 ---

  Packed load_packed(const FpVector& v) const {
    Packed w(2 * words_, 0);
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j]) w[j / 64] |= std::uint64_t{1} << (j % 64);
    return w;
  }

  void reduce_packed(Packed& w) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      std::size_t c = pivots_[r];
      if (!bit(w, c)) continue;
      const Packed& row = packed_[r];
      for (std::size_t k = c / 64; k < words_; ++k) w[k] ^= row[k];
      for (std::size_t k = words_; k < 2 * words_; ++k) w[k] ^= row[k];
    }
  }

  bool value_zero_packed(const Packed& w) const {
    return std::all_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(words_),
                       [](std::uint64_t x) { return x == 0; });
  }

  Coefficients transform_packed(const Packed& w) const {
    Coefficients out;
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t x = w[words_ + k];
      while (x) {
        int b = std::countr_zero(x);
        out.emplace(k * 64 + static_cast<std::size_t>(b), 1);
        x &= x - 1;
      }
    }
    return out;
  }

  InsertResult insert_packed(const FpVector& v) {
    Packed w = load_packed(v);
    reduce_packed(w);
    if (value_zero_packed(w)) return Dependent{transform_packed(w)};
    const std::size_t index = pivots_.size();
    w[words_ + index / 64] ^= std::uint64_t{1} << (index % 64);
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_; ++k) {
      if (w[k]) {
        c = k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
        break;
      }
    }
    for (auto& row : packed_) {
      if (!bit(row, c)) continue;
      for (std::size_t k = c / 64; k < 2 * words_; ++k) row[k] ^= w[k];
    }
    packed_.push_back(std::move(w));
    pivots_.push_back(c);
    pivot_row_[c] = index;
    return Independent{index};
  }

  // --- general p ---

  Wide load_wide(const FpVector& v) const {
    Wide w(2 * dim_, 0);
    std::copy(v.entries().begin(), v.entries().end(), w.begin());
    return w;
  }

  // w -= c * row, starting at column `from` in the value part; the
  // transform part only touches the first rank()+1 slots.
  void axpy_wide(Wide& w, const Wide& row, Residue c, std::size_t from) const {
    const Residue negc = fp::neg(c, p_);
    for (std::size_t j = from; j < dim_; ++j)
      if (row[j]) w[j] = fp::add(w[j], fp::mul(negc, row[j], p_), p_);
    const std::size_t tlen = std::min(dim_, pivots_.size() + 1);
    for (std::size_t j = 0; j < tlen; ++j)
      if (row[dim_ + j]) w[dim_ + j] = fp::add(w[dim_ + j], fp::mul(negc, row[dim_ + j], p_), p_);
  }

  void reduce_wide(Wide& w) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      std::size_t c = pivots_[r];
      if (w[c]) axpy_wide(w, wide_[r], w[c], c);
    }
  }

  bool value_zero_wide(const Wide& w) const {
    return std::all_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(dim_),
                       [](Residue x) { return x == 0; });
  }

  // The reduced work vector satisfies residual = v + t.accepted, so a zero
  // residual gives v = -t.accepted.
  Coefficients transform_wide(const Wide& w, bool negate) const {
    Coefficients out;
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      Residue t = w[dim_ + j];
      if (t) out.emplace(j, negate ? fp::neg(t, p_) : t);
    }
    return out;
  }

  InsertResult insert_wide(const FpVector& v) {
    Wide w = load_wide(v);
    reduce_wide(w);
    if (value_zero_wide(w)) return Dependent{transform_wide(w, true)};
    const std::size_t index = pivots_.size();
    w[dim_ + index] = 1;
    std::size_t c = 0;
    while (w[c] == 0) ++c;
    const Residue s = fp::inv(w[c], p_);
    for (auto& x : w) x = fp::mul(x, s, p_);
    // Eliminate the new pivot from the other rows; the transform part may
    // now extend to index + 1 slots.
    for (auto& row : wide_) {
      Residue f = row[c];
      if (!f) continue;
      const Residue negf = fp::neg(f, p_);
      for (std::size_t j = c; j < dim_; ++j)
        if (w[j]) row[j] = fp::add(row[j], fp::mul(negf, w[j], p_), p_);
      for (std::size_t j = 0; j <= index; ++j)
        if (w[dim_ + j]) row[dim_ + j] = fp::add(row[dim_ + j], fp::mul(negf, w[dim_ + j], p_), p_);
    }
    wide_.push_back(std::move(w));
    pivots_.push_back(c);
    pivot_row_[c] = index;
    return Independent{index};
  }

  Residue p_;
  std::size_t dim_;
  std::size_t words_;
  std::vector<std::size_t> pivots_;     // pivot column of accepted row i
  std::vector<std::size_t> pivot_row_;  // column -> accepted row, or npos
  std::vector<Packed> packed_;
  std::vector<Wide> wide_;
};

inline InsertResult echelon_insert(EchelonState& state, const FpVector& v) { return state.insert(v); }

/// Rank of a list of vectors of equal length and modulus.
inline std::size_t span_dimension(std::span<const FpVector> vectors) {
  if (vectors.empty()) return 0;
  EchelonState state(vectors.front().modulus(), vectors.front().size());
  for (const auto& v : vectors) state.insert(v);
  return state.rank();
}

}  // namespace pgro

#endif  // PGRO_FP_LINALG_HPP
