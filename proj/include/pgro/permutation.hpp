#ifndef PGRO_PERMUTATION_HPP
#define PGRO_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pgro {

/// A permutation of {0, ..., degree-1}, stored as its image list.
/// Products compose left to right: (x * y)(i) = y(x(i)).
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point i : images_) {
      if (i >= images_.size() || seen[i]) throw InputError("image list is not a bijection");
      seen[i] = 1;
    }
  }

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
    return p;
  }

  /// From the external one-based image list.
  static Permutation from_one_based(std::span<const long long> images) {
    std::vector<Point> zero;
    zero.reserve(images.size());
    for (long long x : images) {
      if (x < 1 || static_cast<std::size_t>(x) > images.size())
        throw InputError("permutation image " + std::to_string(x) + " out of range");
      zero.push_back(static_cast<Point>(x - 1));
    }
    return Permutation(std::move(zero));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  std::vector<long long> one_based() const {
    std::vector<long long> out;
    out.reserve(images_.size());
    for (Point i : images_) out.push_back(static_cast<long long>(i) + 1);
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation operator*(const Permutation& other) const {
    if (other.degree() != degree()) throw InputError("permutation degree mismatch");
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = other.images_[images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto i : p.images()) {
      h ^= i;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace pgro

#endif  // PGRO_PERMUTATION_HPP
