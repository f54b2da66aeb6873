#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cayleyci {

// Permutation of {0, ..., n-1} stored as a dense image array.
//
// Products compose left to right: (p * q)(x) = q(p(x)). Conjugation
// p^g = g^-1 * p * g therefore relabels the cycles of p by g. External
// cycle notation is 1-based; everything internal is 0-based.
class Perm {
 public:
  explicit Perm(int degree = 1);
  explicit Perm(std::vector<int> images);

  // Parses disjoint cycles over 1-based points, e.g. "(1324)(5768)".
  // The empty string and "()" denote the identity. Up to degree 9 every
  // digit is one point; from degree 10 on points must be separated by
  // spaces or commas, e.g. "(1 12 7)(3 40)".
  static Perm from_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  bool is_even() const;
  // True when all cycles (fixed points included) share one length;
  // nonidentity elements of regular groups have this shape.
  bool is_semiregular() const;
  int fixed_points() const;
  std::uint64_t order() const;

  Perm inverse() const;
  Perm pow(std::uint64_t k) const;

  // Cycles of length >= 2, each starting at its smallest point, sorted
  // by first point.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

// Applies p first, then q.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

// g^-1 * p * g
Perm conjugate(const Perm& p, const Perm& g);

}  // namespace cayleyci

template <>
struct std::hash<cayleyci::Perm> {
  std::size_t operator()(const cayleyci::Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    }
    return h;
  }
};
