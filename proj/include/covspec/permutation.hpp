#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace covspec {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
///
/// Composition follows function notation: (a * b)(i) == a(b(i)), so b acts
/// first. Ordering is lexicographic on the image sequence; this is the
/// canonical element order everywhere in the library.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Cycle lengths sorted in decreasing order, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

/// Least k >= 1 with g^k == 1 (lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& g);

/// g^k for any integer k.
Permutation power(const Permutation& g, long long k);

/// Places a and b side by side on disjoint point sets (a first).
Permutation juxtapose(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace covspec
