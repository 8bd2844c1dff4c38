#include "covspec/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "covspec/errors.hpp"

namespace covspec {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw DomainError("image sequence is not a bijection of {0,...," + std::to_string(images_.size()) +
                        "-1}");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      if (from >= degree || used[from]) throw DomainError("cycles are not disjoint or exceed the degree");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    bool first = true;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << p;
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("cannot compose permutations of different degrees");
  Permutation c;
  c.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) c.images_[i] = a.images_[b.images_[i]];
  return c;
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  for (std::size_t length : g.cycle_type()) order = std::lcm(order, static_cast<std::uint64_t>(length));
  return order;
}

Permutation power(const Permutation& g, long long k) {
  const auto order = static_cast<long long>(element_order(g));
  long long e = ((k % order) + order) % order;
  Permutation result = Permutation::identity(g.degree());
  Permutation base = g;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation juxtapose(const Permutation& a, const Permutation& b) {
  std::vector<Point> images;
  images.reserve(a.degree() + b.degree());
  for (Point p : a.images()) images.push_back(p);
  const auto shift = static_cast<Point>(a.degree());
  for (Point p : b.images()) images.push_back(p + shift);
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace covspec
