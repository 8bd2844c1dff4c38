#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "covspec/class_system.hpp"
#include "covspec/group.hpp"
#include "covspec/length_map.hpp"
#include "covspec/permutation.hpp"

namespace covspec::test {

inline Permutation random_permutation(std::size_t degree, std::mt19937& rng) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

// Random permutation group on 3..7 points of order between 2 and max_order.
inline GroupPtr random_group(std::mt19937& rng, std::size_t max_order = 200) {
  std::uniform_int_distribution<std::size_t> degree_dist(3, 7);
  for (;;) {
    const std::size_t n = degree_dist(rng);
    std::vector<Permutation> gens{random_permutation(n, rng)};
    if (rng() % 2) gens.push_back(random_permutation(n, rng));
    try {
      auto g = make_group(n, gens, "random", max_order);
      if (g->order() >= 2) return g;
    } catch (const std::exception&) {
      // too large, draw again
    }
  }
}

// A conjugation-invariant word norm: random weights on inverse-closed classes,
// lengths from a shortest-path search over products of weighted elements.
inline LengthMap random_length_map(const GroupPtr& g, std::mt19937& rng) {
  const auto partition = conjugacy_classes(*g);
  const std::size_t k = partition.classes.size();
  std::vector<Rational> weight(k);
  std::uniform_int_distribution<int> num(1, 12), den(1, 3);
  for (std::size_t c = 1; c < k; ++c) {
    if (weight[c] != 0) continue;
    const Rational w(num(rng), den(rng));
    weight[c] = w;
    const auto inv = partition.class_of[g->inverse(partition.classes[c].representative())];
    weight[inv] = w;
  }
  std::vector<Rational> dist(g->order(), Rational(-1));
  using Item = std::pair<Rational, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(Rational(0), 0);
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d > dist[x]) continue;
    for (std::uint32_t y = 1; y < g->order(); ++y) {
      const Rational nd = d + weight[partition.class_of[y]];
      const auto z = g->multiply(x, y);
      if (dist[z] < 0 || nd < dist[z]) {
        dist[z] = nd;
        queue.emplace(nd, z);
      }
    }
  }
  for (auto& d : dist) d.canonicalize();
  return LengthMap(g, std::move(dist));
}

inline ElementSet random_subgroup(const GroupPtr& g, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
  std::vector<Permutation> gens{g->element(pick(rng))};
  if (rng() % 3 == 0) gens.push_back(g->element(pick(rng)));
  return ElementSet::generated_by(g->degree(), gens);
}

inline Triple random_triple(std::mt19937& rng, std::size_t max_order = 200) {
  auto g = random_group(rng, max_order);
  return Triple("random", ClassSystem::enumerated(g), random_subgroup(g, rng), random_subgroup(g, rng));
}

// Definitional oracle for the subset relations: for every subset S of the
// labels meeting H u H', the generated pair (<H n S>, <H' n S>).
struct SubsetOracle {
  std::vector<std::vector<Permutation>> h_groups;
  std::vector<std::vector<Permutation>> hp_groups;
};

inline std::vector<Permutation> generated_from(const ElementSet& x, const ClassSystem& classes,
                                               const std::vector<ClassLabel>& labels, unsigned mask) {
  std::vector<Permutation> gens;
  for (const auto& g : x.elements) {
    if (g.is_identity()) continue;
    const auto l = classes.label(g);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if ((mask >> i & 1) && labels[i] == l) gens.push_back(g);
    }
  }
  return enumerate_closure(x.elements.front().degree(), gens);
}

inline SubsetOracle subset_oracle(const Triple& t, const std::vector<ClassLabel>& labels) {
  SubsetOracle o;
  for (unsigned mask = 0; mask < (1u << labels.size()); ++mask) {
    o.h_groups.push_back(generated_from(t.h(), t.classes(), labels, mask));
    o.hp_groups.push_back(generated_from(t.hprime(), t.classes(), labels, mask));
  }
  return o;
}

// Unrestricted formulation: for all S, T, <H n S> = <H n T> iff <H' n S> = <H' n T>.
inline bool oracle_jump(const SubsetOracle& o) {
  const std::size_t n = o.h_groups.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if ((o.h_groups[a] == o.h_groups[b]) != (o.hp_groups[a] == o.hp_groups[b])) return false;
    }
  }
  return true;
}

inline bool oracle_order(const SubsetOracle& o) {
  for (std::size_t a = 0; a < o.h_groups.size(); ++a) {
    if (o.h_groups[a].size() != o.hp_groups[a].size()) return false;
  }
  return true;
}

inline std::map<ClassLabel, std::size_t> label_counts(const Triple& t, const ElementSet& x) {
  std::map<ClassLabel, std::size_t> counts;
  for (const auto& g : x.elements) ++counts[t.classes().label(g)];
  return counts;
}

}  // namespace covspec::test
