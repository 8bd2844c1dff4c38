#include <doctest.h>

#include <random>

#include "covspec/errors.hpp"
#include "covspec/integer_matrix.hpp"
#include "covspec/lattice.hpp"

using namespace covspec;

namespace {

const std::array<std::array<Rational, 4>, 3> kRows{{{1, 4, 10, 13}, {2, 8, 14, 20}, {1, 7, 13, 19}}};

RationalMatrix diagonal(std::vector<Rational> d) {
  RationalMatrix g(d.size(), std::vector<Rational>(d.size(), Rational(0)));
  for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
  return g;
}

std::vector<Rational> qs(const CovSpecReport& r) {
  std::vector<Rational> out;
  for (const auto& j : r.jumps) out.push_back(j.q);
  return out;
}

std::vector<std::size_t> multiplicities(const CovSpecReport& r) {
  std::vector<std::size_t> out;
  for (const auto& j : r.jumps) out.push_back(j.multiplicity);
  return out;
}

// Gram B B^T for a random nonsingular integer B with small entries.
LatticeForm random_form(std::mt19937& rng, std::size_t n, int range = 2) {
  std::uniform_int_distribution<int> entry(-range, range);
  for (;;) {
    RationalMatrix b(n, std::vector<Rational>(n));
    for (auto& row : b)
      for (auto& x : row) x = entry(rng);
    RationalMatrix g(n, std::vector<Rational>(n, Rational(0)));
    bool small = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) g[i][j] += b[i][k] * b[j][k];
        small = small && abs(g[i][j]) <= 10;
      }
    }
    if (small && is_positive_definite(g)) return LatticeForm(g);
  }
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 6; ++step) {
    const auto i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
  }
  return u;
}

}  // namespace

TEST_CASE("hermite and smith forms") {
  const IntMatrix m{{2, 0}, {3, 0}};
  CHECK(hermite_normal_form(m, 2) == IntMatrix{{1, 0}});
  CHECK(hermite_normal_form({}, 3).empty());
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(smith_invariants(a) == std::vector<Integer>{2, 6, 12});
  const auto h = hermite_normal_form(a, 3);
  CHECK(abs(hnf_determinant(h)) == 144);
  CHECK(hnf_coordinates(h, {2, 4, 4}).has_value());
  CHECK_FALSE(hnf_coordinates(h, {1, 0, 0}).has_value());
  // unit pivots dividing later entries used to make the reduction cycle
  CHECK(smith_invariants({{1, 0, 0, 1}, {0, 1, 0, -1}, {0, 0, 1, 0}}) == std::vector<Integer>{1, 1, 1});
  CHECK(smith_invariants({{-2, 4}, {6, 8}}) == std::vector<Integer>{2, 20});
}

TEST_CASE("sublattice generation is order independent and idempotent") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVector> vs(1 + rng() % 5, IntVector(3));
    for (auto& v : vs)
      for (auto& x : v) x = entry(rng);
    const auto s = sublattice_generated(3, vs);
    auto shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(sublattice_generated(3, shuffled) == s);
    CHECK(sublattice_generated(3, s.basis()) == s);
    for (const auto& v : vs) CHECK(s.contains(v));
  }
  CHECK(sublattice_generated(2, {}).rank() == 0);
}

TEST_CASE("short vectors") {
  const LatticeForm z2(diagonal({1, 1}));
  CHECK(short_vectors(z2, 1).size() == 4);
  const LatticeForm d14(diagonal({1, 4}));
  const auto v = short_vectors(d14, 4);
  CHECK(v.size() == 6);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1].norm2 <= v[i].norm2);
  CHECK_THROWS_AS(short_vectors(z2, 100, {.max_vectors = 10}), CapacityError);
  CHECK_THROWS_AS(LatticeForm(RationalMatrix{{1, 2}, {2, 1}}), ValidationError);
  CHECK_THROWS_AS(LatticeForm(RationalMatrix{{1, 0}, {1, 1}}), ValidationError);
}

TEST_CASE("Conway-Sloane lattices") {
  const auto p = conway_sloane_pair(kRows[0]);
  CHECK(hnf_determinant(p.h_basis) == 9);
  CHECK(hnf_determinant(p.hprime_basis) == 9);
  const auto whole = group_ring_form(kRows[0]);
  CHECK(whole.norm2({0, 1, 1, 1}) == 12);
  const auto h = sublattice_generated(4, p.h_basis);
  CHECK(h.contains({0, 1, 1, 1}));
  for (int i = 0; i < 4; ++i) {
    IntVector e(4, 0);
    e[i] = 3;
    CHECK(h.contains(e));
    CHECK(sublattice_generated(4, p.hprime_basis).contains(e));
  }
  const std::vector<std::vector<Rational>> h_expected{{12, 20, 24, 28}, {20, 36, 40, 52}, {16, 32, 40}};
  const std::vector<std::vector<Rational>> hp_expected{{12, 20, 28}, {20, 36, 48, 52}, {16, 32, 40}};
  for (std::size_t row = 0; row < 3; ++row) {
    const auto pair = conway_sloane_pair(kRows[row]);
    CHECK(qs(covering_spectrum_torus(pair.h)) == h_expected[row]);
    CHECK(qs(covering_spectrum_torus(pair.hprime)) == hp_expected[row]);
    CHECK(theta_prefix(pair.h, 100) == theta_prefix(pair.hprime, 100));
  }
  const auto row3 = conway_sloane_pair(kRows[2]);
  CHECK(multiplicities(covering_spectrum_torus(row3.h)) == std::vector<std::size_t>{1, 2, 1});
  CHECK(multiplicities(covering_spectrum_torus(row3.hprime)) == std::vector<std::size_t>{1, 1, 2});
  CHECK(render_half_sqrt(12) == "√3");
  CHECK(render_half_sqrt(9) == "3/2");
  CHECK(render_half_sqrt(4) == "1");
}

TEST_CASE("small tori") {
  const LatticeForm t(diagonal({9, 4}));
  CHECK(qs(covering_spectrum_torus(t)) == std::vector<Rational>{4, 9});
  CHECK(successive_minima(t) == std::vector<Rational>{4, 9});
  const auto theta = theta_prefix(t, 9);
  CHECK(theta == std::map<Rational, std::size_t>{{0, 1}, {4, 2}, {9, 2}});
  const auto z1 = theta_prefix(LatticeForm(diagonal({1})), 4);
  CHECK(z1 == std::map<Rational, std::size_t>{{0, 1}, {1, 2}, {4, 2}});
  const auto z3 = covering_spectrum_torus(LatticeForm(diagonal({1, 1, 1})));
  REQUIRE(z3.jumps.size() == 1);
  CHECK(z3.jumps[0].q == 1);
  CHECK(z3.jumps[0].multiplicity == 3);
}

TEST_CASE("half-sum extension adds a jump without rank") {
  const std::vector<Rational> lengths{1, Rational(51, 50), Rational(26, 25), Rational(53, 50), Rational(27, 25)};
  const auto [l, lp] = half_sum_extension(lengths);
  const auto base = covering_spectrum_torus(l);
  const auto ext = covering_spectrum_torus(lp);
  auto expected = qs(base);
  expected.push_back(Rational(13, 10));
  std::sort(expected.begin(), expected.end());
  CHECK(qs(ext) == expected);
  for (const auto& j : ext.jumps) {
    if (j.q == Rational(13, 10)) {
      CHECK(j.new_rank == 5);
      REQUIRE(j.new_index);
      CHECK(*j.new_index == 1);
    }
  }
  CHECK(successive_minima(lp) == lengths);
}

TEST_CASE("random lattices: jump chain, minima, scaling, unimodular invariance") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto l = random_form(rng, n);
    const auto report = covering_spectrum_torus(l);
    CHECK(qs(report) == jump_values_by_definition(l, report.bound_used));
    CHECK(report.jumps.back().new_rank == n);
    REQUIRE(report.jumps.back().new_index);
    CHECK(*report.jumps.back().new_index == 1);

    // direct oracle: HNF of <norm2 < q> and <norm2 <= q> at every value
    const auto vectors = short_vectors(l, report.bound_used);
    std::vector<Rational> oracle;
    std::vector<IntVector> below;
    for (std::size_t i = 0; i < vectors.size();) {
      std::size_t j = i;
      std::vector<IntVector> through = below;
      while (j < vectors.size() && vectors[j].norm2 == vectors[i].norm2) through.push_back(vectors[j++].v);
      if (!(sublattice_generated(n, below) == sublattice_generated(n, through))) oracle.push_back(vectors[i].norm2);
      below = std::move(through);
      i = j;
    }
    CHECK(qs(report) == oracle);

    // rank increments reproduce the successive minima
    std::vector<Rational> minima;
    std::size_t rank = 0;
    for (const auto& j : report.jumps) {
      for (; rank < j.new_rank; ++rank) minima.push_back(j.q);
    }
    CHECK(minima == successive_minima(l));

    const Rational c(3, 2);
    const auto scaled = covering_spectrum_torus(l.scaled(c));
    REQUIRE(scaled.jumps.size() == report.jumps.size());
    for (std::size_t i = 0; i < report.jumps.size(); ++i) {
      CHECK(scaled.jumps[i].q == c * report.jumps[i].q);
      CHECK(scaled.jumps[i].multiplicity == report.jumps[i].multiplicity);
    }

    const auto theta = theta_prefix(l, 20);
    CHECK(theta.at(0) == 1);
    for (const auto& [q, count] : theta) {
      if (q != 0) CHECK(count % 2 == 0);
    }
    const auto u = random_unimodular(rng, n);
    const auto moved = restrict_form(l, u);
    CHECK(theta_prefix(moved, 20) == theta);
    CHECK(qs(covering_spectrum_torus(moved)) == qs(report));
  }
}
