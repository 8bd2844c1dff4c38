#include <doctest.h>

#include <random>

#include "covspec/errors.hpp"
#include "covspec/heisenberg.hpp"

using namespace covspec;

namespace {

LatticeForm identity_form(std::size_t n) {
  RationalMatrix g(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return LatticeForm(g, "Z");
}

HeisenbergDatum cs_datum(const std::array<Rational, 4>& w, bool prime, CentralLength delta) {
  const auto p = conway_sloane_pair(w);
  return HeisenbergDatum{prime ? p.hprime : p.h, transport_form(standard_symplectic(2), prime ? p.hprime_basis : p.h_basis),
                         1, std::move(delta), prime ? "H'" : "H"};
}

std::vector<Rational> torus(const LatticeForm& l) {
  std::vector<Rational> out;
  for (const auto& j : covering_spectrum_torus(l).jumps) out.push_back(j.q);
  return out;
}

}  // namespace

TEST_CASE("validation") {
  HeisenbergDatum ok{identity_form(4), standard_symplectic(2), 1, KnownDelta{1}, "std"};
  CHECK(validate_heisenberg(ok).empty());
  auto scaled = ok;
  scaled.c = 3;
  CHECK_FALSE(validate_heisenberg(scaled).empty());
  auto asym = ok;
  asym.omega[0][2] = 5;
  CHECK_FALSE(validate_heisenberg(asym).empty());
  auto degenerate = ok;
  degenerate.omega = IntMatrix(4, IntVector(4, 0));
  CHECK_FALSE(validate_heisenberg(degenerate).empty());
  CHECK(validate_heisenberg(cs_datum({1, 4, 10, 13}, false, SymbolicDelta{"z"})).empty());
  CHECK(validate_heisenberg(cs_datum({1, 4, 10, 13}, true, SymbolicDelta{"z"})).empty());
}

TEST_CASE("known central length branches") {
  HeisenbergDatum d{identity_form(4), standard_symplectic(2), 1, KnownDelta{Rational(1, 4)}, "std"};
  auto s = covspec_heisenberg(d);
  CHECK(s.rational_entries == std::vector<Rational>{Rational(1, 4), 1});
  CHECK(s.delta_t == 1);
  CHECK_FALSE(s.boundary);

  d.delta_z = KnownDelta{1};
  s = covspec_heisenberg(d);
  CHECK(s.rational_entries == std::vector<Rational>{1});
  CHECK(s.boundary);

  // raising past delta_T never changes the set, lowering below adds one entry
  for (const Rational& z : {Rational(2), Rational(5), Rational(100)}) {
    d.delta_z = KnownDelta{z};
    const auto above = covspec_heisenberg(d);
    CHECK(above.rational_entries == std::vector<Rational>{1});
    CHECK(above.rational_entries.front() == std::min(z, above.delta_t));
  }
  for (const Rational& z : {Rational(1, 2), Rational(1, 9)}) {
    d.delta_z = KnownDelta{z};
    const auto below = covspec_heisenberg(d);
    CHECK(below.rational_entries.size() == 2);
    CHECK(below.rational_entries.front() == z);
  }
}

TEST_CASE("symbolic central lengths") {
  const std::array<Rational, 4> row1{1, 4, 10, 13}, row2{2, 8, 14, 20}, row3{1, 7, 13, 19};
  for (const auto& w : {row1, row2}) {
    const auto a = cs_datum(w, false, SymbolicDelta{"z"});
    const auto b = cs_datum(w, true, SymbolicDelta{"z"});
    const auto sa = covspec_heisenberg(a);
    const auto sb = covspec_heisenberg(b);
    CHECK(sa.conditional);
    CHECK(sa.symbolic_entry == std::optional<std::string>("z"));
    CHECK(sa.rational_entries != sb.rational_entries);
    CHECK_FALSE(covspec_equal_heisenberg(a, b).equal);
  }
  const auto a3 = cs_datum(row3, false, SymbolicDelta{"z"});
  CHECK(covspec_equal_heisenberg(a3, cs_datum(row3, true, SymbolicDelta{"z"})).equal);
  CHECK(covspec_equal_heisenberg(a3, a3).equal);
  CHECK_THROWS_AS(covspec_equal_heisenberg(a3, cs_datum(row3, true, SymbolicDelta{"w"})), DomainError);
  CHECK_THROWS_AS(covspec_equal_heisenberg(a3, cs_datum(row3, true, KnownDelta{1})), DomainError);
}

TEST_CASE("equal theta lattices: Heisenberg comparison follows the tori") {
  std::mt19937 rng(86);
  std::uniform_int_distribution<int> weight(1, 30);
  for (int trial = 0; trial < 20; ++trial) {
    const std::array<Rational, 4> w{weight(rng), weight(rng), weight(rng), weight(rng)};
    const auto a = cs_datum(w, false, SymbolicDelta{"z"});
    const auto b = cs_datum(w, true, SymbolicDelta{"z"});
    REQUIRE(theta_prefix(a.lattice, 60) == theta_prefix(b.lattice, 60));
    CHECK(covspec_equal_heisenberg(a, b).equal == (torus(a.lattice) == torus(b.lattice)));
  }
}
