#include <doctest.h>

#include <random>

#include "covspec/errors.hpp"
#include "covspec/group.hpp"
#include "covspec/rational.hpp"
#include "support.hpp"

using namespace covspec;

namespace {

GroupPtr symmetric(std::size_t n) {
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
  return make_group(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})}, "S");
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto a = Permutation::from_cycles(4, {{0, 1, 2}});
  const auto b = Permutation::from_cycles(4, {{2, 3}});
  // (a*b)(i) = a(b(i))
  CHECK((a * b)(3) == a(2));
  CHECK((a * b)(2) == a(3));
  CHECK(element_order(a) == 3);
  CHECK(element_order(a * b) == 4);
  CHECK((a * a.inverse()).is_identity());
  CHECK(power(a, -1) == a.inverse());
  CHECK(power(a, 3).is_identity());
  CHECK(a.cycle_type() == std::vector<std::size_t>{3, 1});
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), DomainError);
}

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational("-7") == -7);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK(to_decimal(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("symmetric group orders and classes") {
  const std::size_t factorial[] = {1, 1, 2, 6, 24, 120, 720};
  const std::size_t partitions[] = {1, 1, 2, 3, 5, 7, 11};
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto g = symmetric(n);
    CHECK(g->order() == factorial[n]);
    CHECK(conjugacy_classes(*g).classes.size() == partitions[n]);
    CHECK(g->element(0).is_identity());
  }
}

TEST_CASE("element cap") {
  CHECK_THROWS_AS(make_group(6, symmetric(6)->generators(), "S6", 100), CapacityError);
  const auto saved = default_element_cap();
  set_default_element_cap(50);
  CHECK_THROWS_AS(symmetric(5), CapacityError);
  set_default_element_cap(saved);
  CHECK(symmetric(5)->order() == 120);
}

TEST_CASE("closure is idempotent and classes are conjugation stable") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = test::random_group(rng);
    std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
    const auto s = closure(g, std::vector<Permutation>{g->element(pick(rng))});
    CHECK(closure(g, s.elements()) == s);
    const auto partition = conjugacy_classes(*g);
    for (int k = 0; k < 10; ++k) {
      const auto x = pick(rng), h = pick(rng);
      const auto conj = g->multiply(g->multiply(h, x), g->inverse(h));
      CHECK(partition.class_of[conj] == partition.class_of[x]);
    }
  }
}

TEST_CASE("regular representation is a homomorphism") {
  const auto g = symmetric(4);
  const auto reg = regular_representation(*g);
  CHECK(reg.image->order() == 24);
  CHECK(reg.image->degree() == 24);
  for (std::uint32_t a = 0; a < g->order(); ++a) {
    for (std::uint32_t b = 0; b < g->order(); ++b) {
      CHECK(reg.image_of[g->multiply(a, b)] == reg.image_of[a] * reg.image_of[b]);
    }
  }
}

TEST_CASE("quotient projection") {
  const auto g = symmetric(4);
  const auto v4 = closure(g, std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                                      Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(is_normal(v4));
  const auto q = quotient(g, v4);
  CHECK(q.order() == 6);
  std::vector<std::size_t> fiber(q.order());
  for (std::uint32_t a = 0; a < g->order(); ++a) ++fiber[q.coset_of(a)];
  for (auto f : fiber) CHECK(f == 4);
  for (std::uint32_t a = 0; a < g->order(); ++a) {
    for (std::uint32_t b = 0; b < g->order(); ++b) {
      CHECK(q.coset_of(g->multiply(a, b)) == q.multiply(q.coset_of(a), q.coset_of(b)));
    }
  }
  CHECK(q.realize()->order() == 6);
  const auto not_normal = closure(g, std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1}})});
  CHECK_FALSE(is_normal(not_normal));
  CHECK_THROWS_AS(quotient(g, not_normal), ValidationError);
}

TEST_CASE("direct and semidirect constructions agree") {
  const auto c4 = cyclic_group(4);
  const auto c2 = cyclic_group(2);
  const auto direct = direct_product(*c4, *c2);
  std::vector<GeneratorImages> trivial{c4->generators()};
  const auto semi = semidirect_product(*c4, *c2, trivial);
  CHECK(direct->order() == 8);
  CHECK(semi->order() == 8);
  CHECK(order_statistics(*direct) == order_statistics(*semi));
  // inversion action gives D4: five involutions
  std::vector<GeneratorImages> inversion{{c4->generators().front().inverse()}};
  const auto d4 = semidirect_product(*c4, *c2, inversion);
  CHECK(order_statistics(*d4) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}});
}
