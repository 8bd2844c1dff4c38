#include <doctest.h>

#include <random>

#include "covspec/errors.hpp"
#include "covspec/examples.hpp"
#include "covspec/length_map.hpp"
#include "support.hpp"

using namespace covspec;

namespace {

bool same_values(const std::vector<Jump>& a, const std::vector<Jump>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].value != b[i].value || a[i].subgroup_order != b[i].subgroup_order) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate flags each axiom") {
  const auto c4 = cyclic_group(4);
  // elements sorted: identity first; find the generator and its square
  std::vector<Rational> values(4, Rational(1));
  values[0] = 0;
  CHECK(validate(LengthMap(c4, values)).empty());

  auto bad = values;
  bad[0] = 1;
  auto v = validate(LengthMap(c4, bad));
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().axiom == 1);

  // square too long: m(g^2) > 2 m(g)
  const auto g = c4->generators().front();
  std::vector<Rational> power_bad(4, Rational(1));
  power_bad[0] = 0;
  power_bad[c4->require_index(g * g)] = 3;
  v = validate(LengthMap(c4, power_bad));
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().axiom == 3);

  // S3: transpositions with different values break conjugation invariance
  const auto s3 = make_group(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
  std::vector<Rational> conj(6, Rational(2));
  conj[0] = 0;
  conj[s3->require_index(Permutation::from_cycles(3, {{0, 1}}))] = 1;
  bool axiom2 = false;
  for (const auto& x : validate(LengthMap(s3, conj))) axiom2 = axiom2 || x.axiom == 2;
  CHECK(axiom2);
}

TEST_CASE("cyclic group jump example") {
  // C6 with m = 1 on the generators of order 6, 3 on order 3, 2 on the involution
  const auto c6 = cyclic_group(6);
  std::vector<Rational> values(6);
  for (std::uint32_t i = 1; i < 6; ++i) {
    const auto o = element_order(c6->element(i));
    values[i] = o == 6 ? 1 : (o == 3 ? 2 : 3);
  }
  const LengthMap m(c6, values);
  REQUIRE(validate(m).empty());
  const auto r = jump_set(m);
  REQUIRE(r.jumps.size() == 1);
  CHECK(r.jumps[0].value == 1);
  CHECK(r.jumps[0].subgroup_order == 6);
  CHECK(r.jumps[0].multiplicity == 1);
}

TEST_CASE("jump_set agrees with the definition on random length maps") {
  std::mt19937 rng(20240);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = test::random_group(rng);
    const auto m = test::random_length_map(g, rng);
    REQUIRE(validate(m).empty());
    const auto fast = jump_set(m, {.multiplicities = false});
    const auto slow = jump_set_bruteforce(m, {.multiplicities = false});
    CHECK(same_values(fast.jumps, slow.jumps));
    CHECK(fast.terminal.order() == g->order());
    // the least positive value is always a jump
    Rational least = -1;
    for (std::uint32_t i = 1; i < g->order(); ++i) {
      if (least < 0 || m.value(i) < least) least = m.value(i);
    }
    REQUIRE_FALSE(fast.jumps.empty());
    CHECK(fast.jumps.front().value == least);
  }
}

TEST_CASE("length map consequences and filtrations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = test::random_group(rng);
    const auto m = test::random_length_map(g, rng);
    for (std::uint32_t i = 0; i < g->order(); ++i) CHECK(m.value(g->inverse(i)) == m.value(i));
    std::set<Rational> values(m.values().begin(), m.values().end());
    std::vector<Rational> sorted(values.begin(), values.end());
    for (std::size_t a = 0; a < sorted.size(); ++a) {
      const auto fa = filtration_at(m, sorted[a]);
      CHECK(is_normal(fa));
      for (std::size_t b = a + 1; b < sorted.size(); ++b) CHECK(fa.is_subgroup_of(filtration_at(m, sorted[b])));
    }
  }
}

TEST_CASE("multiplicity counts added generators") {
  // V4 = C2 x C2 with every involution of length 1 needs two generators
  const auto v4 = direct_product(*cyclic_group(2), *cyclic_group(2));
  const auto m = constant_length_map(v4, 1);
  const auto r = jump_set(m);
  REQUIRE(r.jumps.size() == 1);
  CHECK(r.jumps[0].multiplicity == 2);
  CHECK(jump_multiplicity(m, 1) == 2);
  CHECK_THROWS_AS(jump_multiplicity(m, 2), DomainError);
}

TEST_CASE("restriction to a subgroup loses the jump") {
  const auto gap = restriction_gap_instance();
  REQUIRE(validate(gap.map).empty());
  const auto restricted = restrict(gap.map, gap.subgroup);
  // on A3 the 3-cycles have length 2, so <m < 3/2> is trivial there
  CHECK(filtration_at(restricted, gap.delta).order() == 1);
  // intersecting the ambient filtration with A3 keeps all of A3
  const auto ambient = filtration_at(gap.map, gap.delta);
  std::size_t intersected = 0;
  for (auto i : gap.subgroup.members()) intersected += ambient.contains(i);
  CHECK(intersected == 3);
}
