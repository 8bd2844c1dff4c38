#include <doctest.h>

#include "covspec/class_system.hpp"
#include "covspec/errors.hpp"

using namespace covspec;

namespace {

GroupPtr symmetric(std::size_t n) {
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
  return make_group(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})});
}

}  // namespace

TEST_CASE("cycle type and enumerated labelling agree on S_n") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto g = symmetric(n);
    const auto enumerated = ClassSystem::enumerated(g);
    const auto cycle = ClassSystem::cycle_type(n);
    std::map<ClassLabel, ClassLabel> forward, backward;
    for (const auto& x : g->elements()) {
      const auto a = enumerated.label(x);
      const auto b = cycle.label(x);
      CHECK(a.is_identity() == x.is_identity());
      CHECK(a.order == b.order);
      const auto [fi, fnew] = forward.emplace(a, b);
      CHECK(fi->second == b);
      const auto [bi, bnew] = backward.emplace(b, a);
      CHECK(bi->second == a);
    }
    CHECK(forward.size() == conjugacy_classes(*g).classes.size());
  }
}

TEST_CASE("labels and errors") {
  const auto s4 = ClassSystem::cycle_type(4);
  const auto t = s4.label(Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
  CHECK(t.order == 2);
  CHECK(s4.describe(t) == "2^2");
  CHECK(s4.label(Permutation::identity(4)).is_identity());
  CHECK_THROWS_AS(s4.label(Permutation::identity(5)), DomainError);

  const auto a4 = make_group(4, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})});
  const auto e = ClassSystem::enumerated(a4);
  CHECK_THROWS_AS(e.label(Permutation::from_cycles(4, {{0, 1}})), DomainError);
  // 3-cycles split into two A4 classes
  CHECK(e.label(Permutation::from_cycles(4, {{0, 1, 2}})) != e.label(Permutation::from_cycles(4, {{0, 2, 1}})));
}

TEST_CASE("custom class lists") {
  const auto a = Permutation::from_cycles(3, {{0, 1, 2}});
  const auto c = ClassSystem::custom_from_classes(3, {{a, a.inverse()}}, "rotations");
  CHECK(c.kind() == ClassSystem::Kind::custom);
  CHECK(c.tag() == "rotations");
  CHECK(c.label(a) == c.label(a.inverse()));
  CHECK_THROWS_AS(c.label(Permutation::from_cycles(3, {{0, 1}})), DomainError);
}

TEST_CASE("triple subgroups must be closed") {
  const auto s3 = ClassSystem::cycle_type(3);
  const auto h = ElementSet::generated_by(3, {Permutation::from_cycles(3, {{0, 1}})});
  CHECK(h.size() == 2);
  ElementSet broken = h;
  broken.elements.pop_back();
  CHECK_THROWS_AS(Triple("bad", s3, broken, h), ValidationError);
}
