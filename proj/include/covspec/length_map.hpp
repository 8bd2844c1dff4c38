#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "covspec/group.hpp"
#include "covspec/rational.hpp"

namespace covspec {

/// A length map on a finite group: exact rational values aligned with the
/// domain's sorted element list.
class LengthMap {
public:
  LengthMap(GroupPtr domain, std::vector<Rational> values);

  const GroupPtr& domain() const { return domain_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(std::uint32_t index) const { return values_[index]; }
  const Rational& value(const Permutation& g) const;

private:
  GroupPtr domain_;
  std::vector<Rational> values_;
};

LengthMap constant_length_map(GroupPtr domain, const Rational& value);

struct AxiomViolation {
  int axiom;  // 1: positivity, 2: conjugation invariance, 3: power bound
  std::string message;
  std::vector<std::uint32_t> elements;
};

/// Checks the three length-map axioms. An empty result means the map is valid.
/// Conjugation invariance is checked against the domain's generators; the power
/// bound m(g^k) <= |k| m(g) is checked for every exponent up to the order of g.
std::vector<AxiomViolation> validate(const LengthMap& m);

/// The subgroup generated by all elements with m(g) < delta.
Subgroup filtration_at(const LengthMap& m, const Rational& delta);
/// The subgroup generated by all elements with m(g) <= delta.
Subgroup filtration_through(const LengthMap& m, const Rational& delta);

struct Jump {
  Rational value;
  std::size_t subgroup_order = 0;  // order of the filtration group just above the jump
  std::size_t multiplicity = 0;    // 0 when not computed
};

struct JumpReport {
  std::vector<Jump> jumps;
  Subgroup terminal;
};

struct JumpOptions {
  bool multiplicities = true;
  std::size_t candidate_cap = 12;
};

/// Iterative jump computation: delta_1 is the least non-identity value, and
/// delta_{i+1} is the least value outside the group generated by elements of
/// length <= delta_i, until that group is the whole domain.
JumpReport jump_set(const LengthMap& m, const JumpOptions& options = {});

/// Definitional evaluation: a value v is a jump iff <m < v> differs from <m <= v>.
JumpReport jump_set_bruteforce(const LengthMap& m, const JumpOptions& options = {});

/// The same values on the elements of a subgroup, as a length map on that
/// subgroup viewed as a group of its own.
LengthMap restrict(const LengthMap& m, const Subgroup& subgroup);

/// Least number of elements of length exactly delta that must be added to
/// <m < delta> to generate <m <= delta>. Candidates are first merged when they
/// generate the same extension; more than candidate_cap survivors is a
/// CapacityError. Throws DomainError when delta is not a jump.
std::size_t jump_multiplicity(const LengthMap& m, const Rational& delta, std::size_t candidate_cap = 12);

}  // namespace covspec
