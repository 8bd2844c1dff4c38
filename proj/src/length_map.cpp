#include "covspec/length_map.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "covspec/errors.hpp"

namespace covspec {

LengthMap::LengthMap(GroupPtr domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_->order()) {
    throw DomainError("length map needs one value per element of its domain (" + std::to_string(domain_->order()) +
                      "), got " + std::to_string(values_.size()));
  }
}

const Rational& LengthMap::value(const Permutation& g) const { return values_[domain_->require_index(g)]; }

LengthMap constant_length_map(GroupPtr domain, const Rational& value) {
  std::vector<Rational> values(domain->order(), value);
  values[0] = 0;
  return LengthMap(std::move(domain), std::move(values));
}

std::vector<AxiomViolation> validate(const LengthMap& m) {
  std::vector<AxiomViolation> violations;
  const auto& g = *m.domain();
  if (m.value(0) != 0) violations.push_back({1, "identity has nonzero length " + to_string(m.value(0)), {0}});
  for (std::uint32_t i = 1; i < g.order(); ++i) {
    if (m.value(i) <= 0) {
      violations.push_back({1, "non-identity element has length " + to_string(m.value(i)) + " <= 0", {i}});
    }
  }

  std::vector<Permutation> inverses;
  for (const auto& x : g.generators()) inverses.push_back(x.inverse());
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < inverses.size(); ++j) {
      const auto conj = g.require_index(g.generators()[j] * g.element(i) * inverses[j]);
      if (m.value(conj) != m.value(i)) {
        violations.push_back({2, "length differs on a conjugate pair: " + to_string(m.value(i)) + " vs " +
                                     to_string(m.value(conj)),
                              {i, conj}});
      }
    }
  }

  for (std::uint32_t i = 1; i < g.order(); ++i) {
    const auto order = element_order(g.element(i));
    Permutation p = g.element(i);
    for (std::uint64_t k = 2; k < order; ++k) {
      p = p * g.element(i);
      const auto idx = g.require_index(p);
      const Rational bound = m.value(i) * static_cast<unsigned long>(std::min(k, order - k));
      if (m.value(idx) > bound) {
        violations.push_back({3, "m(g^" + std::to_string(k) + ") = " + to_string(m.value(idx)) + " exceeds " +
                                     to_string(bound),
                              {i, idx}});
      }
    }
  }
  return violations;
}

namespace {

template <typename Pred>
Subgroup generated_where(const LengthMap& m, Pred pred) {
  std::vector<Permutation> gens;
  for (std::uint32_t i = 1; i < m.domain()->order(); ++i) {
    if (pred(m.value(i))) gens.push_back(m.domain()->element(i));
  }
  return closure(m.domain(), gens);
}

}  // namespace

Subgroup filtration_at(const LengthMap& m, const Rational& delta) {
  return generated_where(m, [&](const Rational& v) { return v < delta; });
}

Subgroup filtration_through(const LengthMap& m, const Rational& delta) {
  return generated_where(m, [&](const Rational& v) { return v <= delta; });
}

JumpReport jump_set(const LengthMap& m, const JumpOptions& options) {
  const auto& g = *m.domain();
  JumpReport report{{}, whole_group(m.domain())};
  if (g.order() == 1) return report;

  Rational delta = *std::min_element(m.values().begin() + 1, m.values().end());
  Subgroup current = filtration_through(m, delta);
  while (true) {
    Jump jump{delta, current.order(), 0};
    if (options.multiplicities) jump.multiplicity = jump_multiplicity(m, delta, options.candidate_cap);
    report.jumps.push_back(std::move(jump));
    if (current.order() == g.order()) break;
    std::optional<Rational> next;
    for (std::uint32_t i = 1; i < g.order(); ++i) {
      if (!current.contains(i) && (!next || m.value(i) < *next)) next = m.value(i);
    }
    delta = *next;
    current = filtration_through(m, delta);
  }
  return report;
}

JumpReport jump_set_bruteforce(const LengthMap& m, const JumpOptions& options) {
  JumpReport report{{}, whole_group(m.domain())};
  std::set<Rational> distinct(m.values().begin() + 1, m.values().end());
  for (const auto& v : distinct) {
    const Subgroup below = filtration_at(m, v);
    const Subgroup through = filtration_through(m, v);
    if (below.order() != through.order()) {
      Jump jump{v, through.order(), 0};
      if (options.multiplicities) jump.multiplicity = jump_multiplicity(m, v, options.candidate_cap);
      report.jumps.push_back(std::move(jump));
    }
  }
  return report;
}

LengthMap restrict(const LengthMap& m, const Subgroup& subgroup) {
  if (subgroup.parent() != m.domain()) throw DomainError("subgroup does not lie in the length map's domain");
  auto group = subgroup.as_group();
  std::vector<Rational> values;
  values.reserve(group->order());
  for (const auto& e : group->elements()) values.push_back(m.value(e));
  return LengthMap(std::move(group), std::move(values));
}

std::size_t jump_multiplicity(const LengthMap& m, const Rational& delta, std::size_t candidate_cap) {
  const Subgroup below = filtration_at(m, delta);
  const Subgroup through = filtration_through(m, delta);
  if (below.order() == through.order()) throw DomainError(to_string(delta) + " is not a jump of the length map");

  // Elements that give the same extension of `below` are interchangeable in any generating choice.
  std::map<std::vector<std::uint32_t>, Permutation> by_extension;
  for (std::uint32_t i = 1; i < m.domain()->order(); ++i) {
    if (m.value(i) != delta || below.contains(i)) continue;
    auto gens = below.generators();
    gens.push_back(m.domain()->element(i));
    const auto ext = closure(m.domain(), gens);
    by_extension.emplace(std::vector<std::uint32_t>(ext.members().begin(), ext.members().end()),
                         m.domain()->element(i));
  }
  std::vector<Permutation> candidates;
  for (auto& [members, g] : by_extension) {
    if (members.size() == through.order()) return 1;
    candidates.push_back(g);
  }
  if (candidates.size() > candidate_cap) {
    throw CapacityError("jump multiplicity search has " + std::to_string(candidates.size()) +
                        " candidates, above the cap of " + std::to_string(candidate_cap));
  }
  for (std::size_t r = 2; r <= candidates.size(); ++r) {
    std::vector<bool> pick(candidates.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      auto gens = below.generators();
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (pick[i]) gens.push_back(candidates[i]);
      }
      if (closure(m.domain(), gens).order() == through.order()) return r;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw DomainError("jump-length elements do not generate the next filtration group");
}

}  // namespace covspec
