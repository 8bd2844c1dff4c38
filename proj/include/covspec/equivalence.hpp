#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "covspec/class_system.hpp"
#include "covspec/length_map.hpp"

namespace covspec {

enum class Relation { gassmann, kronecker, order, jump };

std::string_view to_string(Relation relation);
std::optional<Relation> parse_relation(std::string_view text);

/// Why a relation fails.
///  gassmann / kronecker: `c` is a label where H and H' differ; h_value and
///    hp_value are the element counts #(H n C) and #(H' n C).
///  order: `s` is a label subset; h_value and hp_value are #<H n S> and #<H' n S>.
///  jump: `s` and `c` with <H n C> <= <H n S> holding on exactly one side
///    (h_contains / hp_contains); h_value and hp_value are #<H n S>, #<H' n S>.
struct Witness {
  std::vector<ClassLabel> s;
  std::optional<ClassLabel> c;
  std::size_t h_value = 0;
  std::size_t hp_value = 0;
  bool h_contains = false;
  bool hp_contains = false;
};

struct EquivalenceVerdict {
  Relation relation;
  bool holds = true;
  std::optional<Witness> witness;
};

struct EquivalenceOptions {
  /// Maximum number of (deduplicated) labels quantified over by order and jump.
  std::size_t class_cap = 20;
  /// Merge labels that generate the same pair (<H n C>, <H' n C>).
  bool deduplicate = true;
};

/// Labels of the non-identity elements of H u H', sorted.
std::vector<ClassLabel> classes_meeting(const Triple& t);

/// Number of labels remaining after merging labels with identical generated pairs.
std::size_t deduplicated_class_count(const Triple& t);

EquivalenceVerdict gassmann_equivalent(const Triple& t);
EquivalenceVerdict kronecker_equivalent(const Triple& t);
EquivalenceVerdict order_equivalent(const Triple& t, const EquivalenceOptions& options = {});
EquivalenceVerdict jump_equivalent(const Triple& t, const EquivalenceOptions& options = {});
EquivalenceVerdict decide(Relation relation, const Triple& t, const EquivalenceOptions& options = {});

struct AuditReport {
  std::vector<EquivalenceVerdict> verdicts;  // gassmann, kronecker, order, jump
  std::vector<std::string> violations;
};

/// Runs all four deciders and flags any broken implication
/// (order => jump => Kronecker, Gassmann => Kronecker).
AuditReport implication_audit(const Triple& t, const EquivalenceOptions& options = {});

/// Elements of <X n S> where X is H or H' and S a set of labels.
std::vector<Permutation> generated_by_labels(const ElementSet& x, const ClassSystem& classes,
                                             const std::set<ClassLabel>& s);

/// Recomputes a failing verdict's witness from scratch; true iff it still
/// exhibits the claimed inequality.
bool witness_reproduces(const Triple& t, const EquivalenceVerdict& verdict);

/// The two-step length map separating S from T:
///   m(1) = 0, m = 2 on S, m = 3 on T - S, m = 4 elsewhere.
/// S and T are closed under the inverse-label involution before use.
class WitnessLengthMap {
public:
  WitnessLengthMap(const Triple& t, std::set<ClassLabel> s, std::set<ClassLabel> t_set);

  Rational operator()(const Permutation& g) const;
  const std::set<ClassLabel>& s() const { return s_; }
  const std::set<ClassLabel>& t() const { return t_; }
  /// The map on a subgroup of the ambient viewed as a group of its own.
  LengthMap restrict_to(const ElementSet& subgroup) const;

private:
  ClassSystem classes_;
  std::set<ClassLabel> s_;
  std::set<ClassLabel> t_;
};

/// Throws DomainError unless S is contained in T.
WitnessLengthMap witness_length_map(const Triple& t, const std::set<ClassLabel>& s, const std::set<ClassLabel>& t_set);

}  // namespace covspec
