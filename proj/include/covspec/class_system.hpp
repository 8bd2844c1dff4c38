#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covspec/group.hpp"
#include "covspec/permutation.hpp"

namespace covspec {

/// Opaque token naming an ambient conjugacy class. The identity class always
/// carries the reserved label with order 0 and an empty key; every other label
/// has order >= 2. Labels order by (element order, key).
struct ClassLabel {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> key;

  bool is_identity() const { return order == 0; }
  static ClassLabel identity() { return {}; }

  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Ambient conjugacy labelling. Three kinds:
///  - enumerated: conjugacy classes of an enumerated group;
///  - cycle_type: conjugacy in the symmetric group of the given degree, which
///    never needs enumerating;
///  - custom: caller-supplied labels, trusted and recorded with a tag naming
///    the argument for their conjugation stability.
class ClassSystem {
public:
  enum class Kind { enumerated, cycle_type, custom };
  using LabelFunction = std::function<std::optional<ClassLabel>(const Permutation&)>;

  static ClassSystem enumerated(GroupPtr group);
  static ClassSystem cycle_type(std::size_t degree);
  static ClassSystem custom(std::size_t degree, LabelFunction function, std::string stability_tag);
  /// Custom labelling given by explicit classes: class i gets key {i}.
  static ClassSystem custom_from_classes(std::size_t degree, const std::vector<std::vector<Permutation>>& classes,
                                         std::string stability_tag);

  Kind kind() const { return kind_; }
  std::size_t degree() const { return degree_; }
  const std::string& tag() const { return tag_; }
  /// Ambient group of an enumerated system, null otherwise.
  const GroupPtr& group() const { return group_; }
  const ClassPartition* partition() const { return partition_.get(); }

  /// Throws DomainError for elements outside the ambient or not labelled.
  ClassLabel label(const Permutation& g) const;
  std::string describe(const ClassLabel& label) const;

private:
  ClassSystem() = default;

  Kind kind_ = Kind::cycle_type;
  std::size_t degree_ = 0;
  std::string tag_;
  GroupPtr group_;
  std::shared_ptr<const ClassPartition> partition_;
  LabelFunction function_;
};

std::string_view to_string(ClassSystem::Kind kind);

/// A subgroup given by generators, with its elements enumerated and sorted.
struct ElementSet {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  static ElementSet generated_by(std::size_t degree, std::vector<Permutation> generators,
                                 std::size_t cap = default_element_cap());
  static ElementSet from_subgroup(const Subgroup& subgroup);
  std::size_t size() const { return elements.size(); }
  bool contains(const Permutation& g) const;
};

/// An ambient labelling together with two distinguished subgroups H and H'.
class Triple {
public:
  Triple(std::string name, ClassSystem classes, ElementSet h, ElementSet hprime);

  const std::string& name() const { return name_; }
  const ClassSystem& classes() const { return classes_; }
  const ElementSet& h() const { return h_; }
  const ElementSet& hprime() const { return hprime_; }

private:
  std::string name_;
  ClassSystem classes_;
  ElementSet h_;
  ElementSet hprime_;
};

}  // namespace covspec
