#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "covspec/permutation.hpp"

namespace covspec {

/// Element enumeration limit used when no explicit cap is passed.
std::size_t default_element_cap();
void set_default_element_cap(std::size_t cap);

/// All products of `generators`, sorted lexicographically. The identity of
/// the given degree is always present.
std::vector<Permutation> enumerate_closure(std::size_t degree, std::span<const Permutation> generators,
                                           std::size_t cap = default_element_cap());

/// A permutation group whose elements are enumerated once, at construction.
/// Element indices refer to the sorted element list; index 0 is the identity.
class FiniteGroup {
public:
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {},
              std::size_t cap = default_element_cap());

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t index) const { return elements_[index]; }

  std::optional<std::uint32_t> index_of(const Permutation& p) const;
  /// Like index_of but throws DomainError for non-members.
  std::uint32_t require_index(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::size_t degree, std::vector<Permutation> generators, std::string name = {},
                    std::size_t cap = default_element_cap());

/// A subgroup of an enumerated group, stored as sorted element indices.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<std::uint32_t> members, std::vector<Permutation> generators);

  const GroupPtr& parent() const { return parent_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index_in_parent() const { return parent_->order() / members_.size(); }
  std::span<const std::uint32_t> members() const { return members_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<Permutation> elements() const;

  bool contains(std::uint32_t parent_index) const;
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const Subgroup& other) const;

  /// Re-enumerates the subgroup as a group in its own right.
  GroupPtr as_group(std::string name = {}) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  GroupPtr parent_;
  std::vector<std::uint32_t> members_;
  std::vector<Permutation> generators_;
};

/// Smallest subgroup of `parent` containing `generators`.
Subgroup closure(const GroupPtr& parent, std::span<const Permutation> generators);
Subgroup whole_group(const GroupPtr& parent);
Subgroup trivial_subgroup(const GroupPtr& parent);

/// Greedy generating set of a closed element set: scans in order and keeps an
/// element whenever it is not yet generated.
std::vector<Permutation> generating_set(std::span<const Permutation> elements);

struct ConjugacyClass {
  std::vector<std::uint32_t> members;  // sorted element indices
  std::uint64_t element_order = 1;
  std::uint32_t representative() const { return members.front(); }
};

struct ClassPartition {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;  // element index -> class index
};

/// Orbits of conjugation, ordered by (element order, class size, smallest member).
ClassPartition conjugacy_classes(const FiniteGroup& group);

/// Map from element order d to the number of elements of order d.
std::map<std::uint64_t, std::size_t> order_statistics(std::span<const Permutation> elements);
std::map<std::uint64_t, std::size_t> order_statistics(const FiniteGroup& group);
std::map<std::uint64_t, std::size_t> order_statistics(const Subgroup& subgroup);

GroupPtr cyclic_group(std::size_t n);
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap = default_element_cap());

/// Images of the generators of N under one automorphism, in generator order.
using GeneratorImages = std::vector<Permutation>;

/// N x| K where generator j of K acts on N by action[j]. The product set N x K
/// is realized by left translation, so the result has degree |N|*|K|.
GroupPtr semidirect_product(const FiniteGroup& n, const FiniteGroup& k, const std::vector<GeneratorImages>& action,
                            std::size_t cap = default_element_cap());

struct RegularRepresentation {
  GroupPtr image;
  std::vector<Permutation> image_of;  // indexed like the source group's elements
};

/// Left-multiplication action of a group on its own (sorted) elements.
RegularRepresentation regular_representation(const FiniteGroup& group);

bool is_normal(const Subgroup& n);

class QuotientGroup {
public:
  QuotientGroup(GroupPtr parent, Subgroup normal);

  const GroupPtr& parent() const { return parent_; }
  const Subgroup& normal() const { return normal_; }
  std::size_t order() const { return representatives_.size(); }
  /// Smallest parent index in each coset, in increasing order.
  std::span<const std::uint32_t> representatives() const { return representatives_; }
  std::uint32_t coset_of(std::uint32_t parent_index) const { return coset_of_[parent_index]; }
  std::uint32_t project(const Permutation& g) const;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;

  /// The regular action of the quotient on its cosets.
  Permutation coset_permutation(std::uint32_t coset) const;
  /// The quotient as a permutation group of degree |G/N|.
  GroupPtr realize(std::string name = {}) const;
  /// Image of a subgroup of the parent inside a group returned by realize().
  Subgroup image(const Subgroup& subgroup, const GroupPtr& realized) const;

private:
  GroupPtr parent_;
  Subgroup normal_;
  std::vector<std::uint32_t> representatives_;
  std::vector<std::uint32_t> coset_of_;
};

/// Throws ValidationError if `normal` is not normal in its parent.
QuotientGroup quotient(const GroupPtr& parent, const Subgroup& normal);

}  // namespace covspec
