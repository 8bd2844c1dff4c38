#include "covspec/class_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "covspec/errors.hpp"

namespace covspec {

ClassSystem ClassSystem::enumerated(GroupPtr group) {
  ClassSystem cs;
  cs.kind_ = Kind::enumerated;
  cs.degree_ = group->degree();
  cs.partition_ = std::make_shared<const ClassPartition>(conjugacy_classes(*group));
  cs.group_ = std::move(group);
  return cs;
}

ClassSystem ClassSystem::cycle_type(std::size_t degree) {
  ClassSystem cs;
  cs.kind_ = Kind::cycle_type;
  cs.degree_ = degree;
  return cs;
}

ClassSystem ClassSystem::custom(std::size_t degree, LabelFunction function, std::string stability_tag) {
  if (stability_tag.empty()) throw DomainError("custom class systems need a conjugation-stability tag");
  ClassSystem cs;
  cs.kind_ = Kind::custom;
  cs.degree_ = degree;
  cs.tag_ = std::move(stability_tag);
  cs.function_ = std::move(function);
  return cs;
}

ClassSystem ClassSystem::custom_from_classes(std::size_t degree, const std::vector<std::vector<Permutation>>& classes,
                                             std::string stability_tag) {
  auto table = std::make_shared<std::unordered_map<Permutation, ClassLabel, PermutationHash>>();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto& g : classes[i]) {
      if (g.degree() != degree) throw ValidationError("custom class element has the wrong degree");
      if (g.is_identity()) continue;
      ClassLabel label{element_order(g), {i}};
      auto [it, inserted] = table->emplace(g, label);
      if (!inserted && it->second != label) throw ValidationError("element listed in two custom classes");
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::uint64_t order = 0;
    for (const auto& g : classes[i]) {
      if (g.is_identity()) continue;
      if (order != 0 && element_order(g) != order) {
        throw ValidationError("custom class " + std::to_string(i) + " mixes element orders");
      }
      order = element_order(g);
    }
  }
  return custom(
      degree,
      [table](const Permutation& g) -> std::optional<ClassLabel> {
        auto it = table->find(g);
        if (it == table->end()) return std::nullopt;
        return it->second;
      },
      std::move(stability_tag));
}

ClassLabel ClassSystem::label(const Permutation& g) const {
  if (g.degree() != degree_) throw DomainError("element degree does not match the class system");
  if (g.is_identity()) return ClassLabel::identity();
  switch (kind_) {
    case Kind::enumerated: {
      const auto idx = group_->require_index(g);
      const auto cls = partition_->class_of[idx];
      return {partition_->classes[cls].element_order, {cls}};
    }
    case Kind::cycle_type: {
      const auto type = g.cycle_type();
      return {element_order(g), std::vector<std::uint64_t>(type.begin(), type.end())};
    }
    case Kind::custom: {
      auto label = function_(g);
      if (!label) throw DomainError("element " + g.to_cycle_string() + " has no custom class label");
      if (label->is_identity()) throw DomainError("custom label function returned the reserved identity label");
      return *label;
    }
  }
  throw DomainError("unknown class system kind");
}

std::string ClassSystem::describe(const ClassLabel& label) const {
  if (label.is_identity()) return "1";
  std::ostringstream out;
  if (kind_ == Kind::cycle_type) {
    std::map<std::uint64_t, std::size_t, std::greater<>> counts;
    for (auto part : label.key) ++counts[part];
    bool first = true;
    for (auto [part, count] : counts) {
      if (!first) out << ' ';
      out << part << '^' << count;
      first = false;
    }
    return out.str();
  }
  out << (kind_ == Kind::enumerated ? "class " : "custom ") << (label.key.empty() ? 0 : label.key.front())
      << " (order " << label.order << ")";
  return out.str();
}

std::string_view to_string(ClassSystem::Kind kind) {
  switch (kind) {
    case ClassSystem::Kind::enumerated:
      return "enumerated";
    case ClassSystem::Kind::cycle_type:
      return "cycle-type";
    case ClassSystem::Kind::custom:
      return "custom";
  }
  return "unknown";
}

ElementSet ElementSet::generated_by(std::size_t degree, std::vector<Permutation> generators, std::size_t cap) {
  ElementSet set;
  set.elements = enumerate_closure(degree, generators, cap);
  set.generators = std::move(generators);
  return set;
}

ElementSet ElementSet::from_subgroup(const Subgroup& subgroup) {
  return ElementSet{subgroup.generators(), subgroup.elements()};
}

bool ElementSet::contains(const Permutation& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Triple::Triple(std::string name, ClassSystem classes, ElementSet h, ElementSet hprime)
    : name_(std::move(name)), classes_(std::move(classes)), h_(std::move(h)), hprime_(std::move(hprime)) {
  for (const ElementSet* side : {&h_, &hprime_}) {
    if (side->elements.empty()) throw ValidationError("triple subgroup has no elements");
    bool closed = true;
    try {
      closed = enumerate_closure(classes_.degree(), side->generators, side->elements.size()) == side->elements;
    } catch (const CapacityError&) {
      closed = false;  // the closure outgrew the listed elements
    }
    if (!closed) throw ValidationError("triple subgroup elements are not the closure of its generators");
    for (const auto& g : side->elements) {
      if (g.degree() != classes_.degree()) throw ValidationError("triple subgroup degree differs from the ambient");
      classes_.label(g);  // throws if unlabelable or outside an enumerated ambient
    }
  }
}

}  // namespace covspec
