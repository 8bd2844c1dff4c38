#include "covspec/equivalence.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "covspec/errors.hpp"

namespace covspec {

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::gassmann:
      return "gassmann";
    case Relation::kronecker:
      return "kronecker";
    case Relation::order:
      return "order";
    case Relation::jump:
      return "jump";
  }
  return "unknown";
}

std::optional<Relation> parse_relation(std::string_view text) {
  for (auto r : {Relation::gassmann, Relation::kronecker, Relation::order, Relation::jump}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct BitSubgroup {
  Bits bits;
  std::vector<std::uint32_t> gens;
  std::size_t order() const { return bits.count(); }
};

// A subgroup H of the ambient, re-indexed as a group of its own so that
// subgroups of H become bitsets.
class IndexedGroup {
public:
  explicit IndexedGroup(const ElementSet& set) : elements_(set.elements) {
    index_.reserve(elements_.size());
    for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    if (elements_.size() <= kTableLimit) {
      const auto n = elements_.size();
      table_.resize(n * n);
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
      }
    }
  }

  std::size_t size() const { return elements_.size(); }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[a * elements_.size() + b];
    return index_.at(elements_[a] * elements_[b]);
  }

  BitSubgroup trivial() const {
    BitSubgroup t{Bits(size()), {}};
    t.bits.set(0);
    return t;
  }

  // <base, extra>: extra generators already inside base are skipped.
  BitSubgroup extend(const BitSubgroup& base, std::span<const std::uint32_t> extra) const {
    BitSubgroup out = base;
    std::vector<std::uint32_t> members;
    bool changed = false;
    for (auto g : extra) {
      if (out.bits.test(g)) continue;
      if (!changed) {
        for (auto i = out.bits.find_first(); i != Bits::npos; i = out.bits.find_next(i)) {
          members.push_back(static_cast<std::uint32_t>(i));
        }
        changed = true;
      }
      out.gens.push_back(g);
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto h : out.gens) {
          const auto next = multiply(members[i], h);
          if (!out.bits.test(next)) {
            out.bits.set(next);
            members.push_back(next);
          }
        }
      }
    }
    return out;
  }

  BitSubgroup join(const BitSubgroup& a, const BitSubgroup& b) const {
    if (b.bits.is_subset_of(a.bits)) return a;
    if (a.bits.is_subset_of(b.bits)) return b;
    return extend(a, b.gens);
  }

private:
  static constexpr std::size_t kTableLimit = 2048;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_;
};

struct LabelGroup {
  std::vector<std::size_t> labels;  // indices into Analysis::labels, ascending
  BitSubgroup h;
  BitSubgroup hp;
};

struct Analysis {
  IndexedGroup h;
  IndexedGroup hp;
  std::vector<ClassLabel> labels;
  std::vector<LabelGroup> groups;
};

std::vector<ClassLabel> labels_of(const ElementSet& x, const ClassSystem& classes) {
  std::vector<ClassLabel> out;
  out.reserve(x.elements.size());
  for (const auto& g : x.elements) out.push_back(classes.label(g));
  return out;
}

Analysis analyse(const Triple& t, const EquivalenceOptions& options) {
  Analysis a{IndexedGroup(t.h()), IndexedGroup(t.hprime()), classes_meeting(t), {}};
  const auto h_labels = labels_of(t.h(), t.classes());
  const auto hp_labels = labels_of(t.hprime(), t.classes());
  std::map<ClassLabel, std::size_t> position;
  for (std::size_t i = 0; i < a.labels.size(); ++i) position.emplace(a.labels[i], i);

  std::vector<std::vector<std::uint32_t>> h_members(a.labels.size()), hp_members(a.labels.size());
  for (std::uint32_t i = 0; i < h_labels.size(); ++i) {
    if (!h_labels[i].is_identity()) h_members[position.at(h_labels[i])].push_back(i);
  }
  for (std::uint32_t i = 0; i < hp_labels.size(); ++i) {
    if (!hp_labels[i].is_identity()) hp_members[position.at(hp_labels[i])].push_back(i);
  }

  std::map<std::pair<Bits, Bits>, std::size_t> seen;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    BitSubgroup hs = a.h.extend(a.h.trivial(), h_members[i]);
    BitSubgroup hps = a.hp.extend(a.hp.trivial(), hp_members[i]);
    if (options.deduplicate) {
      auto key = std::make_pair(hs.bits, hps.bits);
      auto it = seen.find(key);
      if (it != seen.end()) {
        a.groups[it->second].labels.push_back(i);
        continue;
      }
      seen.emplace(std::move(key), a.groups.size());
    }
    a.groups.push_back({{i}, std::move(hs), std::move(hps)});
  }
  return a;
}

void check_cap(const Analysis& a, const EquivalenceOptions& options) {
  if (a.groups.size() > options.class_cap) {
    throw CapacityError("class-subset quantification over k' = " + std::to_string(a.groups.size()) +
                        " labels exceeds the cap of " + std::to_string(options.class_cap));
  }
}

// Every value of S -> (<H n S>, <H' n S>) as S ranges over subsets of the label
// groups, each with its least-cardinality, then lexicographically least S.
struct PairState {
  BitSubgroup h;
  BitSubgroup hp;
  std::vector<std::size_t> s;
};

// Visits reachable pairs layer by layer in (|S|, lex S) order; stops as soon
// as the visitor returns true.
template <class Visitor>
void visit_pairs(const Analysis& a, Visitor&& visit) {
  using Key = std::pair<Bits, Bits>;
  std::map<Key, std::size_t> index;
  std::vector<PairState> states;
  states.push_back({a.h.trivial(), a.hp.trivial(), {}});
  index.emplace(Key{states[0].h.bits, states[0].hp.bits}, 0);
  if (visit(states[0])) return;

  std::size_t layer_begin = 0;
  while (layer_begin < states.size()) {
    const std::size_t layer_end = states.size();
    for (std::size_t p = layer_begin; p < layer_end; ++p) {
      for (std::size_t c = 0; c < a.groups.size(); ++c) {
        if (std::binary_search(states[p].s.begin(), states[p].s.end(), c)) continue;
        if (a.groups[c].h.bits.is_subset_of(states[p].h.bits) && a.groups[c].hp.bits.is_subset_of(states[p].hp.bits)) {
          continue;
        }
        BitSubgroup h = a.h.join(states[p].h, a.groups[c].h);
        BitSubgroup hp = a.hp.join(states[p].hp, a.groups[c].hp);
        std::vector<std::size_t> s = states[p].s;
        s.insert(std::upper_bound(s.begin(), s.end(), c), c);
        Key key{h.bits, hp.bits};
        auto it = index.find(key);
        if (it == index.end()) {
          index.emplace(std::move(key), states.size());
          states.push_back({std::move(h), std::move(hp), std::move(s)});
        } else if (it->second >= layer_end && s < states[it->second].s) {
          states[it->second].s = std::move(s);
        }
      }
    }
    std::sort(states.begin() + static_cast<std::ptrdiff_t>(layer_end), states.end(),
              [](const PairState& x, const PairState& y) { return x.s < y.s; });
    for (std::size_t i = layer_end; i < states.size(); ++i) {
      index[Key{states[i].h.bits, states[i].hp.bits}] = i;
      if (visit(states[i])) return;
    }
    layer_begin = layer_end;
  }
}

std::vector<ClassLabel> representatives(const Analysis& a, const std::vector<std::size_t>& s) {
  std::vector<ClassLabel> out;
  for (auto g : s) out.push_back(a.labels[a.groups[g].labels.front()]);
  return out;
}

std::map<ClassLabel, std::pair<std::size_t, std::size_t>> label_counts(const Triple& t) {
  std::map<ClassLabel, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& g : t.h().elements) ++counts[t.classes().label(g)].first;
  for (const auto& g : t.hprime().elements) ++counts[t.classes().label(g)].second;
  return counts;
}

}  // namespace

std::vector<ClassLabel> classes_meeting(const Triple& t) {
  std::set<ClassLabel> labels;
  for (const ElementSet* side : {&t.h(), &t.hprime()}) {
    for (const auto& g : side->elements) {
      auto label = t.classes().label(g);
      if (!label.is_identity()) labels.insert(std::move(label));
    }
  }
  return {labels.begin(), labels.end()};
}

std::size_t deduplicated_class_count(const Triple& t) { return analyse(t, {}).groups.size(); }

EquivalenceVerdict gassmann_equivalent(const Triple& t) {
  EquivalenceVerdict v{Relation::gassmann, true, std::nullopt};
  for (const auto& [label, counts] : label_counts(t)) {
    if (counts.first != counts.second) {
      v.holds = false;
      v.witness = Witness{{}, label, counts.first, counts.second};
      break;
    }
  }
  return v;
}

EquivalenceVerdict kronecker_equivalent(const Triple& t) {
  EquivalenceVerdict v{Relation::kronecker, true, std::nullopt};
  for (const auto& [label, counts] : label_counts(t)) {
    if ((counts.first == 0) != (counts.second == 0)) {
      v.holds = false;
      v.witness = Witness{{}, label, counts.first, counts.second};
      break;
    }
  }
  return v;
}

EquivalenceVerdict order_equivalent(const Triple& t, const EquivalenceOptions& options) {
  const Analysis a = analyse(t, options);
  check_cap(a, options);
  EquivalenceVerdict v{Relation::order, true, std::nullopt};
  visit_pairs(a, [&](const PairState& state) {
    if (state.h.order() == state.hp.order()) return false;
    v.holds = false;
    v.witness = Witness{representatives(a, state.s), std::nullopt, state.h.order(), state.hp.order()};
    return true;
  });
  return v;
}

EquivalenceVerdict jump_equivalent(const Triple& t, const EquivalenceOptions& options) {
  const Analysis a = analyse(t, options);
  check_cap(a, options);
  EquivalenceVerdict v{Relation::jump, true, std::nullopt};
  // Join reduction: <H n S> = <H n T> iff <H n C> <= <H n S> for every C in T - S.
  visit_pairs(a, [&](const PairState& state) {
    for (std::size_t c = 0; c < a.groups.size(); ++c) {
      const bool in_h = a.groups[c].h.bits.is_subset_of(state.h.bits);
      const bool in_hp = a.groups[c].hp.bits.is_subset_of(state.hp.bits);
      if (in_h == in_hp) continue;
      v.holds = false;
      Witness w{representatives(a, state.s), a.labels[a.groups[c].labels.front()], state.h.order(),
                state.hp.order()};
      w.h_contains = in_h;
      w.hp_contains = in_hp;
      v.witness = std::move(w);
      return true;
    }
    return false;
  });
  return v;
}

EquivalenceVerdict decide(Relation relation, const Triple& t, const EquivalenceOptions& options) {
  switch (relation) {
    case Relation::gassmann:
      return gassmann_equivalent(t);
    case Relation::kronecker:
      return kronecker_equivalent(t);
    case Relation::order:
      return order_equivalent(t, options);
    case Relation::jump:
      return jump_equivalent(t, options);
  }
  throw DomainError("unknown relation");
}

AuditReport implication_audit(const Triple& t, const EquivalenceOptions& options) {
  AuditReport report;
  for (auto r : {Relation::gassmann, Relation::kronecker, Relation::order, Relation::jump}) {
    report.verdicts.push_back(decide(r, t, options));
  }
  const bool gassmann = report.verdicts[0].holds;
  const bool kronecker = report.verdicts[1].holds;
  const bool order = report.verdicts[2].holds;
  const bool jump = report.verdicts[3].holds;
  if (order && !jump) report.violations.push_back("order equivalence holds but jump equivalence fails");
  if (jump && !kronecker) report.violations.push_back("jump equivalence holds but Kronecker equivalence fails");
  if (gassmann && !kronecker) report.violations.push_back("Gassmann equivalence holds but Kronecker equivalence fails");
  return report;
}

std::vector<Permutation> generated_by_labels(const ElementSet& x, const ClassSystem& classes,
                                             const std::set<ClassLabel>& s) {
  std::vector<Permutation> gens;
  for (const auto& g : x.elements) {
    if (s.count(classes.label(g))) gens.push_back(g);
  }
  return enumerate_closure(classes.degree(), gens, x.elements.size());
}

bool witness_reproduces(const Triple& t, const EquivalenceVerdict& verdict) {
  if (verdict.holds || !verdict.witness) return false;
  const Witness& w = *verdict.witness;
  const auto& cls = t.classes();
  auto count = [&](const ElementSet& x, const ClassLabel& label) {
    return static_cast<std::size_t>(std::count_if(x.elements.begin(), x.elements.end(),
                                                  [&](const Permutation& g) { return cls.label(g) == label; }));
  };
  switch (verdict.relation) {
    case Relation::gassmann:
      return w.c && count(t.h(), *w.c) == w.h_value && count(t.hprime(), *w.c) == w.hp_value &&
             w.h_value != w.hp_value;
    case Relation::kronecker:
      return w.c && count(t.h(), *w.c) == w.h_value && count(t.hprime(), *w.c) == w.hp_value &&
             (w.h_value == 0) != (w.hp_value == 0);
    case Relation::order: {
      const std::set<ClassLabel> s(w.s.begin(), w.s.end());
      const auto h = generated_by_labels(t.h(), cls, s).size();
      const auto hp = generated_by_labels(t.hprime(), cls, s).size();
      return h == w.h_value && hp == w.hp_value && h != hp;
    }
    case Relation::jump: {
      if (!w.c) return false;
      const std::set<ClassLabel> s(w.s.begin(), w.s.end());
      const std::set<ClassLabel> c{*w.c};
      auto contained = [&](const ElementSet& x) {
        const auto gs = generated_by_labels(x, cls, s);
        const auto gc = generated_by_labels(x, cls, c);
        return std::includes(gs.begin(), gs.end(), gc.begin(), gc.end());
      };
      const bool in_h = contained(t.h());
      const bool in_hp = contained(t.hprime());
      return in_h == w.h_contains && in_hp == w.hp_contains && in_h != in_hp;
    }
  }
  return false;
}

WitnessLengthMap::WitnessLengthMap(const Triple& t, std::set<ClassLabel> s, std::set<ClassLabel> t_set)
    : classes_(t.classes()), s_(std::move(s)), t_(std::move(t_set)) {
  std::map<ClassLabel, ClassLabel> inverse_label;
  for (const ElementSet* side : {&t.h(), &t.hprime()}) {
    for (const auto& g : side->elements) inverse_label.emplace(classes_.label(g), classes_.label(g.inverse()));
  }
  for (auto* set : {&s_, &t_}) {
    std::set<ClassLabel> closed = *set;
    for (const auto& label : *set) {
      auto it = inverse_label.find(label);
      if (it != inverse_label.end()) closed.insert(it->second);
    }
    closed.erase(ClassLabel::identity());
    *set = std::move(closed);
  }
}

Rational WitnessLengthMap::operator()(const Permutation& g) const {
  const auto label = classes_.label(g);
  if (label.is_identity()) return 0;
  if (s_.count(label)) return 2;
  if (t_.count(label)) return 3;
  return 4;
}

LengthMap WitnessLengthMap::restrict_to(const ElementSet& subgroup) const {
  auto group = make_group(classes_.degree(), subgroup.generators, {}, std::max<std::size_t>(subgroup.size(), 1));
  std::vector<Rational> values;
  values.reserve(group->order());
  for (const auto& g : group->elements()) values.push_back((*this)(g));
  return LengthMap(std::move(group), std::move(values));
}

WitnessLengthMap witness_length_map(const Triple& t, const std::set<ClassLabel>& s, const std::set<ClassLabel>& t_set) {
  if (!std::includes(t_set.begin(), t_set.end(), s.begin(), s.end())) {
    throw DomainError("witness length map needs S contained in T");
  }
  return WitnessLengthMap(t, s, t_set);
}

}  // namespace covspec
