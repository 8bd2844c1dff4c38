#include "covspec/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

std::atomic<std::size_t> g_element_cap{100000};

}  // namespace

std::size_t default_element_cap() { return g_element_cap.load(); }

void set_default_element_cap(std::size_t cap) { g_element_cap.store(cap); }

std::vector<Permutation> enumerate_closure(std::size_t degree, std::span<const Permutation> generators,
                                           std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree does not match group degree");
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  // Right multiplication by generators reaches every word; inverses come for free in a finite group.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = elements[i] * g;
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw CapacityError("group enumeration exceeds the element cap of " + std::to_string(cap));
        }
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators, std::string name, std::size_t cap)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
  elements_ = enumerate_closure(degree_, generators_, cap);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::uint32_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FiniteGroup::require_index(const Permutation& p) const {
  auto idx = index_of(p);
  if (!idx) throw DomainError("permutation " + p.to_cycle_string() + " is not an element of the group");
  return *idx;
}

std::uint32_t FiniteGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  return index_.at(elements_[a] * elements_[b]);
}

std::uint32_t FiniteGroup::inverse(std::uint32_t a) const { return index_.at(elements_[a].inverse()); }

GroupPtr make_group(std::size_t degree, std::vector<Permutation> generators, std::string name, std::size_t cap) {
  return std::make_shared<const FiniteGroup>(degree, std::move(generators), std::move(name), cap);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<std::uint32_t> members, std::vector<Permutation> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
}

std::vector<Permutation> Subgroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(members_.size());
  for (auto idx : members_) out.push_back(parent_->element(idx));
  return out;
}

bool Subgroup::contains(std::uint32_t parent_index) const {
  return std::binary_search(members_.begin(), members_.end(), parent_index);
}

bool Subgroup::contains(const Permutation& p) const {
  auto idx = parent_->index_of(p);
  return idx && contains(*idx);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return parent_ == other.parent_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

GroupPtr Subgroup::as_group(std::string name) const {
  return make_group(parent_->degree(), generators_, std::move(name), std::max(members_.size(), std::size_t{1}));
}

Subgroup closure(const GroupPtr& parent, std::span<const Permutation> generators) {
  std::vector<std::uint32_t> gens;
  for (const auto& g : generators) gens.push_back(parent->require_index(g));
  std::vector<std::uint32_t> kept;
  std::vector<std::uint32_t> members{0};
  std::vector<bool> seen(parent->order(), false);
  seen[0] = true;
  // Generators already inside the running subgroup are dropped, keeping the stored set small.
  for (auto g : gens) {
    if (seen[g]) continue;
    kept.push_back(g);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto h : kept) {
        const auto next = parent->multiply(members[i], h);
        if (!seen[next]) {
          seen[next] = true;
          members.push_back(next);
        }
      }
    }
  }
  std::vector<Permutation> stored;
  for (auto g : kept) stored.push_back(parent->element(g));
  return Subgroup(parent, std::move(members), std::move(stored));
}

Subgroup whole_group(const GroupPtr& parent) {
  std::vector<std::uint32_t> members(parent->order());
  std::iota(members.begin(), members.end(), std::uint32_t{0});
  return Subgroup(parent, std::move(members), parent->generators());
}

Subgroup trivial_subgroup(const GroupPtr& parent) { return Subgroup(parent, {0}, {}); }

std::vector<Permutation> generating_set(std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  if (elements.empty()) return gens;
  const std::size_t degree = elements.front().degree();
  std::unordered_set<Permutation, PermutationHash> generated{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (generated.count(e)) continue;
    gens.push_back(e);
    auto current = enumerate_closure(degree, gens, elements.size());
    generated = std::unordered_set<Permutation, PermutationHash>(current.begin(), current.end());
    if (generated.size() == elements.size()) break;
  }
  return gens;
}

ClassPartition conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  constexpr auto unassigned = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> orbit_of(n, unassigned);
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<Permutation> inverses;
  for (const auto& g : group.generators()) inverses.push_back(g.inverse());

  for (std::uint32_t start = 0; start < n; ++start) {
    if (orbit_of[start] != unassigned) continue;
    const auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<std::uint32_t> orbit{start};
    orbit_of[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const Permutation& x = group.element(orbit[i]);
      for (std::size_t j = 0; j < inverses.size(); ++j) {
        const auto y = group.require_index(group.generators()[j] * x * inverses[j]);
        if (orbit_of[y] == unassigned) {
          orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  ClassPartition out;
  for (auto& orbit : orbits) {
    ConjugacyClass c;
    c.element_order = element_order(group.element(orbit.front()));
    c.members = std::move(orbit);
    out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.representative() < b.representative();
  });
  out.class_of.assign(n, 0);
  for (std::uint32_t c = 0; c < out.classes.size(); ++c) {
    for (auto idx : out.classes[c].members) out.class_of[idx] = c;
  }
  return out;
}

std::map<std::uint64_t, std::size_t> order_statistics(std::span<const Permutation> elements) {
  std::map<std::uint64_t, std::size_t> stats;
  for (const auto& e : elements) ++stats[element_order(e)];
  return stats;
}

std::map<std::uint64_t, std::size_t> order_statistics(const FiniteGroup& group) {
  return order_statistics(std::span<const Permutation>(group.elements()));
}

std::map<std::uint64_t, std::size_t> order_statistics(const Subgroup& subgroup) {
  const auto elements = subgroup.elements();
  return order_statistics(std::span<const Permutation>(elements));
}

GroupPtr cyclic_group(std::size_t n) {
  if (n <= 1) return make_group(n, {}, "C" + std::to_string(n));
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return make_group(n, {Permutation(std::move(images))}, "C" + std::to_string(n));
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const auto id_a = Permutation::identity(a.degree());
  const auto id_b = Permutation::identity(b.degree());
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(juxtapose(g, id_b));
  for (const auto& g : b.generators()) gens.push_back(juxtapose(id_a, g));
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return make_group(a.degree() + b.degree(), std::move(gens), std::move(name), cap);
}

namespace {

// An automorphism of an enumerated group as a map on element indices.
using IndexMap = std::vector<std::uint32_t>;

IndexMap extend_to_automorphism(const FiniteGroup& n, const GeneratorImages& images) {
  if (images.size() != n.generators().size()) {
    throw ValidationError("automorphism must give one image per generator of N");
  }
  std::vector<std::uint32_t> gen_idx, img_idx;
  for (std::size_t i = 0; i < images.size(); ++i) {
    gen_idx.push_back(n.require_index(n.generators()[i]));
    auto img = n.index_of(images[i]);
    if (!img) throw ValidationError("automorphism maps a generator outside N");
    img_idx.push_back(*img);
  }
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  IndexMap phi(n.order(), unset);
  phi[0] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto x = queue[q];
    for (std::size_t i = 0; i < gen_idx.size(); ++i) {
      const auto y = n.multiply(x, gen_idx[i]);
      const auto fy = n.multiply(phi[x], img_idx[i]);
      if (phi[y] == unset) {
        phi[y] = fy;
        queue.push_back(y);
      } else if (phi[y] != fy) {
        throw ValidationError("generator images do not define a homomorphism of N");
      }
    }
  }
  std::vector<bool> hit(n.order(), false);
  for (auto v : phi) {
    if (hit[v]) throw ValidationError("generator images do not define a bijection of N");
    hit[v] = true;
  }
  return phi;
}

}  // namespace

GroupPtr semidirect_product(const FiniteGroup& n, const FiniteGroup& k, const std::vector<GeneratorImages>& action,
                            std::size_t cap) {
  if (action.size() != k.generators().size()) {
    throw ValidationError("action must give one automorphism per generator of K");
  }
  std::vector<IndexMap> gen_auts;
  for (const auto& images : action) gen_auts.push_back(extend_to_automorphism(n, images));

  // Extend generator automorphisms to a homomorphism K -> Aut(N), checking consistency along every edge.
  IndexMap identity_map(n.order());
  std::iota(identity_map.begin(), identity_map.end(), std::uint32_t{0});
  std::vector<std::optional<IndexMap>> psi(k.order());
  psi[0] = identity_map;
  std::vector<std::uint32_t> k_gens;
  for (const auto& g : k.generators()) k_gens.push_back(k.require_index(g));
  std::vector<std::uint32_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto x = queue[q];
    for (std::size_t j = 0; j < k_gens.size(); ++j) {
      const auto y = k.multiply(x, k_gens[j]);
      IndexMap composed(n.order());
      for (std::size_t i = 0; i < composed.size(); ++i) composed[i] = (*psi[x])[gen_auts[j][i]];
      if (!psi[y]) {
        psi[y] = std::move(composed);
        queue.push_back(y);
      } else if (*psi[y] != composed) {
        throw ValidationError("action does not respect the relations of K");
      }
    }
  }

  const std::size_t nk = k.order();
  const std::size_t degree = n.order() * nk;
  auto point = [nk](std::uint32_t a, std::uint32_t b) { return static_cast<Point>(a * nk + b); };
  // Left translation by (a, b): (x, y) -> (a * psi(b)(x), b * y).
  auto translation = [&](std::uint32_t a, std::uint32_t b) {
    std::vector<Point> images(degree);
    for (std::uint32_t x = 0; x < n.order(); ++x) {
      for (std::uint32_t y = 0; y < nk; ++y) {
        images[point(x, y)] = point(n.multiply(a, (*psi[b])[x]), k.multiply(b, y));
      }
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (const auto& g : n.generators()) gens.push_back(translation(n.require_index(g), 0));
  for (auto b : k_gens) gens.push_back(translation(0, b));
  std::string name;
  if (!n.name().empty() && !k.name().empty()) name = n.name() + ":" + k.name();
  return make_group(degree, std::move(gens), std::move(name), cap);
}

RegularRepresentation regular_representation(const FiniteGroup& group) {
  const std::size_t n = group.order();
  RegularRepresentation rep;
  rep.image_of.reserve(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    std::vector<Point> images(n);
    for (std::uint32_t x = 0; x < n; ++x) images[x] = group.multiply(g, x);
    rep.image_of.emplace_back(std::move(images));
  }
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(rep.image_of[group.require_index(g)]);
  rep.image = make_group(n, std::move(gens), group.name(), std::max(n, std::size_t{1}));
  return rep;
}

bool is_normal(const Subgroup& n) {
  const auto& g = *n.parent();
  for (const auto& x : g.generators()) {
    const auto xinv = x.inverse();
    for (auto m : n.members()) {
      if (!n.contains(x * g.element(m) * xinv)) return false;
    }
  }
  return true;
}

QuotientGroup::QuotientGroup(GroupPtr parent, Subgroup normal) : parent_(std::move(parent)), normal_(std::move(normal)) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  coset_of_.assign(parent_->order(), unset);
  for (std::uint32_t g = 0; g < parent_->order(); ++g) {
    if (coset_of_[g] != unset) continue;
    const auto id = static_cast<std::uint32_t>(representatives_.size());
    representatives_.push_back(g);  // g is the smallest unassigned index, hence the smallest in its coset
    for (auto m : normal_.members()) coset_of_[parent_->multiply(g, m)] = id;
  }
}

std::uint32_t QuotientGroup::project(const Permutation& g) const { return coset_of_[parent_->require_index(g)]; }

std::uint32_t QuotientGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  return coset_of_[parent_->multiply(representatives_[a], representatives_[b])];
}

Permutation QuotientGroup::coset_permutation(std::uint32_t coset) const {
  std::vector<Point> images(order());
  for (std::uint32_t j = 0; j < order(); ++j) images[j] = multiply(coset, j);
  return Permutation(std::move(images));
}

GroupPtr QuotientGroup::realize(std::string name) const {
  std::vector<Permutation> gens;
  for (const auto& g : parent_->generators()) gens.push_back(coset_permutation(project(g)));
  return make_group(order(), std::move(gens), std::move(name), std::max(order(), std::size_t{1}));
}

Subgroup QuotientGroup::image(const Subgroup& subgroup, const GroupPtr& realized) const {
  std::vector<Permutation> gens;
  for (const auto& g : subgroup.generators()) gens.push_back(coset_permutation(project(g)));
  return closure(realized, gens);
}

QuotientGroup quotient(const GroupPtr& parent, const Subgroup& normal) {
  if (normal.parent() != parent) throw DomainError("normal subgroup belongs to a different group");
  if (!is_normal(normal)) throw ValidationError("subgroup is not normal in the parent group");
  return QuotientGroup(parent, normal);
}

}  // namespace covspec
