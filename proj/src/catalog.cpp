#include "covspec/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "covspec/errors.hpp"
#include "covspec/io.hpp"

namespace covspec {

using nlohmann::json;

namespace {

const std::array<std::array<Rational, 4>, 3> kWeightRows{{{1, 4, 10, 13}, {2, 8, 14, 20}, {1, 7, 13, 19}}};

const std::vector<Rational>& example_lengths() {
  static const std::vector<Rational> lengths{1, Rational(51, 50), Rational(26, 25), Rational(53, 50), Rational(27, 25)};
  return lengths;
}

json strings(const std::vector<Rational>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

HeisenbergDatum conway_sloane_heisenberg(int row, bool prime) {
  const auto pair = conway_sloane_pair(kWeightRows[row]);
  const auto& basis = prime ? pair.hprime_basis : pair.h_basis;
  return HeisenbergDatum{prime ? pair.hprime : pair.h, transport_form(standard_symplectic(2), basis), 1,
                         SymbolicDelta{"central-cs"},
                         "heisenberg-cs-row" + std::to_string(row + 1) + (prime ? "-Hprime" : "-H")};
}

struct Builder {
  CatalogListing listing;
  std::function<CatalogEntry()> build;
};

CatalogEntry make(const std::string& id, const std::string& description, CatalogObject object, json expected,
                  EquivalenceOptions options = {}) {
  return CatalogEntry{id, description, std::move(object), std::move(expected), options};
}

const std::vector<Builder>& builders() {
  static const std::vector<Builder> list = [] {
    std::vector<Builder> b;
    auto add = [&](std::string id, std::string kind, std::string description, std::function<CatalogEntry()> f) {
      b.push_back({{std::move(id), std::move(kind), std::move(description)}, std::move(f)});
    };

    add("a4", "triple", "(A4, V4, C2): jump equivalent, not Gassmann-Sunada", [] {
      return make("a4", "(A4, V4, C2): jump equivalent, not Gassmann-Sunada", a4_triple(),
                  {{"jump", true}, {"gassmann", false}, {"h_index", 3}, {"hprime_index", 6}, {"audit_violations", 0}});
    });
    add("c2a4", "triple", "(C2 x A4, C2 x V4, C2 x C2): not a jump triple", [] {
      return make("c2a4", "(C2 x A4, C2 x V4, C2 x C2): not a jump triple", c2a4_triple_and_quotient().first,
                  {{"jump", false}, {"ambient_order", 24}, {"audit_violations", 0}});
    });
    add("c2a4-quotient", "triple", "c2a4 reduced by C2 x 1, realized on its 12 cosets: a jump triple", [] {
      return make("c2a4-quotient", "c2a4 reduced by C2 x 1, realized on its 12 cosets: a jump triple",
                  c2a4_triple_and_quotient().second, {{"jump", true}, {"ambient_order", 12}, {"audit_violations", 0}});
    });
    add("todd-s16", "triple", "C8 x C2 and C8 x| C2 (fifth powers) in S16", [] {
      const json stats = {{"1", 1}, {"2", 3}, {"4", 4}, {"8", 8}};
      return make("todd-s16", "C8 x C2 and C8 x| C2 (fifth powers) in S16", todd_triple(),
                  {{"gassmann", true},
                   {"order", true},
                   {"jump", true},
                   {"h_order_statistics", stats},
                   {"hprime_order_statistics", stats},
                   {"labels_meeting_orders", {2, 4, 8}},
                   {"audit_violations", 0}});
    });
    add("ecs-s16", "triple", "(C4 x C2) x C2 and (C4 x C2) x| C2 in S16: Gassmann-Sunada, not jump", [] {
      const json stats = {{"1", 1}, {"2", 7}, {"4", 8}};
      return make("ecs-s16", "(C4 x C2) x C2 and (C4 x C2) x| C2 in S16: Gassmann-Sunada, not jump",
                  ecs_triples().first,
                  {{"gassmann", true},
                   {"jump", false},
                   {"jump_witness_S_orders", {2}},
                   {"h_order_statistics", stats},
                   {"hprime_order_statistics", stats},
                   {"audit_violations", 0}});
    });
    add("ecs-s64", "triple", "H x C4 and H' x C4 in S64: Gassmann-Sunada and jump, not order", [] {
      return make("ecs-s64", "H x C4 and H' x C4 in S64: Gassmann-Sunada and jump, not order", ecs_triples().second,
                  {{"gassmann", true},
                   {"jump", true},
                   {"order", false},
                   {"order_witness_indices", {4, 2}},
                   {"labels_meeting_orders", {2, 4}},
                   {"audit_violations", 0}});
    });
    add("affine-2-3", "triple", "(V x| GL(V), V x| H, V x| H') for V = F_2^3: Gassmann-Sunada, not jump", [] {
      return make("affine-2-3", "(V x| GL(V), V x| H, V x| H') for V = F_2^3: Gassmann-Sunada, not jump",
                  affine_triple(2, 3),
                  {{"gassmann", true},
                   {"kronecker", true},
                   {"jump", false},
                   {"ambient_order", 1344},
                   {"h_index", 7},
                   {"stabilizer_classes_generate", {true, false}},
                   {"audit_violations", 0}});
    });
    add("gl-2-3", "triple", "GL(3, 2) with vector and functional stabilizers", [] {
      return make("gl-2-3", "GL(3, 2) with vector and functional stabilizers", gl_triple(2, 3).triple,
                  {{"gassmann", true},
                   {"order", true},
                   {"jump", true},
                   {"ambient_order", 168},
                   {"h_order", 24},
                   {"hprime_order", 24},
                   {"conjugate", false},
                   {"audit_violations", 0}});
    });
    add("gl-2-2", "triple", "GL(2, 2): the excluded case, where the two stabilizers are conjugate", [] {
      return make("gl-2-2", "GL(2, 2): the excluded case, where the two stabilizers are conjugate",
                  gl_triple(2, 2).triple, {{"gassmann", true}, {"conjugate", true}, {"audit_violations", 0}});
    });
    add("tetrahedron", "triple", "W x| A4 of order 384, E' = {01, 23, 02}: order equivalent, not Gassmann-Sunada", [] {
      return make("tetrahedron", "W x| A4 of order 384, E' = {01, 23, 02}: order equivalent, not Gassmann-Sunada",
                  tetrahedron_triple(),
                  {{"order", true},
                   {"gassmann", false},
                   {"ambient_order", 384},
                   {"h_order", 16},
                   {"hprime_order", 16},
                   {"audit_violations", 0}});
    });
    add("translation-2-1-2", "triple", "translation subgroups of dimensions 1 and 2 in V x| GL(V), V = F_2^3", [] {
      return make("translation-2-1-2", "translation subgroups of dimensions 1 and 2 in V x| GL(V), V = F_2^3",
                  translation_triple(2, 1, 2, 3),
                  {{"jump", true}, {"gassmann", false}, {"kronecker", true}, {"audit_violations", 0}});
    });
    add("tori-mod3", "triple", "images of the two index-9 lattices in (Z/3)^4 x| V4", [] {
      return make("tori-mod3", "images of the two index-9 lattices in (Z/3)^4 x| V4", tori_quotient_triple(3),
                  {{"gassmann", true}, {"jump", true}, {"order", true}, {"ambient_order", 324}, {"audit_violations", 0}});
    });
    add("tori-mod9", "triple", "images of the two index-9 lattices in (Z/9)^4 x| V4 (123 merged labels)", [] {
      EquivalenceOptions options;
      options.class_cap = 128;
      return make("tori-mod9", "images of the two index-9 lattices in (Z/9)^4 x| V4 (123 merged labels)",
                  tori_quotient_triple(9), {{"jump", false}, {"ambient_order", 26244}, {"audit_violations", 0}}, options);
    });

    const std::array<std::array<std::vector<Rational>, 2>, 3> spectra{{
        {{{12, 20, 24, 28}, {12, 20, 28}}},
        {{{20, 36, 40, 52}, {20, 36, 48, 52}}},
        {{{16, 32, 40}, {16, 32, 40}}},
    }};
    const std::array<std::array<json, 2>, 3> rendered{{
        {{json{"√3", "√5", "√6", "√7"}, json{"√3", "√5", "√7"}}},
        {{json{"√5", "3", "√10", "√13"}, json{"√5", "3", "2√3", "√13"}}},
        {{json{"2", "2√2", "√10"}, json{"2", "2√2", "√10"}}},
    }};
    for (int row = 0; row < 3; ++row) {
      for (int prime = 0; prime < 2; ++prime) {
        const std::string suffix = prime ? "Hprime" : "H";
        const std::string id = "conway-sloane-row" + std::to_string(row + 1) + "-" + suffix;
        const std::string other = "conway-sloane-row" + std::to_string(row + 1) + "-" + (prime ? "H" : "Hprime");
        std::string weights;
        for (const auto& w : kWeightRows[row]) weights += (weights.empty() ? "" : ",") + to_string(w);
        const std::string description = std::string(prime ? "H'" : "H") + " lattice of Z[V4] with 3<e_i,e_i> = " + weights;
        json expected = {{"covspec_q", strings(spectra[row][prime])},
                         {"covspec_values", rendered[row][prime]},
                         {"theta_equal_to", {{"id", other}, {"bound", "100"}, {"equal", true}}},
                         {"findings", 0}};
        if (row == 2) expected["multiplicities"] = prime ? json{1, 1, 2} : json{1, 2, 1};
        add(id, "lattice", description, [id, description, expected, row, prime] {
          const auto pair = conway_sloane_pair(kWeightRows[row]);
          return make(id, description, prime ? pair.hprime : pair.h, expected);
        });
      }
    }
    add("torus-3-2", "lattice", "circles of lengths 2*pi*3 and 2*pi*2: gram diag(9, 4)", [] {
      return make("torus-3-2", "circles of lengths 2*pi*3 and 2*pi*2: gram diag(9, 4)",
                  LatticeForm({{9, 0}, {0, 4}}, "S1(3) x S1(2)"),
                  {{"covspec_q", {"4", "9"}}, {"covspec_values", {"1", "3/2"}}, {"successive_minima", {"4", "9"}}});
    });
    add("half-sum-L", "lattice", "orthogonal lattice with squared lengths 1, 51/50, 26/25, 53/50, 27/25", [] {
      return make("half-sum-L", "orthogonal lattice with squared lengths 1, 51/50, 26/25, 53/50, 27/25",
                  half_sum_extension(example_lengths()).first,
                  {{"covspec_q", strings(example_lengths())},
                   {"successive_minima", strings(example_lengths())},
                   {"rank_increasing", {true, true, true, true, true}}});
    });
    add("half-sum-Lprime", "lattice", "half-sum-L with half the sum of its basis adjoined", [] {
      auto q = example_lengths();
      q.push_back(Rational(13, 10));
      return make("half-sum-Lprime", "half-sum-L with half the sum of its basis adjoined",
                  half_sum_extension(example_lengths()).second,
                  {{"covspec_q", strings(q)},
                   {"successive_minima", strings(example_lengths())},
                   {"rank_increasing", {true, true, true, true, true, false}}});
    });

    for (int row = 0; row < 3; ++row) {
      for (int prime = 0; prime < 2; ++prime) {
        const std::string id = "heisenberg-cs-row" + std::to_string(row + 1) + (prime ? "-Hprime" : "-H");
        const std::string other = "heisenberg-cs-row" + std::to_string(row + 1) + (prime ? "-H" : "-Hprime");
        const std::string description = "Heisenberg manifold over the row " + std::to_string(row + 1) + " " +
                                        (prime ? "H'" : "H") + " lattice, c = 1, symbolic central length";
        const bool equal = row == 2;
        add(id, "heisenberg", description, [=] {
          return make(id, description, conway_sloane_heisenberg(row, prime),
                      {{"valid", true}, {"covspec_equal_to", {{"id", other}, {"equal", equal}}}});
        });
      }
    }
    add("heisenberg-standard", "heisenberg", "Z^4 with the standard symplectic form, c = 1, central length 1/2", [] {
      RationalMatrix g(4, std::vector<Rational>(4, 0));
      for (int i = 0; i < 4; ++i) g[i][i] = 1;
      HeisenbergDatum d{LatticeForm(g, "Z^4"), standard_symplectic(2), 1, KnownDelta{Rational(1, 4)}, "heisenberg-standard"};
      return make("heisenberg-standard", "Z^4 with the standard symplectic form, c = 1, central length 1/2", d,
                  {{"valid", true}, {"covspec_q", {"1/4", "1"}}});
    });
    add("restriction-gap", "lengthmap", "S3 with short transpositions: filtrating in A3 differs from intersecting", [] {
      return make("restriction-gap", "S3 with short transpositions: filtrating in A3 differs from intersecting",
                  restriction_gap_instance(), {{"restriction_orders", {{"restricted", 1}, {"intersected", 3}}}});
    });
    return b;
  }();
  return list;
}

const Triple& as_triple(const CatalogEntry& e, const std::string& check) {
  if (const auto* t = std::get_if<Triple>(&e.object)) return *t;
  throw DomainError("check '" + check + "' needs a triple");
}

const LatticeForm& as_lattice(const CatalogEntry& e, const std::string& check) {
  if (const auto* l = std::get_if<LatticeForm>(&e.object)) return *l;
  throw DomainError("check '" + check + "' needs a lattice");
}

const HeisenbergDatum& as_heisenberg(const CatalogEntry& e, const std::string& check) {
  if (const auto* d = std::get_if<HeisenbergDatum>(&e.object)) return *d;
  throw DomainError("check '" + check + "' needs a Heisenberg datum");
}

const FiniteGroup& ambient_group(const Triple& t, const std::string& check) {
  if (!t.classes().group()) throw DomainError("check '" + check + "' needs an enumerated ambient group");
  return *t.classes().group();
}

json statistics(const ElementSet& x) {
  json out = json::object();
  for (const auto& [d, n] : order_statistics(x.elements)) out[std::to_string(d)] = n;
  return out;
}

bool conjugate_in_ambient(const Triple& t, const std::string& check) {
  const auto& g = ambient_group(t, check);
  if (t.h().size() != t.hprime().size()) return false;
  for (const auto& x : g.elements()) {
    const auto xi = x.inverse();
    std::vector<Permutation> conj;
    conj.reserve(t.h().size());
    for (const auto& h : t.h().elements) conj.push_back(x * h * xi);
    std::sort(conj.begin(), conj.end());
    if (conj == t.hprime().elements) return true;
  }
  return false;
}

}  // namespace

const std::vector<CatalogListing>& catalog_list() {
  static const std::vector<CatalogListing> list = [] {
    std::vector<CatalogListing> out;
    for (const auto& b : builders()) out.push_back(b.listing);
    return out;
  }();
  return list;
}

CatalogEntry catalog_get(const std::string& id) {
  for (const auto& b : builders()) {
    if (b.listing.id == id) return b.build();
  }
  throw DomainError("unknown catalog id '" + id + "'");
}

std::string_view kind_name(const CatalogObject& object) {
  switch (object.index()) {
    case 0:
      return "triple";
    case 1:
      return "lattice";
    case 2:
      return "heisenberg";
    default:
      return "lengthmap";
  }
}

json run_check(const CatalogEntry& entry, const std::string& check) {
  if (auto r = parse_relation(check)) return decide(*r, as_triple(entry, check), entry.options).holds;
  if (check == "audit_violations") return implication_audit(as_triple(entry, check), entry.options).violations.size();
  if (check == "ambient_order") return ambient_group(as_triple(entry, check), check).order();
  if (check == "h_order") return as_triple(entry, check).h().size();
  if (check == "hprime_order") return as_triple(entry, check).hprime().size();
  if (check == "h_index" || check == "hprime_index") {
    const auto& t = as_triple(entry, check);
    const auto n = ambient_group(t, check).order();
    return n / (check == "h_index" ? t.h().size() : t.hprime().size());
  }
  if (check == "h_order_statistics") return statistics(as_triple(entry, check).h());
  if (check == "hprime_order_statistics") return statistics(as_triple(entry, check).hprime());
  if (check == "labels_meeting_orders") {
    std::set<std::uint64_t> orders;
    for (const auto& l : classes_meeting(as_triple(entry, check))) orders.insert(l.order);
    return json(std::vector<std::uint64_t>(orders.begin(), orders.end()));
  }
  if (check == "conjugate") return conjugate_in_ambient(as_triple(entry, check), check);
  if (check == "jump_witness_S_orders" || check == "order_witness_indices") {
    const auto& t = as_triple(entry, check);
    const auto v = decide(check == "jump_witness_S_orders" ? Relation::jump : Relation::order, t, entry.options);
    if (v.holds) return nullptr;
    if (check == "order_witness_indices") {
      return {t.h().size() / v.witness->h_value, t.hprime().size() / v.witness->hp_value};
    }
    json orders = json::array();
    for (const auto& l : v.witness->s) orders.push_back(l.order);
    return orders;
  }
  if (check == "stabilizer_classes_generate") {
    // S = labels of the elements of H fixing point 0 (the linear parts).
    const auto& t = as_triple(entry, check);
    std::set<ClassLabel> s;
    for (const auto& g : t.h().elements) {
      if (g(0) == 0 && !g.is_identity()) s.insert(t.classes().label(g));
    }
    return {generated_by_labels(t.h(), t.classes(), s).size() == t.h().size(),
            generated_by_labels(t.hprime(), t.classes(), s).size() == t.hprime().size()};
  }
  if (check == "covspec_q" || check == "covspec_values" || check == "multiplicities" || check == "rank_increasing" ||
      check == "findings") {
    if (std::holds_alternative<HeisenbergDatum>(entry.object) && check == "covspec_q") {
      return strings(covspec_heisenberg(as_heisenberg(entry, check)).rational_entries);
    }
    const auto report = covering_spectrum_torus(as_lattice(entry, check));
    json out = json::array();
    std::size_t rank = 0, findings = 0;
    for (const auto& j : report.jumps) {
      if (check == "covspec_q") out.push_back(to_string(j.q));
      if (check == "covspec_values") out.push_back(render_half_sqrt(j.q));
      if (check == "multiplicities") out.push_back(j.multiplicity);
      if (check == "rank_increasing") out.push_back(j.new_rank > rank);
      rank = j.new_rank;
      if (j.finding) ++findings;
    }
    if (check == "findings") return findings;
    return out;
  }
  if (check == "successive_minima") return strings(successive_minima(as_lattice(entry, check)));
  if (check == "theta_equal_to") {
    const auto& params = entry.expected.at(check);
    const auto other = catalog_get(params.at("id").get<std::string>());
    const auto bound = parse_rational(params.at("bound").get<std::string>());
    const bool equal = theta_prefix(as_lattice(entry, check), bound) == theta_prefix(as_lattice(other, check), bound);
    return {{"id", params.at("id")}, {"bound", params.at("bound")}, {"equal", equal}};
  }
  if (check == "valid") return validate_heisenberg(as_heisenberg(entry, check)).empty();
  if (check == "covspec_equal_to") {
    const auto& params = entry.expected.at(check);
    const auto other = catalog_get(params.at("id").get<std::string>());
    const auto cmp = covspec_equal_heisenberg(as_heisenberg(entry, check), as_heisenberg(other, check));
    return {{"id", params.at("id")}, {"equal", cmp.equal}};
  }
  if (check == "restriction_orders") {
    const auto* gap = std::get_if<RestrictionGap>(&entry.object);
    if (!gap) throw DomainError("check '" + check + "' needs a length map instance");
    const auto restricted = filtration_at(restrict(gap->map, gap->subgroup), gap->delta);
    const auto full = filtration_at(gap->map, gap->delta);
    std::size_t intersected = 0;
    for (auto idx : gap->subgroup.members()) intersected += full.contains(idx) ? 1 : 0;
    return {{"restricted", restricted.order()}, {"intersected", intersected}};
  }
  throw DomainError("unknown check '" + check + "'");
}

std::vector<CheckOutcome> verify_entry(const CatalogEntry& entry) {
  std::vector<CheckOutcome> out;
  for (const auto& [check, expected] : entry.expected.items()) {
    auto actual = run_check(entry, check);
    const bool passed = actual == expected;
    out.push_back({check, expected, std::move(actual), passed});
  }
  return out;
}

json write_entry(const CatalogEntry& entry) {
  json object = std::visit(
      [](const auto& o) -> json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Triple>) {
          return io::write_triple(o);
        } else if constexpr (std::is_same_v<T, LatticeForm>) {
          return io::write_lattice(o);
        } else if constexpr (std::is_same_v<T, HeisenbergDatum>) {
          return io::write_heisenberg(o);
        } else {
          json j = io::write_length_map(o.map);
          json gens = json::array();
          for (const auto& g : o.subgroup.generators()) gens.push_back(io::write_permutation(g));
          j["subgroup"] = {{"generators", gens}};
          j["delta"] = to_string(o.delta);
          return j;
        }
      },
      entry.object);
  json out = {{"id", entry.id},
              {"kind", std::string(kind_name(entry.object))},
              {"description", entry.description},
              {"object", object},
              {"expected", entry.expected}};
  if (entry.options.class_cap != EquivalenceOptions{}.class_cap) out["class_cap"] = entry.options.class_cap;
  return out;
}

}  // namespace covspec
