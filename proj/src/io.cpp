#include "covspec/io.hpp"

#include <map>
#include <set>

#include "covspec/errors.hpp"

namespace covspec::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError((path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& field(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key '" + key + "'");
  return *it;
}

const json* optional_field(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::size_t read_size(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& read_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Integer read_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const auto r = read_rational(j, path);
    if (r.get_den() != 1) fail(path, "expected an integer");
    return r.get_num();
  }
  fail(path, "expected an integer");
}

json write_integer(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::vector<Permutation> read_permutations(const json& j, const std::string& path, std::size_t degree) {
  std::vector<Permutation> out;
  const auto& arr = read_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto p = read_permutation(arr[i], child(path, i));
    if (p.degree() != degree) {
      fail(child(path, i), "degree " + std::to_string(p.degree()) + " does not match " + std::to_string(degree));
    }
    out.push_back(std::move(p));
  }
  return out;
}

json write_permutations(const std::vector<Permutation>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(write_permutation(p));
  return arr;
}

}  // namespace

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

Permutation read_permutation(const json& j, const std::string& path) {
  const auto& arr = read_array(j, path);
  std::vector<Point> images;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto v = read_size(arr[i], child(path, i));
    images.push_back(static_cast<Point>(v));
  }
  try {
    return Permutation(std::move(images));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json write_permutation(const Permutation& p) {
  json arr = json::array();
  for (auto x : p.images()) arr.push_back(x);
  return arr;
}

GroupPtr read_group(const json& j, const std::string& path) {
  const auto degree = read_size(field(j, path, "degree"), child(path, "degree"));
  auto gens = read_permutations(field(j, path, "generators"), child(path, "generators"), degree);
  std::string name;
  if (const auto* n = optional_field(j, "name")) name = read_string(*n, child(path, "name"));
  return make_group(degree, std::move(gens), std::move(name));
}

json write_group(const FiniteGroup& g) {
  return {{"name", g.name()}, {"degree", g.degree()}, {"generators", write_permutations(g.generators())}};
}

namespace {

ElementSet read_subgroup(const json& j, const std::string& path, const ClassSystem& classes) {
  if (!j.is_object()) fail(path, "expected an object");
  if (const auto* idx = optional_field(j, "generator_indices")) {
    if (!classes.group()) fail(child(path, "generator_indices"), "needs an enumerated ambient group");
    const auto& all = classes.group()->generators();
    std::vector<Permutation> gens;
    const auto& arr = read_array(*idx, child(path, "generator_indices"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto k = read_size(arr[i], child(child(path, "generator_indices"), i));
      if (k >= all.size()) fail(child(child(path, "generator_indices"), i), "no ambient generator " + std::to_string(k));
      gens.push_back(all[k]);
    }
    return ElementSet::generated_by(classes.degree(), std::move(gens));
  }
  auto gens = read_permutations(field(j, path, "generators"), child(path, "generators"), classes.degree());
  return ElementSet::generated_by(classes.degree(), std::move(gens));
}

ClassSystem read_ambient(const json& j, const std::string& path) {
  const auto kind = read_string(field(j, path, "kind"), child(path, "kind"));
  if (kind == "enumerated") return ClassSystem::enumerated(read_group(field(j, path, "group"), child(path, "group")));
  if (kind == "cycle-type") return ClassSystem::cycle_type(read_size(field(j, path, "degree"), child(path, "degree")));
  if (kind == "custom") {
    const auto degree = read_size(field(j, path, "degree"), child(path, "degree"));
    const auto tag = read_string(field(j, path, "tag"), child(path, "tag"));
    if (tag.empty()) fail(child(path, "tag"), "custom labelling needs a stability tag");
    const auto& arr = read_array(field(j, path, "classes"), child(path, "classes"));
    std::vector<std::vector<Permutation>> classes;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      classes.push_back(read_permutations(arr[i], child(child(path, "classes"), i), degree));
    }
    try {
      return ClassSystem::custom_from_classes(degree, classes, tag);
    } catch (const ValidationError& e) {
      fail(child(path, "classes"), e.what());
    }
  }
  fail(child(path, "kind"), "unknown ambient kind '" + kind + "'");
}

}  // namespace

Triple read_triple(const json& j, const std::string& path) {
  auto classes = read_ambient(field(j, path, "ambient"), child(path, "ambient"));
  auto h = read_subgroup(field(j, path, "H"), child(path, "H"), classes);
  auto hp = read_subgroup(field(j, path, "Hprime"), child(path, "Hprime"), classes);
  std::string name;
  if (const auto* n = optional_field(j, "name")) name = read_string(*n, child(path, "name"));
  try {
    return Triple(std::move(name), std::move(classes), std::move(h), std::move(hp));
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

json write_triple(const Triple& t) {
  const auto& cs = t.classes();
  json ambient;
  switch (cs.kind()) {
    case ClassSystem::Kind::enumerated:
      ambient = {{"kind", "enumerated"}, {"group", write_group(*cs.group())}};
      break;
    case ClassSystem::Kind::cycle_type:
      ambient = {{"kind", "cycle-type"}, {"degree", cs.degree()}};
      break;
    case ClassSystem::Kind::custom: {
      // Only the labels met by H and H' matter; list those classes.
      std::map<ClassLabel, std::set<Permutation>> by_label;
      for (const ElementSet* side : {&t.h(), &t.hprime()}) {
        for (const auto& g : side->elements) {
          if (!g.is_identity()) by_label[cs.label(g)].insert(g);
        }
      }
      json classes = json::array();
      for (const auto& [label, members] : by_label) {
        classes.push_back(write_permutations({members.begin(), members.end()}));
      }
      ambient = {{"kind", "custom"}, {"degree", cs.degree()}, {"tag", cs.tag()}, {"classes", classes}};
      break;
    }
  }
  return {{"name", t.name()},
          {"ambient", ambient},
          {"H", {{"generators", write_permutations(t.h().generators)}}},
          {"Hprime", {{"generators", write_permutations(t.hprime().generators)}}}};
}

LengthMap read_length_map(const json& j, const std::string& path) {
  auto group = read_group(field(j, path, "group"), child(path, "group"));
  const auto& values = field(j, path, "values");
  const std::string vpath = child(path, "values");
  std::vector<Rational> out(group->order());
  if (values.is_array()) {
    if (values.size() != group->order()) {
      fail(vpath, "expected " + std::to_string(group->order()) + " values, got " + std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = read_rational(values[i], child(vpath, i));
  } else if (values.is_object()) {
    std::vector<bool> seen(group->order(), false);
    for (const auto& [key, value] : values.items()) {
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(child(vpath, key), "key is not an element index");
      }
      if (idx >= group->order()) fail(child(vpath, key), "element index out of range");
      out[idx] = read_rational(value, child(vpath, key));
      seen[idx] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) fail(vpath, "missing key '" + std::to_string(i) + "'");
    }
  } else {
    fail(vpath, "expected an object or array of rationals");
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0) fail(child(vpath, i), "length values must be non-negative");
  }
  return LengthMap(std::move(group), std::move(out));
}

json write_length_map(const LengthMap& m) {
  json values = json::object();
  for (std::size_t i = 0; i < m.values().size(); ++i) values[std::to_string(i)] = to_string(m.values()[i]);
  return {{"group", write_group(*m.domain())}, {"values", values}};
}

LatticeForm read_lattice(const json& j, const std::string& path) {
  const auto& gram = read_array(field(j, path, "gram"), child(path, "gram"));
  const std::string gpath = child(path, "gram");
  RationalMatrix g;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    const auto& row = read_array(gram[i], child(gpath, i));
    std::vector<Rational> r;
    for (std::size_t k = 0; k < row.size(); ++k) r.push_back(read_rational(row[k], child(child(gpath, i), k)));
    g.push_back(std::move(r));
  }
  if (const auto* rank = optional_field(j, "rank")) {
    if (read_size(*rank, child(path, "rank")) != g.size()) fail(child(path, "rank"), "does not match the gram matrix");
  }
  std::string name;
  if (const auto* n = optional_field(j, "name")) name = read_string(*n, child(path, "name"));
  try {
    return LatticeForm(std::move(g), std::move(name));
  } catch (const ValidationError& e) {
    fail(gpath, e.what());
  }
}

json write_lattice(const LatticeForm& l) {
  json gram = json::array();
  for (const auto& row : l.gram()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    gram.push_back(r);
  }
  return {{"name", l.name()}, {"rank", l.rank()}, {"gram", gram}};
}

HeisenbergDatum read_heisenberg(const json& j, const std::string& path) {
  auto lattice = read_lattice(field(j, path, "lattice"), child(path, "lattice"));
  const auto& om = read_array(field(j, path, "omega"), child(path, "omega"));
  IntMatrix omega;
  for (std::size_t i = 0; i < om.size(); ++i) {
    const auto& row = read_array(om[i], child(child(path, "omega"), i));
    IntVector r;
    for (std::size_t k = 0; k < row.size(); ++k) r.push_back(read_integer(row[k], child(child(child(path, "omega"), i), k)));
    omega.push_back(std::move(r));
  }
  const auto c = read_rational(field(j, path, "c"), child(path, "c"));
  const auto& dz = field(j, path, "deltaZ");
  const std::string dpath = child(path, "deltaZ");
  CentralLength delta;
  if (!dz.is_object()) fail(dpath, "expected an object");
  if (const auto* k = optional_field(dz, "known")) {
    delta = KnownDelta{read_rational(*k, child(dpath, "known"))};
  } else if (const auto* s = optional_field(dz, "symbolic")) {
    delta = SymbolicDelta{read_string(*s, child(dpath, "symbolic"))};
  } else {
    fail(dpath, "missing key 'known' or 'symbolic'");
  }
  std::string name;
  if (const auto* n = optional_field(j, "name")) name = read_string(*n, child(path, "name"));
  return HeisenbergDatum{std::move(lattice), std::move(omega), c, std::move(delta), std::move(name)};
}

json write_heisenberg(const HeisenbergDatum& d) {
  json omega = json::array();
  for (const auto& row : d.omega) {
    json r = json::array();
    for (const auto& x : row) r.push_back(write_integer(x));
    omega.push_back(r);
  }
  json dz;
  if (const auto* k = std::get_if<KnownDelta>(&d.delta_z)) {
    dz = {{"known", to_string(k->q)}};
  } else {
    dz = {{"symbolic", std::get<SymbolicDelta>(d.delta_z).tag}};
  }
  return {{"name", d.name}, {"lattice", write_lattice(d.lattice)}, {"omega", omega}, {"c", to_string(d.c)}, {"deltaZ", dz}};
}

json write_label(const ClassSystem& classes, const ClassLabel& label) {
  return {{"order", label.order}, {"key", label.key}, {"name", classes.describe(label)}};
}

json write_verdict(const ClassSystem& classes, const EquivalenceVerdict& v) {
  json out = {{"relation", std::string(to_string(v.relation))}, {"holds", v.holds}, {"witness", nullptr}};
  if (!v.witness) return out;
  const auto& w = *v.witness;
  json labels = json::array();
  for (const auto& l : w.s) labels.push_back(write_label(classes, l));
  switch (v.relation) {
    case Relation::gassmann:
    case Relation::kronecker:
      out["witness"] = {{"C", write_label(classes, *w.c)}, {"h_count", w.h_value}, {"hprime_count", w.hp_value}};
      break;
    case Relation::order:
      out["witness"] = {{"S", labels}, {"h_order", w.h_value}, {"hprime_order", w.hp_value}};
      break;
    case Relation::jump:
      out["witness"] = {{"S", labels},
                        {"C", write_label(classes, *w.c)},
                        {"h_order", w.h_value},
                        {"hprime_order", w.hp_value},
                        {"h_contains", w.h_contains},
                        {"hprime_contains", w.hp_contains}};
      break;
  }
  return out;
}

json write_audit(const ClassSystem& classes, const AuditReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(write_verdict(classes, v));
  return {{"verdicts", verdicts}, {"violations", r.violations}};
}

json write_jump_report(const JumpReport& r) {
  json jumps = json::array();
  for (const auto& j : r.jumps) {
    json e = {{"value", to_string(j.value)}, {"subgroup_order", j.subgroup_order}};
    if (j.multiplicity > 0) e["multiplicity"] = j.multiplicity;
    jumps.push_back(e);
  }
  return {{"jumps", jumps}, {"terminal_order", r.terminal.order()}};
}

json write_violations(const std::vector<AxiomViolation>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back({{"axiom", x.axiom}, {"message", x.message}, {"elements", x.elements}});
  return {{"ok", v.empty()}, {"violations", arr}};
}

namespace {

json spectrum_value(const Rational& q) {
  return {{"q", to_string(q)}, {"value", render_half_sqrt(q)}, {"decimal_approx", decimal_half_sqrt(q)}};
}

}  // namespace

json write_covspec(const CovSpecReport& r) {
  json entries = json::array();
  for (const auto& j : r.jumps) {
    json e = spectrum_value(j.q);
    e["multiplicity"] = j.multiplicity;
    e["snf_multiplicity"] = j.snf_multiplicity;
    e["new_rank"] = j.new_rank;
    e["new_index"] = j.new_index ? json(j.new_index->get_str()) : json("infinite");
    json hnf = json::array();
    for (const auto& row : j.basis) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(write_integer(x));
      hnf.push_back(jr);
    }
    e["hnf"] = hnf;
    if (j.finding) e["finding"] = *j.finding;
    entries.push_back(e);
  }
  return {{"entries", entries}, {"bound_used", to_string(r.bound_used)}};
}

json write_covspec_set(const CovSpecSet& s) {
  json entries = json::array();
  for (const auto& q : s.rational_entries) entries.push_back(spectrum_value(q));
  json symbolic = nullptr;
  if (s.symbolic_entry) symbolic = {{"tag", *s.symbolic_entry}, {"condition", "included iff delta_Z < delta_T"}};
  return {{"entries", entries}, {"symbolic", symbolic}, {"boundary", s.boundary}, {"delta_T", spectrum_value(s.delta_t)}};
}

json write_theta(const std::map<Rational, std::size_t>& counts, const Rational& bound) {
  json arr = json::array();
  for (const auto& [norm, count] : counts) arr.push_back({{"norm2", to_string(norm)}, {"count", count}});
  return {{"bound", to_string(bound)}, {"counts", arr}};
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

}  // namespace covspec::io
