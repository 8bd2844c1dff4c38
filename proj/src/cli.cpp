#include "covspec/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "covspec/catalog.hpp"
#include "covspec/errors.hpp"
#include "covspec/io.hpp"

namespace covspec::cli {

using nlohmann::json;

namespace {

struct Input {
  std::string catalog_id;
  std::string file;
};

struct Loaded {
  json object;
  std::string path;
  std::optional<std::size_t> class_cap;
  std::optional<CatalogEntry> entry;
};

json read_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError(file + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return io::parse(buffer.str(), file);
}

// Accepts either a bare object or the envelope printed by `catalog get`.
Loaded load(const Input& input, const std::string& option) {
  if (input.catalog_id.empty() == input.file.empty()) {
    throw ValidationError("give exactly one of --catalog or " + option);
  }
  Loaded l;
  if (!input.catalog_id.empty()) {
    l.entry = catalog_get(input.catalog_id);
    l.object = write_entry(*l.entry).at("object");
    if (l.entry->options.class_cap != EquivalenceOptions{}.class_cap) l.class_cap = l.entry->options.class_cap;
    return l;
  }
  json j = read_file(input.file);
  if (j.is_object() && j.contains("object")) {
    if (auto it = j.find("class_cap"); it != j.end() && it->is_number_unsigned()) l.class_cap = it->get<std::size_t>();
    l.object = j.at("object");
    l.path = "/object";
  } else {
    l.object = std::move(j);
  }
  return l;
}

std::string source_name(const Input& input) { return input.file.empty() ? input.catalog_id : input.file; }

void print(std::ostream& out, const json& report, const std::string& format) {
  if (format == "table") {
    out << render_table(report);
  } else {
    out << report.dump(2) << '\n';
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Scalars and object-free arrays fit in one cell.
bool cell_like(const json& v) {
  if (v.is_object()) return v.empty();
  if (v.is_array()) return std::all_of(v.begin(), v.end(), cell_like);
  return true;
}

bool flat_object(const json& v) { return v.is_object() && std::all_of(v.begin(), v.end(), cell_like); }

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

void pad(std::ostringstream& out, const std::string& s, std::size_t width) {
  out << s;
  for (std::size_t i = display_width(s); i < width; ++i) out << ' ';
}

void render(const json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object()) {
    std::vector<std::pair<std::string, std::string>> scalars;
    for (const auto& [k, x] : v.items()) {
      if (cell_like(x)) scalars.emplace_back(k, scalar_text(x));
    }
    std::size_t width = 0;
    for (const auto& [k, s] : scalars) width = std::max(width, display_width(path + k));
    for (const auto& [k, s] : scalars) {
      pad(out, path + k, width + 2);
      out << s << '\n';
    }
    for (const auto& [k, x] : v.items()) {
      if (!cell_like(x)) render(x, path + k + ".", out);
    }
    return;
  }
  // Arrays: a column table when every row is a flat object, otherwise one line per item.
  if (!v.empty() && std::all_of(v.begin(), v.end(), flat_object)) {
    std::vector<std::string> columns;
    for (const auto& row : v) {
      for (const auto& [k, x] : row.items()) {
        if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
      }
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : v) {
      std::vector<std::string> line;
      for (const auto& c : columns) line.push_back(row.contains(c) ? scalar_text(row.at(c)) : "");
      cells.push_back(std::move(line));
    }
    std::vector<std::size_t> widths;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::size_t w = display_width(columns[i]);
      for (const auto& line : cells) w = std::max(w, display_width(line[i]));
      widths.push_back(w);
    }
    out << path.substr(0, path.empty() ? 0 : path.size() - 1) << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) pad(out, "  " + columns[i], widths[i] + 2);
    out << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) pad(out, "  " + line[i], widths[i] + 2);
      out << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!cell_like(v[i])) {
      render(v[i], path + std::to_string(i) + ".", out);
    } else {
      out << path << i << "  " << scalar_text(v[i]) << '\n';
    }
  }
}

}  // namespace

std::string render_table(const json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering spectra and subgroup equivalences", "covspec"};
  app.require_subcommand(1);
  std::string format = "json";
  std::optional<std::size_t> element_cap;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--element-cap", element_cap, "Group enumeration limit (default: $COVSPEC_ELEMENT_CAP or 100000)");

  // check
  auto* check = app.add_subcommand("check", "Decide an equivalence relation on a triple");
  std::string relation = "all";
  Input triple_in;
  std::optional<std::size_t> class_cap;
  bool no_dedup = false;
  check->add_option("--relation", relation, "gassmann, kronecker, order, jump or all")
      ->check(CLI::IsMember({"gassmann", "kronecker", "order", "jump", "all"}));
  check->add_option("--catalog", triple_in.catalog_id, "Catalog id");
  check->add_option("--triple", triple_in.file, "Triple JSON file");
  check->add_option("--class-cap", class_cap, "Limit on merged labels for order and jump");
  check->add_flag("--no-dedup", no_dedup, "Quantify over raw labels");

  // covspec-torus
  auto* torus = app.add_subcommand("covspec-torus", "Covering spectrum of a flat torus");
  Input lattice_in;
  std::size_t max_vectors = ShortVectorOptions{}.max_vectors;
  torus->add_option("--catalog", lattice_in.catalog_id, "Catalog id");
  torus->add_option("--lattice", lattice_in.file, "Lattice JSON file");
  torus->add_option("--max-vectors", max_vectors, "Short vector enumeration limit");

  // covspec-heisenberg
  auto* heis = app.add_subcommand("covspec-heisenberg", "Covering spectrum of a Heisenberg manifold");
  Input heis_in, heis_other;
  heis->add_option("--catalog", heis_in.catalog_id, "Catalog id");
  heis->add_option("--heisenberg", heis_in.file, "Heisenberg JSON file");
  heis->add_option("--compare-catalog", heis_other.catalog_id, "Compare against a catalog id");
  heis->add_option("--compare", heis_other.file, "Compare against a Heisenberg JSON file");

  // theta
  auto* theta = app.add_subcommand("theta", "Vector counts per squared norm");
  Input theta_in;
  std::string bound_text;
  theta->add_option("--catalog", theta_in.catalog_id, "Catalog id");
  theta->add_option("--lattice", theta_in.file, "Lattice JSON file");
  theta->add_option("--bound", bound_text, "Largest squared norm, as p/q")->required();
  theta->add_option("--max-vectors", max_vectors, "Short vector enumeration limit");

  // jumpset
  auto* jumps = app.add_subcommand("jumpset", "Jump set of a length map filtration");
  Input map_in;
  bool bruteforce = false, no_mult = false;
  jumps->add_option("--catalog", map_in.catalog_id, "Catalog id of a length map instance");
  jumps->add_option("--lengthmap", map_in.file, "Length map JSON file");
  jumps->add_flag("--bruteforce", bruteforce, "Evaluate the definition at every value");
  jumps->add_flag("--no-multiplicities", no_mult, "Skip multiplicity search");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "List, print or verify built-in examples");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List catalog ids");
  auto* cat_get = catalog->add_subcommand("get", "Print one entry");
  std::string get_id;
  cat_get->add_option("id", get_id, "Catalog id")->required();
  auto* cat_verify = catalog->add_subcommand("verify", "Run the expected checks");
  std::vector<std::string> verify_ids;
  cat_verify->add_option("ids", verify_ids, "Catalog ids (default: all)");

  // validate
  auto* validate = app.add_subcommand("validate", "Check an input file");
  std::string v_lengthmap, v_triple, v_lattice, v_heis, v_group;
  validate->add_option("--lengthmap", v_lengthmap, "Length map JSON file");
  validate->add_option("--triple", v_triple, "Triple JSON file");
  validate->add_option("--lattice", v_lattice, "Lattice JSON file");
  validate->add_option("--heisenberg", v_heis, "Heisenberg JSON file");
  validate->add_option("--group", v_group, "Group JSON file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "covspec: " << e.what() << '\n';
    return ExitCode::invalid_input;
  }

  // The cap is process-wide; put it back so repeated in-process runs stay independent.
  struct CapGuard {
    std::size_t saved = default_element_cap();
    ~CapGuard() { set_default_element_cap(saved); }
  } guard;
  try {
    if (element_cap) {
      set_default_element_cap(*element_cap);
    } else if (const char* env = std::getenv("COVSPEC_ELEMENT_CAP")) {
      try {
        set_default_element_cap(std::stoul(env));
      } catch (const std::exception&) {
        throw ValidationError("COVSPEC_ELEMENT_CAP is not a number: '" + std::string(env) + "'");
      }
    }

    if (*check) {
      const auto l = load(triple_in, "--triple");
      const Triple t = io::read_triple(l.object, l.path);
      EquivalenceOptions options;
      if (l.class_cap) options.class_cap = *l.class_cap;
      if (class_cap) options.class_cap = *class_cap;
      options.deduplicate = !no_dedup;
      json report = {{"triple", t.name()}};
      if (relation == "all") {
        report["audit"] = io::write_audit(t.classes(), implication_audit(t, options));
      } else {
        report["verdict"] = io::write_verdict(t.classes(), decide(*parse_relation(relation), t, options));
      }
      print(out, report, format);
      return ExitCode::ok;
    }
    if (*torus || *theta) {
      const Input& in = *torus ? lattice_in : theta_in;
      const auto l = load(in, "--lattice");
      const LatticeForm lattice = io::read_lattice(l.object, l.path);
      CovSpecOptions options;
      options.enumeration.max_vectors = max_vectors;
      json report = {{"lattice", lattice.name().empty() ? source_name(in) : lattice.name()}};
      if (*torus) {
        report["covspec"] = io::write_covspec(covering_spectrum_torus(lattice, options));
      } else {
        const auto bound = parse_rational(bound_text);
        report["theta"] = io::write_theta(theta_prefix(lattice, bound, options.enumeration), bound);
      }
      print(out, report, format);
      return ExitCode::ok;
    }
    if (*heis) {
      const auto l = load(heis_in, "--heisenberg");
      const auto d = io::read_heisenberg(l.object, l.path);
      json report = {{"datum", d.name.empty() ? source_name(heis_in) : d.name}};
      report["covspec"] = io::write_covspec_set(covspec_heisenberg(d));
      if (!heis_other.catalog_id.empty() || !heis_other.file.empty()) {
        const auto lo = load(heis_other, "--compare");
        const auto other = io::read_heisenberg(lo.object, lo.path);
        const auto cmp = covspec_equal_heisenberg(d, other);
        report["comparison"] = {{"other", other.name.empty() ? source_name(heis_other) : other.name},
                                {"equal", cmp.equal},
                                {"explanation", cmp.explanation}};
      }
      print(out, report, format);
      return ExitCode::ok;
    }
    if (*jumps) {
      const auto l = load(map_in, "--lengthmap");
      const LengthMap m = io::read_length_map(l.object, l.path);
      if (auto violations = covspec::validate(m); !violations.empty()) {
        print(out, io::write_violations(violations), format);
        err << "covspec: length map violates axiom " << violations.front().axiom << '\n';
        return ExitCode::invalid_input;
      }
      JumpOptions options;
      options.multiplicities = !no_mult;
      const auto report = bruteforce ? jump_set_bruteforce(m, options) : jump_set(m, options);
      print(out, {{"method", bruteforce ? "bruteforce" : "algorithm"}, {"jump_set", io::write_jump_report(report)}},
            format);
      return ExitCode::ok;
    }
    if (*catalog) {
      if (*cat_list) {
        json arr = json::array();
        for (const auto& e : catalog_list()) arr.push_back({{"id", e.id}, {"kind", e.kind}, {"description", e.description}});
        print(out, {{"entries", arr}}, format);
        return ExitCode::ok;
      }
      if (*cat_get) {
        print(out, write_entry(catalog_get(get_id)), format);
        return ExitCode::ok;
      }
      if (verify_ids.empty()) {
        for (const auto& e : catalog_list()) verify_ids.push_back(e.id);
      }
      json entries = json::array();
      bool all = true;
      for (const auto& id : verify_ids) {
        const auto entry = catalog_get(id);
        json checks = json::array();
        bool passed = true;
        for (const auto& o : verify_entry(entry)) {
          checks.push_back({{"check", o.check}, {"expected", o.expected}, {"actual", o.actual}, {"passed", o.passed}});
          passed = passed && o.passed;
        }
        entries.push_back({{"id", id}, {"passed", passed}, {"checks", checks}});
        all = all && passed;
      }
      print(out, {{"entries", entries}, {"passed", all}}, format);
      return all ? ExitCode::ok : ExitCode::failure;
    }
    if (*validate) {
      const int given = !v_lengthmap.empty() + !v_triple.empty() + !v_lattice.empty() + !v_heis.empty() + !v_group.empty();
      if (given != 1) throw ValidationError("give exactly one input to validate");
      json report;
      if (!v_lengthmap.empty()) {
        const auto l = load({"", v_lengthmap}, "--lengthmap");
        report = io::write_violations(covspec::validate(io::read_length_map(l.object, l.path)));
      } else if (!v_heis.empty()) {
        const auto l = load({"", v_heis}, "--heisenberg");
        const auto problems = validate_heisenberg(io::read_heisenberg(l.object, l.path));
        report = {{"ok", problems.empty()}, {"violations", problems}};
      } else if (!v_triple.empty()) {
        const auto l = load({"", v_triple}, "--triple");
        const auto t = io::read_triple(l.object, l.path);
        report = {{"ok", true}, {"violations", json::array()}, {"h_order", t.h().size()}, {"hprime_order", t.hprime().size()}};
      } else if (!v_lattice.empty()) {
        const auto l = load({"", v_lattice}, "--lattice");
        report = {{"ok", true}, {"violations", json::array()}, {"rank", io::read_lattice(l.object, l.path).rank()}};
      } else {
        const auto g = io::read_group(read_file(v_group));
        report = {{"ok", true}, {"violations", json::array()}, {"order", g->order()}};
      }
      print(out, report, format);
      return report.at("ok").get<bool>() ? ExitCode::ok : ExitCode::invalid_input;
    }
  } catch (const CapacityError& e) {
    err << "covspec: capacity: " << e.what() << '\n';
    return ExitCode::capacity;
  } catch (const ValidationError& e) {
    err << "covspec: invalid input: " << e.what() << '\n';
    return ExitCode::invalid_input;
  } catch (const DomainError& e) {
    err << "covspec: " << e.what() << '\n';
    return ExitCode::invalid_input;
  } catch (const std::exception& e) {
    err << "covspec: " << e.what() << '\n';
    return ExitCode::failure;
  }
  return ExitCode::failure;
}

}  // namespace covspec::cli
