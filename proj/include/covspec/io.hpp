#pragma once

#include <string>

#include <json.hpp>

#include "covspec/equivalence.hpp"
#include "covspec/heisenberg.hpp"
#include "covspec/lattice.hpp"
#include "covspec/length_map.hpp"

namespace covspec::io {

using json = nlohmann::json;

// Readers throw ValidationError naming the JSON path and key at fault.

GroupPtr read_group(const json& j, const std::string& path = "");
json write_group(const FiniteGroup& g);

Permutation read_permutation(const json& j, const std::string& path);
json write_permutation(const Permutation& p);

Triple read_triple(const json& j, const std::string& path = "");
json write_triple(const Triple& t);

LengthMap read_length_map(const json& j, const std::string& path = "");
json write_length_map(const LengthMap& m);

LatticeForm read_lattice(const json& j, const std::string& path = "");
json write_lattice(const LatticeForm& l);

HeisenbergDatum read_heisenberg(const json& j, const std::string& path = "");
json write_heisenberg(const HeisenbergDatum& d);

Rational read_rational(const json& j, const std::string& path);

json write_label(const ClassSystem& classes, const ClassLabel& label);
json write_verdict(const ClassSystem& classes, const EquivalenceVerdict& v);
json write_audit(const ClassSystem& classes, const AuditReport& r);
json write_jump_report(const JumpReport& r);
json write_violations(const std::vector<AxiomViolation>& v);
json write_covspec(const CovSpecReport& r);
json write_covspec_set(const CovSpecSet& s);
json write_theta(const std::map<Rational, std::size_t>& counts, const Rational& bound);

/// Parses text as JSON, reporting the byte offset on failure.
json parse(const std::string& text, const std::string& source);

}  // namespace covspec::io
