#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "covspec/equivalence.hpp"
#include "covspec/examples.hpp"
#include "covspec/heisenberg.hpp"
#include "covspec/lattice.hpp"

namespace covspec {

using CatalogObject = std::variant<Triple, LatticeForm, HeisenbergDatum, RestrictionGap>;

/// A named example with the results its checks are expected to reproduce.
struct CatalogEntry {
  std::string id;
  std::string description;
  CatalogObject object;
  nlohmann::json expected;  // check name -> expected value
  EquivalenceOptions options;
};

struct CatalogListing {
  std::string id;
  std::string kind;  // triple, lattice, heisenberg, lengthmap
  std::string description;
};

/// Every id, in a fixed order, without constructing the objects.
const std::vector<CatalogListing>& catalog_list();

/// Builds one entry. Throws DomainError for unknown ids.
CatalogEntry catalog_get(const std::string& id);

/// Runs one named check on an entry and returns its value as JSON.
nlohmann::json run_check(const CatalogEntry& entry, const std::string& check);

struct CheckOutcome {
  std::string check;
  nlohmann::json expected;
  nlohmann::json actual;
  bool passed = false;
};

/// Runs every check named in entry.expected.
std::vector<CheckOutcome> verify_entry(const CatalogEntry& entry);

/// Envelope printed by `catalog get`: id, description, object, expected.
nlohmann::json write_entry(const CatalogEntry& entry);

std::string_view kind_name(const CatalogObject& object);

}  // namespace covspec
