#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "covspec/lattice.hpp"

namespace covspec {

/// Squared central length (spectrum value sqrt(q)/2), or a named unknown.
struct KnownDelta {
  Rational q;
};
struct SymbolicDelta {
  std::string tag;
};
using CentralLength = std::variant<KnownDelta, SymbolicDelta>;

/// A lattice L in a symplectic inner product space together with the scale c
/// of the central lattice: Gamma = L x cZ.
struct HeisenbergDatum {
  LatticeForm lattice;
  IntMatrix omega;  // symplectic form on the lattice basis
  Rational c = 1;
  CentralLength delta_z;
  std::string name;
};

/// Skewness, nondegeneracy and omega(b_i, b_j) in cZ, as readable messages.
std::vector<std::string> validate_heisenberg(const HeisenbergDatum& d);

/// Standard symplectic matrix [[0, I], [-I, 0]] of size 2n.
IntMatrix standard_symplectic(std::size_t n);

/// B J B^T: a form given on ambient coordinates, moved to the rows of B.
IntMatrix transport_form(const IntMatrix& form, const IntMatrix& basis);

struct CovSpecSet {
  std::vector<Rational> rational_entries;  // squared lengths, increasing
  std::optional<std::string> symbolic_entry;  // present for symbolic central lengths
  bool conditional = false;  // symbolic entry included iff delta_Z < delta_T
  bool boundary = false;     // known delta_Z == delta_T, left out
  Rational delta_t;          // least torus value

  friend bool operator==(const CovSpecSet&, const CovSpecSet&) = default;
};

/// Covering spectrum of the Heisenberg manifold: the torus spectrum, with
/// delta_Z added in front exactly when delta_Z < delta_T.
CovSpecSet covspec_heisenberg(const HeisenbergDatum& d, const CovSpecOptions& options = {});

struct SpectrumComparison {
  bool equal = false;
  std::string explanation;
};

/// Compares two Heisenberg covering spectra. Known central lengths are
/// compared directly. A shared symbolic tag stands for one unknown value; the
/// answer is returned only when it is the same for every possible value.
/// Throws DomainError for different tags, mixed kinds, or an answer that
/// depends on the unknown.
SpectrumComparison covspec_equal_heisenberg(const HeisenbergDatum& a, const HeisenbergDatum& b,
                                            const CovSpecOptions& options = {});

}  // namespace covspec
