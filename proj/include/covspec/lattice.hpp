#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covspec/integer_matrix.hpp"
#include "covspec/rational.hpp"

namespace covspec {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Z^n with an exact positive definite Gram matrix.
class LatticeForm {
public:
  /// Throws ValidationError unless gram is square, symmetric and positive definite.
  explicit LatticeForm(RationalMatrix gram, std::string name = {});

  std::size_t rank() const { return gram_.size(); }
  const RationalMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  Rational norm2(const IntVector& v) const;
  Rational inner(const IntVector& a, const IntVector& b) const;

  /// The same form scaled by a positive rational.
  LatticeForm scaled(const Rational& c) const;

private:
  RationalMatrix gram_;
  std::string name_;
};

/// Exact leading-principal-minor test.
bool is_positive_definite(const RationalMatrix& gram);

/// A sublattice of Z^n, kept in Hermite normal form.
class Sublattice {
public:
  Sublattice(std::size_t ambient_rank, IntMatrix hnf_basis);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  bool is_full_rank() const { return rank() == ambient_rank_; }
  /// [Z^n : this]; empty while rank deficient.
  std::optional<Integer> index() const;
  bool contains(const IntVector& v) const;
  bool is_whole() const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;

private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

Sublattice sublattice_generated(std::size_t ambient_rank, const std::vector<IntVector>& vectors);

struct ShortVectorOptions {
  std::size_t max_vectors = 2'000'000;
};

struct ShortVector {
  IntVector v;
  Rational norm2;
};

/// All v != 0 with norm2(v) <= bound, sorted by (norm2, v). Throws
/// CapacityError beyond max_vectors.
std::vector<ShortVector> short_vectors(const LatticeForm& l, const Rational& bound, const ShortVectorOptions& options = {});

/// One step of the norm filtration: sublattice generated by vectors of norm2 <= q
/// strictly contains the one generated by norm2 < q.
struct TorusJump {
  Rational q;                       // squared length; spectrum value is sqrt(q)/2
  std::size_t multiplicity = 0;     // verified minimal number of added norm2 = q vectors
  std::size_t snf_multiplicity = 0; // minimal generator count of the quotient step
  std::size_t new_rank = 0;
  std::optional<Integer> new_index; // [Z^n : closed filtration], empty while rank deficient
  IntMatrix basis;                  // closed filtration in Hermite normal form
  std::optional<std::string> finding;
};

struct CovSpecReport {
  std::vector<TorusJump> jumps;
  Rational bound_used;  // largest enumeration bound reached
};

struct CovSpecOptions {
  ShortVectorOptions enumeration;
  std::size_t multiplicity_cap = 24;  // candidate vectors (up to sign) for exhaustive search
};

CovSpecReport covering_spectrum_torus(const LatticeForm& l, const CovSpecOptions& options = {});

/// Definitional oracle: HNF of <norm2 < v> and <norm2 <= v> at every distinct
/// norm2 value v up to `bound`. Returns the values where the two differ.
std::vector<Rational> jump_values_by_definition(const LatticeForm& l, const Rational& bound,
                                                const ShortVectorOptions& options = {});

/// Squared successive minima.
std::vector<Rational> successive_minima(const LatticeForm& l, const CovSpecOptions& options = {});

/// Vector counts per squared norm up to bound, including the zero vector.
std::map<Rational, std::size_t> theta_prefix(const LatticeForm& l, const Rational& bound,
                                             const ShortVectorOptions& options = {});

/// Gram matrix B G B^T of the sublattice spanned by the rows of B.
LatticeForm restrict_form(const LatticeForm& l, const IntMatrix& basis, std::string name = {});

/// Coordinates (a, b, c, d) on 1, sigma, tau, rho in Z[V4] and the norm with
/// <e_i, e_i> = weights_i / 3 on the primitive idempotents.
LatticeForm group_ring_form(const std::array<Rational, 4>& weights);

struct ConwaySloanePair {
  LatticeForm h;
  LatticeForm hprime;
  IntMatrix h_basis;       // HNF bases inside Z[V4]
  IntMatrix hprime_basis;
};

/// H = <3A, sigma+tau+rho, 1+rho-tau>, H' = <3A, 1+sigma+tau, 1+rho-tau>.
ConwaySloanePair conway_sloane_pair(const std::array<Rational, 4>& weights);

/// Orthogonal lattice with the given squared lengths and the lattice obtained
/// by adjoining half the sum of its basis vectors.
std::pair<LatticeForm, LatticeForm> half_sum_extension(const std::vector<Rational>& squared_lengths);

/// sqrt(q)/2 in the form "k", "k/d", "k√r" or "k√r/d".
std::string render_half_sqrt(const Rational& q);
/// sqrt(q)/2 to 12 significant digits.
std::string decimal_half_sqrt(const Rational& q);

}  // namespace covspec
