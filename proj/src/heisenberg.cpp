#include "covspec/heisenberg.hpp"

#include <algorithm>
#include <set>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

Rational determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

std::vector<Rational> torus_values(const LatticeForm& l, const CovSpecOptions& options) {
  std::vector<Rational> out;
  for (const auto& j : covering_spectrum_torus(l, options).jumps) out.push_back(j.q);
  return out;
}

std::vector<Rational> with_center(const std::vector<Rational>& torus, const Rational& z) {
  std::vector<Rational> out = torus;
  if (!torus.empty() && z < torus.front()) out.insert(out.begin(), z);
  return out;
}

}  // namespace

std::vector<std::string> validate_heisenberg(const HeisenbergDatum& d) {
  std::vector<std::string> problems;
  const std::size_t n = d.lattice.rank();
  if (n % 2 != 0) problems.push_back("lattice rank " + std::to_string(n) + " is odd");
  if (d.omega.size() != n || std::any_of(d.omega.begin(), d.omega.end(), [&](const IntVector& r) { return r.size() != n; })) {
    problems.push_back("omega must be " + std::to_string(n) + " x " + std::to_string(n));
    return problems;
  }
  if (d.c <= 0) problems.push_back("c must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (d.omega[i][j] != -d.omega[j][i]) {
        problems.push_back("omega is not skew at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  if (determinant(d.omega) == 0) problems.push_back("omega is degenerate");
  if (d.c > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational ratio = Rational(d.omega[i][j]) / d.c;
        if (ratio.get_den() != 1) {
          problems.push_back("omega(b" + std::to_string(i) + ", b" + std::to_string(j) + ") = " +
                             to_string(d.omega[i][j]) + " is not in " + to_string(d.c) + "Z");
        }
      }
    }
  }
  if (const auto* k = std::get_if<KnownDelta>(&d.delta_z); k && k->q <= 0) {
    problems.push_back("known central length must be positive");
  }
  return problems;
}

IntMatrix standard_symplectic(std::size_t n) {
  IntMatrix j(2 * n, IntVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    j[i][n + i] = 1;
    j[n + i][i] = -1;
  }
  return j;
}

IntMatrix transport_form(const IntMatrix& form, const IntMatrix& basis) {
  const std::size_t k = basis.size();
  const std::size_t n = form.size();
  IntMatrix out(k, IntVector(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (basis[a][i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) s += basis[a][i] * form[i][j] * basis[b][j];
      }
      out[a][b] = s;
    }
  }
  return out;
}

CovSpecSet covspec_heisenberg(const HeisenbergDatum& d, const CovSpecOptions& options) {
  if (auto problems = validate_heisenberg(d); !problems.empty()) {
    throw ValidationError("invalid Heisenberg datum: " + problems.front());
  }
  CovSpecSet out;
  out.rational_entries = torus_values(d.lattice, options);
  out.delta_t = out.rational_entries.front();
  if (const auto* k = std::get_if<KnownDelta>(&d.delta_z)) {
    if (k->q < out.delta_t) {
      out.rational_entries.insert(out.rational_entries.begin(), k->q);
    } else if (k->q == out.delta_t) {
      out.boundary = true;
    }
  } else {
    out.symbolic_entry = std::get<SymbolicDelta>(d.delta_z).tag;
    out.conditional = true;
  }
  return out;
}

SpectrumComparison covspec_equal_heisenberg(const HeisenbergDatum& a, const HeisenbergDatum& b,
                                            const CovSpecOptions& options) {
  const auto* ka = std::get_if<KnownDelta>(&a.delta_z);
  const auto* kb = std::get_if<KnownDelta>(&b.delta_z);
  if (ka && kb) {
    const auto x = covspec_heisenberg(a, options);
    const auto y = covspec_heisenberg(b, options);
    const bool eq = x.rational_entries == y.rational_entries;
    return {eq, eq ? "equal covering spectra" : "covering spectra differ"};
  }
  if (ka || kb) throw DomainError("incomparable central lengths: one known, one symbolic");
  const auto& ta = std::get<SymbolicDelta>(a.delta_z).tag;
  const auto& tb = std::get<SymbolicDelta>(b.delta_z).tag;
  if (ta != tb) throw DomainError("incomparable central lengths: tags '" + ta + "' and '" + tb + "'");
  for (const auto* d : {&a, &b}) {
    if (auto problems = validate_heisenberg(*d); !problems.empty()) {
      throw ValidationError("invalid Heisenberg datum: " + problems.front());
    }
  }

  const auto ta_values = torus_values(a.lattice, options);
  const auto tb_values = torus_values(b.lattice, options);
  if (ta_values == tb_values) return {true, "torus covering spectra agree, so the central entry is added to both or neither"};

  // The outcome only changes at torus values; try each one and a point inside
  // every gap between them.
  std::set<Rational> marks(ta_values.begin(), ta_values.end());
  marks.insert(tb_values.begin(), tb_values.end());
  std::vector<Rational> probes;
  Rational previous = 0;
  for (const auto& m : marks) {
    probes.push_back((previous + m) / 2);
    probes.push_back(m);
    previous = m;
  }
  probes.push_back(previous + 1);
  bool any_equal = false, any_different = false;
  for (const auto& z : probes) {
    if (with_center(ta_values, z) == with_center(tb_values, z)) {
      any_equal = true;
    } else {
      any_different = true;
    }
  }
  if (any_equal && any_different) {
    throw DomainError("comparison depends on the unknown central length '" + ta + "'");
  }
  if (any_equal) return {true, "equal for every value of the central length"};
  if (ta_values.front() == tb_values.front()) {
    return {false, "equal least torus values but different torus covering spectra"};
  }
  return {false, "different for every value of the central length"};
}

}  // namespace covspec
