#include "covspec/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "covspec/errors.hpp"

namespace covspec {

bool is_positive_definite(const RationalMatrix& gram) {
  RationalMatrix a = gram;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    // After eliminating the first k columns, a[k][k] is the ratio of
    // consecutive leading principal minors.
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

LatticeForm::LatticeForm(RationalMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  const std::size_t n = gram_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw ValidationError("gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw ValidationError("gram matrix is not symmetric");
    }
  }
  if (!is_positive_definite(gram_)) throw ValidationError("gram matrix is not positive definite");
}

Rational LatticeForm::inner(const IntVector& a, const IntVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw DomainError("vector length does not match lattice rank");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (b[j] != 0) row += gram_[i][j] * b[j];
    }
    s += row * a[i];
  }
  return s;
}

Rational LatticeForm::norm2(const IntVector& v) const { return inner(v, v); }

LatticeForm LatticeForm::scaled(const Rational& c) const {
  if (c <= 0) throw DomainError("scale must be positive");
  RationalMatrix g = gram_;
  for (auto& row : g) {
    for (auto& x : row) x *= c;
  }
  return LatticeForm(std::move(g), name_);
}

Sublattice::Sublattice(std::size_t ambient_rank, IntMatrix hnf_basis)
    : ambient_rank_(ambient_rank), basis_(std::move(hnf_basis)) {}

std::optional<Integer> Sublattice::index() const {
  if (!is_full_rank()) return std::nullopt;
  return hnf_determinant(basis_);
}

bool Sublattice::contains(const IntVector& v) const { return hnf_coordinates(basis_, v).has_value(); }

bool Sublattice::is_whole() const {
  auto idx = index();
  return idx && *idx == 1;
}

Sublattice sublattice_generated(std::size_t ambient_rank, const std::vector<IntVector>& vectors) {
  return Sublattice(ambient_rank, hermite_normal_form(vectors, ambient_rank));
}

namespace {

// Fincke-Pohst quadratic form: norm(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2.
std::vector<std::vector<double>> pohst_form(const RationalMatrix& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i][j] = gram[i][j].get_d();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }
  return q;
}

// Exact norm with an integer matrix and common denominator.
struct ExactNorm {
  std::vector<std::vector<Integer>> m;
  Integer denominator = 1;

  explicit ExactNorm(const RationalMatrix& gram) {
    for (const auto& row : gram) {
      for (const auto& x : row) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), x.get_den_mpz_t());
    }
    m.assign(gram.size(), std::vector<Integer>(gram.size()));
    for (std::size_t i = 0; i < gram.size(); ++i) {
      for (std::size_t j = 0; j < gram.size(); ++j) m[i][j] = gram[i][j].get_num() * (denominator / gram[i][j].get_den());
    }
  }

  Rational operator()(const std::vector<long>& x) const {
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      Integer row = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] != 0) row += m[i][j] * x[j];
      }
      s += row * x[i];
    }
    Rational r(s, denominator);
    r.canonicalize();
    return r;
  }
};

IntVector to_int_vector(const std::vector<long>& x) {
  IntVector v;
  v.reserve(x.size());
  for (long e : x) v.emplace_back(e);
  return v;
}

bool positive_representative(const IntVector& v) {
  for (const auto& x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

}  // namespace

std::vector<ShortVector> short_vectors(const LatticeForm& l, const Rational& bound, const ShortVectorOptions& options) {
  if (bound <= 0) throw DomainError("short vector bound must be positive");
  const std::size_t n = l.rank();
  std::vector<ShortVector> out;
  if (n == 0) return out;
  const auto q = pohst_form(l.gram());
  const ExactNorm exact(l.gram());
  const double limit = bound.get_d() * (1.0 + 1e-9) + 1e-12;

  std::vector<long> x(n, 0);
  std::function<void(std::size_t, double)> search = [&](std::size_t level, double remaining) {
    const std::size_t i = level - 1;
    double center = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<double>(x[j]);
    const double radius = std::sqrt(std::max(remaining, 0.0) / q[i][i]) + 1e-9;
    const long lo = static_cast<long>(std::ceil(center - radius));
    const long hi = static_cast<long>(std::floor(center + radius));
    for (long v = lo; v <= hi; ++v) {
      x[i] = v;
      const double t = static_cast<double>(v) - center;
      const double rest = remaining - q[i][i] * t * t;
      if (rest < -1e-9 * (1.0 + limit)) continue;
      if (i > 0) {
        search(i, rest);
        continue;
      }
      bool zero = std::all_of(x.begin(), x.end(), [](long e) { return e == 0; });
      if (zero) continue;
      Rational nv = exact(x);
      if (nv > bound) continue;
      if (out.size() >= options.max_vectors) {
        throw CapacityError("short vector enumeration exceeds " + std::to_string(options.max_vectors) + " vectors");
      }
      out.push_back({to_int_vector(x), std::move(nv)});
    }
    x[i] = 0;
  };
  search(n, limit);
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
    return a.v < b.v;
  });
  return out;
}

namespace {

std::size_t count_units(const std::vector<Integer>& invariants) {
  return static_cast<std::size_t>(std::count(invariants.begin(), invariants.end(), Integer(1)));
}

// Least number of candidates that extend `strict` to `closed`.
struct MultiplicitySearch {
  std::size_t n;
  const IntMatrix& strict;
  const IntMatrix& closed;
  const std::vector<IntVector>& candidates;

  bool generates(const std::vector<std::size_t>& chosen) const {
    IntMatrix rows = strict;
    for (auto c : chosen) rows.push_back(candidates[c]);
    return hermite_normal_form(std::move(rows), n) == closed;
  }

  std::size_t greedy() const {
    IntMatrix current = strict;
    std::size_t count = 0;
    for (const auto& v : candidates) {
      if (current == closed) break;
      if (hnf_coordinates(current, v)) continue;
      current.push_back(v);
      current = hermite_normal_form(std::move(current), n);
      ++count;
    }
    return count;
  }

  bool exists_of_size(std::size_t k) const {
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
      if (chosen.size() == k) return generates(chosen);
      for (std::size_t c = start; c + (k - chosen.size()) <= candidates.size(); ++c) {
        chosen.push_back(c);
        if (rec(c + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    return rec(0);
  }
};

}  // namespace

CovSpecReport covering_spectrum_torus(const LatticeForm& l, const CovSpecOptions& options) {
  const std::size_t n = l.rank();
  CovSpecReport report;
  if (n == 0) return report;
  Rational bound = l.gram()[0][0];
  for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, l.gram()[i][i]);
  IntMatrix current;
  Rational processed = 0;
  for (;;) {
    const auto vecs = short_vectors(l, bound, options.enumeration);
    std::size_t i = 0;
    while (i < vecs.size()) {
      const Rational q = vecs[i].norm2;
      std::vector<IntVector> shell;
      for (; i < vecs.size() && vecs[i].norm2 == q; ++i) {
        if (positive_representative(vecs[i].v)) shell.push_back(vecs[i].v);
      }
      if (q <= processed) continue;
      IntMatrix rows = current;
      rows.insert(rows.end(), shell.begin(), shell.end());
      IntMatrix closed = hermite_normal_form(std::move(rows), n);
      if (closed == current) continue;

      TorusJump jump;
      jump.q = q;
      jump.new_rank = closed.size();
      IntMatrix strict_coords;
      for (const auto& row : current) strict_coords.push_back(*hnf_coordinates(closed, row));
      const auto invariants = smith_invariants(strict_coords);
      jump.snf_multiplicity = closed.size() - count_units(invariants);

      const MultiplicitySearch search{n, current, closed, shell};
      const std::size_t greedy = search.greedy();
      jump.multiplicity = greedy;
      if (greedy != jump.snf_multiplicity) {
        if (shell.size() > options.multiplicity_cap) {
          jump.finding = "greedy extension needs " + std::to_string(greedy) + " vectors, quotient needs " +
                         std::to_string(jump.snf_multiplicity) + "; exhaustive search skipped (" +
                         std::to_string(shell.size()) + " candidates)";
        } else {
          for (std::size_t k = jump.snf_multiplicity; k < greedy; ++k) {
            if (search.exists_of_size(k)) {
              jump.multiplicity = k;
              break;
            }
          }
          if (jump.multiplicity != jump.snf_multiplicity) {
            jump.finding = "vectors of this length need " + std::to_string(jump.multiplicity) +
                           " generators, the quotient needs only " + std::to_string(jump.snf_multiplicity);
          }
        }
      }
      current = std::move(closed);
      if (current.size() == n) jump.new_index = hnf_determinant(current);
      jump.basis = current;
      report.jumps.push_back(std::move(jump));
      if (current.size() == n && hnf_determinant(current) == 1) {
        report.bound_used = bound;
        return report;
      }
    }
    processed = bound;
    bound *= 2;
  }
}

std::vector<Rational> jump_values_by_definition(const LatticeForm& l, const Rational& bound,
                                                const ShortVectorOptions& options) {
  const std::size_t n = l.rank();
  const auto vecs = short_vectors(l, bound, options);
  std::vector<Rational> values;
  for (const auto& sv : vecs) {
    if (values.empty() || values.back() != sv.norm2) values.push_back(sv.norm2);
  }
  std::vector<Rational> jumps;
  for (const auto& v : values) {
    std::vector<IntVector> below, upto;
    for (const auto& sv : vecs) {
      if (!positive_representative(sv.v)) continue;
      if (sv.norm2 < v) below.push_back(sv.v);
      if (sv.norm2 <= v) upto.push_back(sv.v);
    }
    if (sublattice_generated(n, below) != sublattice_generated(n, upto)) jumps.push_back(v);
  }
  return jumps;
}

std::vector<Rational> successive_minima(const LatticeForm& l, const CovSpecOptions& options) {
  std::vector<Rational> minima;
  std::size_t rank = 0;
  for (const auto& j : covering_spectrum_torus(l, options).jumps) {
    for (; rank < j.new_rank; ++rank) minima.push_back(j.q);
  }
  return minima;
}

std::map<Rational, std::size_t> theta_prefix(const LatticeForm& l, const Rational& bound,
                                             const ShortVectorOptions& options) {
  if (bound < 0) throw DomainError("theta bound must be non-negative");
  std::map<Rational, std::size_t> counts{{Rational(0), 1}};
  if (bound == 0 || l.rank() == 0) return counts;
  for (const auto& sv : short_vectors(l, bound, options)) ++counts[sv.norm2];
  return counts;
}

LatticeForm restrict_form(const LatticeForm& l, const IntMatrix& basis, std::string name) {
  RationalMatrix g(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      g[i][j] = l.inner(basis[i], basis[j]);
      g[j][i] = g[i][j];
    }
  }
  return LatticeForm(std::move(g), std::move(name));
}

LatticeForm group_ring_form(const std::array<Rational, 4>& weights) {
  static constexpr int t[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (const auto& w : weights) {
    if (w <= 0) throw DomainError("weights must be positive");
  }
  RationalMatrix g(4, std::vector<Rational>(4, 0));
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      for (int i = 0; i < 4; ++i) g[j][k] += weights[i] * t[i][j] * t[i][k] / 3;
    }
  }
  return LatticeForm(std::move(g), "Z[V4]");
}

ConwaySloanePair conway_sloane_pair(const std::array<Rational, 4>& weights) {
  const auto a = group_ring_form(weights);
  auto lattice = [](IntVector u, IntVector w) {
    IntMatrix rows;
    for (int i = 0; i < 4; ++i) {
      IntVector e(4, 0);
      e[i] = 3;
      rows.push_back(std::move(e));
    }
    rows.push_back(std::move(u));
    rows.push_back(std::move(w));
    return hermite_normal_form(std::move(rows), 4);
  };
  auto hb = lattice({0, 1, 1, 1}, {1, 0, -1, 1});
  auto hpb = lattice({1, 1, 1, 0}, {1, 0, -1, 1});
  auto h = restrict_form(a, hb, "H");
  auto hp = restrict_form(a, hpb, "H'");
  return {std::move(h), std::move(hp), std::move(hb), std::move(hpb)};
}

std::pair<LatticeForm, LatticeForm> half_sum_extension(const std::vector<Rational>& squared_lengths) {
  const std::size_t n = squared_lengths.size();
  if (n == 0) throw DomainError("need at least one basis vector");
  RationalMatrix g(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = squared_lengths[i];
  // Basis e_1, ..., e_{n-1}, v with v = (e_1 + ... + e_n) / 2.
  RationalMatrix gp = g;
  Rational vv = 0;
  for (const auto& s : squared_lengths) vv += s;
  vv /= 4;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gp[i][n - 1] = squared_lengths[i] / 2;
    gp[n - 1][i] = gp[i][n - 1];
  }
  gp[n - 1][n - 1] = vv;
  return {LatticeForm(std::move(g), "L"), LatticeForm(std::move(gp), "L'")};
}

namespace {

// n = k^2 r with r squarefree (up to an unfactored cofactor).
std::pair<Integer, Integer> square_split(Integer n) {
  Integer k = 1, r = 1;
  for (unsigned long p = 2; p < 1'000'000 && Integer(p) * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) r *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      k *= s;
    } else {
      r *= n;
    }
  }
  return {k, r};
}

}  // namespace

std::string render_half_sqrt(const Rational& q) {
  if (q < 0) throw DomainError("squared length must be non-negative");
  if (q == 0) return "0";
  const Integer b = q.get_den();
  auto [k, r] = square_split(q.get_num() * b);
  Rational coeff(k, 2 * b);
  coeff.canonicalize();
  if (r == 1) return to_string(coeff);
  std::string out;
  if (coeff.get_num() != 1) out += coeff.get_num().get_str();
  out += "√" + r.get_str();
  if (coeff.get_den() != 1) out += "/" + coeff.get_den().get_str();
  return out;
}

std::string decimal_half_sqrt(const Rational& q) { return to_decimal(std::sqrt(q.get_d()) / 2.0, 12); }

}  // namespace covspec
