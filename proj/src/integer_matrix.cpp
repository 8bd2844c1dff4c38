#include "covspec/integer_matrix.hpp"

#include <algorithm>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

// Replaces rows a, b by a unimodular combination so that b[col] becomes 0
// and a[col] becomes gcd(a[col], b[col]).
// When a[col] already divides b[col] this is plain elimination, which keeps
// the pivot row fixed; gcdext may otherwise swap the rows and Smith reduction
// can cycle.
void gcd_coefficients(const Integer& x, const Integer& y, Integer& g, Integer& s, Integer& t) {
  if (x != 0 && y % x == 0) {
    g = x;
    s = 1;
    t = 0;
    return;
  }
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

void gcd_rows(IntVector& a, IntVector& b, std::size_t col) {
  Integer g, s, t;
  gcd_coefficients(a[col], b[col], g, s, t);
  const Integer u = a[col] / g;
  const Integer v = b[col] / g;
  for (std::size_t j = col; j < a.size(); ++j) {
    const Integer x = a[j], y = b[j];
    a[j] = s * x + t * y;
    b[j] = u * y - v * x;
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns) {
  for (const auto& r : rows) {
    if (r.size() != columns) throw DomainError("matrix rows have inconsistent lengths");
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < columns && pivot_row < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t i = pivot_row; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (rows[i][col] != 0) gcd_rows(rows[pivot_row], rows[i], col);
    }
    if (rows[pivot_row][col] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    const Integer& p = rows[pivot_row][col];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const Integer f = floor_div(rows[i][col], p);
      if (f == 0) continue;
      for (std::size_t j = col; j < columns; ++j) rows[i][j] -= f * rows[pivot_row][j];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t r = m.size();
  const std::size_t c = r == 0 ? 0 : m[0].size();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < r && t < c) {
    // Bring a smallest nonzero entry of the remaining block to (t, t).
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i) {
      for (std::size_t j = t; j < c; ++j) {
        if (m[i][j] != 0 && (pi == r || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == r) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m[i][t] == 0) continue;
        gcd_rows(m[t], m[i], t);
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m[t][j] == 0) continue;
        // Column version of gcd_rows.
        Integer g, s, u;
        gcd_coefficients(m[t][t], m[t][j], g, s, u);
        const Integer a = m[t][t] / g, b = m[t][j] / g;
        for (std::size_t i = t; i < r; ++i) {
          const Integer x = m[i][t], y = m[i][j];
          m[i][t] = s * x + u * y;
          m[i][j] = a * y - b * x;
        }
        clean = false;
      }
      if (!clean) continue;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m[i][t] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      for (std::size_t i = t + 1; i < r && clean; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < c; ++k) m[t][k] += m[i][k];
            clean = false;
            break;
          }
        }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

std::optional<IntVector> hnf_coordinates(const IntMatrix& basis, const IntVector& v) {
  IntVector rest = v;
  IntVector x(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t col = 0;
    while (basis[i][col] == 0) ++col;
    for (std::size_t j = 0; j < col; ++j) {
      if (rest[j] != 0) return std::nullopt;
    }
    if (rest[col] % basis[i][col] != 0) return std::nullopt;
    x[i] = rest[col] / basis[i][col];
    for (std::size_t j = col; j < rest.size(); ++j) rest[j] -= x[i] * basis[i][j];
  }
  for (const auto& e : rest) {
    if (e != 0) return std::nullopt;
  }
  return x;
}

Integer hnf_determinant(const IntMatrix& basis) {
  Integer d = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) d *= basis[i][i];
  return d;
}

}  // namespace covspec
