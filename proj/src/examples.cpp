#include "covspec/examples.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

using Cycles = std::vector<std::vector<Point>>;

Permutation cycles(std::size_t degree, const Cycles& c) { return Permutation::from_cycles(degree, c); }

ElementSet element_set(std::size_t degree, std::vector<Permutation> members) {
  std::sort(members.begin(), members.end());
  return ElementSet::generated_by(degree, generating_set(members), members.size());
}

ElementSet image_set(const RegularRepresentation& reg, const FiniteGroup& source) {
  std::vector<Permutation> gens;
  for (const auto& g : source.generators()) gens.push_back(reg.image_of[source.require_index(g)]);
  return ElementSet::generated_by(source.order(), std::move(gens), source.order());
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

int primitive_root(int q) {
  for (int w = 1; w < q; ++w) {
    int x = 1, ord = 0;
    do {
      x = x * w % q;
      ++ord;
    } while (x != 1);
    if (ord == q - 1) return w;
  }
  return 1;
}

// Vectors of F_q^d coded as sum x_i q^i.
struct FiniteSpace {
  int q;
  int d;
  int size;

  FiniteSpace(int q_, int d_) : q(q_), d(d_), size(1) {
    if (!is_prime(q)) throw DomainError("field size must be prime, got " + std::to_string(q));
    if (d < 1) throw DomainError("dimension must be positive");
    for (int i = 0; i < d; ++i) size *= q;
  }

  std::vector<int> decode(int code) const {
    std::vector<int> x(d);
    for (int i = 0; i < d; ++i, code /= q) x[i] = code % q;
    return x;
  }
  int encode(const std::vector<int>& x) const {
    int code = 0;
    for (int i = d - 1; i >= 0; --i) code = code * q + ((x[i] % q) + q) % q;
    return code;
  }
  int add(int a, int b) const {
    auto x = decode(a), y = decode(b);
    for (int i = 0; i < d; ++i) x[i] += y[i];
    return encode(x);
  }
  int sub(int a, int b) const {
    auto x = decode(a), y = decode(b);
    for (int i = 0; i < d; ++i) x[i] -= y[i];
    return encode(x);
  }
  int first(int code) const { return code % q; }
  int unit(int i) const {
    int c = 1;
    for (int j = 0; j < i; ++j) c *= q;
    return c;
  }

  using Matrix = std::vector<std::vector<int>>;

  int apply(const Matrix& m, int code) const {
    const auto x = decode(code);
    std::vector<int> y(d, 0);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) y[i] += m[i][j] * x[j];
    }
    return encode(y);
  }

  std::vector<Matrix> gl_generators() const {
    std::vector<Matrix> gens;
    auto identity = [&] {
      Matrix m(d, std::vector<int>(d, 0));
      for (int i = 0; i < d; ++i) m[i][i] = 1;
      return m;
    };
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        auto m = identity();
        m[i][j] = 1;
        gens.push_back(std::move(m));
      }
    }
    if (q > 2) {
      auto m = identity();
      m[0][0] = primitive_root(q);
      gens.push_back(std::move(m));
    }
    return gens;
  }

  // Action on nonzero vectors (point = code - 1).
  Permutation on_nonzero(const Matrix& m) const {
    std::vector<Point> images(size - 1);
    for (int c = 1; c < size; ++c) images[c - 1] = static_cast<Point>(apply(m, c) - 1);
    return Permutation(std::move(images));
  }
  // Affine action x -> m x + t on all vectors.
  Permutation affine(const Matrix& m, int t) const {
    std::vector<Point> images(size);
    for (int c = 0; c < size; ++c) images[c] = static_cast<Point>(add(apply(m, c), t));
    return Permutation(std::move(images));
  }
  Permutation translation(int t) const {
    std::vector<Point> images(size);
    for (int c = 0; c < size; ++c) images[c] = static_cast<Point>(add(c, t));
    return Permutation(std::move(images));
  }
};

GroupPtr affine_group(const FiniteSpace& v) {
  std::vector<Permutation> gens;
  for (int i = 0; i < v.d; ++i) gens.push_back(v.translation(v.unit(i)));
  for (const auto& m : v.gl_generators()) gens.push_back(v.affine(m, 0));
  return make_group(v.size, std::move(gens), "AGL(" + std::to_string(v.d) + "," + std::to_string(v.q) + ")");
}

// Linear part of an affine permutation, evaluated at x.
int linear_part(const FiniteSpace& v, const Permutation& g, int x) {
  return v.sub(static_cast<int>(g(static_cast<Point>(x))), static_cast<int>(g(0)));
}

bool fixes_e1(const std::function<int(int)>& lin) { return lin(1) == 1; }

bool fixes_functional(const FiniteSpace& v, const std::function<int(int)>& lin) {
  for (int x = 1; x < v.size; ++x) {
    if (v.first(lin(x)) != v.first(x)) return false;
  }
  return true;
}

}  // namespace

Triple a4_triple() {
  auto a4 = make_group(4, {cycles(4, {{0, 1, 2}}), cycles(4, {{0, 1}, {2, 3}})}, "A4");
  auto h = ElementSet::generated_by(4, {cycles(4, {{0, 1}, {2, 3}}), cycles(4, {{0, 2}, {1, 3}})});
  auto hp = ElementSet::generated_by(4, {cycles(4, {{0, 1}, {2, 3}})});
  return Triple("a4", ClassSystem::enumerated(a4), std::move(h), std::move(hp));
}

std::pair<Triple, Triple> c2a4_triple_and_quotient() {
  const Permutation c = cycles(6, {{4, 5}});
  auto g = make_group(6, {c, cycles(6, {{0, 1, 2}}), cycles(6, {{0, 1}, {2, 3}})}, "C2xA4");
  const std::vector<Permutation> h_gens{c, cycles(6, {{0, 1}, {2, 3}}), cycles(6, {{0, 2}, {1, 3}})};
  const std::vector<Permutation> hp_gens{c, cycles(6, {{0, 1}, {2, 3}})};
  Triple product("c2a4", ClassSystem::enumerated(g), ElementSet::generated_by(6, h_gens),
                 ElementSet::generated_by(6, hp_gens));

  const std::vector<Permutation> n_gens{c};
  const auto q = quotient(g, closure(g, n_gens));
  auto realized = q.realize("A4");
  auto h = ElementSet::from_subgroup(q.image(closure(g, h_gens), realized));
  auto hp = ElementSet::from_subgroup(q.image(closure(g, hp_gens), realized));
  Triple reduced("c2a4-quotient", ClassSystem::enumerated(realized), std::move(h), std::move(hp));
  return {std::move(product), std::move(reduced)};
}

Triple todd_triple() {
  auto c8 = cyclic_group(8);
  auto c2 = cyclic_group(2);
  auto h = direct_product(*c8, *c2);
  const auto reg = regular_representation(*h);
  auto hp = semidirect_product(*c8, *c2, {{power(c8->generators()[0], 5)}});
  return Triple("todd-s16", ClassSystem::cycle_type(16), image_set(reg, *h),
                ElementSet::generated_by(16, hp->generators(), 16));
}

std::pair<Triple, Triple> ecs_triples() {
  auto n = direct_product(*cyclic_group(4), *cyclic_group(2));
  const Permutation a = n->generators()[0];
  const Permutation b = n->generators()[1];
  auto c2 = cyclic_group(2);
  auto h = direct_product(*n, *c2);
  auto hp = semidirect_product(*n, *c2, {{a, power(a, 2) * b}});
  const auto reg_h = regular_representation(*h);
  const auto reg_hp = regular_representation(*hp);
  Triple s16("ecs-s16", ClassSystem::cycle_type(16), image_set(reg_h, *h), image_set(reg_hp, *hp));

  auto c4 = cyclic_group(4);
  auto h4 = direct_product(*h, *c4);
  auto hp4 = direct_product(*hp, *c4);
  const auto reg_h4 = regular_representation(*h4);
  const auto reg_hp4 = regular_representation(*hp4);
  Triple s64("ecs-s64", ClassSystem::cycle_type(64), image_set(reg_h4, *h4), image_set(reg_hp4, *hp4));
  return {std::move(s16), std::move(s64)};
}

GlTriple gl_triple(int q, int d) {
  const FiniteSpace v(q, d);
  std::vector<Permutation> gens;
  for (const auto& m : v.gl_generators()) gens.push_back(v.on_nonzero(m));
  const std::size_t degree = static_cast<std::size_t>(v.size - 1);
  auto gl = make_group(degree, std::move(gens), "GL(" + std::to_string(d) + "," + std::to_string(q) + ")");

  std::vector<Permutation> h, hp;
  for (const auto& g : gl->elements()) {
    auto lin = [&](int x) { return static_cast<int>(g(static_cast<Point>(x - 1))) + 1; };
    if (fixes_e1(lin)) h.push_back(g);
    if (fixes_functional(v, lin)) hp.push_back(g);
  }
  std::sort(h.begin(), h.end());
  std::sort(hp.begin(), hp.end());

  GlTriple out{Triple("gl-" + std::to_string(q) + "-" + std::to_string(d), ClassSystem::enumerated(gl),
                      element_set(degree, h), element_set(degree, hp)),
               false, d < 2 || (q == 2 && d == 2)};
  for (const auto& g : gl->elements()) {
    const auto gi = g.inverse();
    std::vector<Permutation> conj;
    conj.reserve(h.size());
    for (const auto& x : h) conj.push_back(g * x * gi);
    std::sort(conj.begin(), conj.end());
    if (conj == hp) {
      out.conjugate = true;
      break;
    }
  }
  return out;
}

Triple affine_triple(int q, int d) {
  const FiniteSpace v(q, d);
  auto g = affine_group(v);
  std::vector<Permutation> h, hp;
  for (const auto& x : g->elements()) {
    auto lin = [&](int y) { return linear_part(v, x, y); };
    if (fixes_e1(lin)) h.push_back(x);
    if (fixes_functional(v, lin)) hp.push_back(x);
  }
  const auto degree = static_cast<std::size_t>(v.size);
  return Triple("affine-" + std::to_string(q) + "-" + std::to_string(d), ClassSystem::enumerated(g),
                element_set(degree, std::move(h)), element_set(degree, std::move(hp)));
}

bool valid_edge_triple(std::array<int, 3> edges) {
  for (int e : edges) {
    if (e < 0 || e >= 6) return false;
  }
  if (edges[0] == edges[1] || edges[0] == edges[2] || edges[1] == edges[2]) return false;
  auto disjoint = [](int x, int y) {
    const auto& a = tetrahedron_edges[x];
    const auto& b = tetrahedron_edges[y];
    return a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
  };
  return disjoint(edges[0], edges[1]) || disjoint(edges[0], edges[2]) || disjoint(edges[1], edges[2]);
}

Triple tetrahedron_triple(std::array<int, 3> eprime) {
  if (!valid_edge_triple(eprime)) throw DomainError("E' must be three edges including two disjoint ones");
  constexpr std::size_t degree = 12;
  auto flip = [](unsigned mask) {
    std::vector<Point> images(degree);
    for (Point e = 0; e < 6; ++e) {
      const bool f = (mask >> e) & 1u;
      images[2 * e] = 2 * e + (f ? 1 : 0);
      images[2 * e + 1] = 2 * e + (f ? 0 : 1);
    }
    return Permutation(std::move(images));
  };
  auto vertex_action = [](std::array<int, 4> pi) {
    std::vector<Point> images(degree);
    for (Point e = 0; e < 6; ++e) {
      int a = pi[tetrahedron_edges[e][0]], b = pi[tetrahedron_edges[e][1]];
      if (a > b) std::swap(a, b);
      Point target = 0;
      for (Point f = 0; f < 6; ++f) {
        if (tetrahedron_edges[f][0] == a && tetrahedron_edges[f][1] == b) target = f;
      }
      images[2 * e] = 2 * target;
      images[2 * e + 1] = 2 * target + 1;
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (unsigned e = 0; e < 5; ++e) gens.push_back(flip((1u << e) | (1u << 5)));
  gens.push_back(vertex_action({1, 2, 0, 3}));
  gens.push_back(vertex_action({1, 0, 3, 2}));
  auto g = make_group(degree, std::move(gens), "W:A4");

  std::vector<Permutation> h, hp;
  for (unsigned w = 0; w < 64; ++w) {
    if (std::popcount(w) % 2 != 0) continue;
    if ((w & 1u) == 0) h.push_back(flip(w));
    unsigned s = 0;
    for (int e : eprime) s ^= (w >> e) & 1u;
    if (s == 0) hp.push_back(flip(w));
  }
  return Triple("tetrahedron", ClassSystem::enumerated(g), element_set(degree, std::move(h)),
                element_set(degree, std::move(hp)));
}

Triple translation_triple(int q, int d1, int d2, int d) {
  const FiniteSpace v(q, d);
  if (d1 < 0 || d2 < 0 || d1 > d || d2 > d) throw DomainError("translation subgroup dimension out of range");
  const auto degree = static_cast<std::size_t>(v.size);
  auto span = [&](int k) {
    std::vector<Permutation> gens;
    for (int i = 0; i < k; ++i) gens.push_back(v.translation(v.unit(i)));
    return ElementSet::generated_by(degree, std::move(gens));
  };
  std::vector<Permutation> translations;
  for (int t = 1; t < v.size; ++t) translations.push_back(v.translation(t));
  return Triple("translation-" + std::to_string(q) + "-" + std::to_string(d1) + "-" + std::to_string(d2),
                ClassSystem::custom_from_classes(degree, {translations},
                                                 "all nontrivial translations are conjugate in V x| GL(V)"),
                span(d1), span(d2));
}

namespace {

// Point (h, r) of the 4m points is h*m + r; V4 elements are 2-bit codes
// (1, sigma, tau, rho) = (0, 1, 2, 3) multiplying by xor.
Permutation block_translation(int m, const std::array<int, 4>& a) {
  std::vector<Point> images(4 * m);
  for (int h = 0; h < 4; ++h) {
    for (int r = 0; r < m; ++r) images[h * m + r] = static_cast<Point>(h * m + ((r + a[h]) % m + m) % m);
  }
  return Permutation(std::move(images));
}

Permutation block_shift(int m, int g) {
  std::vector<Point> images(4 * m);
  for (int h = 0; h < 4; ++h) {
    for (int r = 0; r < m; ++r) images[h * m + r] = static_cast<Point>((g ^ h) * m + r);
  }
  return Permutation(std::move(images));
}

}  // namespace

GroupPtr tori_ambient(int modulus) {
  if (modulus < 2) throw DomainError("modulus must be at least 2");
  std::vector<Permutation> gens;
  for (int h = 0; h < 4; ++h) {
    std::array<int, 4> a{0, 0, 0, 0};
    a[h] = 1;
    gens.push_back(block_translation(modulus, a));
  }
  gens.push_back(block_shift(modulus, 1));
  gens.push_back(block_shift(modulus, 2));
  return make_group(4 * modulus, std::move(gens), "(Z/" + std::to_string(modulus) + ")^4:V4");
}

Triple tori_quotient_triple(int modulus) {
  auto g = tori_ambient(modulus);
  const int m = modulus;
  std::vector<Permutation> three_a;
  for (int h = 0; h < 4; ++h) {
    std::array<int, 4> a{0, 0, 0, 0};
    a[h] = 3;
    three_a.push_back(block_translation(m, a));
  }
  auto lattice = [&](std::array<int, 4> u, std::array<int, 4> w) {
    auto gens = three_a;
    gens.push_back(block_translation(m, u));
    gens.push_back(block_translation(m, w));
    return ElementSet::generated_by(4 * m, std::move(gens));
  };
  // Coordinates in the basis 1, sigma, tau, rho.
  auto h = lattice({0, 1, 1, 1}, {1, 0, -1, 1});
  auto hp = lattice({1, 1, 1, 0}, {1, 0, -1, 1});
  return Triple("tori-mod" + std::to_string(m), ClassSystem::enumerated(g), std::move(h), std::move(hp));
}

RestrictionGap restriction_gap_instance() {
  auto s3 = make_group(3, {cycles(3, {{0, 1}}), cycles(3, {{0, 1, 2}})}, "S3");
  std::vector<Rational> values;
  for (const auto& g : s3->elements()) {
    const auto ord = element_order(g);
    values.emplace_back(ord == 1 ? 0 : ord == 2 ? 1 : 2);
  }
  const std::vector<Permutation> a3_gens{cycles(3, {{0, 1, 2}})};
  return {LengthMap(s3, std::move(values)), closure(s3, a3_gens), Rational(3, 2)};
}

}  // namespace covspec
