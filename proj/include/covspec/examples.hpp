#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "covspec/class_system.hpp"
#include "covspec/length_map.hpp"

namespace covspec {

/// (A4, V4, C2) on 4 points.
Triple a4_triple();

/// (C2 x A4, C2 x V4, C2 x C2) and its reduction by C2 x 1.
std::pair<Triple, Triple> c2a4_triple_and_quotient();

/// C8 x C2 and C8 x| C2 (fifth powers) in their regular representations, under
/// cycle-type labelling of S16.
Triple todd_triple();

/// N = C4 x C2 = <a, b>; H = N x <c>, H' = N x| <c> with c: a -> a, b -> a^2 b.
/// First: regular representations in S16. Second: H x C4 and H' x C4 in S64.
std::pair<Triple, Triple> ecs_triples();

/// GL(d, q) on the nonzero vectors of F_q^d with H the stabilizer of e1 and H'
/// the stabilizer of the first coordinate functional. q must be prime.
struct GlTriple {
  Triple triple;
  bool conjugate = false;      // H and H' conjugate in GL(d, q)
  bool excluded_case = false;  // d < 2 or (q, d) == (2, 2)
};
GlTriple gl_triple(int q = 2, int d = 3);

/// (V x| GL(V), V x| H, V x| H') on the points of V = F_q^d.
Triple affine_triple(int q = 2, int d = 3);

/// Edges of the tetrahedron on vertices 0..3, numbered lexicographically:
/// 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::array<int, 2>, 6> tetrahedron_edges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// True when the three edges are distinct and include two disjoint ones.
bool valid_edge_triple(std::array<int, 3> edges);

/// G = W x| A4 on 12 points (edge, bit), W the even-weight subspace of F_2^E.
/// H = {w : w_01 = 0}; H' = {w : sum of w over E' = 0}.
Triple tetrahedron_triple(std::array<int, 3> eprime = {0, 5, 1});

/// Translation subgroups of dimensions d1 and d2 inside V x| GL(V), V = F_q^d.
/// Labels are custom: every nontrivial translation shares one class.
Triple translation_triple(int q = 2, int d1 = 1, int d2 = 2, int d = 3);

/// The ambient (Z/m)^4 x| V4 on 4m points, V4 permuting the four coordinate
/// blocks by its regular action.
GroupPtr tori_ambient(int modulus);
/// Images of the two index-9 lattices in (Z/m)^4 x| V4.
Triple tori_quotient_triple(int modulus);

/// A length map on S3 with short transpositions, and A3: filtrating inside A3
/// differs from intersecting the filtration of S3 with A3.
struct RestrictionGap {
  LengthMap map;
  Subgroup subgroup;
  Rational delta;
};
RestrictionGap restriction_gap_instance();

}  // namespace covspec
