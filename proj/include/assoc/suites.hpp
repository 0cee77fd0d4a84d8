#pragma once

#include "assoc/assembler.hpp"

#include <string>
#include <vector>

namespace assoc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Rank of the span of every u*r*v (r a locality or 4T relation) in degree
/// d, by one-shot elimination of the whole spanning set. Independent of the
/// incremental construction inside ChordAlgebra.
std::size_t naive_ideal_rank(int strands, int degree);

/// Anti-symmetric primitives of degree d: a basis of the subspace of Lyndon
/// combinations with phi(X,Y) + phi(Y,X) = 0.
std::vector<Series> antisymmetric_primitive_basis(int degree);

/// Quotient dimensions compared against the naive span rank.
std::vector<CheckResult> dims_suite(int strands, int degree);
/// Kernel of dP inside kernel of dH2 for m >= 3; the known degree-2
/// exception (witness [X,Y], dH2 = 3[X,Y]) counts as a pass of expectation.
std::vector<CheckResult> lemma_suite(int from, int to, const ChordAlgebra& a4);
/// Four-permutation and permuto-associahedron identities on a basis sweep
/// of anti-symmetric primitives, plus the q/pi/i identities on Lyndon bases.
std::vector<CheckResult> identities_suite(int from, int to, const ChordAlgebras& algebras);
/// q, pi, the induced maps of the identities and the four permutations
/// kill the ideal through `max_degree`.
std::vector<CheckResult> welldefined_suite(int max_degree, const ChordAlgebras& algebras);
/// The p1/p2 consequences on every kernel element of dP.
std::vector<CheckResult> projections_suite(int from, int to, const ChordAlgebra& a4);
/// Pentagon-only build through n and its hexagon residuals.
std::vector<CheckResult> theorem_suite(int n, const ChordAlgebras& algebras);

}  // namespace assoc
