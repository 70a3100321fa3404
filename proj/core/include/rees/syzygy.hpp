#pragma once

#include <optional>
#include <vector>

#include "rees/graded_matrix.hpp"

namespace rees {

struct SigmaInvariants {
  std::vector<int> sigma;  // nonincreasing
  int r = 0;               // number of positive entries
  int s = 0;

  static SigmaInvariants from_sigma(std::vector<int> sigma);
  int weight(const std::vector<int>& alpha) const;
  bool operator==(const SigmaInvariants&) const = default;
};

/// f_i = (-1)^(i+1) det(phi without row i), i = 1..n. Validates the grading,
/// that no entry has a constant term, and that the minors have no common
/// factor.
template <class K>
std::vector<Poly<K>> signed_maximal_minors(const GradedMatrix<K>& phi);

/// gcd of homogeneous forms in x0, x1, monic in the dehomogenized variable.
/// Zero inputs are ignored; all zero gives zero.
template <class K>
Poly<K> homogeneous_gcd(const std::vector<Poly<K>>& forms);

/// Minimal homogeneous generators of ker M, as the columns of the result.
/// Degree ell is searched for ell up to `degree_budget`; at each degree the
/// new generators are the reduced row echelon basis (pivots taken from the
/// right) of the kernel modulo multiples of earlier generators.
template <class K>
GradedMatrix<K> graded_kernel(const GradedMatrix<K>& M, int expected_rank, int degree_budget,
                              std::optional<int> expected_degree_sum = std::nullopt);

/// The s x n matrix xi with rows sorted by degree (nonincreasing), whose
/// transpose generates ker phi_m^T; the row twists are the sigma invariants.
template <class K>
GradedMatrix<K> embedding_matrix(const GradedMatrix<K>& phi, int m);

template <class K>
SigmaInvariants sigma_invariants(const GradedMatrix<K>& phi, int m);

template <class K>
struct ScrollMatrix {
  RingPtr<K> ring;                      // the Gamma ring
  std::vector<std::vector<Poly<K>>> gamma;  // 2 rows
  std::vector<Poly<K>> minors;          // all 2 x 2 minors, column pairs in lex order
};

template <class K>
ScrollMatrix<K> scroll_matrix(const K& field, const SigmaInvariants& sigma);

}  // namespace rees
