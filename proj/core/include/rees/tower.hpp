#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rees/gradedlin.hpp"
#include "rees/graded_matrix.hpp"
#include "rees/matrix.hpp"
#include "rees/syzygy.hpp"

namespace rees {

/// A height-two presentation: phi is n x (n-1) over R = k[x0,x1] with
/// column degrees d_1 <= ... <= d_{n-1}.
template <class K>
struct PresentationInput {
  RingPtr<K> r_ring;
  RingPtr<K> s_ring;
  int n = 0;
  std::vector<int> degrees;
  GradedMatrix<K> phi;
  std::vector<Poly<K>> minors;

  /// Validates shape, degrees, grading, entries in (x0,x1) and height two.
  static PresentationInput make(GradedMatrix<K> phi);
  /// Entries given as text, one vector per row.
  static PresentationInput parse(const K& field, const std::vector<int>& degrees,
                                 const std::vector<std::vector<std::string>>& rows);
};

/// g_j = sum_i T_i phi_{i,j}, of bidegree (d_j, 1).
template <class K>
std::vector<Poly<K>> sym_equations(const PresentationInput<K>& input);

/// Image in R[w_1..w_s] of p under T_j -> sum_i xi_{ij} w_i.
template <class K>
Poly<K> substitute_T_with_w(const Poly<K>& p, const GradedMatrix<K>& xi,
                            const std::vector<int>& sigma);

template <class K>
struct TowerLevel {
  int m = 0;
  std::vector<int> degrees;  // d_1..d_{n-1}
  SigmaInvariants sigma;
  RingPtr<K> r_ring, s_ring, scroll_ring;
  /// xi after the row operations of the normalization, in the original T
  /// coordinates: [T] = [w] xi.
  GradedMatrix<K> xi;
  /// xi as returned by the kernel computation.
  GradedMatrix<K> xi_raw;
  /// Constant change of T coordinates with xi * chi = [[A, 0], [0, I]].
  DenseMatrix<K> chi;
  DenseMatrix<K> chi_inv;
  GradedMatrix<K> xi_normalized;
  std::vector<GradedMatrix<K>> rho;      // rho[i] generates ker(xi without row i)
  std::vector<std::vector<Poly<K>>> p;   // p[i][j] in R
  std::vector<std::vector<Poly<K>>> q;   // q[i][j] in S, T-degree 1

  Poly<K> subst(const Poly<K>& f) const;
  /// T -> T chi: the polynomial in coordinates T' = T chi.
  Poly<K> to_normalized(const Poly<K>& f) const;
  Poly<K> to_original(const Poly<K>& f) const;
  /// w^alpha in the scroll ring.
  Poly<K> w_power(const std::vector<int>& alpha) const;

  TowerLevel() : chi(K{}, 0, 0), chi_inv(K{}, 0, 0) {}
};

template <class K>
TowerLevel<K> build_level(const PresentationInput<K>& input, int m);

struct TruncationRow {
  int xdeg = 0;
  int tdeg = 0;
  std::size_t dim_E = 0;
  std::size_t dim_M = 0;
  bool equal() const { return dim_E == dim_M; }
};

/// Compares dim R(E)_{i,j} (span of images of S_{i,j}) with dim R(M)_{i,j}
/// for x_lo <= i <= x_hi and 0 <= j <= t_max. Requires x_lo >= d_m - 1.
template <class K>
std::vector<TruncationRow> check_truncation_equality(const TowerLevel<K>& level,
                                                     const PresentationInput<K>& input,
                                                     int x_lo, int x_hi, int t_max);

/// Hilbert function of F/E read off the resolution
/// 0 -> sum R(-d_k) -> R^n -> sum R(sigma_k) -> F/E -> 0.
template <class K>
std::function<long(int)> hilbert_FE(const TowerLevel<K>& level, const PresentationInput<K>& input);

/// True when (p^i_1..p^i_{m+1}) contains every form of degree d_m - 1 + sigma_i.
template <class K>
bool wmult_surjective(const TowerLevel<K>& level, const PresentationInput<K>& input,
                      std::size_t i);

}  // namespace rees
