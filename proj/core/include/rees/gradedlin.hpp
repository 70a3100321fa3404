#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "rees/matrix.hpp"
#include "rees/poly.hpp"

namespace rees {

/// x0^d, x0^{d-1}x1, ..., x1^d; empty for d < 0.
std::vector<Monomial> x_monomials(int degree);

/// Monomials of `ring` with bidegree `deg`, largest first in the ring order.
/// Only x0, x1 and the variables of T-degree 1 are used.
template <class K>
std::vector<Monomial> piece_basis(const RingPtr<K>& ring, Bidegree deg);

/// A graded piece with coordinates: polynomial <-> coefficient vector.
template <class K>
class Piece {
 public:
  using Elem = typename K::Elem;

  Piece(RingPtr<K> ring, Bidegree deg);

  const RingPtr<K>& ring() const { return ring_; }
  Bidegree degree() const { return deg_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::optional<std::size_t> index(const Monomial& m) const;

  /// Coefficient vector of p; p must lie in this piece.
  std::vector<Elem> coordinates(const Poly<K>& p) const;
  Poly<K> polynomial(const std::vector<Elem>& v) const;

 private:
  RingPtr<K> ring_;
  Bidegree deg_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Span of polynomials inside one graded piece, grown one element at a time.
template <class K>
class PolySpan {
 public:
  PolySpan(RingPtr<K> ring, Bidegree deg) : piece_(std::move(ring), deg),
                                            space_(piece_.ring()->field(), piece_.dim()) {}

  const Piece<K>& piece() const { return piece_; }
  std::size_t rank() const { return space_.rank(); }
  bool contains(const Poly<K>& p) const;
  bool insert(const Poly<K>& p);
  /// True when the span is the whole piece.
  bool full() const { return space_.rank() == piece_.dim(); }

 private:
  Piece<K> piece_;
  RowSpace<K> space_;
};

/// Coefficients a_j with target = sum a_j gens_j, each a_j bihomogeneous of
/// degree deg(target) - deg(gens_j). Among all solutions the one whose
/// unknown vector (gen by gen, monomials in ring order) has free entries zero
/// under left-to-right pivoting is returned. Nothing when inconsistent.
template <class K>
std::optional<std::vector<Poly<K>>> solve_combination(const Poly<K>& target,
                                                      const std::vector<Poly<K>>& gens);

/// Dimension of the span of the given polynomials.
template <class K>
std::size_t span_dim(const std::vector<Poly<K>>& vectors);

/// The x-free part of m: m with the exponents of x0 and x1 cleared.
inline Monomial t_part(const Monomial& m) {
  Monomial r = m;
  r.exp[kX0] = 0;
  r.exp[kX1] = 0;
  return r;
}

/// True when every term of p involves x0, x1 only.
template <class K>
bool is_pure_x(const Poly<K>& p) {
  for (const auto& t : p.terms())
    if (!t_part(t.mono).is_one()) return false;
  return true;
}

}  // namespace rees
