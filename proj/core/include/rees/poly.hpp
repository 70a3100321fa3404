#pragma once

#include <string>
#include <vector>

#include "rees/ring.hpp"

namespace rees {

template <class K>
struct Term {
  Monomial mono;
  typename K::Elem coeff;
};

/// Polynomial over a Ring<K>: nonzero terms sorted by the ring's order,
/// largest first. A default-constructed Poly is zero and has no ring.
template <class K>
class Poly {
 public:
  using Elem = typename K::Elem;

  Poly() = default;
  explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Poly constant(const RingPtr<K>& ring, const Elem& c);
  static Poly from_int(const RingPtr<K>& ring, long long c);
  static Poly term(const RingPtr<K>& ring, const Monomial& m, const Elem& c);
  static Poly monomial(const RingPtr<K>& ring, const Monomial& m);
  static Poly variable(const RingPtr<K>& ring, std::size_t i, unsigned power = 1);
  /// Terms in any order; like monomials are combined and zeros dropped.
  static Poly from_terms(const RingPtr<K>& ring, std::vector<Term<K>> terms);

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term<K>& leading() const { return terms_.front(); }

  /// Coefficient of m (zero when absent).
  Elem coeff(const Monomial& m) const;

  bool is_bihomogeneous() const;
  /// (x-degree, T-degree) in the ring's grading. Throws on zero and on
  /// terms of different degrees.
  Bidegree bidegree() const;
  /// x-degree; the natural degree for polynomials in R.
  int degree() const { return bidegree().first; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scale(const Elem& c) const;
  Poly mul_term(const Monomial& m, const Elem& c) const;
  Poly mul_monomial(const Monomial& m) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;

  /// Same exponent vectors read in another ring (variable i stays i).
  /// Fails if a used variable does not exist there.
  Poly embed(const RingPtr<K>& target) const;

  std::string to_string() const;

 private:
  void normalize();
  void require_same_ring(const Poly& o) const;

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

/// Ring homomorphism sending variable i of p's ring to images[i], a
/// polynomial in `target`.
template <class K>
Poly<K> evaluate(const Poly<K>& p, const RingPtr<K>& target,
                 const std::vector<Poly<K>>& images);

/// Parse text in the grammar
///   poly := term (('+'|'-') term)*
///   term := [coeff '*'?] monomial | coeff
///   coeff := int | int '/' uint
/// with variables named as in `ring`. Validates (bi)homogeneity.
template <class K>
Poly<K> parse_poly(const std::string& text, const RingPtr<K>& ring);

}  // namespace rees
