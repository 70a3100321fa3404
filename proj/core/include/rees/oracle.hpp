#pragma once

#include <map>
#include <vector>

#include "rees/combinat.hpp"
#include "rees/poly.hpp"

namespace rees {

/// Reduced Groebner basis: monic, sorted by leading monomial (ascending).
template <class K>
struct GroebnerBasis {
  RingPtr<K> ring;
  std::vector<Poly<K>> gens;
  bool reduced = true;

  bool operator==(const GroebnerBasis& o) const { return gens == o.gens; }
};

/// Reduced basis of the ideal generated by `gens`. Polynomials of S are
/// moved to the oracle ring (T1 > ... > Tn > x0 > x1, degree reverse
/// lexicographic); polynomials of the oracle or tagged rings are kept.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& gens);

/// Remainder of p on division by G, returned in p's ring.
template <class K>
Poly<K> normal_form(const Poly<K>& p, const GroebnerBasis<K>& G);

template <class K>
GroebnerBasis<K> intersect(const GroebnerBasis<K>& A, const GroebnerBasis<K>& B);

/// J : f for a nonzero polynomial f.
template <class K>
GroebnerBasis<K> colon(const GroebnerBasis<K>& J, const Poly<K>& f);

enum class SaturationMethod {
  IteratedColon,  // J := (J : x0) cap (J : x1) until stable
  Rabinowitsch,   // (J : x0^inf) cap (J : x1^inf), each by one elimination
};

/// J : (x0, x1)^inf.
template <class K>
GroebnerBasis<K> saturate_m(const GroebnerBasis<K>& J,
                            SaturationMethod method = SaturationMethod::IteratedColon);

struct BidegreeWindow {
  int x_lo = 0, x_hi = 0;
  int t_lo = 0, t_hi = 0;
};

/// (i, j) -> dim of the ideal's piece of bidegree (i, j).
template <class K>
std::map<Bidegree, long> bigraded_hilbert(const GroebnerBasis<K>& G, const BidegreeWindow& w);

/// Which lower pieces count as already generated.
enum class GeneratorCount {
  Ideal,  // x-multiples and T-multiples: minimal generators of the ideal
  Slice,  // T-multiples only: minimal generators of each K_{i,*} over k[T]
};

template <class K>
BidegreeTable minimal_generator_bidegrees(const GroebnerBasis<K>& G, const BidegreeWindow& w,
                                          GeneratorCount mode = GeneratorCount::Ideal);

/// A vector-space basis of the ideal's piece of bidegree `deg`, in S.
template <class K>
std::vector<Poly<K>> ideal_piece_basis(const GroebnerBasis<K>& G, const RingPtr<K>& s_ring,
                                       Bidegree deg);

}  // namespace rees
