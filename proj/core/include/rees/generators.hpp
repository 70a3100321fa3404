#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rees/combinat.hpp"
#include "rees/tower.hpp"

namespace rees {

enum class Provenance { Recursion, Sylvester, Slice, Scroll, SymEquation };

std::string to_string(Provenance p);

template <class K>
struct GeneratorRecord {
  Provenance provenance = Provenance::Recursion;
  ExpVec alpha;       // exponent of w, empty when not applicable
  std::string label;  // "h(1,0)", "g2*x0*w^(2,0)", "g2*p(0,1)*w^(1,1)", ...
  Bidegree bidegree{0, 0};
  Poly<K> poly;       // in S, original T coordinates
  /// The substitution image was checked against the expected one.
  bool certified = false;
};

enum class PivotRule { Smallest, Largest };

/// h_alpha for every alpha with alpha^0 = 0 and <alpha, sigma> <= d_{m+1} - d_m,
/// in graded-lex order, starting from h_0 = g_next.
template <class K>
std::vector<GeneratorRecord<K>> recursion_generators(const TowerLevel<K>& level,
                                                     const Poly<K>& g_next,
                                                     PivotRule rule = PivotRule::Smallest);

/// h_alpha computed from h_{alpha - e_i}.
template <class K>
Poly<K> recursion_step(const TowerLevel<K>& level, const Poly<K>& previous, std::size_t i);

/// det [[f1, g1], [f2, g2]] for the canonical writings f = f1 p1 + f2 p2,
/// g = g1 p1 + g2 p2.
template <class K>
Poly<K> sylvester_form(const Poly<K>& p1, const Poly<K>& p2, const Poly<K>& f, const Poly<K>& g);

/// Preimage in S_{deg} of a scroll-ring element under the level's
/// substitution; the solution with free unknowns zero. Nothing when the
/// element is not in the image.
template <class K>
std::optional<Poly<K>> lift_to_S(const TowerLevel<K>& level, const Poly<K>& target,
                                 Bidegree deg);

/// For n = 3, m = 1: monomials p_{l,1..d1-l-1} of R(F)_{l,1} whose images
/// complete a basis of F_l modulo E_l, for 0 <= l <= d1 - 2.
template <class K>
struct SliceBasis {
  std::map<int, std::vector<Poly<K>>> p;  // keyed by l, in the scroll ring

  static SliceBasis build(const TowerLevel<K>& level);
  const std::vector<Poly<K>>& at(int l) const;
};

/// Generators of the x-degree i slice of the Rees ideal as a module over
/// U = k[T1, T2, T3]. Requires n = 3 and i >= d1 - 1.
template <class K>
std::vector<GeneratorRecord<K>> slice_generators(const PresentationInput<K>& input, int i);

/// Dimension of the T-degree t part of the U-module generated by `polys`
/// (all of x-degree i) inside S_{i,t}.
template <class K>
std::size_t u_span_dim(const std::vector<Poly<K>>& polys, const RingPtr<K>& s_ring, Bidegree deg);

/// Drops records lying in the U-span of the remaining ones, highest T-degree
/// first, later records before earlier ones within a degree.
template <class K>
std::vector<GeneratorRecord<K>> trim_slice(const std::vector<GeneratorRecord<K>>& records, int i);

/// d_1 = ... = d_{n-2} = 1: minors of the scroll matrix, g_{n-1} w^alpha for
/// alpha in A_c, and the B_c part, with c = d_{n-1}.
template <class K>
std::vector<GeneratorRecord<K>> almost_linear_generators(const PresentationInput<K>& input);

std::string alpha_string(const ExpVec& alpha);

}  // namespace rees
