#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/field.hpp"
#include "rees/monomial.hpp"

namespace rees {

/// Which of the library's polynomial rings a descriptor stands for.
///   R       k[x0,x1]
///   S       R[T1..Tn], deg x = (1,0), deg T = (0,1)
///   Scroll  R[w1..ws], deg w_i = (-sigma_i, 1)
///   Gamma   R[v_{i,j}], the coordinates of the scroll matrix
///   Oracle  S's variables under the Groebner order (T's above x's, x1 last)
///   Tagged  Oracle plus one tag variable for eliminations
enum class RingKind { R, S, Scroll, Gamma, Oracle, Tagged };

using Bidegree = std::pair<int, int>;

struct Variable {
  std::string name;
  int xdeg = 0;
  int tdeg = 0;
  bool operator==(const Variable&) const = default;
};

/// Immutable ring descriptor: field, variables with their bidegrees, and
/// the term order polynomials are kept sorted in.
template <class K>
class Ring {
 public:
  Ring(K field, RingKind kind, std::vector<Variable> vars, MonomialOrder order,
       std::vector<int> sigma = {});

  const K& field() const { return field_; }
  RingKind kind() const { return kind_; }
  std::size_t nvars() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  /// Twists of the scroll ring (empty for the other kinds).
  const std::vector<int>& sigma() const { return sigma_; }
  /// Number of T-like variables (T's, w's or v's).
  std::size_t num_t_vars() const;

  std::optional<std::size_t> index_of(const std::string& name) const;
  Bidegree bidegree(const Monomial& m) const;
  std::string format(const Monomial& m) const;

  bool operator==(const Ring& o) const {
    return field_ == o.field_ && kind_ == o.kind_ && vars_ == o.vars_ &&
           order_ == o.order_ && sigma_ == o.sigma_;
  }

 private:
  K field_;
  RingKind kind_;
  std::vector<Variable> vars_;
  MonomialOrder order_;
  std::vector<int> sigma_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

/// Variable index of x0 and x1 in every ring; T-like variables follow.
inline constexpr std::size_t kX0 = 0;
inline constexpr std::size_t kX1 = 1;
inline constexpr std::size_t kFirstT = 2;

template <class K> RingPtr<K> make_r_ring(const K& field);
template <class K> RingPtr<K> make_s_ring(const K& field, int n);
template <class K> RingPtr<K> make_scroll_ring(const K& field, std::vector<int> sigma);
/// Ring of Gamma: x0, x1 and v_{i,j} for 1 <= i <= s, 0 <= j <= sigma_i.
template <class K> RingPtr<K> make_gamma_ring(const K& field, std::vector<int> sigma);
template <class K> RingPtr<K> make_oracle_ring(const K& field, int n);
/// Oracle variables plus tag `t` (index 2+n) of bidegree `tag_degree`,
/// ordered so that t is eliminated first.
template <class K> RingPtr<K> make_tagged_ring(const K& field, int n, Bidegree tag_degree);

template <class K>
bool same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  return a == b || *a == *b;
}

}  // namespace rees
