#pragma once

#include <map>
#include <string>
#include <vector>

#include "rees/ring.hpp"
#include "rees/syzygy.hpp"

namespace rees {

using ExpVec = std::vector<int>;

/// Orders exponent vectors by weight <alpha, sigma>, then lexicographically
/// with larger leading entries first.
struct GradedLexLess {
  const SigmaInvariants* sigma;
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// alpha with alpha^0 = 0 and <alpha, sigma> < c. Requires c >= 0.
std::vector<ExpVec> enumerate_A(int c, const SigmaInvariants& sigma);

/// Alpha with alpha^0 = 0 and <alpha, sigma> <= bound.
std::vector<ExpVec> enumerate_weight_at_most(int bound, const SigmaInvariants& sigma);

/// The union of Omega_{c,i}, 1 <= i <= r. Requires c > 0.
std::vector<ExpVec> enumerate_Omega(int c, const SigmaInvariants& sigma);

/// x0^j x1^k w^alpha with alpha in Omega_c and j + k = <alpha, sigma> - c.
struct BElement {
  int j = 0;
  int k = 0;
  ExpVec alpha;
  bool operator==(const BElement&) const = default;
};
std::vector<BElement> enumerate_B(int c, const SigmaInvariants& sigma);

/// Counts per bidegree (x-degree, T-degree).
struct BidegreeTable {
  std::map<Bidegree, int> counts;
  /// Columns with x-degree below this are drawn left of a vertical bar
  /// (no bar when 0).
  int separator = 0;

  void add(Bidegree b, int count = 1) { counts[b] += count; }
  int total() const;
  int at(int x, int t) const;
  /// Rows are T-degrees from max(t_rows, largest present) down to 1;
  /// columns are x-degrees 0..max(x_cols, largest present).
  std::string render(int t_rows = 0, int x_cols = 0) const;
};

/// Bidegrees of the minimal generators of the Rees ideal with x-degree at
/// least d_{n-2}, from the sigma invariants of level m = n - 2.
BidegreeTable bidegree_table(const std::vector<int>& degrees, const SigmaInvariants& sigma);

}  // namespace rees
