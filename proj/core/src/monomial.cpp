#include "rees/monomial.hpp"

namespace rees {

MonomialOrder MonomialOrder::grevlex(std::vector<int> rank) {
  MonomialOrder o;
  o.kind_ = Kind::Grevlex;
  o.rank_ = std::move(rank);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<int> block, std::vector<int> rank) {
  MonomialOrder o;
  o.kind_ = Kind::Elimination;
  o.block_ = std::move(block);
  o.rank_ = std::move(rank);
  return o;
}

int MonomialOrder::grevlex_compare(const Monomial& a, const Monomial& b,
                                   const std::vector<int>& vars) {
  int da = 0, db = 0;
  for (int v : vars) {
    da += a.exp[v];
    db += b.exp[v];
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    int ea = a.exp[*it], eb = b.exp[*it];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Elimination) {
    int c = grevlex_compare(a, b, block_);
    if (c != 0) return c;
  }
  return grevlex_compare(a, b, rank_);
}

}  // namespace rees
