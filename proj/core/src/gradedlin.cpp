#include "rees/gradedlin.hpp"

#include <algorithm>
#include <map>

#include "rees/errors.hpp"

namespace rees {

std::vector<Monomial> x_monomials(int degree) {
  std::vector<Monomial> out;
  for (int k = 0; k <= degree; ++k) {
    Monomial m;
    m.exp[kX0] = static_cast<std::uint16_t>(degree - k);
    m.exp[kX1] = static_cast<std::uint16_t>(k);
    out.push_back(m);
  }
  return out;
}

namespace {

// All exponent assignments of total `total` to the listed variables.
void compositions(const std::vector<std::size_t>& vars, std::size_t at, int total,
                  Monomial& cur, std::vector<Monomial>& out) {
  if (at + 1 == vars.size()) {
    cur.exp[vars[at]] = static_cast<std::uint16_t>(total);
    out.push_back(cur);
    cur.exp[vars[at]] = 0;
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur.exp[vars[at]] = static_cast<std::uint16_t>(e);
    compositions(vars, at + 1, total - e, cur, out);
  }
  cur.exp[vars[at]] = 0;
}

}  // namespace

template <class K>
std::vector<Monomial> piece_basis(const RingPtr<K>& ring, Bidegree deg) {
  auto [i, j] = deg;
  std::vector<Monomial> out;
  if (j < 0) return out;
  std::vector<std::size_t> tvars;
  for (std::size_t v = kFirstT; v < ring->nvars(); ++v)
    if (ring->var(v).tdeg == 1) tvars.push_back(v);
  std::vector<Monomial> tparts;
  if (j == 0) {
    tparts.push_back(Monomial{});
  } else if (!tvars.empty()) {
    Monomial cur;
    compositions(tvars, 0, j, cur, tparts);
  }
  for (const auto& tp : tparts) {
    int shift = ring->bidegree(tp).first;
    for (const auto& xm : x_monomials(i - shift)) out.push_back(tp * xm);
  }
  const auto& ord = ring->order();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
  return out;
}

template <class K>
Piece<K>::Piece(RingPtr<K> ring, Bidegree deg)
    : ring_(std::move(ring)), deg_(deg), basis_(piece_basis(ring_, deg)) {
  index_.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

template <class K>
std::optional<std::size_t> Piece<K>::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class K>
std::vector<typename K::Elem> Piece<K>::coordinates(const Poly<K>& p) const {
  std::vector<Elem> v(basis_.size(), ring_->field().zero());
  for (const auto& t : p.terms()) {
    auto it = index_.find(t.mono);
    if (it == index_.end())
      throw PreconditionError("polynomial " + p.to_string() + " is not in piece (" +
                              std::to_string(deg_.first) + "," +
                              std::to_string(deg_.second) + ")");
    v[it->second] = t.coeff;
  }
  return v;
}

template <class K>
Poly<K> Piece<K>::polynomial(const std::vector<Elem>& v) const {
  std::vector<Term<K>> ts;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (!ring_->field().is_zero(v[k])) ts.push_back({basis_[k], v[k]});
  return Poly<K>::from_terms(ring_, std::move(ts));
}

template <class K>
bool PolySpan<K>::contains(const Poly<K>& p) const {
  return space_.contains(piece_.coordinates(p));
}

template <class K>
bool PolySpan<K>::insert(const Poly<K>& p) {
  return space_.insert(piece_.coordinates(p));
}

namespace {

template <class K>
bool valid_degree(const RingPtr<K>& ring, Bidegree d) {
  if (d.second < 0) return false;
  if (ring->kind() != RingKind::Scroll && d.first < 0) return false;
  return true;
}

// Unknown blocks: for gen j the monomials of the complementary degree.
template <class K>
std::vector<std::vector<Monomial>> unknown_blocks(const RingPtr<K>& ring, Bidegree target,
                                                  const std::vector<Poly<K>>& gens) {
  std::vector<std::vector<Monomial>> blocks(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    auto gd = gens[j].bidegree();
    Bidegree d{target.first - gd.first, target.second - gd.second};
    if (valid_degree(ring, d)) blocks[j] = piece_basis(ring, d);
  }
  return blocks;
}

template <class K>
std::optional<std::vector<Poly<K>>> solve_general(const Poly<K>& target,
                                                  const std::vector<Poly<K>>& gens) {
  const auto& ring = target.ring();
  const K& f = ring->field();
  auto tb = target.bidegree();
  auto blocks = unknown_blocks(ring, tb, gens);
  Piece<K> rows(ring, tb);
  std::size_t ncols = 0;
  for (const auto& b : blocks) ncols += b.size();
  DenseMatrix<K> A(f, rows.dim(), ncols);
  std::size_t col = 0;
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (const auto& m : blocks[j]) {
      for (const auto& t : gens[j].terms()) {
        auto r = rows.index(t.mono * m);
        if (!r) throw InternalError("solve_combination: product outside target piece");
        A.at(*r, col) = t.coeff;
      }
      ++col;
    }
  auto sol = A.solve(rows.coordinates(target));
  if (!sol) return std::nullopt;
  std::vector<Poly<K>> out;
  col = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<Term<K>> ts;
    for (const auto& m : blocks[j]) {
      if (!f.is_zero((*sol)[col])) ts.push_back({m, (*sol)[col]});
      ++col;
    }
    out.push_back(Poly<K>::from_terms(ring, std::move(ts)));
  }
  return out;
}

// Generators free of T-like variables: the system splits along the x-free
// part of the target's monomials. The left-to-right pivot choice inside each
// block agrees with the one on the whole system, so the canonical solution is
// the same as solve_general's.
template <class K>
std::optional<std::vector<Poly<K>>> solve_pure_x(const Poly<K>& target,
                                                 const std::vector<Poly<K>>& gens) {
  const auto& ring = target.ring();
  const K& f = ring->field();
  std::vector<int> gdeg(gens.size(), 0);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (!gens[j].is_zero()) gdeg[j] = gens[j].bidegree().first;

  std::map<int, DenseMatrix<K>> systems;  // keyed by x-degree of the part
  auto system_for = [&](int a) -> const DenseMatrix<K>& {
    auto it = systems.find(a);
    if (it != systems.end()) return it->second;
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (!gens[j].is_zero()) ncols += std::max(0, a - gdeg[j] + 1);
    DenseMatrix<K> A(f, static_cast<std::size_t>(a + 1), ncols);
    std::size_t col = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j].is_zero()) continue;
      for (const auto& m : x_monomials(a - gdeg[j])) {
        for (const auto& t : gens[j].terms()) {
          auto prod = t.mono * m;
          A.at(prod.exp[kX1], col) = t.coeff;
        }
        ++col;
      }
    }
    return systems.emplace(a, std::move(A)).first->second;
  };

  // group target terms by x-free part
  std::vector<std::pair<Monomial, std::vector<Term<K>>>> groups;
  {
    std::unordered_map<Monomial, std::size_t, MonomialHash> where;
    for (const auto& t : target.terms()) {
      auto tp = t_part(t.mono);
      auto [it, fresh] = where.try_emplace(tp, groups.size());
      if (fresh) groups.push_back({tp, {}});
      groups[it->second].second.push_back(t);
    }
  }
  std::vector<std::vector<Term<K>>> acc(gens.size());
  for (const auto& [tp, ts] : groups) {
    int a = ts.front().mono.exp[kX0] + ts.front().mono.exp[kX1];
    const auto& A = system_for(a);
    std::vector<typename K::Elem> rhs(static_cast<std::size_t>(a + 1), f.zero());
    for (const auto& t : ts) rhs[t.mono.exp[kX1]] = t.coeff;
    auto sol = A.solve(rhs);
    if (!sol) return std::nullopt;
    std::size_t col = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j].is_zero()) continue;
      for (const auto& m : x_monomials(a - gdeg[j])) {
        if (!f.is_zero((*sol)[col])) acc[j].push_back({m * tp, (*sol)[col]});
        ++col;
      }
    }
  }
  std::vector<Poly<K>> out;
  for (auto& ts : acc) out.push_back(Poly<K>::from_terms(ring, std::move(ts)));
  return out;
}

}  // namespace

template <class K>
std::optional<std::vector<Poly<K>>> solve_combination(const Poly<K>& target,
                                                      const std::vector<Poly<K>>& gens) {
  const auto& ring = target.ring();
  if (!ring) throw PreconditionError("solve_combination: target has no ring");
  for (const auto& g : gens)
    if (g.ring() && !same_ring(ring, g.ring()))
      throw PreconditionError("solve_combination: generators live in another ring");
  if (target.is_zero()) return std::vector<Poly<K>>(gens.size(), Poly<K>(ring));

  target.bidegree();  // rejects non-bihomogeneous targets
  bool pure = std::all_of(gens.begin(), gens.end(), [](const Poly<K>& g) { return is_pure_x(g); });
  auto sol = pure ? solve_pure_x(target, gens) : solve_general(target, gens);
  if (!sol) return std::nullopt;
  Poly<K> check(ring);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (!gens[j].is_zero()) check += (*sol)[j] * gens[j];
  if (!(check == target)) throw InternalError("solve_combination: solution does not re-expand");
  return sol;
}

template <class K>
std::size_t span_dim(const std::vector<Poly<K>>& vectors) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (const auto& p : vectors)
    for (const auto& t : p.terms()) index.try_emplace(t.mono, index.size());
  if (index.empty()) return 0;
  const K& f = vectors.front().field();
  DenseMatrix<K> A(f, vectors.size(), index.size());
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto& t : vectors[r].terms()) A.at(r, index.at(t.mono)) = t.coeff;
  return A.rank();
}

#define REES_INSTANTIATE_GRADEDLIN(K)                                              \
  template std::vector<Monomial> piece_basis<K>(const RingPtr<K>&, Bidegree);      \
  template class Piece<K>;                                                         \
  template class PolySpan<K>;                                                      \
  template std::optional<std::vector<Poly<K>>> solve_combination<K>(               \
      const Poly<K>&, const std::vector<Poly<K>>&);                                \
  template std::size_t span_dim<K>(const std::vector<Poly<K>>&);

REES_INSTANTIATE_GRADEDLIN(PrimeField)
REES_INSTANTIATE_GRADEDLIN(RationalField)

}  // namespace rees
