#include "rees/oracle.hpp"

#include <algorithm>
#include <limits>

#include "rees/errors.hpp"
#include "rees/gradedlin.hpp"
#include "rees/matrix.hpp"

namespace rees {

namespace {

template <class K>
using Terms = std::vector<Term<K>>;


template <class K>
int s_vars_of(const RingPtr<K>& ring) {
  return ring->kind() == RingKind::Tagged ? static_cast<int>(ring->nvars()) - 3
                                          : static_cast<int>(ring->nvars()) - 2;
}

template <class K>
RingPtr<K> working_ring(const RingPtr<K>& ring) {
  switch (ring->kind()) {
    case RingKind::Oracle:
    case RingKind::Tagged:
      return ring;
    case RingKind::S:
      return make_oracle_ring(ring->field(), s_vars_of(ring));
    default:
      throw PreconditionError("oracle: polynomials must live in S");
  }
}

/// Buchberger's algorithm on sorted term vectors.
template <class K>
class Engine {
 public:
  using Elem = typename K::Elem;

  explicit Engine(RingPtr<K> ring) : ring_(std::move(ring)), F_(ring_->field()),
                                     ord_(ring_->order()) {}

  void add_input(const Poly<K>& p) {
    if (p.is_zero()) return;
    inputs_.push_back(monic(p.terms()));
  }

  std::vector<Poly<K>> run() {
    // Inputs enter as pairs with the empty set so they are processed in
    // sugar order too.
    for (auto& t : inputs_) {
      auto r = reduce_full(t);
      if (r.empty()) continue;
      insert(monic(std::move(r)), sugar_of(t));
      while (!pairs_.empty()) step();
    }
    while (!pairs_.empty()) step();
    return finish();
  }

 private:
  struct Elt {
    Terms<K> terms;
    Monomial lm;
    std::uint32_t mask;
    int sugar;
    bool active;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  static int degree(const Monomial& m) { return static_cast<int>(m.total_degree()); }
  int sugar_of(const Terms<K>& t) const {
    int s = 0;
    for (const auto& x : t) s = std::max(s, degree(x.mono));
    return s;
  }

  Terms<K> monic(Terms<K> t) const {
    if (t.empty()) return t;
    auto c = F_.inv(t.front().coeff);
    for (auto& x : t) x.coeff = F_.mul(x.coeff, c);
    return t;
  }

  /// p - c * m * g, merged in order.
  Terms<K> sub_mul(const Terms<K>& p, const Elem& c, const Monomial& m, const Terms<K>& g) const {
    Terms<K> out;
    out.reserve(p.size() + g.size());
    std::size_t a = 0, b = 0;
    while (a < p.size() || b < g.size()) {
      if (b == g.size()) {
        out.push_back(p[a++]);
        continue;
      }
      Monomial gm = g[b].mono * m;
      int cmp = a == p.size() ? -1 : ord_.compare(p[a].mono, gm);
      if (cmp > 0) {
        out.push_back(p[a++]);
      } else if (cmp < 0) {
        out.push_back({gm, F_.neg(F_.mul(c, g[b].coeff))});
        ++b;
      } else {
        auto v = F_.sub(p[a].coeff, F_.mul(c, g[b].coeff));
        if (!F_.is_zero(v)) out.push_back({gm, v});
        ++a;
        ++b;
      }
    }
    return out;
  }

  const Elt* divisor(const Monomial& m) const {
    auto mask = m.support_mask();
    for (const auto& e : basis_)
      if (e.active && (e.mask & ~mask) == 0 && e.lm.divides(m)) return &e;
    return nullptr;
  }

  Terms<K> reduce_full(Terms<K> p) const {
    Terms<K> done;
    while (!p.empty()) {
      if (const Elt* g = divisor(p.front().mono)) {
        p = sub_mul(p, p.front().coeff, p.front().mono / g->lm, g->terms);
      } else {
        done.push_back(p.front());
        p.erase(p.begin());
      }
    }
    return done;
  }

  /// Gebauer-Moeller update with the new element h.
  void insert(Terms<K> h, int sugar) {
    std::size_t hi = basis_.size();
    Monomial lm = h.front().mono;
    basis_.push_back({std::move(h), lm, lm.support_mask(), sugar, true});

    std::vector<Pair> C;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!basis_[g].active) continue;
      auto l = Monomial::lcm(basis_[g].lm, lm);
      int s = std::max(basis_[g].sugar + degree(l) - degree(basis_[g].lm),
                       sugar + degree(l) - degree(lm));
      C.push_back({g, hi, l, s});
    }
    // Chain criterion among the new pairs.
    std::vector<Pair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const auto& p = C[k];
      bool keep = basis_[p.i].lm.coprime(lm);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < C.size() && keep; ++q)
          if (C[q].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : D)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = lm.divides(p.lcm) &&
                  Monomial::lcm(basis_[p.i].lm, lm) != p.lcm &&
                  Monomial::lcm(basis_[p.j].lm, lm) != p.lcm;
      if (!drop) next.push_back(p);
    }
    // Product criterion.
    for (const auto& p : D)
      if (!basis_[p.i].lm.coprime(lm)) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (basis_[g].active && lm.divides(basis_[g].lm)) basis_[g].active = false;
  }

  void step() {
    auto best = pairs_.begin();
    for (auto it = pairs_.begin(); it != pairs_.end(); ++it)
      if (it->sugar < best->sugar ||
          (it->sugar == best->sugar && ord_.compare(it->lcm, best->lcm) < 0))
        best = it;
    Pair p = *best;
    *best = pairs_.back();
    pairs_.pop_back();

    const auto& a = basis_[p.i];
    const auto& b = basis_[p.j];
    Terms<K> s(a.terms.begin() + 1, a.terms.end());
    auto ma = p.lcm / a.lm;
    for (auto& t : s) t.mono = t.mono * ma;
    Terms<K> tail(b.terms.begin() + 1, b.terms.end());
    s = sub_mul(s, F_.one(), p.lcm / b.lm, tail);
    auto r = reduce_full(std::move(s));
    if (!r.empty()) insert(monic(std::move(r)), p.sugar);
  }

  std::vector<Poly<K>> finish() {
    std::vector<std::size_t> keep;
    for (std::size_t g = 0; g < basis_.size(); ++g)
      if (basis_[g].active) keep.push_back(g);
    // Tails against the other elements.
    std::vector<Poly<K>> out;
    for (auto g : keep) {
      auto& e = basis_[g];
      e.active = false;
      Terms<K> tail(e.terms.begin() + 1, e.terms.end());
      auto r = reduce_full(std::move(tail));
      r.insert(r.begin(), e.terms.front());
      e.active = true;
      out.push_back(Poly<K>::from_terms(ring_, std::move(r)));
    }
    std::sort(out.begin(), out.end(), [&](const Poly<K>& a, const Poly<K>& b) {
      return ord_.compare(a.leading().mono, b.leading().mono) < 0;
    });
    return out;
  }

  RingPtr<K> ring_;
  K F_;
  MonomialOrder ord_;
  std::vector<Terms<K>> inputs_;
  std::vector<Elt> basis_;
  std::vector<Pair> pairs_;
};

template <class K>
GroebnerBasis<K> basis_in(const RingPtr<K>& ring, const std::vector<Poly<K>>& gens) {
  Engine<K> e(ring);
  for (const auto& g : gens) e.add_input(g.embed(ring));
  return {ring, e.run(), true};
}

template <class K>
RingPtr<K> tagged_for(const GroebnerBasis<K>& G) {
  if (G.ring->kind() != RingKind::Oracle)
    throw PreconditionError("oracle: expected an ideal of the oracle ring");
  return make_tagged_ring(G.ring->field(), s_vars_of(G.ring), Bidegree{0, 0});
}

/// Elements of a Groebner basis of the tagged ring that are free of t,
/// moved back to the oracle ring.
template <class K>
std::vector<Poly<K>> drop_tag(const GroebnerBasis<K>& G, const RingPtr<K>& oracle) {
  std::size_t t = G.ring->nvars() - 1;
  std::vector<Poly<K>> out;
  for (const auto& g : G.gens) {
    bool free = true;
    for (const auto& term : g.terms())
      if (term.mono[t]) {
        free = false;
        break;
      }
    if (free) out.push_back(g.embed(oracle));
  }
  return out;
}

/// Exact quotient p / f; throws when f does not divide p.
template <class K>
Poly<K> exact_divide(Poly<K> p, const Poly<K>& f) {
  const auto& F = p.field();
  Poly<K> q(p.ring());
  auto lead = f.leading();
  while (!p.is_zero()) {
    auto lt = p.leading();
    if (!lead.mono.divides(lt.mono)) throw InternalError("oracle: inexact division");
    auto m = lt.mono / lead.mono;
    auto c = F.div(lt.coeff, lead.coeff);
    q += Poly<K>::term(p.ring(), m, c);
    p -= f.mul_term(m, c);
  }
  return q;
}

template <class K>
GroebnerBasis<K> check_bihomogeneous(GroebnerBasis<K> G) {
  for (const auto& g : G.gens)
    if (!g.is_bihomogeneous()) throw InternalError("oracle: basis element is not bihomogeneous");
  return G;
}

template <class K>
Poly<K> var(const RingPtr<K>& ring, std::size_t i) {
  return Poly<K>::variable(ring, i);
}

}  // namespace

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& gens) {
  RingPtr<K> ring;
  for (const auto& g : gens)
    if (g.ring()) {
      ring = working_ring(g.ring());
      break;
    }
  if (!ring) throw PreconditionError("buchberger: no ring for an empty generator list");
  return basis_in(ring, gens);
}

template <class K>
Poly<K> normal_form(const Poly<K>& p, const GroebnerBasis<K>& G) {
  if (p.is_zero()) return p;
  auto inner = p.embed(G.ring);
  Poly<K> r(G.ring);
  Poly<K> rest = inner;
  const auto& F = p.field();
  while (!rest.is_zero()) {
    auto lt = rest.leading();
    const Poly<K>* div = nullptr;
    for (const auto& g : G.gens)
      if (g.leading().mono.divides(lt.mono)) {
        div = &g;
        break;
      }
    if (div) {
      rest -= div->mul_term(lt.mono / div->leading().mono,
                            F.div(lt.coeff, div->leading().coeff));
    } else {
      r += Poly<K>::term(G.ring, lt.mono, lt.coeff);
      rest -= Poly<K>::term(G.ring, lt.mono, lt.coeff);
    }
  }
  return r.embed(p.ring());
}

template <class K>
GroebnerBasis<K> intersect(const GroebnerBasis<K>& A, const GroebnerBasis<K>& B) {
  auto tagged = tagged_for(A);
  auto t = var(tagged, tagged->nvars() - 1);
  auto one_minus_t = Poly<K>::from_int(tagged, 1) - t;
  std::vector<Poly<K>> gens;
  for (const auto& a : A.gens) gens.push_back(t * a.embed(tagged));
  for (const auto& b : B.gens) gens.push_back(one_minus_t * b.embed(tagged));
  auto E = basis_in(tagged, gens);
  return check_bihomogeneous(basis_in(A.ring, drop_tag(E, A.ring)));
}

template <class K>
GroebnerBasis<K> colon(const GroebnerBasis<K>& J, const Poly<K>& f) {
  if (f.is_zero()) throw PreconditionError("colon: f is zero");
  auto ff = f.embed(J.ring);
  auto principal = basis_in(J.ring, {ff});
  auto I = intersect(J, principal);
  std::vector<Poly<K>> quotients;
  for (const auto& g : I.gens) quotients.push_back(exact_divide(g, ff));
  return check_bihomogeneous(basis_in(J.ring, quotients));
}

namespace {

/// J : f^inf as (J + (1 - t f)) cap k[x, T].
template <class K>
GroebnerBasis<K> saturate_by(const GroebnerBasis<K>& J, std::size_t v) {
  auto tagged = tagged_for(J);
  auto t = var(tagged, tagged->nvars() - 1);
  std::vector<Poly<K>> gens;
  for (const auto& g : J.gens) gens.push_back(g.embed(tagged));
  gens.push_back(Poly<K>::from_int(tagged, 1) - t * var(tagged, v));
  auto E = basis_in(tagged, gens);
  return check_bihomogeneous(basis_in(J.ring, drop_tag(E, J.ring)));
}

}  // namespace

template <class K>
GroebnerBasis<K> saturate_m(const GroebnerBasis<K>& J, SaturationMethod method) {
  if (method == SaturationMethod::Rabinowitsch)
    return intersect(saturate_by(J, kX0), saturate_by(J, kX1));
  auto x0 = var(J.ring, kX0);
  auto x1 = var(J.ring, kX1);
  GroebnerBasis<K> cur = J;
  for (int it = 0; it < 100; ++it) {
    auto next = intersect(colon(cur, x0), colon(cur, x1));
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError("saturation did not stabilize after 100 steps");
}

namespace {

template <class K>
bool standard(const Monomial& m, const GroebnerBasis<K>& G) {
  for (const auto& g : G.gens)
    if (g.leading().mono.divides(m)) return false;
  return true;
}

/// Products u * g of bidegree deg, with u a monomial; u = 1 included or not.
template <class K>
std::vector<Poly<K>> products(const GroebnerBasis<K>& G, const RingPtr<K>& s_ring, Bidegree deg,
                              bool include_unit) {
  std::vector<Poly<K>> out;
  for (const auto& g : G.gens) {
    auto gs = g.embed(s_ring);
    auto [a, b] = gs.bidegree();
    Bidegree rest{deg.first - a, deg.second - b};
    if (rest.first < 0 || rest.second < 0) continue;
    if (!include_unit && rest == Bidegree{0, 0}) continue;
    for (const auto& u : piece_basis(s_ring, rest)) out.push_back(gs.mul_monomial(u));
  }
  return out;
}

template <class K>
std::vector<Poly<K>> basis_of_span(const RingPtr<K>& s_ring, Bidegree deg,
                                   const std::vector<Poly<K>>& polys) {
  PolySpan<K> span(s_ring, deg);
  std::vector<Poly<K>> out;
  for (const auto& p : polys) {
    if (span.full()) break;
    if (span.insert(p)) out.push_back(p);
  }
  return out;
}

template <class K>
RingPtr<K> s_ring_for(const GroebnerBasis<K>& G) {
  return make_s_ring(G.ring->field(), s_vars_of(G.ring));
}

}  // namespace

template <class K>
std::vector<Poly<K>> ideal_piece_basis(const GroebnerBasis<K>& G, const RingPtr<K>& s_ring,
                                       Bidegree deg) {
  if (deg.first < 0 || deg.second < 0) return {};
  return basis_of_span(s_ring, deg, products(G, s_ring, deg, true));
}

template <class K>
std::map<Bidegree, long> bigraded_hilbert(const GroebnerBasis<K>& G, const BidegreeWindow& w) {
  auto s_ring = s_ring_for(G);
  std::map<Bidegree, long> out;
  for (int i = w.x_lo; i <= w.x_hi; ++i)
    for (int j = w.t_lo; j <= w.t_hi; ++j) {
      long dim = 0;
      for (const auto& m : piece_basis(s_ring, {i, j}))
        if (!standard(m, G)) ++dim;
      out[{i, j}] = dim;
    }
  return out;
}

template <class K>
BidegreeTable minimal_generator_bidegrees(const GroebnerBasis<K>& G, const BidegreeWindow& w,
                                          GeneratorCount mode) {
  auto s_ring = s_ring_for(G);
  auto dims = bigraded_hilbert(G, w);
  BidegreeTable table;
  for (int i = w.x_lo; i <= w.x_hi; ++i)
    for (int j = w.t_lo; j <= w.t_hi; ++j) {
      long dim = dims[{i, j}];
      if (dim == 0) continue;
      PolySpan<K> lower(s_ring, {i, j});
      auto fill = [&](const std::vector<Poly<K>>& polys) {
        for (const auto& p : polys) {
          if (static_cast<long>(lower.rank()) == dim) return;
          lower.insert(p);
        }
      };
      if (mode == GeneratorCount::Ideal) {
        fill(products(G, s_ring, {i, j}, false));
      } else if (j > 0) {
        for (const auto& b : ideal_piece_basis(G, s_ring, {i, j - 1})) {
          std::vector<Poly<K>> shifted;
          for (std::size_t k = kFirstT; k < s_ring->nvars(); ++k)
            shifted.push_back(b.mul_monomial(Monomial::variable(k)));
          fill(shifted);
        }
      }
      long count = dim - static_cast<long>(lower.rank());
      if (count > 0) table.add({i, j}, static_cast<int>(count));
    }
  return table;
}

#define REES_INSTANTIATE_ORACLE(K)                                                            \
  template GroebnerBasis<K> buchberger<K>(const std::vector<Poly<K>>&);                       \
  template Poly<K> normal_form<K>(const Poly<K>&, const GroebnerBasis<K>&);                   \
  template GroebnerBasis<K> intersect<K>(const GroebnerBasis<K>&, const GroebnerBasis<K>&);   \
  template GroebnerBasis<K> colon<K>(const GroebnerBasis<K>&, const Poly<K>&);                \
  template GroebnerBasis<K> saturate_m<K>(const GroebnerBasis<K>&, SaturationMethod);         \
  template std::map<Bidegree, long> bigraded_hilbert<K>(const GroebnerBasis<K>&,              \
                                                        const BidegreeWindow&);               \
  template BidegreeTable minimal_generator_bidegrees<K>(const GroebnerBasis<K>&,              \
                                                        const BidegreeWindow&, GeneratorCount); \
  template std::vector<Poly<K>> ideal_piece_basis<K>(const GroebnerBasis<K>&,                 \
                                                     const RingPtr<K>&, Bidegree);

REES_INSTANTIATE_ORACLE(PrimeField)
REES_INSTANTIATE_ORACLE(RationalField)

}  // namespace rees
