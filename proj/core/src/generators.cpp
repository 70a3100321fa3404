#include "rees/generators.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "rees/errors.hpp"

namespace rees {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Recursion: return "recursion";
    case Provenance::Sylvester: return "sylvester";
    case Provenance::Slice: return "slice";
    case Provenance::Scroll: return "scroll";
    case Provenance::SymEquation: return "sym-equation";
  }
  return "unknown";
}

std::string alpha_string(const ExpVec& alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + std::to_string(alpha[i]);
  return s + ")";
}

namespace {

int total(const ExpVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

template <class K>
Poly<K> x_power(const RingPtr<K>& ring, int j, int k) {
  Monomial m;
  m.exp[kX0] = static_cast<std::uint16_t>(j);
  m.exp[kX1] = static_cast<std::uint16_t>(k);
  return Poly<K>::monomial(ring, m);
}

template <class K>
std::string x_label(const RingPtr<K>& ring, int j, int k) {
  Monomial m;
  m.exp[kX0] = static_cast<std::uint16_t>(j);
  m.exp[kX1] = static_cast<std::uint16_t>(k);
  return ring->format(m);
}

std::string times(const std::string& a, const std::string& b) {
  if (b.empty() || b == "1") return a;
  return a + "*" + b;
}

}  // namespace

template <class K>
Poly<K> recursion_step(const TowerLevel<K>& level, const Poly<K>& previous, std::size_t i) {
  std::vector<Poly<K>> gens;
  for (const auto& p : level.p[i]) gens.push_back(p.embed(level.s_ring));
  auto sol = solve_combination(previous, gens);
  if (!sol) throw InternalError("unsolvable membership in (p^" + std::to_string(i + 1) + ")");
  Poly<K> h(level.s_ring);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (!(*sol)[j].is_zero()) h += (*sol)[j] * level.q[i][j];
  return h;
}

template <class K>
std::vector<GeneratorRecord<K>> recursion_generators(const TowerLevel<K>& level,
                                                     const Poly<K>& g_next, PivotRule rule) {
  if (level.m >= static_cast<int>(level.degrees.size()))
    throw PreconditionError("no equation g_{m+1} above the top level");
  const int dm = level.degrees[level.m - 1];
  const int dnext = g_next.bidegree().first;
  const auto& sg = level.sigma;
  const Poly<K> base = level.subst(g_next);

  std::map<ExpVec, Poly<K>> memo;
  std::vector<GeneratorRecord<K>> out;
  for (const auto& alpha : enumerate_weight_at_most(dnext - dm, sg)) {
    Poly<K> h;
    if (total(alpha) == 0) {
      h = g_next;
    } else {
      std::size_t i = alpha.size();
      for (std::size_t k = 0; k < alpha.size(); ++k)
        if (alpha[k] > 0 && (rule == PivotRule::Largest || i == alpha.size())) i = k;
      ExpVec prev = alpha;
      --prev[i];
      h = recursion_step(level, memo.at(prev), i);
    }
    memo[alpha] = h;
    GeneratorRecord<K> rec;
    rec.provenance = Provenance::Recursion;
    rec.alpha = alpha;
    rec.label = "h" + alpha_string(alpha);
    rec.bidegree = {dnext - sg.weight(alpha), total(alpha) + 1};
    if (h.is_zero() || h.bidegree() != rec.bidegree)
      throw InternalError("h" + alpha_string(alpha) + " has the wrong bidegree");
    rec.certified = level.subst(h) == base * level.w_power(alpha);
    rec.poly = std::move(h);
    out.push_back(std::move(rec));
  }
  return out;
}

template <class K>
Poly<K> sylvester_form(const Poly<K>& p1, const Poly<K>& p2, const Poly<K>& f, const Poly<K>& g) {
  if (p1.is_zero() || p2.is_zero() || homogeneous_gcd<K>({p1, p2}).degree() > 0)
    throw ValidationError("not a regular sequence");
  const auto& ring = f.ring();
  std::vector<Poly<K>> ps{p1.embed(ring), p2.embed(ring)};
  auto a = solve_combination(f, ps);
  auto b = solve_combination(g, ps);
  if (!a || !b) throw ValidationError("not in the ideal");
  return (*a)[0] * (*b)[1] - (*a)[1] * (*b)[0];
}

template <class K>
std::optional<Poly<K>> lift_to_S(const TowerLevel<K>& level, const Poly<K>& target,
                                 Bidegree deg) {
  const auto& S = level.s_ring;
  if (target.is_zero()) return Poly<K>(S);
  if (target.bidegree() != deg) throw PreconditionError("lift_to_S: target has another bidegree");
  Piece<K> src(S, deg), dst(level.scroll_ring, deg);
  DenseMatrix<K> A(S->field(), dst.dim(), src.dim());
  std::unordered_map<Monomial, Poly<K>, MonomialHash> images;
  for (std::size_t c = 0; c < src.dim(); ++c) {
    const Monomial& m = src.basis()[c];
    Monomial tp = t_part(m), xp = m / tp;
    auto it = images.find(tp);
    if (it == images.end())
      it = images.emplace(tp, level.subst(Poly<K>::monomial(S, tp))).first;
    for (const auto& t : it->second.terms()) {
      auto r = dst.index(t.mono * xp);
      if (!r) throw InternalError("lift_to_S: image outside the target piece");
      A.at(*r, c) = t.coeff;
    }
  }
  auto sol = A.solve(dst.coordinates(target));
  if (!sol) return std::nullopt;
  return src.polynomial(*sol);
}

template <class K>
SliceBasis<K> SliceBasis<K>::build(const TowerLevel<K>& level) {
  if (level.m != 1 || level.degrees.size() != 2)
    throw PreconditionError("slice basis needs n = 3 and m = 1");
  const int d1 = level.degrees[0];
  SliceBasis out;
  std::vector<Poly<K>> tw;
  for (std::size_t k = 0; k < 3; ++k)
    tw.push_back(level.subst(Poly<K>::variable(level.s_ring, kFirstT + k)));
  for (int l = 0; l <= d1 - 2; ++l) {
    PolySpan<K> span(level.scroll_ring, {l, 1});
    for (const auto& w : tw)
      for (const auto& xm : x_monomials(l)) span.insert(w.mul_monomial(xm));
    auto& ps = out.p[l];
    for (const auto& m : span.piece().basis()) {
      auto cand = Poly<K>::monomial(level.scroll_ring, m);
      if (span.insert(cand)) ps.push_back(cand);
    }
    if (static_cast<int>(ps.size()) != d1 - l - 1)
      throw InternalError("dim F_l/E_l is " + std::to_string(ps.size()) + ", expected " +
                          std::to_string(d1 - l - 1));
  }
  return out;
}

template <class K>
const std::vector<Poly<K>>& SliceBasis<K>::at(int l) const {
  static const std::vector<Poly<K>> empty;
  auto it = p.find(l);
  return it == p.end() ? empty : it->second;
}

template <class K>
std::vector<GeneratorRecord<K>> slice_generators(const PresentationInput<K>& input, int i) {
  if (input.n != 3) throw PreconditionError("slice generators need n = 3");
  const int d1 = input.degrees[0], d2 = input.degrees[1];
  if (i < d1 - 1) throw PreconditionError("slice needs x-degree >= d1 - 1 = " + std::to_string(d1 - 1));
  const auto L = build_level(input, 1);
  const auto g = sym_equations(input);
  const auto basis = SliceBasis<K>::build(L);
  const auto& W = L.scroll_ring;
  const Poly<K> G2 = L.subst(g[1]);
  std::vector<GeneratorRecord<K>> out;

  for (int j = i - d1; j >= 0; --j) {
    GeneratorRecord<K> rec;
    rec.provenance = Provenance::SymEquation;
    rec.label = times("g1", x_label(input.s_ring, j, i - d1 - j));
    rec.poly = g[0] * x_power(input.s_ring, j, i - d1 - j);
    rec.bidegree = {i, 1};
    rec.certified = L.subst(rec.poly).is_zero();
    out.push_back(std::move(rec));
  }

  auto lifted = [&](const Poly<K>& image, Bidegree deg, ExpVec alpha, std::string label) {
    auto h = lift_to_S(L, image, deg);
    if (!h) throw InternalError("slice element " + label + " has no preimage in S");
    GeneratorRecord<K> rec;
    rec.provenance = Provenance::Slice;
    rec.alpha = std::move(alpha);
    rec.label = std::move(label);
    rec.bidegree = deg;
    rec.certified = L.subst(*h) == image;
    rec.poly = std::move(*h);
    out.push_back(std::move(rec));
  };

  const int c = d2 - i;
  if (c > 0) {
    for (const auto& b : enumerate_B(c, L.sigma)) {
      auto image = G2 * x_power(W, b.j, b.k) * L.w_power(b.alpha);
      lifted(image, {i, 1 + total(b.alpha)}, b.alpha,
             times(times("g2", x_label(W, b.j, b.k)), "w^" + alpha_string(b.alpha)));
    }
    for (const auto& a : enumerate_Omega(c, L.sigma)) {
      const int l = L.sigma.weight(a) - c;
      const auto& ps = basis.at(l);
      for (std::size_t j = 0; j < ps.size(); ++j)
        lifted(G2 * ps[j] * L.w_power(a), {i, 2 + total(a)}, a,
               "g2*p(" + std::to_string(l) + "," + std::to_string(j + 1) + ")*w^" + alpha_string(a));
    }
  } else {
    const int e = -c;
    for (int j = e; j >= 0; --j) {
      GeneratorRecord<K> rec;
      rec.provenance = Provenance::Slice;
      rec.alpha = ExpVec(2, 0);
      rec.label = times("g2", x_label(input.s_ring, j, e - j));
      rec.poly = g[1] * x_power(input.s_ring, j, e - j);
      rec.bidegree = {i, 1};
      rec.certified = L.subst(rec.poly) == G2 * x_power(W, j, e - j);
      out.push_back(std::move(rec));
    }
    const auto& ps = basis.at(e);
    for (std::size_t j = 0; j < ps.size(); ++j)
      lifted(G2 * ps[j], {i, 2}, ExpVec(2, 0),
             "g2*p(" + std::to_string(e) + "," + std::to_string(j + 1) + ")");
  }
  return out;
}

template <class K>
std::size_t u_span_dim(const std::vector<Poly<K>>& polys, const RingPtr<K>& s_ring, Bidegree deg) {
  PolySpan<K> span(s_ring, deg);
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    auto b = p.bidegree();
    if (b.first != deg.first || b.second > deg.second) continue;
    for (const auto& u : piece_basis(s_ring, {0, deg.second - b.second}))
      if (span.insert(p.mul_monomial(u)) && span.full()) return span.rank();
  }
  return span.rank();
}

template <class K>
std::vector<GeneratorRecord<K>> trim_slice(const std::vector<GeneratorRecord<K>>& records, int i) {
  for (const auto& r : records)
    if (r.bidegree.first != i) throw PreconditionError("trim_slice: record " + r.label + " not in slice");
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (records[a].bidegree.second != records[b].bidegree.second)
      return records[a].bidegree.second > records[b].bidegree.second;
    return a > b;
  });
  std::vector<bool> keep(records.size(), true);
  for (auto idx : order) {
    const auto& r = records[idx];
    if (r.poly.is_zero()) {
      keep[idx] = false;
      continue;
    }
    PolySpan<K> span(r.poly.ring(), r.bidegree);
    for (std::size_t o = 0; o < records.size(); ++o) {
      if (o == idx || !keep[o] || records[o].poly.is_zero()) continue;
      int dt = r.bidegree.second - records[o].bidegree.second;
      if (dt < 0) continue;
      for (const auto& u : piece_basis(r.poly.ring(), {0, dt}))
        span.insert(records[o].poly.mul_monomial(u));
    }
    if (span.contains(r.poly)) keep[idx] = false;
  }
  std::vector<GeneratorRecord<K>> out;
  for (std::size_t k = 0; k < records.size(); ++k)
    if (keep[k]) out.push_back(records[k]);
  return out;
}

template <class K>
std::vector<GeneratorRecord<K>> almost_linear_generators(const PresentationInput<K>& input) {
  const int n = input.n;
  for (int k = 0; k < n - 2; ++k)
    if (input.degrees[k] != 1)
      throw PreconditionError("almost linear presentation needs d_1 = ... = d_{n-2} = 1");
  const auto L = build_level(input, n - 2);
  const auto g = sym_equations(input);
  const auto& sg = L.sigma;
  const auto& W = L.scroll_ring;
  const int c = input.degrees[n - 2];
  const std::string gname = "g" + std::to_string(n - 1);
  std::vector<GeneratorRecord<K>> out;

  // T-linear forms mapping to x0^{sigma_i - j} x1^j w_i
  auto gm = scroll_matrix(input.r_ring->field(), sg);
  std::vector<Poly<K>> images{Poly<K>::variable(input.s_ring, kX0),
                              Poly<K>::variable(input.s_ring, kX1)};
  for (std::size_t i = 0; i < 2; ++i)
    for (int j = 0; j <= sg.sigma[i]; ++j) {
      ExpVec e(2, 0);
      e[i] = 1;
      auto lf = lift_to_S(L, x_power(W, sg.sigma[i] - j, j) * L.w_power(e), {0, 1});
      if (!lf) throw InternalError("E and M differ in degree 0");
      if (gm.ring->var(images.size()).name !=
          "v" + std::to_string(i + 1) + "_" + std::to_string(j))
        throw InternalError("unexpected scroll ring layout");
      images.push_back(*lf);
    }
  for (std::size_t k = 0; k < gm.minors.size(); ++k) {
    GeneratorRecord<K> rec;
    rec.provenance = Provenance::Scroll;
    rec.label = "minor" + std::to_string(k + 1);
    rec.poly = evaluate(gm.minors[k], input.s_ring, images);
    rec.bidegree = rec.poly.bidegree();
    rec.certified = L.subst(rec.poly).is_zero();
    out.push_back(std::move(rec));
  }

  for (auto& rec : recursion_generators(L, g[n - 2])) out.push_back(std::move(rec));

  const Poly<K> G = L.subst(g[n - 2]);
  auto add_b = [&](int l, const ExpVec& alpha) {
    for (int j = 0; j <= l; ++j) {
      auto image = G * x_power(W, l - j, j) * L.w_power(alpha);
      Bidegree deg{0, total(alpha) + 1};
      auto h = lift_to_S(L, image, deg);
      if (!h) throw InternalError("B_c element has no preimage in S");
      GeneratorRecord<K> rec;
      rec.provenance = Provenance::Slice;
      rec.alpha = alpha;
      rec.label = times(times(gname, x_label(W, l - j, j)), "w^" + alpha_string(alpha));
      rec.bidegree = deg;
      rec.certified = L.subst(*h) == image;
      rec.poly = std::move(*h);
      out.push_back(std::move(rec));
    }
  };
  const int s1 = sg.sigma[0], s2 = sg.sigma[1];
  const int k = ceil_div(c, s1);
  add_b(k * s1 - c, {k, 0});
  if (s2 > 0) {
    for (int i = 0; i < ceil_div(c + s2, s1); ++i) {
      if (c - i * s1 <= 0) continue;  // alpha_2 would vanish
      const int v = ceil_div(c - i * s1, s2);
      add_b(i * s1 + v * s2 - c, {i, v});
    }
  }
  return out;
}

#define REES_INSTANTIATE_GENERATORS(K)                                                       \
  template Poly<K> recursion_step<K>(const TowerLevel<K>&, const Poly<K>&, std::size_t);     \
  template std::vector<GeneratorRecord<K>> recursion_generators<K>(const TowerLevel<K>&,     \
                                                                   const Poly<K>&, PivotRule); \
  template Poly<K> sylvester_form<K>(const Poly<K>&, const Poly<K>&, const Poly<K>&,         \
                                     const Poly<K>&);                                         \
  template std::optional<Poly<K>> lift_to_S<K>(const TowerLevel<K>&, const Poly<K>&, Bidegree); \
  template struct SliceBasis<K>;                                                              \
  template std::vector<GeneratorRecord<K>> slice_generators<K>(const PresentationInput<K>&, int); \
  template std::size_t u_span_dim<K>(const std::vector<Poly<K>>&, const RingPtr<K>&, Bidegree); \
  template std::vector<GeneratorRecord<K>> trim_slice<K>(const std::vector<GeneratorRecord<K>>&, \
                                                         int);                                \
  template std::vector<GeneratorRecord<K>> almost_linear_generators<K>(                      \
      const PresentationInput<K>&);

REES_INSTANTIATE_GENERATORS(PrimeField)
REES_INSTANTIATE_GENERATORS(RationalField)

}  // namespace rees
