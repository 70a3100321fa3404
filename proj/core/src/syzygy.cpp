#include "rees/syzygy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rees/errors.hpp"
#include "rees/gradedlin.hpp"

namespace rees {

SigmaInvariants SigmaInvariants::from_sigma(std::vector<int> sigma) {
  for (int x : sigma)
    if (x < 0) throw ValidationError("sigma entries must be nonnegative");
  std::stable_sort(sigma.begin(), sigma.end(), std::greater<int>());
  SigmaInvariants inv;
  inv.s = static_cast<int>(sigma.size());
  inv.r = static_cast<int>(std::count_if(sigma.begin(), sigma.end(), [](int x) { return x > 0; }));
  inv.sigma = std::move(sigma);
  return inv;
}

int SigmaInvariants::weight(const std::vector<int>& alpha) const {
  int w = 0;
  for (std::size_t i = 0; i < alpha.size() && i < sigma.size(); ++i) w += alpha[i] * sigma[i];
  return w;
}

namespace {

template <class K>
Poly<K> determinant(const GradedMatrix<K>& A, std::size_t col, unsigned row_mask,
                    std::map<std::pair<std::size_t, unsigned>, Poly<K>>& memo) {
  if (col == A.cols()) return Poly<K>::from_int(A.ring(), 1);
  auto key = std::make_pair(col, row_mask);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Poly<K> det(A.ring());
  int sign = 1;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (!(row_mask & (1u << i))) continue;
    if (!A.at(i, col).is_zero()) {
      Poly<K> sub = determinant(A, col + 1, row_mask & ~(1u << i), memo);
      Poly<K> term = A.at(i, col) * sub;
      det = sign > 0 ? det + term : det - term;
    }
    sign = -sign;
  }
  memo.emplace(key, det);
  return det;
}

template <class K>
using Univariate = std::vector<typename K::Elem>;  // coefficient of x0^k at k

template <class K>
void trim(const K& f, Univariate<K>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class K>
Univariate<K> poly_mod(const K& f, Univariate<K> a, const Univariate<K>& b) {
  auto lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    auto factor = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k)
      a[shift + k] = f.sub(a[shift + k], f.mul(factor, b[k]));
    trim(f, a);
  }
  return a;
}

template <class K>
Univariate<K> univariate_gcd(const K& f, Univariate<K> a, Univariate<K> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    auto r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    auto inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

}  // namespace

template <class K>
Poly<K> homogeneous_gcd(const std::vector<Poly<K>>& forms) {
  RingPtr<K> ring;
  for (const auto& p : forms)
    if (!p.is_zero()) ring = p.ring();
  if (!ring) return forms.empty() ? Poly<K>() : Poly<K>(forms.front().ring());
  const K& f = ring->field();
  int min_order = -1;
  Univariate<K> g;
  bool first = true;
  for (const auto& p : forms) {
    if (p.is_zero()) continue;
    int ord = 1 << 30;
    Univariate<K> u;
    for (const auto& t : p.terms()) {
      ord = std::min<int>(ord, t.mono.exp[kX1]);
      std::size_t e = t.mono.exp[kX0];
      if (u.size() <= e) u.resize(e + 1, f.zero());
      u[e] = f.add(u[e], t.coeff);
    }
    min_order = min_order < 0 ? ord : std::min(min_order, ord);
    g = first ? univariate_gcd(f, u, Univariate<K>{}) : univariate_gcd(f, g, u);
    first = false;
  }
  int deg = static_cast<int>(g.size()) - 1 + min_order;
  std::vector<Term<K>> ts;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (f.is_zero(g[k])) continue;
    Monomial m;
    m.exp[kX0] = static_cast<std::uint16_t>(k);
    m.exp[kX1] = static_cast<std::uint16_t>(deg - static_cast<int>(k));
    ts.push_back({m, g[k]});
  }
  return Poly<K>::from_terms(ring, std::move(ts));
}

template <class K>
std::vector<Poly<K>> signed_maximal_minors(const GradedMatrix<K>& phi) {
  std::size_t n = phi.rows();
  if (phi.cols() + 1 != n) throw ValidationError("presentation matrix must be n x (n-1)");
  if (n > 20) throw ValidationError("too many rows");
  phi.validate();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      for (const auto& t : phi.at(i, j).terms())
        if (t.mono.is_one())
          throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") is not in the maximal ideal");
  std::map<std::pair<std::size_t, unsigned>, Poly<K>> memo;
  unsigned all = (1u << n) - 1;
  std::vector<Poly<K>> minors;
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    Poly<K> d = determinant(phi, 0, all & ~(1u << i), memo);
    if (i % 2 == 1) d = -d;
    any = any || !d.is_zero();
    minors.push_back(std::move(d));
  }
  if (!any) throw ValidationError("all maximal minors vanish");
  auto g = homogeneous_gcd(minors);
  if (g.degree() != 0)
    throw ValidationError("height < 2: the maximal minors share the factor " + g.to_string());
  return minors;
}

template <class K>
GradedMatrix<K> graded_kernel(const GradedMatrix<K>& M, int expected_rank, int degree_budget,
                              std::optional<int> expected_degree_sum) {
  const auto& ring = M.ring();
  const K& f = ring->field();
  const std::size_t nc = M.cols(), nr = M.rows();
  const auto& cdeg = M.col_degrees();
  const auto& tw = M.row_twists();

  struct Gen {
    int degree;
    std::vector<Poly<K>> v;
  };
  std::vector<Gen> gens;
  if (expected_rank > 0) {
    if (nc == 0) throw PreconditionError("graded_kernel: no columns");
    int start = *std::min_element(cdeg.begin(), cdeg.end());
    for (int ell = start; static_cast<int>(gens.size()) < expected_rank; ++ell) {
      if (ell > degree_budget)
        throw ValidationError("budget exhausted: found " + std::to_string(gens.size()) + " of " +
                              std::to_string(expected_rank) + " kernel generators up to degree " +
                              std::to_string(degree_budget));
      // coordinates: component j, monomial of degree ell - cdeg[j]
      std::vector<std::size_t> offset(nc + 1, 0);
      for (std::size_t j = 0; j < nc; ++j)
        offset[j + 1] = offset[j] + static_cast<std::size_t>(std::max(0, ell - cdeg[j] + 1));
      std::size_t dim = offset[nc];
      if (dim == 0) continue;
      std::vector<std::size_t> roff(nr + 1, 0);
      for (std::size_t i = 0; i < nr; ++i)
        roff[i + 1] = roff[i] + static_cast<std::size_t>(std::max(0, ell + tw[i] + 1));
      DenseMatrix<K> A(f, roff[nr], dim);
      for (std::size_t j = 0; j < nc; ++j) {
        auto monos = x_monomials(ell - cdeg[j]);
        for (std::size_t k = 0; k < monos.size(); ++k)
          for (std::size_t i = 0; i < nr; ++i)
            for (const auto& t : M.at(i, j).terms()) {
              auto prod = t.mono * monos[k];
              A.at(roff[i] + prod.exp[kX1], offset[j] + k) =
                  f.add(A.at(roff[i] + prod.exp[kX1], offset[j] + k), t.coeff);
            }
      }
      auto kernel = A.nullspace();
      if (kernel.empty()) continue;

      auto coords = [&](const std::vector<Poly<K>>& v) {
        std::vector<typename K::Elem> c(dim, f.zero());
        for (std::size_t j = 0; j < nc; ++j)
          for (const auto& t : v[j].terms()) c[offset[j] + t.mono.exp[kX1]] = t.coeff;
        return c;
      };
      RowSpace<K> old(f, dim);
      for (const auto& g : gens)
        for (const auto& mu : x_monomials(ell - g.degree)) {
          std::vector<Poly<K>> mv;
          for (const auto& e : g.v) mv.push_back(e.mul_monomial(mu));
          old.insert(coords(mv));
        }
      std::vector<std::vector<typename K::Elem>> residues;
      for (auto& v : kernel) {
        auto r = old.reduce(std::move(v));
        if (std::any_of(r.begin(), r.end(), [&](const auto& e) { return !f.is_zero(e); }))
          residues.push_back(std::move(r));
      }
      if (residues.empty()) continue;
      DenseMatrix<K> R(f, residues.size(), dim);
      for (std::size_t a = 0; a < residues.size(); ++a)
        for (std::size_t b = 0; b < dim; ++b) R.at(a, b) = residues[a][b];
      auto pivots = R.rref(true);
      std::vector<std::size_t> order(pivots.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
      for (auto row : order) {
        Gen g{ell, {}};
        for (std::size_t j = 0; j < nc; ++j) {
          std::vector<Term<K>> ts;
          auto monos = x_monomials(ell - cdeg[j]);
          for (std::size_t k = 0; k < monos.size(); ++k)
            if (!f.is_zero(R.at(row, offset[j] + k))) ts.push_back({monos[k], R.at(row, offset[j] + k)});
          g.v.push_back(Poly<K>::from_terms(ring, std::move(ts)));
        }
        gens.push_back(std::move(g));
      }
    }
  }
  if (static_cast<int>(gens.size()) != expected_rank)
    throw InternalError("graded_kernel: found " + std::to_string(gens.size()) +
                        " generators, expected " + std::to_string(expected_rank));
  std::vector<int> gdeg, twists;
  for (const auto& g : gens) gdeg.push_back(g.degree);
  for (int c : cdeg) twists.push_back(-c);
  if (expected_degree_sum && std::accumulate(gdeg.begin(), gdeg.end(), 0) != *expected_degree_sum)
    throw InternalError("graded_kernel: generator degrees sum to " +
                        std::to_string(std::accumulate(gdeg.begin(), gdeg.end(), 0)) +
                        ", expected " + std::to_string(*expected_degree_sum));
  GradedMatrix<K> out(ring, nc, gens.size(), gdeg, twists);
  for (std::size_t t = 0; t < gens.size(); ++t)
    for (std::size_t j = 0; j < nc; ++j) out.at(j, t) = gens[t].v[j];
  return out;
}

template <class K>
GradedMatrix<K> embedding_matrix(const GradedMatrix<K>& phi, int m) {
  int n = static_cast<int>(phi.rows());
  if (m < 1 || m > n - 1) throw PreconditionError("m must satisfy 1 <= m <= n-1");
  auto phim = phi.first_columns(static_cast<std::size_t>(m));
  int dsum = 0;
  for (int j = 0; j < m; ++j) dsum += phi.col_degrees()[j];
  auto ker = graded_kernel(phim.transpose(), n - m, dsum, dsum);
  auto xi = ker.transpose();  // s x n, row twists = sigma
  std::vector<std::size_t> order(xi.rows());
  std::iota(order.begin(), order.end(), 0);
  const auto& sig = xi.row_twists();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sig[a] > sig[b]; });
  std::vector<int> sorted;
  for (auto o : order) sorted.push_back(sig[o]);
  GradedMatrix<K> out(phi.ring(), xi.rows(), xi.cols(), xi.col_degrees(), sorted);
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t j = 0; j < xi.cols(); ++j) out.at(a, j) = xi.at(order[a], j);
  return out;
}

template <class K>
SigmaInvariants sigma_invariants(const GradedMatrix<K>& phi, int m) {
  return SigmaInvariants::from_sigma(embedding_matrix(phi, m).row_twists());
}

template <class K>
ScrollMatrix<K> scroll_matrix(const K& field, const SigmaInvariants& sigma) {
  ScrollMatrix<K> sm;
  sm.ring = make_gamma_ring(field, sigma.sigma);
  sm.gamma.assign(2, {});
  sm.gamma[0].push_back(Poly<K>::variable(sm.ring, kX0));
  sm.gamma[1].push_back(Poly<K>::variable(sm.ring, kX1));
  std::size_t base = kFirstT;
  for (int s : sigma.sigma) {
    for (int j = 0; j < s; ++j) {
      sm.gamma[0].push_back(Poly<K>::variable(sm.ring, base + j));
      sm.gamma[1].push_back(Poly<K>::variable(sm.ring, base + j + 1));
    }
    base += static_cast<std::size_t>(s) + 1;
  }
  std::size_t c = sm.gamma[0].size();
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b)
      sm.minors.push_back(sm.gamma[0][a] * sm.gamma[1][b] - sm.gamma[0][b] * sm.gamma[1][a]);
  return sm;
}

#define REES_INSTANTIATE_SYZYGY(K)                                                           \
  template std::vector<Poly<K>> signed_maximal_minors<K>(const GradedMatrix<K>&);            \
  template Poly<K> homogeneous_gcd<K>(const std::vector<Poly<K>>&);                          \
  template GradedMatrix<K> graded_kernel<K>(const GradedMatrix<K>&, int, int,                \
                                            std::optional<int>);                             \
  template GradedMatrix<K> embedding_matrix<K>(const GradedMatrix<K>&, int);                 \
  template SigmaInvariants sigma_invariants<K>(const GradedMatrix<K>&, int);                 \
  template ScrollMatrix<K> scroll_matrix<K>(const K&, const SigmaInvariants&);

REES_INSTANTIATE_SYZYGY(PrimeField)
REES_INSTANTIATE_SYZYGY(RationalField)

}  // namespace rees
