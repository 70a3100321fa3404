#include "rees/tower.hpp"

#include <algorithm>
#include <numeric>

#include "rees/errors.hpp"

namespace rees {

template <class K>
PresentationInput<K> PresentationInput<K>::make(GradedMatrix<K> phi) {
  PresentationInput in;
  in.n = static_cast<int>(phi.rows());
  if (in.n < 3) throw ValidationError("need n >= 3 generators, got " + std::to_string(in.n));
  if (phi.cols() + 1 != phi.rows())
    throw ValidationError("presentation matrix must have n-1 columns");
  if (in.n + 2 > static_cast<int>(kMaxVars))
    throw ValidationError("n too large (at most " + std::to_string(kMaxVars - 3) + ")");
  in.degrees = phi.col_degrees();
  for (std::size_t j = 0; j < in.degrees.size(); ++j) {
    if (in.degrees[j] < 1) throw ValidationError("column degrees must be >= 1");
    if (j > 0 && in.degrees[j] < in.degrees[j - 1])
      throw ValidationError("column degrees must be nondecreasing");
  }
  for (int t : phi.row_twists())
    if (t != 0) throw ValidationError("presentation matrix rows must be untwisted");
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < phi.rows(); ++i) zero = zero && phi.at(i, j).is_zero();
    if (zero) throw ValidationError("column " + std::to_string(j + 1) + " is zero");
  }
  in.r_ring = phi.ring();
  in.s_ring = make_s_ring(phi.ring()->field(), in.n);
  in.minors = signed_maximal_minors(phi);
  in.phi = std::move(phi);
  return in;
}

template <class K>
PresentationInput<K> PresentationInput<K>::parse(
    const K& field, const std::vector<int>& degrees,
    const std::vector<std::vector<std::string>>& rows) {
  auto R = make_r_ring(field);
  if (rows.empty()) throw ValidationError("presentation matrix has no rows");
  GradedMatrix<K> phi(R, rows.size(), degrees.size(), degrees);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != degrees.size())
      throw ValidationError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(degrees.size()));
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      try {
        phi.at(i, j) = parse_poly(rows[i][j], R);
      } catch (const ParseError& e) {
        throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              "): " + e.what());
      }
    }
  }
  return make(std::move(phi));
}

template <class K>
std::vector<Poly<K>> sym_equations(const PresentationInput<K>& input) {
  std::vector<Poly<K>> g;
  for (std::size_t j = 0; j < input.phi.cols(); ++j) {
    Poly<K> gj(input.s_ring);
    for (std::size_t i = 0; i < input.phi.rows(); ++i)
      gj += input.phi.at(i, j).embed(input.s_ring) * Poly<K>::variable(input.s_ring, kFirstT + i);
    g.push_back(std::move(gj));
  }
  return g;
}

template <class K>
Poly<K> substitute_T_with_w(const Poly<K>& p, const GradedMatrix<K>& xi,
                            const std::vector<int>& sigma) {
  const auto& src = p.ring();
  std::size_t n = src->nvars() - kFirstT;
  if (xi.cols() != n || xi.rows() != sigma.size())
    throw PreconditionError("substitute_T_with_w: xi is " + std::to_string(xi.rows()) + "x" +
                            std::to_string(xi.cols()) + ", expected " +
                            std::to_string(sigma.size()) + "x" + std::to_string(n));
  auto W = make_scroll_ring(src->field(), sigma);
  std::vector<Poly<K>> images;
  images.push_back(Poly<K>::variable(W, kX0));
  images.push_back(Poly<K>::variable(W, kX1));
  for (std::size_t j = 0; j < n; ++j) {
    Poly<K> img(W);
    for (std::size_t i = 0; i < xi.rows(); ++i)
      if (!xi.at(i, j).is_zero())
        img += xi.at(i, j).embed(W) * Poly<K>::variable(W, kFirstT + i);
    images.push_back(std::move(img));
  }
  return evaluate(p, W, images);
}

namespace {

// T_j -> sum_k T_k c_{kj}
template <class K>
Poly<K> linear_change(const Poly<K>& f, const DenseMatrix<K>& c) {
  const auto& S = f.ring();
  std::size_t n = c.rows();
  std::vector<Poly<K>> images;
  images.push_back(Poly<K>::variable(S, kX0));
  images.push_back(Poly<K>::variable(S, kX1));
  for (std::size_t j = 0; j < n; ++j) {
    Poly<K> img(S);
    for (std::size_t k = 0; k < n; ++k)
      if (!c.field().is_zero(c.at(k, j)))
        img += Poly<K>::variable(S, kFirstT + k).scale(c.at(k, j));
    images.push_back(std::move(img));
  }
  return evaluate(f, S, images);
}

template <class K>
DenseMatrix<K> identity(const K& f, std::size_t n) {
  DenseMatrix<K> I(f, n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = f.one();
  return I;
}

template <class K>
DenseMatrix<K> inverse(const DenseMatrix<K>& A) {
  const K& f = A.field();
  std::size_t n = A.rows();
  DenseMatrix<K> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  auto piv = aug.rref();
  if (piv.size() < n || piv[n - 1] != n - 1) throw InternalError("matrix is not invertible");
  DenseMatrix<K> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Constant matrix times graded matrix on the right: (M c)_{ij} = sum_k M_ik c_kj.
template <class K>
GradedMatrix<K> times_constant(const GradedMatrix<K>& M, const DenseMatrix<K>& c) {
  GradedMatrix<K> out(M.ring(), M.rows(), c.cols(), std::vector<int>(c.cols(), 0),
                      M.row_twists());
  const K& f = c.field();
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      Poly<K> e(M.ring());
      for (std::size_t k = 0; k < M.cols(); ++k)
        if (!f.is_zero(c.at(k, j)) && !M.at(i, k).is_zero()) e += M.at(i, k).scale(c.at(k, j));
      out.at(i, j) = e;
    }
  return out;
}

}  // namespace

template <class K>
Poly<K> TowerLevel<K>::subst(const Poly<K>& f) const {
  return substitute_T_with_w(f, xi, sigma.sigma);
}

template <class K>
Poly<K> TowerLevel<K>::to_normalized(const Poly<K>& f) const {
  // T = T' chi^{-1}
  return linear_change(f, chi_inv);
}

template <class K>
Poly<K> TowerLevel<K>::to_original(const Poly<K>& f) const {
  return linear_change(f, chi);
}

template <class K>
Poly<K> TowerLevel<K>::w_power(const std::vector<int>& alpha) const {
  Monomial mono;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    mono.exp[kFirstT + i] = static_cast<std::uint16_t>(alpha[i]);
  return Poly<K>::monomial(scroll_ring, mono);
}

template <class K>
TowerLevel<K> build_level(const PresentationInput<K>& input, int m) {
  if (m < 1 || m > input.n - 1) throw PreconditionError("m must satisfy 1 <= m <= n-1");
  const K& f = input.r_ring->field();
  const std::size_t n = static_cast<std::size_t>(input.n);
  TowerLevel<K> L;
  L.m = m;
  L.degrees = input.degrees;
  L.r_ring = input.r_ring;
  L.s_ring = input.s_ring;
  L.xi_raw = embedding_matrix(input.phi, m);
  L.sigma = SigmaInvariants::from_sigma(L.xi_raw.row_twists());
  L.scroll_ring = make_scroll_ring(f, L.sigma.sigma);
  const std::size_t s = static_cast<std::size_t>(L.sigma.s);
  const std::size_t r = static_cast<std::size_t>(L.sigma.r);

  L.chi = identity(f, n);
  L.xi = L.xi_raw;
  if (r < s) {
    // constant rows r..s-1
    DenseMatrix<K> C(f, s - r, n);
    for (std::size_t a = 0; a < s - r; ++a)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = L.xi_raw.at(r + a, j);
        if (e.is_zero()) continue;
        if (e.size() != 1 || !e.leading().mono.is_one())
          throw InternalError("normalization failed: row with sigma 0 is not constant");
        C.at(a, j) = e.leading().coeff;
      }
    DenseMatrix<K> red = C;
    auto piv = red.rref();
    if (piv.size() < s - r) throw InternalError("normalization failed: constant rows have low rank");
    std::vector<std::size_t> perm;  // column t of C Q is column perm[t] of C
    for (std::size_t j = 0; j < n; ++j)
      if (std::find(piv.begin(), piv.end(), j) == piv.end()) perm.push_back(j);
    for (auto p : piv) perm.push_back(p);
    std::size_t k = n - (s - r);
    DenseMatrix<K> C2(f, s - r, s - r);
    for (std::size_t a = 0; a < s - r; ++a)
      for (std::size_t b = 0; b < s - r; ++b) C2.at(a, b) = C.at(a, perm[k + b]);
    auto C2inv = inverse(C2);
    // N = [[I, 0], [-C2^{-1} C1, C2^{-1}]] in permuted coordinates
    DenseMatrix<K> N(f, n, n);
    for (std::size_t a = 0; a < k; ++a) N.at(a, a) = f.one();
    for (std::size_t a = 0; a < s - r; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        auto acc = f.zero();
        for (std::size_t c = 0; c < s - r; ++c)
          acc = f.add(acc, f.mul(C2inv.at(a, c), C.at(c, perm[b])));
        N.at(k + a, b) = f.neg(acc);
      }
      for (std::size_t b = 0; b < s - r; ++b) N.at(k + a, k + b) = C2inv.at(a, b);
    }
    // chi = Q N, Q e_t = e_{perm[t]}
    DenseMatrix<K> chi(f, n, n);
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t j = 0; j < n; ++j) chi.at(perm[t], j) = N.at(t, j);
    L.chi = chi;
    // clear B: row a < r minus sum_l B_{a,l} row_{r+l}
    auto xc = times_constant(L.xi_raw, chi);
    GradedMatrix<K> xi = L.xi_raw;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t l = 0; l < s - r; ++l) {
        const auto& b = xc.at(a, k + l);
        if (b.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!L.xi_raw.at(r + l, j).is_zero())
            xi.at(a, j) -= b * L.xi_raw.at(r + l, j);
      }
    L.xi = xi;
  }
  L.chi_inv = inverse(L.chi);
  L.xi_normalized = times_constant(L.xi, L.chi);
  {
    std::size_t k = n - (s - r);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = L.xi_normalized.at(a, j);
        bool ok;
        if (a < r)
          ok = j < k || e.is_zero();
        else
          ok = (j == k + (a - r)) ? (e.size() == 1 && e.leading().mono.is_one() &&
                                     f.is_one(e.leading().coeff))
                                  : e.is_zero();
        if (!ok) throw InternalError("normalization failed: xi chi is not block diagonal");
      }
  }
  if (!(L.xi * input.phi.first_columns(static_cast<std::size_t>(m))).is_zero())
    throw InternalError("xi * phi_m is not zero");

  for (std::size_t i = 0; i < s; ++i) {
    int budget = 0;
    for (std::size_t j = 0; j < s; ++j)
      if (j != i) budget += L.sigma.sigma[j];
    auto rho = graded_kernel(L.xi.without_row(i), m + 1, budget, budget);
    std::vector<Poly<K>> pi, qi;
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      Poly<K> pc(input.r_ring), qc(input.s_ring);
      for (std::size_t j = 0; j < n; ++j) {
        if (rho.at(j, c).is_zero()) continue;
        if (!L.xi.at(i, j).is_zero()) pc += L.xi.at(i, j) * rho.at(j, c);
        qc += rho.at(j, c).embed(input.s_ring) * Poly<K>::variable(input.s_ring, kFirstT + j);
      }
      pi.push_back(std::move(pc));
      qi.push_back(std::move(qc));
    }
    L.rho.push_back(std::move(rho));
    L.p.push_back(std::move(pi));
    L.q.push_back(std::move(qi));
  }
  return L;
}

template <class K>
std::vector<TruncationRow> check_truncation_equality(const TowerLevel<K>& level,
                                                     const PresentationInput<K>& input,
                                                     int x_lo, int x_hi, int t_max) {
  int dm = input.degrees[static_cast<std::size_t>(level.m - 1)];
  if (x_lo < dm - 1)
    throw PreconditionError("window must start at x-degree >= d_m - 1 = " + std::to_string(dm - 1));
  std::vector<TruncationRow> out;
  for (int i = x_lo; i <= x_hi; ++i)
    for (int j = 0; j <= t_max; ++j) {
      std::vector<Poly<K>> images;
      for (const auto& mono : piece_basis(input.s_ring, {i, j}))
        images.push_back(level.subst(Poly<K>::monomial(input.s_ring, mono)));
      TruncationRow row;
      row.xdeg = i;
      row.tdeg = j;
      row.dim_E = span_dim(images);
      row.dim_M = piece_basis(level.scroll_ring, {i, j}).size();
      out.push_back(row);
    }
  return out;
}

template <class K>
std::function<long(int)> hilbert_FE(const TowerLevel<K>& level, const PresentationInput<K>& input) {
  std::vector<int> sigma = level.sigma.sigma;
  std::vector<int> d(input.degrees.begin(), input.degrees.begin() + level.m);
  long n = input.n;
  return [sigma, d, n](int i) -> long {
    auto dimR = [](long l) { return std::max<long>(l + 1, 0); };
    long h = -n * dimR(i);
    for (int s : sigma) h += dimR(i + s);
    for (int dk : d) h += dimR(i - dk);
    return std::max<long>(h, 0);
  };
}

template <class K>
bool wmult_surjective(const TowerLevel<K>& level, const PresentationInput<K>& input,
                      std::size_t i) {
  int dm = input.degrees[static_cast<std::size_t>(level.m - 1)];
  int deg = dm - 1 + level.sigma.sigma[i];
  PolySpan<K> span(input.r_ring, {deg, 0});
  for (const auto& p : level.p[i]) {
    if (p.is_zero()) continue;
    int e = deg - p.degree();
    for (const auto& mu : x_monomials(e)) span.insert(p.mul_monomial(mu));
  }
  return span.full();
}

#define REES_INSTANTIATE_TOWER(K)                                                             \
  template struct PresentationInput<K>;                                                       \
  template std::vector<Poly<K>> sym_equations<K>(const PresentationInput<K>&);                \
  template Poly<K> substitute_T_with_w<K>(const Poly<K>&, const GradedMatrix<K>&,             \
                                          const std::vector<int>&);                           \
  template struct TowerLevel<K>;                                                              \
  template TowerLevel<K> build_level<K>(const PresentationInput<K>&, int);                    \
  template std::vector<TruncationRow> check_truncation_equality<K>(                           \
      const TowerLevel<K>&, const PresentationInput<K>&, int, int, int);                      \
  template std::function<long(int)> hilbert_FE<K>(const TowerLevel<K>&,                      \
                                                  const PresentationInput<K>&);               \
  template bool wmult_surjective<K>(const TowerLevel<K>&, const PresentationInput<K>&,        \
                                    std::size_t);

REES_INSTANTIATE_TOWER(PrimeField)
REES_INSTANTIATE_TOWER(RationalField)

}  // namespace rees
