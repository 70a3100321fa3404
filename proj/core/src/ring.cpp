#include "rees/ring.hpp"

#include "rees/errors.hpp"

namespace rees {

template <class K>
Ring<K>::Ring(K field, RingKind kind, std::vector<Variable> vars, MonomialOrder order,
              std::vector<int> sigma)
    : field_(std::move(field)),
      kind_(kind),
      vars_(std::move(vars)),
      order_(std::move(order)),
      sigma_(std::move(sigma)) {
  if (vars_.size() > kMaxVars)
    throw ValidationError("too many variables (" + std::to_string(vars_.size()) +
                          "), at most " + std::to_string(kMaxVars) + " supported");
}

template <class K>
std::size_t Ring<K>::num_t_vars() const {
  std::size_t c = 0;
  for (const auto& v : vars_)
    if (v.tdeg == 1) ++c;
  return c;
}

template <class K>
std::optional<std::size_t> Ring<K>::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

template <class K>
Bidegree Ring<K>::bidegree(const Monomial& m) const {
  int x = 0, t = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    x += vars_[i].xdeg * m.exp[i];
    t += vars_[i].tdeg * m.exp[i];
  }
  return {x, t};
}

template <class K>
std::string Ring<K>::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += vars_[i].name;
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::vector<int> iota_rank(std::size_t n) {
  std::vector<int> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
  return r;
}

std::vector<Variable> x_vars() { return {{"x0", 1, 0}, {"x1", 1, 0}}; }

// T1 > ... > Tn > x0 > x1
std::vector<int> oracle_rank(int n) {
  std::vector<int> r;
  for (int i = 0; i < n; ++i) r.push_back(2 + i);
  r.push_back(0);
  r.push_back(1);
  return r;
}

}  // namespace

template <class K>
RingPtr<K> make_r_ring(const K& field) {
  return std::make_shared<const Ring<K>>(field, RingKind::R, x_vars(),
                                         MonomialOrder::grevlex(iota_rank(2)));
}

template <class K>
RingPtr<K> make_s_ring(const K& field, int n) {
  auto vars = x_vars();
  for (int i = 1; i <= n; ++i) vars.push_back({"T" + std::to_string(i), 0, 1});
  auto nv = vars.size();
  return std::make_shared<const Ring<K>>(field, RingKind::S, std::move(vars),
                                         MonomialOrder::grevlex(iota_rank(nv)));
}

template <class K>
RingPtr<K> make_scroll_ring(const K& field, std::vector<int> sigma) {
  auto vars = x_vars();
  for (std::size_t i = 0; i < sigma.size(); ++i)
    vars.push_back({"w" + std::to_string(i + 1), -sigma[i], 1});
  auto nv = vars.size();
  return std::make_shared<const Ring<K>>(field, RingKind::Scroll, std::move(vars),
                                         MonomialOrder::grevlex(iota_rank(nv)),
                                         std::move(sigma));
}

template <class K>
RingPtr<K> make_gamma_ring(const K& field, std::vector<int> sigma) {
  auto vars = x_vars();
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (int j = 0; j <= sigma[i]; ++j)
      vars.push_back({"v" + std::to_string(i + 1) + "_" + std::to_string(j), 0, 1});
  auto nv = vars.size();
  return std::make_shared<const Ring<K>>(field, RingKind::Gamma, std::move(vars),
                                         MonomialOrder::grevlex(iota_rank(nv)),
                                         std::move(sigma));
}

template <class K>
RingPtr<K> make_oracle_ring(const K& field, int n) {
  auto vars = x_vars();
  for (int i = 1; i <= n; ++i) vars.push_back({"T" + std::to_string(i), 0, 1});
  return std::make_shared<const Ring<K>>(field, RingKind::Oracle, std::move(vars),
                                         MonomialOrder::grevlex(oracle_rank(n)));
}

template <class K>
RingPtr<K> make_tagged_ring(const K& field, int n, Bidegree tag_degree) {
  auto vars = x_vars();
  for (int i = 1; i <= n; ++i) vars.push_back({"T" + std::to_string(i), 0, 1});
  vars.push_back({"t", tag_degree.first, tag_degree.second});
  return std::make_shared<const Ring<K>>(
      field, RingKind::Tagged, std::move(vars),
      MonomialOrder::elimination({2 + n}, oracle_rank(n)));
}

#define REES_INSTANTIATE_RING(K)                                              \
  template class Ring<K>;                                                     \
  template RingPtr<K> make_r_ring<K>(const K&);                               \
  template RingPtr<K> make_s_ring<K>(const K&, int);                          \
  template RingPtr<K> make_scroll_ring<K>(const K&, std::vector<int>);        \
  template RingPtr<K> make_gamma_ring<K>(const K&, std::vector<int>);         \
  template RingPtr<K> make_oracle_ring<K>(const K&, int);                     \
  template RingPtr<K> make_tagged_ring<K>(const K&, int, Bidegree);

REES_INSTANTIATE_RING(PrimeField)
REES_INSTANTIATE_RING(RationalField)

}  // namespace rees
