#include "rees/poly.hpp"

#include <algorithm>
#include <cctype>
#include <type_traits>
#include <unordered_map>

#include "rees/errors.hpp"

namespace rees {

template <class K>
Poly<K> Poly<K>::constant(const RingPtr<K>& ring, const Elem& c) {
  return term(ring, Monomial{}, c);
}

template <class K>
Poly<K> Poly<K>::from_int(const RingPtr<K>& ring, long long c) {
  return constant(ring, ring->field().from_int(c));
}

template <class K>
Poly<K> Poly<K>::term(const RingPtr<K>& ring, const Monomial& m, const Elem& c) {
  Poly p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class K>
Poly<K> Poly<K>::monomial(const RingPtr<K>& ring, const Monomial& m) {
  return term(ring, m, ring->field().one());
}

template <class K>
Poly<K> Poly<K>::variable(const RingPtr<K>& ring, std::size_t i, unsigned power) {
  if (i >= ring->nvars()) throw PreconditionError("variable index out of range");
  return monomial(ring, Monomial::variable(i, static_cast<std::uint16_t>(power)));
}

template <class K>
Poly<K> Poly<K>::from_terms(const RingPtr<K>& ring, std::vector<Term<K>> terms) {
  Poly p(ring);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

template <class K>
void Poly<K>::normalize() {
  const auto& ord = ring_->order();
  const K& f = ring_->field();
  std::sort(terms_.begin(), terms_.end(), [&](const Term<K>& a, const Term<K>& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term<K>> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const Term<K>& t) { return f.is_zero(t.coeff); }),
            out.end());
  terms_ = std::move(out);
}

template <class K>
void Poly<K>::require_same_ring(const Poly& o) const {
  if (!ring_ || !o.ring_ || !same_ring(ring_, o.ring_))
    throw PreconditionError("polynomials live in different rings");
}

template <class K>
typename Poly<K>::Elem Poly<K>::coeff(const Monomial& m) const {
  const auto& ord = ring_->order();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term<K>& t, const Monomial& x) {
                               return ord.compare(t.mono, x) > 0;
                             });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return ring_->field().zero();
}

template <class K>
bool Poly<K>::is_bihomogeneous() const {
  if (terms_.empty()) return true;
  auto d = ring_->bidegree(terms_.front().mono);
  for (const auto& t : terms_)
    if (ring_->bidegree(t.mono) != d) return false;
  return true;
}

template <class K>
Bidegree Poly<K>::bidegree() const {
  if (terms_.empty()) throw PreconditionError("degree of zero undefined");
  if (!is_bihomogeneous()) throw ValidationError("not bihomogeneous");
  return ring_->bidegree(terms_.front().mono);
}

template <class K>
Poly<K> Poly<K>::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

template <class K>
Poly<K> Poly<K>::operator+(const Poly& o) const {
  if (is_zero() && !ring_) return o;
  if (o.is_zero() && !o.ring_) return *this;
  require_same_ring(o);
  const auto& ord = ring_->order();
  const K& f = field();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      auto s = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!f.is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

template <class K>
Poly<K> Poly<K>::operator-(const Poly& o) const {
  return *this + (-o);
}

template <class K>
Poly<K> Poly<K>::operator*(const Poly& o) const {
  require_same_ring(o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  const K& f = field();
  std::unordered_map<Monomial, Elem, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto prod = f.mul(a.coeff, b.coeff);
      auto [it, fresh] = acc.try_emplace(a.mono * b.mono, prod);
      if (!fresh) it->second = f.add(it->second, prod);
    }
  std::vector<Term<K>> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!f.is_zero(c)) ts.push_back({m, std::move(c)});
  return from_terms(ring_, std::move(ts));
}

template <class K>
Poly<K> Poly<K>::scale(const Elem& c) const {
  const K& f = field();
  if (f.is_zero(c)) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, c);
  return r;
}

template <class K>
Poly<K> Poly<K>::mul_term(const Monomial& m, const Elem& c) const {
  const K& f = field();
  if (f.is_zero(c)) return Poly(ring_);
  // Multiplying by a monomial preserves the order of a monomial order.
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, f.mul(t.coeff, c)});
  return r;
}

template <class K>
Poly<K> Poly<K>::mul_monomial(const Monomial& m) const {
  return mul_term(m, field().one());
}

template <class K>
Poly<K> Poly<K>::pow(unsigned e) const {
  Poly result = from_int(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <class K>
bool Poly<K>::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  if (!same_ring(ring_, o.ring_)) return false;
  const K& f = field();
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || !f.equal(terms_[i].coeff, o.terms_[i].coeff))
      return false;
  return true;
}

template <class K>
Poly<K> Poly<K>::embed(const RingPtr<K>& target) const {
  std::vector<Term<K>> ts = terms_;
  for (const auto& t : ts)
    for (std::size_t i = target->nvars(); i < kMaxVars; ++i)
      if (t.mono.exp[i]) throw PreconditionError("variable missing in target ring");
  return from_terms(target, std::move(ts));
}

template <class K>
std::string Poly<K>::to_string() const {
  if (terms_.empty()) return "0";
  const K& f = field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Elem c = t.coeff;
    bool negative = false;
    if constexpr (std::is_same_v<K, RationalField>) {
      if (sgn(c) < 0) {
        negative = true;
        c = -c;
      }
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    bool unit_mono = t.mono.is_one();
    if (unit_mono) {
      out += f.to_string(c);
    } else {
      if (!f.is_one(c)) out += f.to_string(c) + "*";
      out += ring_->format(t.mono);
    }
  }
  return out;
}

template <class K>
Poly<K> evaluate(const Poly<K>& p, const RingPtr<K>& target,
                 const std::vector<Poly<K>>& images) {
  const auto& src = p.ring();
  if (images.size() < src->nvars())
    throw PreconditionError("evaluate: need one image per variable");
  // powers[i][e] = images[i]^e, filled on demand
  std::vector<std::vector<Poly<K>>> powers(src->nvars());
  auto power = [&](std::size_t i, unsigned e) -> const Poly<K>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly<K>::from_int(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  const K& f = target->field();
  std::unordered_map<Monomial, typename K::Elem, MonomialHash> acc;
  for (const auto& t : p.terms()) {
    Poly<K> prod = Poly<K>::constant(target, t.coeff);
    for (std::size_t i = 0; i < src->nvars() && !prod.is_zero(); ++i)
      if (t.mono.exp[i]) prod = prod * power(i, t.mono.exp[i]);
    for (const auto& u : prod.terms()) {
      auto [it, fresh] = acc.try_emplace(u.mono, u.coeff);
      if (!fresh) it->second = f.add(it->second, u.coeff);
    }
  }
  std::vector<Term<K>> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc) ts.push_back({m, std::move(c)});
  return Poly<K>::from_terms(target, std::move(ts));
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }
  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool alpha_next() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return s_.substr(start, pos_ - start);
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Poly<K> parse_poly(const std::string& text, const RingPtr<K>& ring) {
  const K& f = ring->field();
  Parser ps(text);
  if (ps.at_end()) throw ParseError("empty polynomial", 0);
  std::vector<Term<K>> terms;
  bool first = true;
  while (!ps.at_end()) {
    bool negative = false;
    if (ps.accept('+')) {
    } else if (ps.accept('-')) {
      negative = true;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", ps.pos());
    }
    first = false;

    mpq_class coeff(1);
    bool have_coeff = false;
    if (ps.digit_next()) {
      mpz_class num(ps.digits());
      mpz_class den(1);
      if (ps.accept('/')) {
        std::size_t at = ps.pos();
        den = mpz_class(ps.digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      have_coeff = true;
      if (ps.accept('*') && !ps.alpha_next())
        throw ParseError("expected variable after '*'", ps.pos());
    }
    Monomial m;
    if (ps.alpha_next()) {
      while (true) {
        std::size_t at = ps.pos();
        std::string name = ps.identifier();
        auto idx = ring->index_of(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", at);
        unsigned e = 1;
        if (ps.accept('^')) {
          std::size_t eat = ps.pos();
          std::string ds = ps.digits();
          if (ds.size() > 4 || std::stoul(ds) > 60000)
            throw ParseError("exponent too large", eat);
          e = static_cast<unsigned>(std::stoul(ds));
        }
        if (m.exp[*idx] + e > 60000) throw ParseError("exponent too large", at);
        m.exp[*idx] = static_cast<std::uint16_t>(m.exp[*idx] + e);
        if (!ps.accept('*')) break;
        if (!ps.alpha_next()) throw ParseError("expected variable after '*'", ps.pos());
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or variable", ps.pos());
    }
    if (negative) coeff = -coeff;
    terms.push_back({m, f.from_rational(coeff)});
  }
  Poly<K> p = Poly<K>::from_terms(ring, std::move(terms));
  if (!p.is_bihomogeneous())
    throw ValidationError(ring->kind() == RingKind::R ? "not homogeneous" : "not bihomogeneous");
  return p;
}

#define REES_INSTANTIATE_POLY(K)                                                     \
  template class Poly<K>;                                                            \
  template Poly<K> evaluate<K>(const Poly<K>&, const RingPtr<K>&,                    \
                               const std::vector<Poly<K>>&);                         \
  template Poly<K> parse_poly<K>(const std::string&, const RingPtr<K>&);

REES_INSTANTIATE_POLY(PrimeField)
REES_INSTANTIATE_POLY(RationalField)

}  // namespace rees
