#include "rees/field.hpp"

#include "rees/errors.hpp"

namespace rees {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw ValidationError("prime must be below 2^31");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (num < 0) num += pz;
  if (den == 0)
    throw ValidationError("denominator " + q.get_den().get_str() +
                          " vanishes modulo " + std::to_string(p_));
  return div(static_cast<Elem>(num.get_ui()), static_cast<Elem>(den.get_ui()));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw InternalError("division by zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

std::string PrimeField::describe() const { return "F_" + std::to_string(p_); }

RationalField::Elem RationalField::from_int(long long v) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return Elem(z);
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw InternalError("division by zero in QQ");
  Elem r = 1 / a;
  r.canonicalize();
  return r;
}

std::size_t RationalField::hash(const Elem& a) const {
  return std::hash<std::string>{}(a.get_str());
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw ValidationError("prime must be below 2^31");
  return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::describe() const {
  return kind == Kind::Prime ? "F_" + std::to_string(p) : "QQ";
}

}  // namespace rees
