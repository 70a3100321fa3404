#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rees {

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t p);

/// The prime field F_p with canonical representatives 0..p-1. p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem from_rational(const mpq_class& q) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string describe() const;
  std::size_t hash(Elem a) const { return a; }

 private:
  std::uint32_t p_;
};

/// The rationals, with GMP big-integer numerators and denominators.
class RationalField {
 public:
  using Elem = mpq_class;

  bool operator==(const RationalField&) const { return true; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const;
  Elem from_rational(const mpq_class& q) const { return q; }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string describe() const { return "QQ"; }
  std::size_t hash(const Elem& a) const;
};

/// Runtime description of a coefficient field, as stored in instance files.
struct FieldSpec {
  enum class Kind { Prime, Rational };
  Kind kind = Kind::Prime;
  std::uint32_t p = kDefaultPrime;

  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rational() { return FieldSpec{Kind::Rational, 0}; }

  bool operator==(const FieldSpec&) const = default;
  std::string describe() const;
};

}  // namespace rees
