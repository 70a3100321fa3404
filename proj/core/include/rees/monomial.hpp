#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rees {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector over at most kMaxVars variables. Unused slots stay zero,
/// so whole-array comparisons are valid across rings of different sizes.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }
  std::uint16_t& operator[](std::size_t i) { return exp[i]; }

  bool operator==(const Monomial&) const = default;

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }
  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] && other.exp[i]) return false;
    return true;
  }
  /// One bit per variable that occurs; a fast divisibility pre-filter.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i]) m |= 1u << i;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
    return r;
  }
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
    return r;
  }
  static Monomial variable(std::size_t i, std::uint16_t power = 1) {
    Monomial r;
    r.exp[i] = power;
    return r;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A term order over the variables of a ring.
///
/// Grevlex: total degree first, then reverse lexicographic with respect to
/// `rank` (variables listed from largest to smallest).
/// Elimination: total degree in `block` first, then grevlex restricted to
/// `block`, then grevlex on the remaining ranked variables.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Elimination };

  MonomialOrder() = default;
  static MonomialOrder grevlex(std::vector<int> rank);
  static MonomialOrder elimination(std::vector<int> block, std::vector<int> rank);

  Kind kind() const { return kind_; }
  const std::vector<int>& rank() const { return rank_; }
  const std::vector<int>& block() const { return block_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  static int grevlex_compare(const Monomial& a, const Monomial& b,
                             const std::vector<int>& vars);

  Kind kind_ = Kind::Grevlex;
  std::vector<int> rank_;
  std::vector<int> block_;
};

}  // namespace rees
