#pragma once

#include <string>
#include <vector>

#include "rees/cli/instance.hpp"
#include "rees/tower.hpp"

namespace fx {

using K = rees::PrimeField;
using Input = rees::PresentationInput<K>;
using P = rees::Poly<K>;

inline K field() { return K(rees::kDefaultPrime); }

inline Input make(const std::vector<int>& d, const std::vector<std::vector<std::string>>& rows) {
  return Input::parse(field(), d, rows);
}

// first column (x0^2, x0x1, x1^2), second (x1^3, 0, x0^3)
inline Input ex2n() { return make({2, 3}, {{"x0^2", "x1^3"}, {"x0*x1", "0"}, {"x1^2", "x0^3"}}); }

// first column (x0^2, x1^2, 0): dependent entries
inline Input exgen0() { return make({2, 5}, {{"x0^2", "x1^5"}, {"x1^2", "x0^5"}, {"0", "x0^2*x1^3"}}); }

inline Input final_example() {
  return make({4, 7}, {{"x0^4", "x1^7"}, {"x0^2*x1^2", "0"}, {"x1^4", "x0^7"}});
}

inline Input final_variant() {
  return make({4, 7}, {{"x0^4 + x0^3*x1", "x1^7"}, {"x0^2*x1^2", "0"}, {"x1^4", "x0^7"}});
}

inline P S(const Input& in, const std::string& s) { return rees::parse_poly(s, in.s_ring); }
inline P R(const Input& in, const std::string& s) { return rees::parse_poly(s, in.r_ring); }

inline Input random(int n, const std::vector<int>& d, std::uint64_t seed) {
  return rees::cli::to_input(rees::cli::random_instance(n, d, seed, rees::FieldSpec::prime(rees::kDefaultPrime)),
                             field());
}

// sigma = (3, 0)
inline Input table1() {
  return make({3, 16}, {{"x0^3", "x1^16"}, {"x1^3", "x0^16"}, {"0", "x0^8*x1^8"}});
}

}  // namespace fx
