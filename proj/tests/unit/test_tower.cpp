#include "doctest.h"
#include "fixtures.hpp"
#include "rees/errors.hpp"
#include "rees/tower.hpp"

using namespace rees;
using fx::K;
using P = Poly<K>;

namespace {

std::string row_string(const std::vector<P>& v) {
  std::string s;
  for (const auto& p : v) s += (s.empty() ? "" : " | ") + p.to_string();
  return s;
}

}  // namespace

TEST_SUITE("tower") {
  TEST_CASE("symmetric algebra equations") {
    auto in = fx::ex2n();
    auto g = sym_equations(in);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == fx::S(in, "x0^2*T1 + x0*x1*T2 + x1^2*T3"));
    CHECK(g[1] == fx::S(in, "x1^3*T1 + x0^3*T3"));
    CHECK(g[1].bidegree() == Bidegree{3, 1});
    auto fin = fx::final_example();
    auto gf = sym_equations(fin);
    CHECK(gf[0] == fx::S(fin, "x0^4*T1 + x0^2*x1^2*T2 + x1^4*T3"));
    CHECK(gf[1] == fx::S(fin, "x1^7*T1 + x0^7*T3"));
  }

  TEST_CASE("ex2n level one") {
    auto in = fx::ex2n();
    auto L = build_level(in, 1);
    CHECK(L.sigma.sigma == std::vector<int>{1, 1});
    CHECK(L.xi == L.xi_raw);
    CHECK(L.xi.at(0, 0) == fx::R(in, "-x1"));
    CHECK(L.xi.at(0, 1) == fx::R(in, "x0"));
    CHECK(L.xi.at(1, 1) == fx::R(in, "-x1"));
    CHECK(L.xi.at(1, 2) == fx::R(in, "x0"));
    CHECK(L.rho[0].to_string() == "[[1, 0], [0, x0], [0, x1]]");
    CHECK(L.rho[1].to_string() == "[[0, x0], [0, x1], [1, 0]]");
    CHECK(L.p[0][0] == fx::R(in, "-x1"));
    CHECK(L.p[0][1] == fx::R(in, "x0^2"));
    CHECK(L.p[1][0] == fx::R(in, "x0"));
    CHECK(L.p[1][1] == fx::R(in, "-x1^2"));
    CHECK(L.q[0][0] == fx::S(in, "T1"));
    CHECK(L.q[0][1] == fx::S(in, "x0*T2 + x1*T3"));
    CHECK(L.q[1][0] == fx::S(in, "T3"));
    CHECK(L.q[1][1] == fx::S(in, "x0*T1 + x1*T2"));
  }

  TEST_CASE("dependent first column") {
    auto in = fx::exgen0();
    auto L = build_level(in, 1);
    CHECK(L.sigma.sigma == std::vector<int>{2, 0});
    CHECK(L.sigma.r == 1);
    CHECK(row_string(L.xi.row(0)) == row_string({fx::R(in, "-x1^2"), fx::R(in, "x0^2"), P(in.r_ring)}));
    CHECK(row_string(L.xi.row(1)) == "0 | 0 | 1");
    CHECK(L.rho[0].to_string() == "[[1, 0], [0, 1], [0, 0]]");
    CHECK(L.p[0][0] == fx::R(in, "-x1^2"));
    CHECK(L.p[0][1] == fx::R(in, "x0^2"));
    CHECK(L.q[0][0] == fx::S(in, "T1"));
    CHECK(L.q[0][1] == fx::S(in, "T2"));
  }

  TEST_CASE("normalization with a non-trivial change of coordinates") {
    // first column (x0^2, x1^2, x0^2 + x1^2): the constant row is (1, 1, -1)
    auto in = fx::make({2, 5}, {{"x0^2", "x1^5"}, {"x1^2", "x0^5"}, {"x0^2 + x1^2", "x0^2*x1^3"}});
    auto L = build_level(in, 1);
    CHECK(L.sigma.sigma == std::vector<int>{2, 0});
    const std::size_t n = 3;
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(L.xi_normalized.at(0, 2).is_zero());
      if (j < 2) CHECK(L.xi_normalized.at(1, j).is_zero());
    }
    CHECK(L.xi_normalized.at(1, 2).to_string() == "1");
    auto g = sym_equations(in);
    auto back = L.to_original(L.to_normalized(g[1]));
    CHECK(back == g[1]);
    CHECK(L.subst(g[0]).is_zero());
  }

  TEST_CASE("top of the tower") {
    auto in = fx::ex2n();
    auto L = build_level(in, 2);
    CHECK(L.sigma.s == 1);
    CHECK(L.sigma.sigma == std::vector<int>{5});
    CHECK_THROWS_AS(build_level(in, 0), PreconditionError);
    CHECK_THROWS_AS(build_level(in, 3), PreconditionError);
  }

  TEST_CASE("substitution kills the first m equations") {
    for (const auto& in : {fx::ex2n(), fx::exgen0(), fx::final_example(), fx::final_variant()}) {
      auto g = sym_equations(in);
      for (int m = 1; m <= in.n - 1; ++m) {
        auto L = build_level(in, m);
        for (int j = 0; j < m; ++j) CHECK(L.subst(g[j]).is_zero());
        if (m < in.n - 1) CHECK_FALSE(L.subst(g[m]).is_zero());
      }
    }
  }

  TEST_CASE("q maps to p times w") {
    for (const auto& in : {fx::ex2n(), fx::exgen0(), fx::final_example(), fx::final_variant()}) {
      auto L = build_level(in, 1);
      for (std::size_t i = 0; i < L.p.size(); ++i) {
        std::vector<int> e(L.p.size(), 0);
        e[i] = 1;
        REQUIRE(L.p[i].size() == 2);
        for (std::size_t j = 0; j < L.p[i].size(); ++j) {
          CHECK(L.subst(L.q[i][j]) == L.p[i][j].embed(L.scroll_ring) * L.w_power(e));
          CHECK(L.q[i][j].bidegree().second == 1);
        }
      }
    }
  }

  TEST_CASE("w multiplication is surjective") {
    for (const auto& in : {fx::ex2n(), fx::exgen0(), fx::final_example(), fx::final_variant()}) {
      for (int m = 1; m <= in.n - 2; ++m) {
        auto L = build_level(in, m);
        for (std::size_t i = 0; i < L.p.size(); ++i) CHECK(wmult_surjective(L, in, i));
      }
    }
  }

  TEST_CASE("Hilbert function of F/E") {
    auto in = fx::final_example();
    auto L = build_level(in, 1);
    auto H = hilbert_FE(L, in);
    for (int i = -1; i <= 3; ++i) CHECK(H(i) == 3 - i);
    CHECK(H(4) == 0);
    CHECK(H(-2) == 2);
    CHECK(H(-3) == 0);
    auto e = fx::ex2n();
    auto He = hilbert_FE(build_level(e, 1), e);
    CHECK(He(-1) == 2);
    CHECK(He(0) == 1);
    CHECK(He(1) == 0);
  }

  TEST_CASE("truncation equality") {
    auto in = fx::ex2n();
    auto L = build_level(in, 1);
    auto rows = check_truncation_equality(L, in, 1, 3, 3);
    CHECK(rows.size() == 3 * 4);
    for (const auto& row : rows) CHECK(row.equal());
    CHECK_THROWS_AS(check_truncation_equality(L, in, 0, 3, 3), PreconditionError);
    auto fin = fx::final_example();
    auto Lf = build_level(fin, 1);
    for (const auto& row : check_truncation_equality(Lf, fin, 3, 5, 3)) CHECK(row.equal());
  }

  TEST_CASE("rational field") {
    auto in = PresentationInput<RationalField>::parse(
        RationalField{}, {2, 3}, {{"x0^2", "x1^3"}, {"x0*x1", "0"}, {"x1^2", "x0^3"}});
    auto L = build_level(in, 1);
    CHECK(L.p[0][0].to_string() == "-x1");
    CHECK(L.q[0][1].to_string() == "x0*T2 + x1*T3");
  }
}
