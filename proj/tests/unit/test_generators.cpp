#include "doctest.h"
#include "fixtures.hpp"
#include "rees/errors.hpp"
#include "rees/generators.hpp"

using namespace rees;
using fx::K;
using P = Poly<K>;

namespace {

std::map<int, int> count_by_tdeg(const std::vector<GeneratorRecord<K>>& recs) {
  std::map<int, int> out;
  for (const auto& r : recs) ++out[r.bidegree.second];
  return out;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("ex2n recursion") {
    auto in = fx::ex2n();
    auto L = build_level(in, 1);
    auto g = sym_equations(in);
    auto recs = recursion_generators(L, g[1]);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].alpha == ExpVec{0, 0});
    CHECK(recs[0].poly == g[1]);
    CHECK(recs[1].alpha == ExpVec{1, 0});
    CHECK(recs[1].poly == fx::S(in, "-x1^2*T1^2 + x0^2*T2*T3 + x0*x1*T3^2"));
    CHECK(recs[1].bidegree == Bidegree{2, 2});
    CHECK(recs[2].alpha == ExpVec{0, 1});
    for (const auto& r : recs) CHECK(r.certified);
    auto w = L.subst(recs[1].poly);
    CHECK(w == parse_poly<K>("-x1^4*w1^2 + x0^4*w1*w2", L.scroll_ring));
  }

  TEST_CASE("solve_combination canonical solution") {
    auto in = fx::ex2n();
    auto sol = solve_combination(fx::S(in, "x1^3*T1 + x0^3*T3"),
                                 {fx::S(in, "-x1"), fx::S(in, "x0^2")});
    REQUIRE(sol);
    CHECK((*sol)[0] == fx::S(in, "-x1^2*T1"));
    CHECK((*sol)[1] == fx::S(in, "x0*T3"));
    auto r = make_r_ring(fx::field());
    auto s2 = solve_combination(parse_poly<K>("x0^3", r), {parse_poly<K>("x0", r), parse_poly<K>("x1", r)});
    REQUIRE(s2);
    CHECK((*s2)[0] == parse_poly<K>("x0^2", r));
    CHECK((*s2)[1].is_zero());
    CHECK_FALSE(solve_combination(parse_poly<K>("x0", r), {parse_poly<K>("x0^2", r), parse_poly<K>("x1^2", r)}));
  }

  TEST_CASE("dependent first column recursion") {
    auto in = fx::exgen0();
    auto L = build_level(in, 1);
    auto g = sym_equations(in);
    auto recs = recursion_generators(L, g[1]);
    REQUIRE(recs.size() == 2);
    CHECK(recs[1].alpha == ExpVec{1, 0});
    CHECK(recs[1].bidegree == Bidegree{3, 2});
    CHECK(recs[1].certified);
  }

  TEST_CASE("table 1 instance") {
    auto in = fx::table1();
    auto L = build_level(in, 1);
    CHECK(L.sigma.sigma == std::vector<int>{3, 0});
    auto recs = recursion_generators(L, sym_equations(in)[1]);
    std::vector<Bidegree> got;
    for (const auto& r : recs) {
      got.push_back(r.bidegree);
      CHECK(r.certified);
    }
    CHECK(got == std::vector<Bidegree>{{16, 1}, {13, 2}, {10, 3}, {7, 4}, {4, 5}});
  }

  TEST_CASE("pivot choice does not change the image") {
    auto in = fx::make({2, 5}, {{"x0^2", "x1^5"}, {"x0*x1", "0"}, {"x1^2", "x0^5"}});
    auto L = build_level(in, 1);
    auto g = sym_equations(in)[1];
    auto a = recursion_generators(L, g, PivotRule::Smallest);
    auto b = recursion_generators(L, g, PivotRule::Largest);
    REQUIRE(a.size() == b.size());
    bool mixed = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].alpha == b[k].alpha);
      CHECK(L.subst(a[k].poly) == L.subst(b[k].poly));
      CHECK(b[k].certified);
      mixed = mixed || (a[k].alpha[0] > 0 && a[k].alpha[1] > 0);
    }
    CHECK(mixed);
  }

  TEST_CASE("random levels, n = 4") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto in = fx::random(4, {1, 2, 3}, seed);
      auto g = sym_equations(in);
      for (int m = 1; m <= 2; ++m) {
        auto L = build_level(in, m);
        for (const auto& r : recursion_generators(L, g[m])) CHECK(r.certified);
      }
    }
  }

  TEST_CASE("Sylvester form") {
    auto in = fx::ex2n();
    auto L = build_level(in, 1);
    auto g = sym_equations(in);
    auto p1 = L.p[0][0], p2 = L.p[0][1];
    auto syl = sylvester_form(p1, p2, g[0], g[1]);
    auto h = recursion_generators(L, g[1])[1].poly;
    auto a = L.subst(syl), b = L.subst(h);
    REQUIRE_FALSE(b.is_zero());
    auto lambda = fx::field().div(a.leading().coeff, b.leading().coeff);
    CHECK(lambda != 0);
    CHECK(a == b.scale(lambda));
    CHECK(sylvester_form(p1, p2, p1.embed(in.s_ring), p2.embed(in.s_ring)) == P::from_int(in.s_ring, 1));
    CHECK_THROWS_WITH_AS(sylvester_form(fx::R(in, "x0"), fx::R(in, "x0^2"), g[0], g[1]),
                         "not a regular sequence", ValidationError);
    CHECK_THROWS_WITH_AS(sylvester_form(p1, p2, fx::S(in, "T1"), g[1]), "not in the ideal",
                         ValidationError);
  }

  TEST_CASE("lift to S") {
    auto in = fx::ex2n();
    auto L = build_level(in, 1);
    auto g = sym_equations(in);
    auto target = L.subst(g[1]) * L.w_power({0, 1});
    auto h = lift_to_S(L, target, {2, 2});
    REQUIRE(h);
    CHECK(L.subst(*h) == target);
    auto w = L.w_power({3, 0});
    CHECK_FALSE(lift_to_S(L, w.mul_monomial(Monomial::variable(kX0, 2)), {-1, 3}).has_value());
  }

  TEST_CASE("slice basis sizes") {
    auto in = fx::final_example();
    auto B = SliceBasis<K>::build(build_level(in, 1));
    CHECK(B.at(0).size() == 3);
    CHECK(B.at(1).size() == 2);
    CHECK(B.at(2).size() == 1);
    CHECK(B.at(3).empty());
  }

  TEST_CASE("x-degree 1 slice of ex2n is generated by g2 w^alpha") {
    auto in = fx::ex2n();
    auto recs = slice_generators(in, 1);
    CHECK(count_by_tdeg(recs) == std::map<int, int>{{3, 3}, {4, 3}});
    for (const auto& r : recs) CHECK(r.certified);
    auto kept = trim_slice(recs, 1);
    REQUIRE(kept.size() == 3);
    for (const auto& r : kept) {
      CHECK(r.bidegree == Bidegree{1, 3});
      CHECK(r.label.find("p(") == std::string::npos);
    }
  }

  TEST_CASE("dependent first column: the x-degree d1 - 1 slice is minimal") {
    auto in = fx::exgen0();
    auto recs = slice_generators(in, 1);
    CHECK(recs.size() == 2);
    CHECK(trim_slice(recs, 1).size() == recs.size());
  }

  TEST_CASE("final example slice counts") {
    auto a = trim_slice(slice_generators(fx::final_example(), 3), 3);
    CHECK(count_by_tdeg(a) == std::map<int, int>{{3, 3}, {4, 4}});
    auto b = trim_slice(slice_generators(fx::final_variant(), 3), 3);
    CHECK(count_by_tdeg(b) == std::map<int, int>{{3, 3}, {4, 3}});
  }

  TEST_CASE("slices above d2") {
    auto in = fx::ex2n();
    auto at = slice_generators(in, 3);
    int g2 = 0;
    for (const auto& r : at) {
      CHECK(r.certified);
      if (r.label == "g2") ++g2;
    }
    CHECK(g2 == 1);
    auto above = slice_generators(in, 5);
    for (const auto& r : above) CHECK(r.bidegree.first == 5);
    CHECK_THROWS_AS(slice_generators(in, 0), PreconditionError);
    CHECK_THROWS_AS(slice_generators(fx::random(4, {1, 1, 2}, 1), 1), PreconditionError);
  }

  TEST_CASE("trim keeps minimal sets") {
    auto in = fx::ex2n();
    auto recs = slice_generators(in, 1);
    auto once = trim_slice(recs, 1);
    CHECK(trim_slice(once, 1).size() == once.size());
    CHECK_THROWS_AS(trim_slice(recs, 2), PreconditionError);
  }

  TEST_CASE("almost linear, n = 4") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto in = fx::random(4, {1, 1, 3}, seed);
      auto recs = almost_linear_generators(in);
      int lin = 0, quad = 0;
      for (const auto& r : recs) {
        CHECK(r.certified);
        if (r.provenance == Provenance::Scroll) {
          if (r.bidegree == Bidegree{1, 1}) ++lin;
          if (r.bidegree == Bidegree{0, 2}) ++quad;
        }
      }
      CHECK(lin == 2);
      CHECK(quad == 1);
      auto sg = build_level(in, 2).sigma;
      int b = 0;
      for (const auto& r : recs)
        if (r.provenance == Provenance::Slice) ++b;
      CHECK(b == static_cast<int>(enumerate_B(3, sg).size()));
    }
    CHECK_THROWS_AS(almost_linear_generators(fx::ex2n()), PreconditionError);
  }

  TEST_CASE("almost linear, sigma_2 = 0") {
    // rows combine to zero on the linear columns
    auto in = fx::make({1, 1, 4}, {{"x0", "0", "x1^4"}, {"x1", "x0", "0"}, {"0", "x1", "x0^4"},
                                   {"0", "0", "x0^2*x1^2"}});
    auto L = build_level(in, 2);
    CHECK(L.sigma.sigma == std::vector<int>{2, 0});
    auto recs = almost_linear_generators(in);
    int b = 0;
    for (const auto& r : recs) {
      CHECK(r.certified);
      if (r.provenance == Provenance::Slice) {
        ++b;
        CHECK(r.bidegree == Bidegree{0, 3});
      }
    }
    CHECK(b == 1);
  }
}
