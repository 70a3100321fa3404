#include <doctest.h>

#include "fixtures.hpp"
#include "rees/generators.hpp"
#include "rees/oracle.hpp"

using namespace rees;
using fx::P;

namespace {

GroebnerBasis<fx::K> rees_ideal(const fx::Input& in,
                                SaturationMethod m = SaturationMethod::IteratedColon) {
  return saturate_m(buchberger(sym_equations(in)), m);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("basis of a monomial ideal is itself") {
    auto in = fx::ex2n();
    auto G = buchberger<fx::K>({fx::S(in, "T1"), fx::S(in, "T2")});
    REQUIRE(G.gens.size() == 2);
    CHECK(G.gens[0].to_string() == "T2");
    CHECK(G.gens[1].to_string() == "T1");
  }

  TEST_CASE("reduced basis is unique") {
    auto in = fx::ex2n();
    auto a = fx::S(in, "x0*T1 + x1*T2");
    auto b = fx::S(in, "x1*T1 - x0*T3");
    auto G1 = buchberger<fx::K>({a, b});
    auto G2 = buchberger<fx::K>({a + b, a - b.scale(in.r_ring->field().from_int(3))});
    CHECK(G1 == G2);
    for (const auto& g : G1.gens) CHECK(g.leading().coeff == 1u);
    CHECK(normal_form(a * b, G1).is_zero());
    CHECK_FALSE(normal_form(fx::S(in, "T1"), G1).is_zero());
  }

  TEST_CASE("colon and saturation of small ideals") {
    auto in = fx::ex2n();
    auto J = buchberger<fx::K>({fx::S(in, "x0*T1"), fx::S(in, "x1*T1")});
    auto Jm = colon(J, fx::S(in, "x0"));
    REQUIRE(Jm.gens.size() == 1);
    CHECK(Jm.gens[0].to_string() == "T1");
    auto sat = saturate_m(J);
    REQUIRE(sat.gens.size() == 1);
    CHECK(sat.gens[0].to_string() == "T1");
    CHECK(saturate_m(J, SaturationMethod::Rabinowitsch) == sat);

    auto P = buchberger<fx::K>({fx::S(in, "x0^2*T1 + x1^2*T2")});
    CHECK(saturate_m(P) == P);

    auto I = intersect(buchberger<fx::K>({fx::S(in, "T1")}), buchberger<fx::K>({fx::S(in, "T2")}));
    REQUIRE(I.gens.size() == 1);
    CHECK(I.gens[0].to_string() == "T1*T2");
  }

  TEST_CASE("bigraded hilbert function") {
    auto in = fx::ex2n();
    auto G = buchberger<fx::K>({fx::S(in, "T1")});
    auto h = bigraded_hilbert(G, {0, 1, 0, 2});
    CHECK(h[{0, 0}] == 0);
    CHECK(h[{0, 1}] == 1);
    CHECK(h[{1, 1}] == 2);
    CHECK(h[{0, 2}] == 3);
    CHECK(h[{1, 2}] == 6);
    auto t = minimal_generator_bidegrees(G, {0, 1, 0, 2});
    CHECK(t.total() == 1);
    CHECK(t.at(0, 1) == 1);
    auto u = minimal_generator_bidegrees(G, {0, 1, 0, 2}, GeneratorCount::Slice);
    CHECK(u.at(0, 1) == 1);
    CHECK(u.at(1, 1) == 2);
    CHECK(u.total() == 3);
  }

  TEST_CASE("ex2n rees ideal contains the recursion output") {
    auto in = fx::ex2n();
    auto K = rees_ideal(in);
    CHECK(K == rees_ideal(in, SaturationMethod::Rabinowitsch));
    auto level = build_level(in, 1);
    auto gs = sym_equations(in);
    for (const auto& rec : recursion_generators(level, gs[1]))
      CHECK(normal_form(rec.poly, K).is_zero());
    CHECK_FALSE(normal_form(fx::S(in, "x0*T1"), K).is_zero());
  }

  TEST_CASE("final example slice counts") {
    auto K = rees_ideal(fx::final_example());
    auto t = minimal_generator_bidegrees(K, {3, 3, 0, 8}, GeneratorCount::Slice);
    CHECK(t.at(3, 3) == 3);
    CHECK(t.at(3, 4) == 4);
    CHECK(t.total() == 7);
    auto v = minimal_generator_bidegrees(rees_ideal(fx::final_variant()), {3, 3, 0, 8},
                                         GeneratorCount::Slice);
    CHECK(v.at(3, 3) == 3);
    CHECK(v.at(3, 4) == 3);
    CHECK(v.total() == 6);
    // As an ideal, part of the slice is x-multiples of K_{2,*}.
    auto ideal = minimal_generator_bidegrees(K, {3, 3, 0, 8}, GeneratorCount::Ideal);
    CHECK(ideal.total() < 7);
  }

  TEST_CASE("table 1 marks as ideal generators") {
    auto K = rees_ideal(fx::table1());
    auto t = minimal_generator_bidegrees(K, {3, 16, 1, 5});
    auto expected = bidegree_table({3, 16}, SigmaInvariants::from_sigma({3, 0}));
    CHECK(t.counts == expected.counts);
  }

  TEST_CASE("principal and trivial ideals") {
    auto in = fx::ex2n();
    auto g1 = sym_equations(in)[0];
    auto G = buchberger<fx::K>({g1});
    auto t = minimal_generator_bidegrees(G, {0, 4, 0, 3});
    CHECK(t.total() == 1);
    CHECK(t.at(2, 1) == 1);
    CHECK(saturate_m(G) == G);
    CHECK(normal_form(g1, G).is_zero());

    auto T2 = buchberger<fx::K>({fx::S(in, "T2")});
    CHECK(normal_form(fx::S(in, "T1"), T2) == fx::S(in, "T1"));

    auto zero = buchberger<fx::K>({P(in.s_ring)});
    CHECK(zero.gens.empty());
    for (const auto& [b, d] : bigraded_hilbert(zero, {0, 2, 0, 2})) CHECK(d == 0);
  }

  TEST_CASE("basis idempotence and colon stability") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto in = fx::random(3, {2, 3}, seed);
      auto J = buchberger(sym_equations(in));
      CHECK(buchberger(J.gens) == J);
      auto sat = saturate_m(J);
      CHECK(colon(sat, fx::S(in, "x0")) == sat);
      CHECK(colon(sat, fx::S(in, "x1")) == sat);
      for (const auto& g : sat.gens) CHECK(g.is_bihomogeneous());
    }
  }

  TEST_CASE("ex2n pieces agree with the slice generators") {
    auto in = fx::ex2n();
    auto K = rees_ideal(in);
    auto recs = slice_generators(in, 1);
    for (int j = 0; j <= 5; ++j) {
      std::vector<fx::P> polys;
      for (const auto& r : recs) polys.push_back(r.poly);
      CHECK(u_span_dim(polys, in.s_ring, {1, j}) ==
            ideal_piece_basis(K, in.s_ring, {1, j}).size());
    }
  }

  TEST_CASE("rational rerun agrees with the prime field") {
    for (const auto& rows : std::vector<std::vector<std::vector<std::string>>>{
             {{"x0^2", "x1^3"}, {"x0*x1", "0"}, {"x1^2", "x0^3"}},
             {{"x0^2", "x1^5"}, {"x1^2", "x0^5"}, {"0", "x0^2*x1^3"}}}) {
      std::vector<int> d{2, rows[0][1] == "x1^3" ? 3 : 5};
      auto q = PresentationInput<RationalField>::parse(RationalField{}, d, rows);
      auto p = fx::make(d, rows);
      auto Kq = saturate_m(buchberger(sym_equations(q)));
      auto Kp = saturate_m(buchberger(sym_equations(p)));
      BidegreeWindow w{0, d[1], 0, d[1] + 2};
      CHECK(bigraded_hilbert(Kq, w) == bigraded_hilbert(Kp, w));
      CHECK(minimal_generator_bidegrees(Kq, w).counts == minimal_generator_bidegrees(Kp, w).counts);
    }
  }
}
