#include <set>

#include "doctest.h"
#include "rees/combinat.hpp"
#include "rees/errors.hpp"

using namespace rees;

namespace {

SigmaInvariants sg(std::vector<int> v) { return SigmaInvariants::from_sigma(std::move(v)); }

// minimal elements of Lambda_c by brute force over a box
std::set<ExpVec> brute_minimal(int c, const SigmaInvariants& s) {
  std::vector<ExpVec> lam;
  const std::size_t len = s.sigma.size();
  ExpVec cur(len, 0);
  const int box = c + 1;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == len) {
      if (s.weight(cur) >= c) lam.push_back(cur);
      return;
    }
    int top = pos < static_cast<std::size_t>(s.r) ? box : 0;
    for (int a = 0; a <= top; ++a) {
      cur[pos] = a;
      rec(pos + 1);
    }
    cur[pos] = 0;
  };
  rec(0);
  std::set<ExpVec> out;
  for (const auto& a : lam) {
    bool minimal = true;
    for (const auto& b : lam) {
      if (a == b) continue;
      bool le = true;
      for (std::size_t i = 0; i < len; ++i) le = le && b[i] <= a[i];
      if (le) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(a);
  }
  return out;
}

}  // namespace

TEST_SUITE("combinat") {
  TEST_CASE("A_c") {
    CHECK(enumerate_A(14, sg({3, 0})) ==
          std::vector<ExpVec>{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(enumerate_A(2, sg({1, 1})) == std::vector<ExpVec>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(enumerate_A(0, sg({1, 1})).empty());
    CHECK_THROWS_AS(enumerate_A(-1, sg({1, 1})), PreconditionError);
  }

  TEST_CASE("Omega_c") {
    CHECK(enumerate_Omega(7, sg({3, 0})) == std::vector<ExpVec>{{3, 0}});
    CHECK(enumerate_Omega(6, sg({3, 0})) == std::vector<ExpVec>{{2, 0}});
    CHECK(enumerate_Omega(2, sg({1, 1})) == std::vector<ExpVec>{{2, 0}, {1, 1}, {0, 2}});
    auto o = enumerate_Omega(4, sg({3, 2}));
    CHECK(std::set<ExpVec>(o.begin(), o.end()) == brute_minimal(4, sg({3, 2})));
    CHECK(std::set<ExpVec>(o.begin(), o.end()) == std::set<ExpVec>{{2, 0}, {1, 1}, {0, 2}});
    CHECK_THROWS_AS(enumerate_Omega(0, sg({1, 1})), PreconditionError);
  }

  TEST_CASE("Omega_c are the minimal elements of Lambda_c") {
    for (auto s : {std::vector<int>{2, 1}, {3, 3}, {4, 1, 0}, {2, 2, 1}, {5, 0, 0}, {1, 1, 1}})
      for (int c = 1; c <= 12; ++c) {
        auto o = enumerate_Omega(c, sg(s));
        CHECK(std::set<ExpVec>(o.begin(), o.end()) == brute_minimal(c, sg(s)));
        CHECK(std::set<ExpVec>(o.begin(), o.end()).size() == o.size());
      }
  }

  TEST_CASE("B_c") {
    auto b = enumerate_B(7, sg({3, 0}));
    REQUIRE(b.size() == 3);
    CHECK(b[0] == BElement{2, 0, {3, 0}});
    CHECK(b[2] == BElement{0, 2, {3, 0}});
    CHECK(enumerate_B(6, sg({3, 0})).size() == 1);
    auto e = enumerate_B(2, sg({1, 1}));
    CHECK(e.size() == 3);
    for (const auto& x : e) CHECK(x.j + x.k == 0);
  }

  TEST_CASE("graded order puts alpha - e_i first") {
    auto s = sg({3, 2});
    auto all = enumerate_weight_at_most(11, s);
    std::map<ExpVec, std::size_t> pos;
    for (std::size_t k = 0; k < all.size(); ++k) pos[all[k]] = k;
    for (const auto& a : all)
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) {
          auto b = a;
          --b[i];
          CHECK(pos.at(b) < pos.at(a));
        }
  }

  TEST_CASE("table 1") {
    auto t = bidegree_table({3, 16}, sg({3, 0}));
    std::map<Bidegree, int> expect{{{3, 1}, 1}, {{16, 1}, 1}, {{13, 2}, 1},
                                   {{10, 3}, 1}, {{7, 4}, 1}, {{4, 5}, 1}};
    CHECK(t.counts == expect);
    CHECK(t.separator == 3);
  }

  TEST_CASE("table 2") {
    auto t = bidegree_table({5, 16}, sg({3, 2}));
    std::map<int, std::vector<int>> rows{{6, {5, 6}},        {5, {5, 6, 7, 8}}, {4, {7, 8, 9, 10}},
                                         {3, {10, 11, 12}}, {2, {13, 14}},     {1, {5, 16}}};
    int total = 0;
    for (const auto& [tdeg, xs] : rows)
      for (int x : xs) {
        CHECK(t.at(x, tdeg) == 1);
        ++total;
      }
    CHECK(t.total() == total);
  }

  TEST_CASE("table 3") {
    auto t = bidegree_table({4, 16}, sg({2, 2}));
    for (int j = 0; j <= 6; ++j) CHECK(t.at(16 - 2 * j, j + 1) == j + 1);
    CHECK(t.at(4, 1) == 1);
    CHECK(t.total() == 28 + 1);
  }

  TEST_CASE("table matches the general bidegree formula") {
    for (auto [d1, d2] : {std::pair{2, 7}, {4, 9}, {5, 16}, {3, 3}})
      for (int s2 = 0; s2 <= d1 / 2; ++s2) {
        auto s = sg({d1 - s2, s2});
        auto t = bidegree_table({d1, d2}, s);
        BidegreeTable ref;
        ref.add({d1, 1});
        for (const auto& a : enumerate_weight_at_most(d2 - d1, s))
          ref.add({d2 - s.weight(a), a[0] + a[1] + 1});
        CHECK(t.counts == ref.counts);
      }
  }

  TEST_CASE("table preconditions") {
    CHECK_THROWS_WITH_AS(bidegree_table({2, 3, 5}, sg({1, 1, 1})), "kregencor requires m=n-2",
                         PreconditionError);
    CHECK_THROWS_AS(bidegree_table({2, 5}, sg({3, 0})), PreconditionError);
  }

  TEST_CASE("render") {
    auto t = bidegree_table({3, 16}, sg({3, 0}));
    auto text = t.render(7);
    CHECK(text.rfind("7 |", 0) == 0);
    CHECK(text.find("5 |          |     1\n") != std::string::npos);
    CHECK(text.find("|  0  1  2 |  3  4") != std::string::npos);
  }
}
