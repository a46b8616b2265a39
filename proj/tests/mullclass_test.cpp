#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qmull/mullclass.hpp"

using namespace qmull;

TEST_CASE("jl anchors") {
  CHECK(jl(Partition(), Order::finite(3)).j == 0);
  auto t = jl(Partition({2, 1}), Order::finite(2));
  CHECK(t.x == std::vector<int>{1, 1});
  CHECK(t.j == 2);
  auto u = jl(Partition({3, 3}), Order::finite(3));
  CHECK(u.x == std::vector<int>{0, 0});
  CHECK(u.j == 0);
  for (int r = 0; r <= 10; ++r)
    for (const auto& p : partitions(r)) CHECK(jl(p, Order::infinite()).j == p.length());
}

TEST_CASE("jl recursion matches a direct restatement") {
  // x_i = 1 iff lambda_i + #{k > i : x_k = 1} is not divisible by l
  for (int l = 2; l <= 6; ++l)
    for (int r = 1; r <= 9; ++r)
      for (const auto& p : partitions(r)) {
        auto tr = jl(p, Order::finite(l));
        const int d = p.length();
        for (int i = 1; i <= d; ++i) {
          int after = 0;
          for (int k = i + 1; k <= d; ++k) after += tr.x[static_cast<std::size_t>(k - 1)];
          CHECK(tr.x[static_cast<std::size_t>(i - 1)] == ((p[i] + after) % l != 0 ? 1 : 0));
        }
        CHECK(tr.j <= d);
      }
}

TEST_CASE("subsequence check") {
  CycloContext c2(Order::finite(4));
  auto a = jl_subsequence_check(Partition({2, 1}), {1, 2}, c2);
  CHECK(a.jl_full);
  CHECK(a.product_nonzero);
  auto b = jl_subsequence_check(Partition({2}), {1}, c2);
  CHECK_FALSE(b.jl_full);
  CHECK_FALSE(b.product_nonzero);
  auto e = jl_subsequence_check(Partition({4, 2}), {}, c2);
  CHECK(e.jl_full);
  CHECK(e.product_nonzero);
  CHECK_THROWS_AS(jl_subsequence_check(Partition({2, 1}), {2, 1}, c2), std::invalid_argument);
  CHECK_THROWS_AS(jl_subsequence_check(Partition({2, 1}), {3}, c2), std::out_of_range);
}

TEST_CASE("subsequence check in characteristic p agrees with characteristic 0 for small parts") {
  // parts below l*p never see the p-digit
  for (int l = 3; l <= 5; l += 2) {
    CycloContext c0(Order::finite(l)), cp(Order::finite(l), 7);
    for (const auto& p : partitions(7)) {
      std::vector<int> idx;
      for (int i = 1; i <= p.length(); ++i) idx.push_back(i);
      auto x = jl_subsequence_check(p, idx, c0), y = jl_subsequence_check(p, idx, cp);
      CHECK(x.product_nonzero == y.product_nonzero);
    }
  }
}

TEST_CASE("polynomial highest weights") {
  CHECK(is_polynomial_hw(Weight::parse("0,0,0|3,3,0"), Order::finite(3)));
  CHECK_FALSE(is_polynomial_hw(Weight::parse("0,0|1,0"), Order::finite(2)));
  CHECK(is_polynomial_hw(Weight::parse("3,1|0,0"), Order::finite(2)));
  CHECK(is_polynomial_hw(Weight::parse("|2,1"), Order::finite(2)));
  CHECK_THROWS_AS(is_polynomial_hw(Weight::parse("0,1|0"), Order::finite(2)), std::invalid_argument);
}

TEST_CASE("nonpolynomiality witnesses") {
  CycloContext c2(Order::finite(4));
  auto w = nonpoly_witness(Weight::parse("0,0|1,0"), c2);
  CHECK(w.indices == std::vector<int>{1});
  CHECK(w.witness == Weight::parse("0,-1|2,0"));
  auto w2 = nonpoly_witness(Weight::parse("0|1"), c2);
  CHECK(w2.indices == std::vector<int>{1});
  CHECK(w2.witness == Weight::parse("-1|2"));
  auto w3 = nonpoly_witness(Weight::parse("1,0|1,1"), c2);
  CHECK(w3.indices == std::vector<int>{2});
  CHECK(w3.witness == Weight::parse("1,-1|1,2"));
  CHECK_THROWS_AS(nonpoly_witness(Weight::parse("1|0"), c2), std::invalid_argument);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int r = 0; r <= 4; ++r)
        for (int lp : {3, 4, 5, 8})
          for (const auto& la : enumerate_dominant(m, n, r)) {
            CycloContext ctx(Order::finite(lp));
            if (is_polynomial_hw(la, ctx.l())) continue;
            auto nw = nonpoly_witness(la, ctx);
            CHECK(nw.witness[m] == -1);
            CHECK(static_cast<int>(nw.indices.size()) == la[m] + 1);
            CHECK_FALSE(is_zero_at_q(nw.product, ctx));
          }
}

TEST_CASE("classification") {
  auto c = enumerate_classification(1, 1, 1, Order::finite(2));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Weight::parse("1|0"));
  CHECK(enumerate_classification(2, 2, 0, Order::finite(3)).size() == 1);
  // l = infinity: hook bijection onto partitions of r with lambda_{m+1} <= n
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int r = 0; r <= 5; ++r) {
        auto cls = enumerate_classification(m, n, r, Order::infinite());
        std::set<Partition> img;
        for (const auto& la : cls) img.insert(hook_concatenation(la));
        CHECK(img.size() == cls.size());
        std::set<Partition> target;
        for (const auto& p : partitions(r))
          if (p[m + 1] <= n) target.insert(p);
        CHECK(img == target);
      }
  // m, n >= r at l = infinity: one class per partition
  CHECK(enumerate_classification(4, 4, 4, Order::infinite()).size() == partitions(4).size());
}

TEST_CASE("classical Mullineux") {
  CHECK(mullineux_symbol(Partition({2, 1}), Order::finite(3)) == Partition({1, 1, 1}));
  CHECK(mullineux_symbol(Partition(), Order::finite(3)) == Partition());
  // symbol of (2,1) at 3 is a single column (3,2)
  CHECK(mullineux_symbol_columns(Partition({2, 1}), 3) == std::vector<std::pair<int, int>>{{3, 2}});
  // l larger than r: sign twist is conjugation
  for (int r = 1; r <= 6; ++r)
    for (const auto& p : partitions(r)) CHECK(classical_mullineux(p, r + 1) == p.transpose());
  // involution
  for (int l = 2; l <= 5; ++l)
    for (int r = 0; r <= 8; ++r)
      for (const auto& p : l_restricted_partitions(r, Order::finite(l)))
        CHECK(mullineux_symbol(mullineux_symbol(p, Order::finite(l)), Order::finite(l)) == p);
  CHECK_THROWS_AS(mullineux_symbol(Partition({3}), Order::finite(2)), std::invalid_argument);
}
