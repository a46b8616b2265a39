#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "qmull/mullclass.hpp"
#include "qmull/verify.hpp"

using namespace qmull;

namespace {

Weight W(int m, int n, std::vector<int> e) { return Weight(Split{m, n}, std::move(e)); }

}  // namespace

TEST_CASE("comp examples") {
  const CycloContext ctx(Order::finite(3));
  auto r0 = verify_comp(1, {}, {}, W(2, 1, {4, 1, 1}), ctx);
  CHECK(r0.engine == LaurentPoly(1));
  CHECK(r0.closed == LaurentPoly(1));

  auto r = verify_comp(1, {2, 3}, {2, 1}, W(2, 1, {4, 1, 1}), ctx);
  CHECK(r.closed == gauss_binom(3, 2) * gauss_binom(3, 1));
  CHECK(r.engine == r.closed);
  CHECK(r.equal);
  CHECK(r.equal_at_q);

  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      auto s = verify_comp(1, {2}, {1}, W(1, 1, {a, b}), ctx);
      CHECK(s.engine == gauss_binom(a + b, 1));
      CHECK(s.equal);
    }
}

TEST_CASE("comp rejects bad input") {
  const CycloContext ctx(Order::finite(3));
  CHECK_THROWS_AS(verify_comp(2, {1}, {1}, W(2, 1, {1, 0, 0}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_comp(1, {3, 2}, {1, 1}, W(2, 1, {1, 0, 0}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_comp(1, {3}, {2}, W(2, 1, {1, 0, 0}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_comp(1, {2}, {0}, W(2, 1, {1, 0, 0}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_comp(1, {2}, {}, W(2, 1, {1, 0, 0}), ctx), std::invalid_argument);
}

TEST_CASE("non examples") {
  const CycloContext ctx(Order::finite(4));  // l = 2
  auto a = verify_non(W(2, 2, {0, 0, 1, 0}), ctx);
  CHECK(a.product == LaurentPoly(1));
  CHECK(a.ok());
  auto b = verify_non(W(1, 1, {0, 1}), ctx);
  CHECK(b.product == LaurentPoly(1));
  CHECK(b.ok());
  CHECK_THROWS_AS(verify_non(W(1, 1, {1, 1}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_non(W(1, 1, {0, 0}), ctx), std::invalid_argument);
}

TEST_CASE("non agrees with the witness across small weights") {
  for (int l = 2; l <= 4; ++l) {
    const CycloContext ctx(Order::finite(2 * l));
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 4; ++r)
          for (const auto& la : enumerate_dominant(m, n, r)) {
            if (is_polynomial_hw(la, ctx.l())) continue;
            auto res = verify_non(la, ctx);
            CHECK_MESSAGE(res.ok(), la.to_string(), " l=", l);
          }
  }
}

TEST_CASE("lowe2 examples") {
  auto eq = verify_lowe2({2, 2, 2});
  CHECK(eq.ok);
  for (const auto& st : eq.stages) {
    CHECK(st.fword.empty());
    CHECK(st.weight == std::vector<int>{2, 2, 2});
  }
  CHECK(eq.final_weight == std::vector<int>{2, 2, 2});

  auto two = verify_lowe2({1, 0});
  CHECK(two.ok);
  REQUIRE(two.stages.size() == 1);
  CHECK(two.stages[0].fword == Word{GenSymbol::root(2, 1, 1)});
  CHECK(two.final_weight == std::vector<int>{0, 1});

  auto three = verify_lowe2({2, 1, 0});
  CHECK(three.ok);
  REQUIRE(three.stages.size() == 2);
  CHECK(three.stages[0].weight == std::vector<int>{1, 0, 2});
  CHECK(three.stages[1].weight == std::vector<int>{0, 1, 2});
  CHECK(three.final_weight == std::vector<int>{0, 1, 2});

  CHECK(verify_lowe2({5}).ok);
  CHECK_THROWS_AS(verify_lowe2({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_lowe2({}), std::invalid_argument);
}

TEST_CASE("lowe2 stages are built from nonzero weight vectors") {
  for (const auto& la : std::vector<std::vector<int>>{{3, 1, 0}, {2, 2, 0}, {4, 2, 1, 0}, {3, 3, 1, 1}}) {
    auto tr = verify_lowe2(la);
    CHECK(tr.ok);
    for (const auto& st : tr.stages) {
      CHECK(st.terms > 0);
      CHECK(st.homogeneous);
      CHECK(st.chain_to_top);
      CHECK(st.recovers_previous);
    }
  }
}

TEST_CASE("maximal submodule membership") {
  const Split sp{2, 0};
  const PbwEngine eng(sp);
  const Weight la(sp, {3, 1});
  const HWVector top = eng.highest(la);
  CHECK_FALSE(in_maximal_submodule(eng, top));
  // F^(3) m_lambda is singular for lambda_1 - lambda_2 = 2; F^(2) m_lambda is not
  CHECK(in_maximal_submodule(eng, eng.apply(UElement(Word{GenSymbol::root(2, 1, 3)}), top)));
  CHECK_FALSE(in_maximal_submodule(eng, eng.apply(UElement(Word{GenSymbol::root(2, 1, 2)}), top)));
  HWVector zero;
  zero.lambda = la;
  CHECK(in_maximal_submodule(eng, zero));

  // odd simple root: E_{1,2}E_{2,1} m_lambda = [lambda_1 + lambda_2] m_lambda
  const Split s11{1, 1};
  const PbwEngine e11(s11);
  const HWVector f0 = e11.apply(UElement(Word{GenSymbol::root(2, 1, 1)}), e11.highest(Weight(s11, {0, 0})));
  CHECK(in_maximal_submodule(e11, f0));
  const HWVector f1 = e11.apply(UElement(Word{GenSymbol::root(2, 1, 1)}), e11.highest(Weight(s11, {1, 0})));
  CHECK_FALSE(in_maximal_submodule(e11, f1));
}

TEST_CASE("worker count") {
  CHECK(worker_count() >= 1);
  setenv("QMULL_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("QMULL_THREADS", "zero", 1);
  CHECK(worker_count() >= 1);
  unsetenv("QMULL_THREADS");
}

TEST_CASE("small sweeps pass and are reproducible") {
  CHECK(check_jl_infinity(6).passed);
  CHECK(check_lucas(12).passed);
  CHECK(check_mullineux(4).passed);
  CHECK(check_serganova_shape(4).passed);
  CHECK(check_sigma(2, 3).passed);
  CHECK(check_lowe2(3, 2).passed);
  auto a = check_comp({7, 40});
  auto b = check_comp({7, 40});
  CHECK(a.passed);
  CHECK(a.checks == b.checks);
  setenv("QMULL_THREADS", "4", 1);
  auto c = check_odd_nilpotency({3, 50});
  unsetenv("QMULL_THREADS");
  auto d = check_odd_nilpotency({3, 50});
  CHECK(c.passed);
  CHECK(c.checks == d.checks);
}
