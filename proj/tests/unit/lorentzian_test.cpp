#include <gtest/gtest.h>

#include "lorentz/inertia.hpp"
#include "lorentz/lorentzian.hpp"
#include "support.hpp"

namespace lorentz {
namespace {

using testing::Gen;
using testing::poly;

Polynomial x1x2_plus_x3x4() { return poly(4, {{1, {1, 1, 0, 0}}, {1, {0, 0, 1, 1}}}); }
Polynomial sum_of_squares() { return poly(2, {{1, {2, 0}}, {1, {0, 2}}}); }
Polynomial product3() { return poly(3, {{1, {1, 1, 1}}}); }

// Every point of {1/4, 1/2, 1, 2, 4}^n.
std::vector<RationalVector> positive_grid(std::size_t n) {
  const RationalVector levels{Rational(1, 4), Rational(1, 2), 1, 2, 4};
  std::vector<RationalVector> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RationalVector> next;
    for (const auto& p : out)
      for (const auto& l : levels) {
        next.push_back(p);
        next.back().push_back(l);
      }
    out = std::move(next);
  }
  return out;
}

TEST(Support, Indecomposability) {
  EXPECT_TRUE(is_indecomposable(poly(3, {{1, {1, 1, 0}}, {1, {0, 1, 1}}})));
  EXPECT_FALSE(is_indecomposable(x1x2_plus_x3x4()));
  EXPECT_EQ(support_components(x1x2_plus_x3x4()), 2u);
  EXPECT_TRUE(is_indecomposable(poly(2, {{1, {2, 0}}})));
  EXPECT_THROW(is_indecomposable(Polynomial(2)), std::invalid_argument);
  const SupportGraph g = support_graph(poly(4, {{1, {1, 0, 1, 0}}, {1, {0, 0, 0, 2}}}));
  EXPECT_EQ(g.active_vars, (std::vector<std::uint32_t>{0, 2, 3}));
  EXPECT_EQ(g.components, 2u);
  EXPECT_FALSE(g.connected());
}

TEST(Quadratic, LogConcavity) {
  EXPECT_TRUE(quadratic_is_log_concave(poly(2, {{1, {1, 1}}})));
  EXPECT_FALSE(quadratic_is_log_concave(sum_of_squares()));
  EXPECT_TRUE(quadratic_is_log_concave(poly(2, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}})));
  EXPECT_THROW(quadratic_is_log_concave(product3()), std::invalid_argument);
  EXPECT_THROW(quadratic_is_log_concave(poly(2, {{-1, {1, 1}}})), std::invalid_argument);
}

TEST(IsLorentzian, Examples) {
  const auto e2 = testing::elementary_symmetric(3, 2);
  EXPECT_TRUE(is_lorentzian(e2).is_lorentzian);
  EXPECT_EQ(inertia(quadratic_hessian(e2)), (Inertia{1, 0, 2}));
  EXPECT_TRUE(is_lorentzian(product3()).is_lorentzian);

  const auto split = is_lorentzian(x1x2_plus_x3x4());
  ASSERT_FALSE(split.is_lorentzian);
  EXPECT_TRUE(split.failure->alpha.is_one());
  EXPECT_EQ(split.failure->kind, FailureKind::decomposable);
  EXPECT_EQ(split.failure->components, 2u);

  const auto squares = is_lorentzian(sum_of_squares());
  ASSERT_FALSE(squares.is_lorentzian);
  EXPECT_TRUE(squares.failure->alpha.is_one());
  ASSERT_TRUE(squares.failure->inertia.has_value());
  EXPECT_EQ(*squares.failure->inertia, (Inertia{2, 0, 0}));
}

TEST(IsLorentzian, IndecomposableBadInertia) {
  // (x0 + x1)^2 + x0^2 has connected support but two positive eigenvalues
  const auto f = poly(2, {{2, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}});
  const auto v = is_lorentzian(f);
  ASSERT_FALSE(v.is_lorentzian);
  EXPECT_EQ(v.failure->kind, FailureKind::bad_inertia);
  EXPECT_EQ(v.describe(2), "α=(0,0): bad-inertia (2 positive eigenvalues, inertia (2, 0, 0))");
}

TEST(IsLorentzian, WitnessAtHigherOrder) {
  // x2 is isolated in x0^2 x1 + x2^3, so alpha = 0 already fails
  const auto f = poly(3, {{1, {2, 1, 0}}, {1, {0, 0, 3}}});
  const auto v = is_lorentzian(f);
  ASSERT_FALSE(v.is_lorentzian);
  EXPECT_EQ(v.failure->kind, FailureKind::decomposable);
  EXPECT_TRUE(v.failure->alpha.is_one());

  // x0^3 + x0^2 x1 + x1^3 is indecomposable; d/dx1 gives x0^2 + 3 x1^2
  const auto g = poly(2, {{1, {3, 0}}, {1, {2, 1}}, {1, {0, 3}}});
  const auto w = is_lorentzian(g);
  ASSERT_FALSE(w.is_lorentzian);
  EXPECT_EQ(w.failure->alpha.degree(), 1u);
  EXPECT_EQ(w.failure->kind, FailureKind::decomposable);
}

TEST(IsLorentzian, RejectsMalformedInputs) {
  EXPECT_EQ(is_lorentzian(Polynomial(2)).failure->kind, FailureKind::zero_polynomial);
  EXPECT_EQ(is_lorentzian(poly(2, {{-1, {1, 1}}, {1, {2, 0}}})).failure->kind, FailureKind::negative_coefficient);
  EXPECT_EQ(is_lorentzian(poly(2, {{1, {1, 1}}, {1, {1, 0}}})).failure->kind, FailureKind::not_homogeneous);
  EXPECT_TRUE(is_lorentzian(poly(2, {{3, {1, 0}}})).is_lorentzian);
  EXPECT_TRUE(is_lorentzian(poly(2, {{3, {0, 0}}})).is_lorentzian);
}

TEST(IsLorentzian, ElementarySymmetricAccepted) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint32_t d = 1; d <= n; ++d)
      EXPECT_TRUE(is_lorentzian(testing::elementary_symmetric(n, d)).is_lorentzian) << "e_" << d << "(" << n << ")";
}

TEST(IsLorentzian, ProductsOfLinearFormsAccepted) {
  Gen gen(71);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    const auto count = static_cast<std::uint32_t>(gen.integer(1, 4));
    const Polynomial f = gen.product_of_nonneg_linear_forms(n, count);
    ASSERT_TRUE(is_lorentzian(f).is_lorentzian) << f.to_string();
  }
}

TEST(CubicLogConcave, Examples) {
  EXPECT_TRUE(cubic_is_log_concave(product3()));
  EXPECT_FALSE(cubic_is_log_concave(poly(2, {{1, {3, 0}}, {1, {0, 3}}})));
  EXPECT_TRUE(cubic_is_log_concave(poly(2, {{1, {1, 0}}, {1, {0, 1}}}).pow(3)));
  EXPECT_THROW(cubic_is_log_concave(sum_of_squares()), std::invalid_argument);
  EXPECT_THROW(cubic_is_log_concave(poly(1, {{-1, {3}}})), std::invalid_argument);
}

TEST(LogConcaveAt, Examples) {
  EXPECT_TRUE(log_concave_at(poly(2, {{1, {1, 1}}}), RationalVector{1, 1}));
  EXPECT_FALSE(log_concave_at(sum_of_squares(), RationalVector{1, 1}));
  EXPECT_TRUE(log_concave_at(product3(), RationalVector{1, 2, 3}));
  EXPECT_EQ(testing::charpoly_inertia(hessian_at(product3(), RationalVector{1, 2, 3})), (Inertia{1, 0, 2}));
  EXPECT_THROW(log_concave_at(product3(), RationalVector{0, 1, 1}), std::domain_error);
}

TEST(LorentzianProperty, AcceptedPolynomialsAreLogConcaveOnTheOrthant) {
  Gen gen(72);
  int accepted = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 4));
    const Polynomial f = trial % 2 == 0 ? gen.product_of_nonneg_linear_forms(n, 3)
                                         : gen.homogeneous(n, 3, 8, true);
    if (!is_lorentzian(f).is_lorentzian) continue;
    ++accepted;
    for (int point = 0; point < 50; ++point) {
      const RationalVector w = gen.positive_vector(n);
      ASSERT_TRUE(log_concave_at(f, w)) << f.to_string();
    }
  }
  EXPECT_GE(accepted, 15);
}

TEST(LorentzianProperty, ClosedUnderPartials) {
  Gen gen(73);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial f = gen.product_of_nonneg_linear_forms(4, 4);
    ASSERT_TRUE(is_lorentzian(f).is_lorentzian);
    for (std::uint32_t i = 0; i < 4; ++i) {
      const Polynomial d = partial(f, i);
      if (!d.is_zero()) ASSERT_TRUE(is_lorentzian(d).is_lorentzian) << d.to_string();
    }
  }
}

TEST(LorentzianProperty, CubicHessianIsLinearInX) {
  Gen gen(74);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const Polynomial f = gen.homogeneous(n, 3, 7, false);
    const RationalVector x = gen.vector(n);
    SymMatrix sum(n);
    for (std::uint32_t i = 0; i < n; ++i) sum += x[i] * quadratic_hessian(partial(f, i));
    ASSERT_EQ(hessian_at(f, x), sum) << f.to_string();
  }
}

TEST(LorentzianProperty, MultiaffineVerdictMatchesTheGrid) {
  Gen gen(75);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 4));
    const auto d = static_cast<std::uint32_t>(gen.integer(2, static_cast<std::int64_t>(n)));
    Polynomial f(n);
    for (const auto& m : monomials_of_degree(n, d)) {
      bool affine = true;
      for (const auto& [v, e] : m.factors()) affine = affine && e == 1;
      if (affine && gen.coin()) f.add_term(m, gen.positive_rational(6, 2));
    }
    if (f.is_zero()) continue;
    const LorentzianVerdict v = is_lorentzian(f);
    const auto grid = positive_grid(n);
    if (v.is_lorentzian) {
      for (const auto& w : grid) ASSERT_TRUE(log_concave_at(f, w)) << f.to_string();
      continue;
    }
    if (v.failure->kind != FailureKind::bad_inertia) continue;
    // The failing derivative is itself a polynomial whose log-concavity can
    // be sampled; a bad-inertia quadratic has two positive eigenvalues and
    // fails wherever it is positive.
    const Polynomial g = differentiate(f, v.failure->alpha);
    bool fails_somewhere = false;
    for (const auto& w : grid) {
      if (sgn(evaluate(f, w)) > 0 && !log_concave_at(f, w)) fails_somewhere = true;
      if (d > 2 && sgn(evaluate(g, w)) > 0 && !log_concave_at(g, w)) fails_somewhere = true;
    }
    ASSERT_TRUE(fails_somewhere) << f.to_string();
  }
}

}  // namespace
}  // namespace lorentz
