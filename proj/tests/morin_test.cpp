#include <gtest/gtest.h>

#include <functional>

#include "genmap3/error.hpp"
#include "genmap3/morin.hpp"

using namespace genmap3;
using namespace genmap3::morin;

namespace {

RationalPoint3 pt(Rational x, Rational y, Rational z) { return {x, y, z}; }

Polynomial X() { return Polynomial::variable(0); }
Polynomial Y() { return Polynomial::variable(1); }
Polynomial Z() { return Polynomial::variable(2); }
Polynomial C(long v) { return Polynomial::constant(Rational(v)); }

/// For maps of the form (g(x, y, z), y, z) the singular strata are read off
/// the x-derivatives of g: Σ^1 where g_x = 0, Σ^{1,1} where also g_xx = 0,
/// Σ^{1,1,1} where also g_xxx = 0.
using XDerivatives = std::function<std::array<Rational, 3>(const RationalPoint3&)>;

std::vector<int> prefix_from_x_derivatives(const XDerivatives& d, const RationalPoint3& p) {
  auto g = d(p);
  if (g[0] != 0) return {0};
  if (g[1] != 0) return {1, 0};
  if (g[2] != 0) return {1, 1, 0};
  return {1, 1, 1};
}

std::vector<Rational> axis(int n) {
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.push_back(Rational(-1) + Rational(2 * i, n - 1));
  return out;
}

}  // namespace

TEST(Polynomial, ArithmeticAndDerivatives) {
  auto p = X() * X() * Y() + C(3) * Z() - C(1);
  EXPECT_EQ(p.derivative(0), C(2) * X() * Y());
  EXPECT_EQ(p.derivative(1), X() * X());
  EXPECT_EQ(p.derivative(2), C(3));
  EXPECT_EQ(p.evaluate(pt(2, Rational(1, 2), -1)), Rational(-2));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE(C(0).is_zero());
  EXPECT_EQ((X() + Y()) * (X() - Y()), X() * X() - Y() * Y());
}

TEST(Polynomial, ToStringIsStable) {
  EXPECT_EQ(C(0).to_string(), "0");
  EXPECT_FALSE((X() * Y() + C(2)).to_string().empty());
}

TEST(Jacobian, Fold) {
  auto j = jacobian(PolyMap3::fold());
  EXPECT_EQ(j[0][0], C(2) * X());
  EXPECT_TRUE(j[0][1].is_zero());
  EXPECT_TRUE(j[0][2].is_zero());
  EXPECT_EQ(j[1][1], C(1));
  EXPECT_EQ(j[2][2], C(1));
  EXPECT_TRUE(j[1][0].is_zero());
  EXPECT_TRUE(j[2][0].is_zero());
}

TEST(Jacobian, CuspFirstRow) {
  auto j = jacobian(PolyMap3::cusp());
  EXPECT_EQ(j[0][0], C(3) * X() * X() + Y());
  EXPECT_EQ(j[0][1], X());
  EXPECT_TRUE(j[0][2].is_zero());
  EXPECT_EQ(j[1][1], C(1));
  EXPECT_EQ(j[2][2], C(1));
}

TEST(Jacobian, ConstantMapIsZero) {
  auto j = jacobian(PolyMap3::constant(pt(1, 2, 3)));
  for (const auto& row : j) {
    for (const auto& e : row) EXPECT_TRUE(e.is_zero());
  }
  EXPECT_EQ(kernel_dim_at(PolyMap3::constant(pt(1, 2, 3)), pt(0, 0, 0)), 3);
  EXPECT_EQ(boardman_prefix(PolyMap3::constant(pt(1, 2, 3)), pt(0, 0, 0)), (std::vector<int>{3}));
}

TEST(Determinant, MatchesFirstPartial) {
  EXPECT_EQ(determinant(jacobian(PolyMap3::cusp())), C(3) * X() * X() + Y());
  EXPECT_EQ(determinant(jacobian(PolyMap3::swallowtail())),
            C(4) * X() * X() * X() + C(2) * X() * Y() + Z());
}

TEST(KernelDim, ExamplePoints) {
  EXPECT_EQ(kernel_dim_at(PolyMap3::fold(), pt(0, 5, -2)), 1);
  EXPECT_EQ(kernel_dim_at(PolyMap3::fold(), pt(1, 0, 0)), 0);
  EXPECT_EQ(kernel_dim_at(PolyMap3::cusp(), pt(1, -3, 0)), 1);
  EXPECT_EQ(kernel_dim_at(PolyMap3::cusp(), pt(0, 1, 0)), 0);
  EXPECT_EQ(kernel_dim_at(PolyMap3::swallowtail(), pt(0, 0, 0)), 1);
}

TEST(SecondOrder, ExamplePoints) {
  EXPECT_EQ(second_order_symbol(PolyMap3::fold(), pt(0, 7, Rational(-1, 3))), (std::vector<int>{1, 0}));
  EXPECT_EQ(second_order_symbol(PolyMap3::cusp(), pt(0, 0, 4)), (std::vector<int>{1, 1}));
  EXPECT_EQ(second_order_symbol(PolyMap3::cusp(), pt(1, -3, 4)), (std::vector<int>{1, 0}));
}

TEST(SecondOrder, RejectsRegularPoints) {
  try {
    (void)second_order_symbol(PolyMap3::fold(), pt(1, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRankDropOne);
  }
}

TEST(ThirdOrder, SwallowtailOriginAndNearbyCuspPoints) {
  auto m = PolyMap3::swallowtail();
  EXPECT_EQ(third_order_symbol(m, pt(0, 0, 0)), (std::vector<int>{1, 1, 1}));
  for (Rational a : {Rational(1, 2), Rational(-1, 3), Rational(1, 10), Rational(1)}) {
    auto p = pt(a, -6 * a * a, 8 * a * a * a);
    EXPECT_EQ(third_order_symbol(m, p), (std::vector<int>{1, 1, 0}));
  }
  EXPECT_THROW((void)third_order_symbol(m, pt(1, 0, 0)), Error);
  EXPECT_EQ(third_order_symbol(PolyMap3::cusp(), pt(0, 0, 5)), (std::vector<int>{1, 1, 0}));
}

TEST(Strata, FoldGridMatchesIndependentCriterion) {
  XDerivatives d = [](const RationalPoint3& p) {
    return std::array<Rational, 3>{2 * p.x, Rational(2), Rational(0)};
  };
  std::size_t n = 0;
  for (auto x : axis(11)) {
    for (auto y : axis(11)) {
      for (auto z : axis(11)) {
        auto p = pt(x, y, z);
        EXPECT_EQ(boardman_prefix(PolyMap3::fold(), p), prefix_from_x_derivatives(d, p));
        EXPECT_EQ(kernel_dim_at(PolyMap3::fold(), p) == 1, x == 0);
        ++n;
      }
    }
  }
  EXPECT_GE(n, 1000u);
}

TEST(Strata, CuspLociMatchIndependentCriterion) {
  XDerivatives d = [](const RationalPoint3& p) {
    return std::array<Rational, 3>{3 * p.x * p.x + p.y, 6 * p.x, Rational(6)};
  };
  for (const auto& p : verification_points(MorinModel::Cusp, 11)) {
    auto got = boardman_prefix(PolyMap3::cusp(), p);
    EXPECT_EQ(got, prefix_from_x_derivatives(d, p)) << point_string(p);
    EXPECT_EQ(got.size() >= 2, p.y == -3 * p.x * p.x);
    EXPECT_EQ(got == (std::vector<int>{1, 1, 0}), p.x == 0 && p.y == 0);
  }
}

TEST(Strata, SwallowtailLociMatchIndependentCriterion) {
  XDerivatives d = [](const RationalPoint3& p) {
    return std::array<Rational, 3>{4 * p.x * p.x * p.x + 2 * p.x * p.y + p.z,
                                   12 * p.x * p.x + 2 * p.y, 24 * p.x};
  };
  std::size_t top = 0;
  for (const auto& p : verification_points(MorinModel::Swallowtail, 11)) {
    auto got = boardman_prefix(PolyMap3::swallowtail(), p);
    EXPECT_EQ(got, prefix_from_x_derivatives(d, p)) << point_string(p);
    if (got == std::vector<int>{1, 1, 1}) {
      ++top;
      EXPECT_TRUE(p.x == 0 && p.y == 0 && p.z == 0);
    }
  }
  EXPECT_EQ(top, 1u);
}

TEST(Strata, ReportsAreCleanAndLargeEnough) {
  for (auto model : {MorinModel::Fold, MorinModel::Cusp, MorinModel::Swallowtail}) {
    auto r = verify_strata(model, 11);
    EXPECT_TRUE(r.ok()) << model_name(model);
    EXPECT_GE(r.points, 1000u);
    EXPECT_EQ(r.mismatch_examples.size(), 0u);
  }
}

TEST(Strata, VerificationPointsAreDistinct) {
  auto pts = verification_points(MorinModel::Swallowtail, 5);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto& a = pts[i - 1];
    const auto& b = pts[i];
    EXPECT_FALSE(a.x == b.x && a.y == b.y && a.z == b.z);
  }
}

TEST(Models, NamesRoundTrip) {
  for (auto model : {MorinModel::Fold, MorinModel::Cusp, MorinModel::Swallowtail}) {
    EXPECT_EQ(parse_model(model_name(model)), model);
  }
  EXPECT_THROW((void)parse_model("umbilic"), Error);
  EXPECT_THROW((void)verification_points(MorinModel::Fold, 1), Error);
}

TEST(Models, PrefixStrings) {
  EXPECT_EQ(prefix_string({1, 1, 0}), "(1,1,0)");
  EXPECT_EQ(point_string(pt(Rational(1, 2), 0, -3)), "(1/2, 0, -3)");
}
