#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "genmap3/builtins.hpp"
#include "genmap3/cohomology.hpp"
#include "genmap3/error.hpp"
#include "support/oracle.hpp"
#include "support/random_classes.hpp"
#include "support/test_seed.hpp"

using namespace genmap3;
using testing_support::make_rng;
using testing_support::perturb;
using testing_support::random_class;
using testing_support::random_vector;

namespace {

ContextPtr context(std::string_view name) { return CohomologyContext::create(builtin(name)); }

std::array<std::size_t, 4> betti_of(const CohomologyContext& ctx) {
  return {ctx.betti(0), ctx.betti(1), ctx.betti(2), ctx.betti(3)};
}

std::array<std::size_t, 4> oracle_betti(std::string_view name) {
  auto f = builtin_facets(name);
  return oracle::betti({f.begin(), f.end()});
}

std::set<oracle::Simplex> edge_set(const SimplicialComplex3& c, const Gf2Vector& u) {
  std::set<oracle::Simplex> out;
  for (Index i : u.support()) {
    auto s = c.simplex(1, i);
    out.insert({s.begin(), s.end()});
  }
  return out;
}

/// Relabels every vertex v as perm[v].
std::vector<Facet> relabel(std::vector<Facet> facets, const std::vector<Vertex>& perm) {
  for (auto& f : facets) {
    for (auto& v : f) v = perm[static_cast<std::size_t>(v)];
  }
  return facets;
}

}  // namespace

TEST(Betti, SphereByHand) { EXPECT_EQ(betti_of(*context("S3")), (std::array<std::size_t, 4>{1, 0, 0, 1})); }

TEST(Betti, TorusMatchesOracle) {
  EXPECT_EQ(betti_of(*context("T3")), (std::array<std::size_t, 4>{1, 3, 3, 1}));
  EXPECT_EQ(oracle_betti("T3"), (std::array<std::size_t, 4>{1, 3, 3, 1}));
}

TEST(Betti, ProjectiveSpaceMatchesOracle) {
  EXPECT_EQ(betti_of(*context("RP3")), (std::array<std::size_t, 4>{1, 1, 1, 1}));
  EXPECT_EQ(oracle_betti("RP3"), (std::array<std::size_t, 4>{1, 1, 1, 1}));
}

TEST(Betti, SphereTimesCircleMatchesOracle) {
  // Kunneth: (1,0,1) x (1,1).
  EXPECT_EQ(betti_of(*context("S2xS1")), (std::array<std::size_t, 4>{1, 1, 1, 1}));
  EXPECT_EQ(oracle_betti("S2xS1"), (std::array<std::size_t, 4>{1, 1, 1, 1}));
}

TEST(Betti, ProjectivePlaneTimesCircleMatchesOracle) {
  // Kunneth: (1,1,1) x (1,1).
  EXPECT_EQ(betti_of(*context("RP2xS1")), (std::array<std::size_t, 4>{1, 2, 2, 1}));
  EXPECT_EQ(oracle_betti("RP2xS1"), (std::array<std::size_t, 4>{1, 2, 2, 1}));
}

TEST(Betti, FreeFunctionAgreesWithContext) {
  auto ctx = context("RP2xS1");
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(betti_mod2(*ctx, k), ctx->betti(k));
}

TEST(Betti, NonClosedComplexStillHasCohomology) {
  std::vector<Facet> single{{0, 1, 2, 3}};
  auto ctx = CohomologyContext::create(make_complex(single));
  EXPECT_FALSE(ctx->closed());
  EXPECT_EQ(betti_of(*ctx), (std::array<std::size_t, 4>{1, 0, 0, 0}));
  EXPECT_THROW((void)ctx->fundamental_cycle(), Error);
  EXPECT_THROW((void)duality_pairing_matrix(*ctx, 1), Error);
}

TEST(Coboundary, SquaresToZero) {
  for (auto name : builtin_names()) {
    auto ctx = context(name);
    for (int k = -1; k <= 2; ++k) {
      EXPECT_TRUE((ctx->coboundary(k + 1) * ctx->coboundary(k)).is_zero()) << name << " " << k;
    }
  }
}

TEST(Coboundary, IsTransposedBoundary) {
  auto ctx = context("T3");
  for (int k = 0; k <= 2; ++k) {
    EXPECT_EQ(ctx->coboundary(k), boundary_matrix(ctx->complex(), k + 1).transpose());
  }
}

TEST(Basis, RepresentativesAreIndependentCocycles) {
  for (auto name : builtin_names()) {
    auto ctx = context(name);
    for (int k = 0; k <= 3; ++k) {
      for (std::size_t i = 0; i < ctx->betti(k); ++i) {
        EXPECT_TRUE(ctx->is_cocycle(k, ctx->basis(k)[i]));
        EXPECT_EQ(ctx->coordinates(k, ctx->basis(k)[i]), Gf2Vector::unit(ctx->betti(k), i));
      }
    }
  }
}

TEST(Cohomologous, ReflexiveAndDetectsDifferences) {
  auto ctx = context("T3");
  auto u = ctx->basis_class(1, 0);
  EXPECT_TRUE(cohomologous(u, u));
  auto one = ctx->make_class(0, Gf2Vector::ones(ctx->cochain_length(0)));
  EXPECT_FALSE(cohomologous(one, ctx->zero(0)));
  auto rng = make_rng(11);
  auto x = random_vector(rng, ctx->cochain_length(1));
  EXPECT_TRUE(cohomologous(ctx->make_class(2, ctx->coboundary(1) * x), ctx->zero(2)));
}

TEST(Cohomologous, RejectsMixedDegreesAndContexts) {
  auto a = context("T3");
  auto b = context("T3");
  EXPECT_THROW((void)cohomologous(a->zero(1), a->zero(2)), Error);
  EXPECT_THROW((void)cohomologous(a->zero(1), b->zero(1)), Error);
}

TEST(MakeClass, RejectsNonCocycles) {
  auto ctx = context("S3");
  try {
    ctx->make_class(1, Gf2Vector::unit(ctx->cochain_length(1), 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACocycle);
  }
}

TEST(Cup, WithZeroIsZero) {
  auto ctx = context("T3");
  EXPECT_TRUE(cup(ctx->basis_class(1, 0), ctx->zero(1)).representative().is_zero());
}

TEST(Cup, DegreeOverflowIsRejected) {
  auto ctx = context("T3");
  EXPECT_THROW((void)cup(ctx->basis_class(2, 0), ctx->basis_class(2, 1)), Error);
}

TEST(Cup, TorusTripleProductIsOne) {
  auto ctx = context("T3");
  auto x = ctx->basis_class(1, 0), y = ctx->basis_class(1, 1), z = ctx->basis_class(1, 2);
  EXPECT_TRUE(evaluate_on_fundamental(cup(cup(x, y), z)));
  const auto& c = ctx->complex();
  const auto facets = c.facets();
  EXPECT_TRUE(oracle::triple_cup_on_facets({facets.begin(), facets.end()},
                                           edge_set(c, x.representative()),
                                           edge_set(c, y.representative()),
                                           edge_set(c, z.representative())));
}

TEST(Cup, TorusSquaresVanish) {
  auto ctx = context("T3");
  for (std::size_t i = 0; i < 3; ++i) {
    auto x = ctx->basis_class(1, i);
    EXPECT_TRUE(cup(x, x).is_zero());
  }
}

TEST(Cup, ProjectiveSpaceGeneratorSquaresNontrivially) {
  auto ctx = context("RP3");
  auto a = ctx->basis_class(1, 0);
  auto aa = cup(a, a);
  EXPECT_FALSE(aa.is_zero());
  EXPECT_TRUE(evaluate_on_fundamental(cup(aa, a)));
}

TEST(Cup, ProductsOfCocyclesAreCocycles) {
  auto rng = make_rng(12);
  for (auto name : builtin_names()) {
    auto ctx = context(name);
    for (int t = 0; t < 20; ++t) {
      auto u = random_class(rng, *ctx, 1);
      auto v = random_class(rng, *ctx, 1);
      auto w = random_class(rng, *ctx, 2);
      EXPECT_TRUE(ctx->is_cocycle(2, cup_cochains(ctx->complex(), 1, u.representative(), 1,
                                                  v.representative())));
      EXPECT_TRUE(ctx->is_cocycle(3, cup_cochains(ctx->complex(), 1, u.representative(), 2,
                                                  w.representative())));
    }
  }
}

TEST(Cup, ClassDependsOnlyOnClasses) {
  auto rng = make_rng(13);
  for (auto name : builtin_names()) {
    auto ctx = context(name);
    for (int t = 0; t < 20; ++t) {
      auto u = random_class(rng, *ctx, 1);
      auto v = random_class(rng, *ctx, 1);
      auto w = random_class(rng, *ctx, 2);
      EXPECT_TRUE(cohomologous(cup(u, v), cup(perturb(rng, u), perturb(rng, v)))) << name;
      EXPECT_TRUE(cohomologous(cup(u, w), cup(perturb(rng, u), perturb(rng, w)))) << name;
    }
  }
}

TEST(Cup, GradedCommutativeOnClasses) {
  auto rng = make_rng(14);
  for (auto name : builtin_names()) {
    auto ctx = context(name);
    for (int t = 0; t < 20; ++t) {
      auto u = random_class(rng, *ctx, 1);
      auto v = random_class(rng, *ctx, 1);
      auto w = random_class(rng, *ctx, 2);
      EXPECT_TRUE(cohomologous(cup(u, v), cup(v, u))) << name;
      EXPECT_TRUE(cohomologous(cup(u, w), cup(w, u))) << name;
    }
  }
}

TEST(Cup, UnitIsAllOnesZeroCochain) {
  auto rng = make_rng(15);
  auto ctx = context("RP2xS1");
  auto one = ctx->make_class(0, Gf2Vector::ones(ctx->cochain_length(0)));
  for (int k = 0; k <= 3; ++k) {
    auto u = random_class(rng, *ctx, k);
    EXPECT_TRUE(cohomologous(cup(one, u), u));
    EXPECT_TRUE(cohomologous(cup(u, one), u));
  }
}

TEST(Cup, PairingRankSurvivesRelabeling) {
  auto rng = make_rng(16);
  for (auto name : builtin_names()) {
    auto facets = builtin_facets(name);
    Vertex top = 0;
    for (const auto& f : facets) top = std::max(top, *std::max_element(f.begin(), f.end()));
    std::vector<Vertex> perm(static_cast<std::size_t>(top) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto a = CohomologyContext::create(make_complex(facets));
    auto b = CohomologyContext::create(make_complex(relabel(facets, perm)));
    for (int k = 0; k <= 3; ++k) {
      EXPECT_EQ(a->betti(k), b->betti(k));
      EXPECT_EQ(rank(duality_pairing_matrix(*a, k)), rank(duality_pairing_matrix(*b, k)));
    }
    EXPECT_EQ(rank(duality_pairing_matrix(*b, 1)), b->betti(1)) << name;
  }
}

TEST(Sq1, OfZeroIsZero) {
  auto ctx = context("RP3");
  EXPECT_TRUE(sq1(ctx->zero(1)).representative().is_zero());
  EXPECT_TRUE(sq1(ctx->zero(2)).representative().is_zero());
}

TEST(Sq1, ProjectiveSpaceGeneratorSquares) {
  auto ctx = context("RP3");
  auto a = ctx->basis_class(1, 0);
  auto s = sq1(a);
  EXPECT_FALSE(s.is_zero());
  EXPECT_TRUE(cohomologous(s, cup(a, a)));
}

TEST(Sq1, EqualsSquaringInDegreeOne) {
  auto rng = make_rng(17);
  for (auto name : builtin_names()) {
    auto ctx = context(name);
    for (int t = 0; t < 25; ++t) {
      auto u = random_class(rng, *ctx, 1);
      EXPECT_TRUE(cohomologous(sq1(u), cup(u, u))) << name;
    }
  }
}

TEST(Sq1, IsAdditiveAndClassLevel) {
  auto rng = make_rng(18);
  for (auto name : builtin_names()) {
    auto ctx = context(name);
    for (int t = 0; t < 15; ++t) {
      auto u = random_class(rng, *ctx, 2);
      auto v = random_class(rng, *ctx, 2);
      EXPECT_TRUE(ctx->is_cocycle(3, sq1(u).representative()));
      EXPECT_TRUE(cohomologous(sq1(u + v), sq1(u) + sq1(v)));
      EXPECT_TRUE(cohomologous(sq1(u), sq1(perturb(rng, u))));
    }
  }
}

TEST(Sq1, RejectsNonCocyclesAndTopDegree) {
  auto ctx = context("S3");
  const auto& c = ctx->complex();
  EXPECT_THROW((void)sq1_cochain(c, 1, Gf2Vector::unit(c.count(1), 0)), Error);
  EXPECT_THROW((void)sq1_cochain(c, 3, Gf2Vector::ones(c.count(3))), Error);
}

TEST(Evaluate, Basics) {
  auto ctx = context("T3");
  const auto n = ctx->cochain_length(3);
  EXPECT_FALSE(evaluate(Gf2Vector::ones(n), Gf2Vector(n)));
  EXPECT_TRUE(evaluate(Gf2Vector::unit(n, 17), ctx->fundamental_cycle()));
  EXPECT_THROW((void)evaluate(Gf2Vector(n), Gf2Vector(n + 1)), Error);
}

TEST(Duality, SphereDegreeZeroPairingIsOne) {
  auto m = duality_pairing_matrix(*context("S3"), 0);
  EXPECT_EQ(m.to_dense(), (oracle::Dense{{1}}));
}

TEST(Duality, ProjectiveSpaceDegreeOnePairingIsOne) {
  auto m = duality_pairing_matrix(*context("RP3"), 1);
  EXPECT_EQ(m.to_dense(), (oracle::Dense{{1}}));
}

TEST(Duality, FullRankEverywhere) {
  for (auto name : builtin_names()) {
    auto ctx = context(name);
    for (int k = 0; k <= 3; ++k) {
      auto m = duality_pairing_matrix(*ctx, k);
      EXPECT_EQ(m.rows(), ctx->betti(k));
      EXPECT_EQ(m.cols(), ctx->betti(3 - k));
      EXPECT_EQ(oracle::rank(m.to_dense()), ctx->betti(k)) << name << " k=" << k;
    }
  }
}

TEST(Coordinates, RoundTripThroughFromCoordinates) {
  auto rng = make_rng(19);
  auto ctx = context("T3");
  for (int k = 0; k <= 3; ++k) {
    for (int t = 0; t < 10; ++t) {
      auto coords = random_vector(rng, ctx->betti(k));
      auto cls = perturb(rng, ctx->from_coordinates(k, coords));
      EXPECT_EQ(ctx->coordinates(cls), coords);
    }
  }
}

TEST(Coboundary, PreimageSolvesExactCochains) {
  auto rng = make_rng(20);
  auto ctx = context("RP2xS1");
  for (int k = 1; k <= 3; ++k) {
    auto x = random_vector(rng, ctx->cochain_length(k - 1));
    auto u = ctx->coboundary(k - 1) * x;
    EXPECT_TRUE(ctx->is_coboundary(k, u));
    auto pre = ctx->coboundary_preimage(k, u);
    ASSERT_TRUE(pre);
    EXPECT_EQ(ctx->coboundary(k - 1) * *pre, u);
  }
  EXPECT_FALSE(ctx->is_coboundary(1, ctx->basis(1)[0]));
}
