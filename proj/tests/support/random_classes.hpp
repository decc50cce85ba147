#pragma once

#include <random>

#include "genmap3/cohomology.hpp"

namespace testing_support {

inline genmap3::Gf2Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  genmap3::Gf2Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) v.set(static_cast<genmap3::Index>(i), true);
  }
  return v;
}

/// Same class, representative moved by a random coboundary.
inline genmap3::CohomologyClass perturb(std::mt19937_64& rng, const genmap3::CohomologyClass& c) {
  const auto& ctx = c.context();
  const int k = c.degree();
  if (k == 0) return c;
  const auto x = random_vector(rng, ctx.cochain_length(k - 1));
  return ctx.make_class(k, c.representative() + ctx.coboundary(k - 1) * x);
}

/// A uniformly random class of H^k, represented by a basis combination
/// plus a random coboundary.
inline genmap3::CohomologyClass random_class(std::mt19937_64& rng,
                                             const genmap3::CohomologyContext& ctx, int k) {
  auto cls = ctx.from_coordinates(k, random_vector(rng, ctx.betti(k)));
  return perturb(rng, cls);
}

}  // namespace testing_support
