#include "genmap3/char_classes.hpp"

#include "genmap3/error.hpp"

namespace genmap3 {

CohomologyClass wu_v1(const CohomologyContext& ctx) {
  const Gf2Vector& fundamental = ctx.fundamental_cycle();
  const auto& c = ctx.complex();
  const auto h1 = ctx.basis(1);
  const auto h2 = ctx.basis(2);

  // Row j: sum_i a_i <h1_i ∪ h2_j, [M]> = <Sq1 h2_j, [M]>
  const Gf2Matrix pairing = duality_pairing_matrix(ctx, 1);
  const Gf2Matrix system = pairing.transpose();
  Gf2Vector rhs(h2.size());
  for (std::size_t j = 0; j < h2.size(); ++j) {
    if (evaluate(sq1_cochain(c, 2, h2[j]), fundamental)) rhs.set(static_cast<Index>(j), true);
  }

  Gf2Solver solver(system);
  if (solver.rank() != h1.size() || h1.size() != h2.size()) {
    throw Error(ErrorCode::NoSolution, "Wu system is degenerate (rank " +
                                           std::to_string(solver.rank()) + ", dim H^1 = " +
                                           std::to_string(h1.size()) + ", dim H^2 = " +
                                           std::to_string(h2.size()) +
                                           "); the duality pairing is degenerate");
  }
  auto coords = solver.solve(rhs);
  if (!coords) {
    throw Error(ErrorCode::NoSolution, "Wu system is inconsistent; input is not a closed "
                                       "manifold mod 2");
  }
  return ctx.from_coordinates(1, *coords);
}

BundleClasses tangent_classes(const CohomologyContext& ctx) {
  CohomologyClass v1 = wu_v1(ctx);
  CohomologyClass w2 = cup(v1, v1);
  return BundleClasses{std::move(v1), std::move(w2)};
}

bool bundle_iso(const BundleClasses& a, const BundleClasses& b) {
  return cohomologous(a.w1, b.w1) && cohomologous(a.w2, b.w2);
}

BundleClasses twisted_classes(const BundleClasses& tangent, const CohomologyClass& s,
                              const CohomologyClass& c) {
  if (s.degree() != 1 || c.degree() != 2) {
    throw Error(ErrorCode::DegreeMismatch, "surface class must have degree 1 and curve class "
                                           "degree 2");
  }
  if (tangent.w1.context_ptr() != s.context_ptr() || tangent.w2.context_ptr() != s.context_ptr() ||
      c.context_ptr() != s.context_ptr()) {
    throw Error(ErrorCode::ContextMismatch, "twisted classes need one common complex");
  }
  CohomologyClass w1 = tangent.w1 + s;
  CohomologyClass w2 = tangent.w2 + cup(tangent.w1, s) + cup(s, s) + c;
  return BundleClasses{std::move(w1), std::move(w2)};
}

}  // namespace genmap3
