#pragma once

// Decides whether a simplicial map f : M -> N of closed 3-manifolds is
// homotopic to a generic map whose fold surface, cusp curves and
// swallowtail points are the prescribed S, C and P. The map is realizable
// exactly when
//
//   (1) w1(M) = [S] + f*w1(N)
//   (2) w2(M) = [C] + f*w1(N) ∪ [S] + f*w2(N)
//   (3) [C']·[S] ≡ |P ∩ C'| (mod 2) for every component C' of C.
//
// Conditions (1) and (2) together say that the tangent bundle of M reglued
// along (S, C) is isomorphic to f*TN; twisted_bundle_matches checks that
// formulation directly and must always agree with (1) ∧ (2).

#include <string>
#include <vector>

#include "genmap3/char_classes.hpp"
#include "genmap3/singular_locus.hpp"
#include "genmap3/simplicial_map.hpp"

namespace genmap3 {

/// (f*u)(σ) = u(f(σ)) when f is injective on the vertices of σ, else 0.
/// Throws InvalidMap, DimensionMismatch.
Gf2Vector pullback_cochain(const SimplicialMap& f, int k, const Gf2Vector& u);

/// Pulls a class on f.target back to `source_ctx` (which must be built over
/// f.source). Throws InvalidMap, ContextMismatch.
CohomologyClass pullback(const SimplicialMap& f, const CohomologyClass& u,
                         const ContextPtr& source_ctx);

BundleClasses pullback(const SimplicialMap& f, const BundleClasses& classes,
                       const ContextPtr& source_ctx);

struct ProblemInstance {
  ComplexPtr source;  // M
  ComplexPtr target;  // N
  SimplicialMap map;  // f : M -> N
  LocusSpec locus;    // on M
};

/// Throws InvalidMap, NotClosed, and the LocusSpec errors.
void validate_instance(const ProblemInstance& inst);

struct ClassConditions {
  bool first = false;   // (1)
  bool second = false;  // (2)
  CohomologyClass first_lhs;   // w1(M)
  CohomologyClass first_rhs;   // [S] + f*w1(N)
  CohomologyClass second_lhs;  // w2(M)
  CohomologyClass second_rhs;  // [C] + f*w1(N) ∪ [S] + f*w2(N)
};

/// Conditions (1) and (2) from classes already living on M.
ClassConditions evaluate_class_conditions(const BundleClasses& tangent_source,
                                          const CohomologyClass& surface_class,
                                          const CohomologyClass& curve_class,
                                          const BundleClasses& pulled_target);

/// twisted_classes(tangent_source, s, c) ≃ f*(target classes), compared
/// as rank-3 bundles through (w1, w2).
bool twisted_bundle_matches(const BundleClasses& twisted_source, const SimplicialMap& f,
                            const BundleClasses& target_classes, const ContextPtr& source_ctx);

struct RealizabilityVerdict {
  ClassConditions classes;
  SwallowtailParityCheck swallowtails;  // (3)
  bool realizable = false;

  BundleClasses tangent_source;
  BundleClasses tangent_target;
  BundleClasses pulled_target;
  CohomologyClass surface_class;  // [S]
  CohomologyClass curve_class;    // [C]

  std::vector<std::string> diagnostics;
};

/// Runs the whole decision. Upstream errors are rethrown with the failing
/// stage named in the message.
RealizabilityVerdict check_realizability(const ProblemInstance& inst);

}  // namespace genmap3
