#pragma once

// Stiefel-Whitney classes of closed 3-manifolds and rank-3 bundle classes.
//
// The tangent classes come from Wu's formula. The total Wu class
// v = 1 + v1 + v2 + ... is defined by <v_i ∪ x, [M]> = <Sq^i x, [M]> for
// x in H^{3-i}. Since Sq^i vanishes on classes of degree below i, v_i = 0
// whenever i > 3 - i, so v = 1 + v1 in dimension 3. Then w = Sq(v) gives
//
//   w1 = v1,   w2 = Sq^1 v1 + v2 = v1 ∪ v1.
//
// Only Sq^1 is ever needed, and it is computed by the Bockstein of the
// integer lift (see cohomology.hpp).
//
// A rank-3 bundle over a 3-complex is determined up to isomorphism by its
// (w1, w2), so bundles are carried around as BundleClasses only.

#include "genmap3/cohomology.hpp"

namespace genmap3 {

struct BundleClasses {
  CohomologyClass w1;
  CohomologyClass w2;
};

/// The unique v1 in H^1 with <v1 ∪ x, [M]> = <Sq^1 x, [M]> for every basis
/// class x of H^2. Throws NotClosed; NoSolution when the system is
/// inconsistent or underdetermined (the input is not a closed manifold
/// mod 2).
CohomologyClass wu_v1(const CohomologyContext& ctx);

/// (w1, w2) = (v1, v1 ∪ v1).
BundleClasses tangent_classes(const CohomologyContext& ctx);

/// Equality of both classes in cohomology. Throws ContextMismatch.
bool bundle_iso(const BundleClasses& a, const BundleClasses& b);

/// Classes of the tangent bundle reglued along a fold surface with class
/// s (degree 1) and cusp curve class c (degree 2):
///
///   w1' = w1 + s
///   w2' = w2 + w1 ∪ s + s ∪ s + c
///
/// computed at cochain level. Throws ContextMismatch, DegreeMismatch.
BundleClasses twisted_classes(const BundleClasses& tangent, const CohomologyClass& s,
                              const CohomologyClass& c);

}  // namespace genmap3
