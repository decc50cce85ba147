#pragma once

// The prescribed singular locus of a map of closed 3-manifolds: a fold
// surface S (2-cycle), cusp curves C ⊂ S (one 1-cycle per component), and
// for each cusp component the parity of the number of swallowtail points
// on it. Positions of swallowtail points never matter, only the parity.
//
// S and C are mod-2 chains in the ambient triangulation. Smoothness and
// embeddedness are assumptions on the input, not checked here.

#include <cstddef>
#include <span>
#include <vector>

#include "genmap3/cohomology.hpp"

namespace genmap3 {

struct LocusSpec {
  Gf2Vector surface_cycle;                  // over 2-simplices
  std::vector<Gf2Vector> curve_components;  // each over 1-simplices, pairwise vertex-disjoint
  std::vector<bool> swallowtail_parities;   // |P ∩ C'| mod 2 per component

  static LocusSpec empty(const SimplicialComplex3& c);
};

/// Checks every LocusSpec invariant against the complex. Throws
/// DimensionMismatch, NotACycle, CurveNotInSurface, OverlappingComponents,
/// ParityCountMismatch.
void validate_locus(const SimplicialComplex3& c, const LocusSpec& locus);

/// Builds and validates a locus from vertex tuples.
LocusSpec make_locus(const SimplicialComplex3& c,
                     const std::vector<std::vector<Vertex>>& surface_triangles,
                     const std::vector<std::vector<std::vector<Vertex>>>& curve_components,
                     const std::vector<bool>& swallowtail_parities);

/// Poincaré dual of a 2-cycle: the unique class a in H^1 with
/// <a ∪ b, [M]> = <b, surface> for every basis class b of H^2.
/// Throws NotACycle, NotClosed, NoSolution.
CohomologyClass pd_of_surface(const CohomologyContext& ctx, const Gf2Vector& surface);
CohomologyClass pd_of_surface(const CohomologyContext& ctx, const LocusSpec& locus);

/// Poincaré dual of a 1-cycle: the unique g in H^2 with
/// <g ∪ b, [M]> = <b, curve> for every basis class b of H^1.
CohomologyClass pd_of_curve(const CohomologyContext& ctx, const Gf2Vector& curve);

/// Sum of pd_of_curve over all components.
CohomologyClass pd_of_curves(const CohomologyContext& ctx, const LocusSpec& locus);

/// [C']·[S] as the value of the degree-1 class on the 1-cycle.
/// Throws NotACycle, DegreeMismatch.
bool intersection_parity(const CohomologyContext& ctx, const Gf2Vector& curve,
                         const CohomologyClass& surface_class);

struct ComponentParity {
  std::size_t component = 0;
  bool intersection = false;  // [C']·[S] mod 2
  bool swallowtails = false;  // declared |P ∩ C'| mod 2
  bool holds = false;
};

struct SwallowtailParityCheck {
  std::vector<ComponentParity> components;
  bool holds = true;  // vacuously true without components
};

/// Per component: [C']·[S] ≡ |P ∩ C'| (mod 2).
SwallowtailParityCheck check_swallowtail_parities(const CohomologyContext& ctx,
                                                  const LocusSpec& locus,
                                                  const CohomologyClass& surface_class);

// ---------------------------------------------------------------- characteristic fields

/// Walking once around a cusp component, the normal field to S must
/// reverse at each swallowtail point (Flip) and each transverse crossing
/// of the pushed-off curve with S (Cross).
enum class CrossingEvent { Flip, Cross };
using CrossingWord = std::vector<CrossingEvent>;

/// Closed-form criterion: the number of events is even.
bool characteristic_field_exists(std::span<const CrossingEvent> word);

/// Propagates a ±1 normal direction arc by arc around the cyclic word and
/// reports whether it closes up.
bool characteristic_field_by_propagation(std::span<const CrossingEvent> word);

/// A word with the given counts: all crossings first, then all flips.
CrossingWord make_crossing_word(std::size_t crossings, std::size_t flips);

}  // namespace genmap3
