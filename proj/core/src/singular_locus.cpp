#include "genmap3/singular_locus.hpp"

#include <string>

#include "genmap3/error.hpp"

namespace genmap3 {

namespace {

void require_cycle(const SimplicialComplex3& c, int k, const Gf2Vector& chain, const char* what) {
  if (chain.length() != c.count(k)) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(chain.length()) +
                    ", expected " + std::to_string(c.count(k)));
  }
  if (!boundary(c, k, chain).is_zero()) {
    throw Error(ErrorCode::NotACycle, std::string(what) + " has nonzero mod-2 boundary");
  }
}

// Solves sum_i a_i <h^k_i ∪ b_j, [M]> = rhs_j for a in H^k coordinates.
CohomologyClass solve_dual(const CohomologyContext& ctx, int k, const Gf2Vector& rhs) {
  const Gf2Matrix system = duality_pairing_matrix(ctx, k).transpose();
  Gf2Solver solver(system);
  if (solver.rank() != ctx.betti(k)) {
    throw Error(ErrorCode::NoSolution, "duality pairing in degree " + std::to_string(k) +
                                           " is degenerate");
  }
  auto coords = solver.solve(rhs);
  if (!coords) {
    throw Error(ErrorCode::NoSolution, "no Poincaré dual exists in degree " + std::to_string(k));
  }
  return ctx.from_coordinates(k, *coords);
}

}  // namespace

LocusSpec LocusSpec::empty(const SimplicialComplex3& c) {
  return LocusSpec{Gf2Vector(c.count(2)), {}, {}};
}

void validate_locus(const SimplicialComplex3& c, const LocusSpec& locus) {
  require_cycle(c, 2, locus.surface_cycle, "surface");
  if (locus.curve_components.size() != locus.swallowtail_parities.size()) {
    throw Error(ErrorCode::ParityCountMismatch,
                std::to_string(locus.curve_components.size()) + " curve components but " +
                    std::to_string(locus.swallowtail_parities.size()) + " swallowtail parities");
  }
  // edges in the closure of the surface support
  std::vector<std::uint8_t> surface_edge(c.count(1), 0);
  for (Index t : locus.surface_cycle.support()) {
    for (Index e : c.faces(2, t)) surface_edge[e] = 1;
  }
  // owner[v] = 1 + index of the component through vertex v
  std::vector<std::size_t> owner(c.count(0), 0);
  for (std::size_t i = 0; i < locus.curve_components.size(); ++i) {
    const auto& curve = locus.curve_components[i];
    const std::string name = "curve component " + std::to_string(i);
    require_cycle(c, 1, curve, name.c_str());
    for (Index e : curve.support()) {
      if (!surface_edge[e]) {
        auto v = c.simplex(1, e);
        throw Error(ErrorCode::CurveNotInSurface, name + " uses edge [" + std::to_string(v[0]) +
                                                      "," + std::to_string(v[1]) +
                                                      "] outside the surface");
      }
      for (Index v : c.faces(1, e)) {
        if (owner[v] != 0 && owner[v] != i + 1) {
          throw Error(ErrorCode::OverlappingComponents,
                      name + " meets component " + std::to_string(owner[v] - 1) + " at vertex " +
                          std::to_string(c.simplex(0, v)[0]));
        }
      }
    }
    for (Index e : curve.support()) {
      for (Index v : c.faces(1, e)) owner[v] = i + 1;
    }
  }
}

LocusSpec make_locus(const SimplicialComplex3& c,
                     const std::vector<std::vector<Vertex>>& surface_triangles,
                     const std::vector<std::vector<std::vector<Vertex>>>& curve_components,
                     const std::vector<bool>& swallowtail_parities) {
  LocusSpec locus;
  locus.surface_cycle = chain_from_simplices(c, 2, surface_triangles);
  for (const auto& edges : curve_components) {
    locus.curve_components.push_back(chain_from_simplices(c, 1, edges));
  }
  locus.swallowtail_parities = swallowtail_parities;
  validate_locus(c, locus);
  return locus;
}

CohomologyClass pd_of_surface(const CohomologyContext& ctx, const Gf2Vector& surface) {
  require_cycle(ctx.complex(), 2, surface, "surface");
  const auto h2 = ctx.basis(2);
  Gf2Vector rhs(h2.size());
  for (std::size_t j = 0; j < h2.size(); ++j) {
    if (dot(h2[j], surface)) rhs.set(static_cast<Index>(j), true);
  }
  return solve_dual(ctx, 1, rhs);
}

CohomologyClass pd_of_surface(const CohomologyContext& ctx, const LocusSpec& locus) {
  return pd_of_surface(ctx, locus.surface_cycle);
}

CohomologyClass pd_of_curve(const CohomologyContext& ctx, const Gf2Vector& curve) {
  require_cycle(ctx.complex(), 1, curve, "curve");
  const auto h1 = ctx.basis(1);
  Gf2Vector rhs(h1.size());
  for (std::size_t j = 0; j < h1.size(); ++j) {
    if (dot(h1[j], curve)) rhs.set(static_cast<Index>(j), true);
  }
  return solve_dual(ctx, 2, rhs);
}

CohomologyClass pd_of_curves(const CohomologyContext& ctx, const LocusSpec& locus) {
  CohomologyClass total = ctx.zero(2);
  for (const auto& curve : locus.curve_components) total += pd_of_curve(ctx, curve);
  return total;
}

bool intersection_parity(const CohomologyContext& ctx, const Gf2Vector& curve,
                         const CohomologyClass& surface_class) {
  if (surface_class.degree() != 1) {
    throw Error(ErrorCode::DegreeMismatch, "surface class must have degree 1");
  }
  if (&surface_class.context() != &ctx) {
    throw Error(ErrorCode::ContextMismatch, "surface class belongs to another complex");
  }
  require_cycle(ctx.complex(), 1, curve, "curve");
  return dot(surface_class.representative(), curve);
}

SwallowtailParityCheck check_swallowtail_parities(const CohomologyContext& ctx,
                                                  const LocusSpec& locus,
                                                  const CohomologyClass& surface_class) {
  if (locus.curve_components.size() != locus.swallowtail_parities.size()) {
    throw Error(ErrorCode::ParityCountMismatch, "one swallowtail parity per curve component");
  }
  SwallowtailParityCheck result;
  for (std::size_t i = 0; i < locus.curve_components.size(); ++i) {
    ComponentParity row;
    row.component = i;
    row.intersection = intersection_parity(ctx, locus.curve_components[i], surface_class);
    row.swallowtails = locus.swallowtail_parities[i];
    row.holds = row.intersection == row.swallowtails;
    result.holds = result.holds && row.holds;
    result.components.push_back(row);
  }
  return result;
}

bool characteristic_field_exists(std::span<const CrossingEvent> word) {
  return word.size() % 2 == 0;
}

bool characteristic_field_by_propagation(std::span<const CrossingEvent> word) {
  // Arc i runs from event i-1 to event i; arc 0 is also the arc after the
  // last event. Fix the direction on arc 0 and carry it around.
  int direction = +1;
  for (CrossingEvent e : word) {
    switch (e) {
      case CrossingEvent::Flip:
      case CrossingEvent::Cross:
        direction = -direction;
        break;
    }
  }
  return direction == +1;
}

CrossingWord make_crossing_word(std::size_t crossings, std::size_t flips) {
  CrossingWord w(crossings, CrossingEvent::Cross);
  w.insert(w.end(), flips, CrossingEvent::Flip);
  return w;
}

}  // namespace genmap3
