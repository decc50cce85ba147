#pragma once

// JSON instance format:
//
//   {
//     "m_facets":  [[a,b,c,d], ...],          // M, required
//     "n_facets":  [[a,b,c,d], ...],          // N
//     "vertex_map": [img0, img1, ...]         // indexed by M label
//               | {"label": img, ...},
//     "surface_triangles": [[a,b,c], ...],
//     "curve_components":  [[[a,b], ...], ...],
//     "swallowtail_parities": [0|1, ...]
//   }
//
// Everything except m_facets is optional when parsing; build_instance
// requires n_facets and vertex_map.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genmap3/realizability.hpp"

namespace genmap3 {

struct InstanceDocument {
  std::vector<Facet> m_facets;
  std::vector<Facet> n_facets;
  std::vector<std::pair<Vertex, Vertex>> vertex_map;
  std::vector<std::vector<Vertex>> surface_triangles;
  std::vector<std::vector<std::vector<Vertex>>> curve_components;
  std::vector<bool> swallowtail_parities;

  bool has_target = false;
  bool has_map = false;
};

/// Throws InvalidInput on malformed JSON or fields of the wrong shape.
InstanceDocument parse_instance(std::string_view json_text);
InstanceDocument read_instance_file(const std::string& path);

std::string to_json(const InstanceDocument& doc);

/// Throws InvalidInput if N or the vertex map is missing, plus any
/// complex/locus construction error.
ProblemInstance build_instance(const InstanceDocument& doc);

/// Document for M = N = `facets`, identity map, empty locus.
InstanceDocument identity_document(const std::vector<Facet>& facets);

/// Machine-readable verdict; classes appear as sorted simplex index lists.
std::string verdict_to_json(const RealizabilityVerdict& v);

}  // namespace genmap3
