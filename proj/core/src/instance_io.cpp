#include "genmap3/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "genmap3/error.hpp"

namespace genmap3 {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

Vertex to_vertex(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": expected an integer vertex label");
  const auto v = j.get<long long>();
  if (v < 0) throw Error(ErrorCode::NegativeLabel, where + ": label " + std::to_string(v));
  if (v > std::numeric_limits<Vertex>::max()) bad(where + ": label too large");
  return static_cast<Vertex>(v);
}

std::vector<Vertex> to_tuple(const json& j, std::size_t arity, const std::string& where) {
  if (!j.is_array() || j.size() != arity) {
    bad(where + ": expected an array of " + std::to_string(arity) + " labels");
  }
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < arity; ++i) out.push_back(to_vertex(j[i], where));
  return out;
}

const json& array_field(const json& doc, const char* name) {
  const json& f = doc.at(name);
  if (!f.is_array()) bad(std::string("field '") + name + "' must be an array");
  return f;
}

std::vector<Facet> to_facets(const json& arr, const char* name) {
  std::vector<Facet> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto t = to_tuple(arr[i], 4, std::string(name) + "[" + std::to_string(i) + "]");
    out.push_back({t[0], t[1], t[2], t[3]});
  }
  return out;
}

json facets_json(const std::vector<Facet>& facets) {
  json arr = json::array();
  for (const auto& f : facets) arr.push_back({f[0], f[1], f[2], f[3]});
  return arr;
}

json support_json(const Gf2Vector& v) {
  json arr = json::array();
  for (Index i : v.support()) arr.push_back(i);
  return arr;
}

json class_json(const CohomologyClass& c) {
  return json{{"degree", c.degree()},
              {"representative", support_json(c.representative())},
              {"coordinates", support_json(c.context().coordinates(c))},
              {"zero", c.is_zero()}};
}

}  // namespace

InstanceDocument parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("instance must be a JSON object");
  if (!doc.contains("m_facets")) bad("missing field 'm_facets'");

  InstanceDocument out;
  out.m_facets = to_facets(array_field(doc, "m_facets"), "m_facets");
  if (doc.contains("n_facets")) {
    out.n_facets = to_facets(array_field(doc, "n_facets"), "n_facets");
    out.has_target = true;
  }
  if (doc.contains("vertex_map")) {
    const json& vm = doc["vertex_map"];
    out.has_map = true;
    if (vm.is_array()) {
      for (std::size_t i = 0; i < vm.size(); ++i) {
        if (vm[i].is_null()) continue;  // unused label
        out.vertex_map.emplace_back(static_cast<Vertex>(i),
                                    to_vertex(vm[i], "vertex_map[" + std::to_string(i) + "]"));
      }
    } else if (vm.is_object()) {
      for (const auto& [key, val] : vm.items()) {
        std::size_t used = 0;
        long long label = -1;
        try {
          label = std::stoll(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || key.empty()) bad("vertex_map key '" + key + "' is not an integer");
        if (label < 0) throw Error(ErrorCode::NegativeLabel, "vertex_map key " + key);
        out.vertex_map.emplace_back(static_cast<Vertex>(label), to_vertex(val, "vertex_map." + key));
      }
    } else {
      bad("field 'vertex_map' must be an array or an object");
    }
  }
  if (doc.contains("surface_triangles")) {
    const json& arr = array_field(doc, "surface_triangles");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.surface_triangles.push_back(
          to_tuple(arr[i], 3, "surface_triangles[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("curve_components")) {
    const json& arr = array_field(doc, "curve_components");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_array()) bad("curve_components[" + std::to_string(i) + "] must be an array");
      std::vector<std::vector<Vertex>> comp;
      for (std::size_t e = 0; e < arr[i].size(); ++e) {
        comp.push_back(to_tuple(arr[i][e], 2,
                                "curve_components[" + std::to_string(i) + "][" +
                                    std::to_string(e) + "]"));
      }
      out.curve_components.push_back(std::move(comp));
    }
  }
  if (doc.contains("swallowtail_parities")) {
    const json& arr = array_field(doc, "swallowtail_parities");
    for (const json& p : arr) {
      if (p.is_boolean()) {
        out.swallowtail_parities.push_back(p.get<bool>());
      } else if (p.is_number_integer() && (p.get<long long>() == 0 || p.get<long long>() == 1)) {
        out.swallowtail_parities.push_back(p.get<long long>() == 1);
      } else {
        bad("swallowtail_parities entries must be 0 or 1");
      }
    }
  }
  return out;
}

InstanceDocument read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string to_json(const InstanceDocument& doc) {
  json out;
  out["m_facets"] = facets_json(doc.m_facets);
  if (doc.has_target) out["n_facets"] = facets_json(doc.n_facets);
  if (doc.has_map) {
    bool dense = true;
    for (std::size_t i = 0; i < doc.vertex_map.size(); ++i) {
      if (doc.vertex_map[i].first != static_cast<Vertex>(i)) dense = false;
    }
    if (dense) {
      json arr = json::array();
      for (const auto& [src, img] : doc.vertex_map) arr.push_back(img);
      out["vertex_map"] = arr;
    } else {
      json obj = json::object();
      for (const auto& [src, img] : doc.vertex_map) obj[std::to_string(src)] = img;
      out["vertex_map"] = obj;
    }
  }
  out["surface_triangles"] = doc.surface_triangles;
  out["curve_components"] = doc.curve_components;
  json par = json::array();
  for (bool b : doc.swallowtail_parities) par.push_back(b ? 1 : 0);
  out["swallowtail_parities"] = par;
  return out.dump(2);
}

ProblemInstance build_instance(const InstanceDocument& doc) {
  if (!doc.has_target) bad("missing field 'n_facets'");
  if (!doc.has_map) bad("missing field 'vertex_map'");
  ProblemInstance inst;
  inst.source = make_complex(doc.m_facets);
  inst.target = make_complex(doc.n_facets);
  inst.map.source = inst.source;
  inst.map.target = inst.target;
  for (const auto& [src, img] : doc.vertex_map) {
    if (!inst.map.vertex_images.emplace(src, img).second) {
      bad("vertex_map assigns label " + std::to_string(src) + " twice");
    }
  }
  inst.locus = make_locus(*inst.source, doc.surface_triangles, doc.curve_components,
                          doc.swallowtail_parities);
  return inst;
}

InstanceDocument identity_document(const std::vector<Facet>& facets) {
  InstanceDocument doc;
  doc.m_facets = facets;
  doc.n_facets = facets;
  doc.has_target = true;
  doc.has_map = true;
  std::set<Vertex> labels;
  for (const auto& f : facets) labels.insert(f.begin(), f.end());
  for (Vertex v : labels) doc.vertex_map.emplace_back(v, v);
  return doc;
}

std::string verdict_to_json(const RealizabilityVerdict& v) {
  json comps = json::array();
  for (const auto& row : v.swallowtails.components) {
    comps.push_back({{"component", row.component},
                     {"intersection", row.intersection},
                     {"swallowtails", row.swallowtails},
                     {"holds", row.holds}});
  }
  json out;
  out["realizable"] = v.realizable;
  out["cond1"] = {{"holds", v.classes.first},
                  {"w1_M", class_json(v.classes.first_lhs)},
                  {"S_plus_f_w1_N", class_json(v.classes.first_rhs)}};
  out["cond2"] = {{"holds", v.classes.second},
                  {"w2_M", class_json(v.classes.second_lhs)},
                  {"C_plus_f_w1_N_S_plus_f_w2_N", class_json(v.classes.second_rhs)}};
  out["cond3"] = {{"holds", v.swallowtails.holds}, {"components", comps}};
  out["classes"] = {{"w1_M", class_json(v.tangent_source.w1)},
                    {"w2_M", class_json(v.tangent_source.w2)},
                    {"w1_N", class_json(v.tangent_target.w1)},
                    {"w2_N", class_json(v.tangent_target.w2)},
                    {"f_w1_N", class_json(v.pulled_target.w1)},
                    {"f_w2_N", class_json(v.pulled_target.w2)},
                    {"S", class_json(v.surface_class)},
                    {"C", class_json(v.curve_class)}};
  out["diagnostics"] = v.diagnostics;
  return out.dump(2);
}

}  // namespace genmap3
