// genmap3: command-line front end.
//
// Exit codes: 0 success / realizable, 1 not realizable (or a failed strata
// check), 2 invalid input or any other error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "genmap3/builtins.hpp"
#include "genmap3/char_classes.hpp"
#include "genmap3/error.hpp"
#include "genmap3/instance_io.hpp"
#include "genmap3/morin.hpp"
#include "genmap3/realizability.hpp"

namespace {

using namespace genmap3;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;

json support_json(const Gf2Vector& v) {
  json arr = json::array();
  for (Index i : v.support()) arr.push_back(i);
  return arr;
}

std::string support_text(const Gf2Vector& v) {
  std::string out = "[";
  for (Index i : v.support()) out += (out.size() > 1 ? " " : "") + std::to_string(i);
  return out + "]";
}

std::string simplex_text(std::span<const Vertex> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

json betti_json(const CohomologyContext& ctx) {
  return {ctx.betti(0), ctx.betti(1), ctx.betti(2), ctx.betti(3)};
}

std::string betti_text(const CohomologyContext& ctx) {
  return "(" + std::to_string(ctx.betti(0)) + "," + std::to_string(ctx.betti(1)) + "," +
         std::to_string(ctx.betti(2)) + "," + std::to_string(ctx.betti(3)) + ")";
}

int run_check(const std::string& path, bool as_json) {
  const auto inst = build_instance(read_instance_file(path));
  const auto verdict = check_realizability(inst);
  if (as_json) {
    std::cout << verdict_to_json(verdict) << "\n";
  } else {
    for (const auto& line : verdict.diagnostics) std::cout << line << "\n";
    std::cout << "verdict: " << (verdict.realizable ? "realizable" : "not realizable") << "\n";
  }
  return verdict.realizable ? kOk : kNegative;
}

int run_homology(const std::string& path, int dim, bool as_json) {
  if (dim < 0 || dim > 3) throw Error(ErrorCode::InvalidInput, "--dim must be in 0..3");
  const auto doc = read_instance_file(path);
  const auto complex = make_complex(doc.m_facets);
  const auto ctx = CohomologyContext::create(complex);
  const auto basis = ctx->basis(dim);
  if (as_json) {
    json reps = json::array();
    for (const auto& b : basis) reps.push_back(support_json(b));
    std::cout << json{{"dim", dim}, {"betti", ctx->betti(dim)}, {"basis", reps}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "dim H^" << dim << "(M; Z/2) = " << ctx->betti(dim) << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::cout << "  basis " << i << ":";
    for (Index s : basis[i].support()) std::cout << " " << simplex_text(complex->simplex(dim, s));
    std::cout << "\n";
  }
  return kOk;
}

int run_classes(const std::string& path, bool as_json) {
  const auto doc = read_instance_file(path);
  json report = json::object();
  auto describe = [&](const char* label, const std::vector<Facet>& facets) {
    const auto complex = make_complex(facets);
    const auto ctx = CohomologyContext::create(complex);
    const auto t = tangent_classes(*ctx);
    if (as_json) {
      report[label] = {{"betti", betti_json(*ctx)},
                       {"orientable", is_orientable(*complex)},
                       {"w1", support_json(t.w1.representative())},
                       {"w1_zero", t.w1.is_zero()},
                       {"w2", support_json(t.w2.representative())},
                       {"w2_zero", t.w2.is_zero()}};
      return;
    }
    std::cout << label << ": betti " << betti_text(*ctx) << ", "
              << (is_orientable(*complex) ? "orientable" : "nonorientable") << "\n";
    std::cout << "  w1 " << (t.w1.is_zero() ? "= 0" : "!= 0") << ", representative "
              << support_text(t.w1.representative()) << "\n";
    std::cout << "  w2 " << (t.w2.is_zero() ? "= 0" : "!= 0") << ", representative "
              << support_text(t.w2.representative()) << "\n";
  };
  describe("M", doc.m_facets);
  if (doc.has_target) describe("N", doc.n_facets);
  if (as_json) std::cout << report.dump(2) << "\n";
  return kOk;
}

int run_morin(const std::string& model_name, int grid, bool as_json) {
  if (grid < 2) throw Error(ErrorCode::InvalidInput, "--grid must be at least 2");
  const auto model = morin::parse_model(model_name);
  const auto report = morin::verify_strata(model, grid);
  if (as_json) {
    json counts = json::object();
    for (const auto& [prefix, n] : report.counts) counts[morin::prefix_string(prefix)] = n;
    json examples = json::array();
    for (const auto& p : report.mismatch_examples) examples.push_back(morin::point_string(p));
    std::cout << json{{"model", std::string(morin::model_name(model))},
                      {"points", report.points},
                      {"mismatches", report.mismatches},
                      {"counts", counts},
                      {"mismatch_examples", examples},
                      {"ok", report.ok()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "model " << morin::model_name(model) << ": " << report.points << " points, "
              << report.mismatches << " mismatches\n";
    for (const auto& [prefix, n] : report.counts) {
      std::cout << "  " << morin::prefix_string(prefix) << ": " << n << "\n";
    }
    for (const auto& p : report.mismatch_examples) {
      std::cout << "  mismatch at " << morin::point_string(p) << "\n";
    }
  }
  return report.ok() ? kOk : kNegative;
}

int run_builtin(const std::string& name, bool emit, bool as_json) {
  const auto facets = builtin_facets(name);
  if (emit) {
    std::cout << to_json(identity_document(facets)) << "\n";
    return kOk;
  }
  const auto complex = make_complex(facets);
  const auto ctx = CohomologyContext::create(complex);
  if (as_json) {
    std::cout << json{{"name", name},
                      {"vertices", complex->count(0)},
                      {"facets", complex->count(3)},
                      {"betti", betti_json(*ctx)},
                      {"orientable", is_orientable(*complex)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << name << ": " << complex->count(0) << " vertices, " << complex->count(3)
              << " facets, betti " << betti_text(*ctx) << ", "
              << (is_orientable(*complex) ? "orientable" : "nonorientable") << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability of singular loci for maps of closed 3-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file;
  int dim = 0;
  std::string model;
  int grid = 11;
  std::string name;
  bool emit = false;

  auto* check = app.add_subcommand("check", "Decide realizability of an instance");
  check->add_option("file", file, "Instance JSON")->required();

  auto* homology = app.add_subcommand("homology", "Mod-2 cohomology of M in one degree");
  homology->add_option("file", file, "Instance JSON")->required();
  homology->add_option("--dim", dim, "Degree 0..3")->required();

  auto* classes = app.add_subcommand("classes", "Betti numbers and w1, w2 of M (and N)");
  classes->add_option("file", file, "Instance JSON")->required();

  auto* morin_cmd = app.add_subcommand("morin", "Verify Thom-Boardman strata of a Morin model");
  morin_cmd->add_option("--model", model, "fold | cusp | swallowtail")->required();
  morin_cmd->add_option("--grid", grid, "Lattice points per axis");

  auto* builtin_cmd = app.add_subcommand("builtin", "Built-in triangulations");
  builtin_cmd->add_option("name", name, "S3 | T3 | RP3 | S2xS1 | RP2xS1")->required();
  builtin_cmd->add_flag("--emit", emit, "Print an identity instance in the input format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*check) return run_check(file, as_json);
    if (*homology) return run_homology(file, dim, as_json);
    if (*classes) return run_classes(file, as_json);
    if (*morin_cmd) return run_morin(model, grid, as_json);
    if (*builtin_cmd) return run_builtin(name, emit, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
