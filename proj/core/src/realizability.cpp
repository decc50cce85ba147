#include "genmap3/realizability.hpp"

#include <functional>
#include <sstream>

#include "genmap3/error.hpp"

namespace genmap3 {

namespace {

bool same_complex(const SimplicialComplex3& a, const SimplicialComplex3& b) {
  return &a == &b || a == b;
}

template <typename F>
auto stage(std::string_view name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw e.in_stage(name);
  }
}

std::string support_string(const Gf2Vector& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Index i : v.support()) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string describe(std::string_view name, const CohomologyClass& c) {
  std::ostringstream os;
  os << name << " in H^" << c.degree() << ": coords " << support_string(c.context().coordinates(c))
     << (c.is_zero() ? " (zero)" : " (nonzero)") << ", representative "
     << support_string(c.representative());
  return os.str();
}

}  // namespace

Gf2Vector pullback_cochain(const SimplicialMap& f, int k, const Gf2Vector& u) {
  if (k < 0 || k > 3) throw Error(ErrorCode::DegreeMismatch, "degree out of range");
  if (u.length() != f.target->count(k)) {
    throw Error(ErrorCode::DimensionMismatch, "cochain length does not match the target");
  }
  const auto& src = *f.source;
  Gf2Vector out(src.count(k));
  for (Index s = 0; s < src.count(k); ++s) {
    const auto image = f.image_of(src.simplex(k, s));
    if (image.size() != static_cast<std::size_t>(k) + 1) continue;  // degenerate
    auto t = f.target->find(image);
    if (!t) {
      throw Error(ErrorCode::InvalidMap, "image of source simplex " + std::to_string(s) +
                                             " in degree " + std::to_string(k) +
                                             " is not a target simplex");
    }
    if (u.get(*t)) out.set(s, true);
  }
  return out;
}

CohomologyClass pullback(const SimplicialMap& f, const CohomologyClass& u,
                         const ContextPtr& source_ctx) {
  if (!same_complex(source_ctx->complex(), *f.source)) {
    throw Error(ErrorCode::ContextMismatch, "source context is not built over the map's source");
  }
  if (!same_complex(u.context().complex(), *f.target)) {
    throw Error(ErrorCode::ContextMismatch, "class does not live on the map's target");
  }
  return source_ctx->make_class(u.degree(), pullback_cochain(f, u.degree(), u.representative()));
}

BundleClasses pullback(const SimplicialMap& f, const BundleClasses& classes,
                       const ContextPtr& source_ctx) {
  return BundleClasses{pullback(f, classes.w1, source_ctx), pullback(f, classes.w2, source_ctx)};
}

void validate_instance(const ProblemInstance& inst) {
  if (!inst.source || !inst.target || !inst.map.source || !inst.map.target) {
    throw Error(ErrorCode::InvalidInput, "instance is missing a complex");
  }
  if (!same_complex(*inst.map.source, *inst.source) ||
      !same_complex(*inst.map.target, *inst.target)) {
    throw Error(ErrorCode::InvalidMap, "map does not go from the source to the target complex");
  }
  if (!is_closed_pseudomanifold(*inst.source)) {
    throw Error(ErrorCode::NotClosed, "source complex M is not a closed pseudomanifold");
  }
  if (!is_closed_pseudomanifold(*inst.target)) {
    throw Error(ErrorCode::NotClosed, "target complex N is not a closed pseudomanifold");
  }
  if (auto check = validate_simplicial_map(inst.map); !check) {
    throw Error(ErrorCode::InvalidMap, check.diagnostic);
  }
  validate_locus(*inst.source, inst.locus);
}

ClassConditions evaluate_class_conditions(const BundleClasses& tangent_source,
                                          const CohomologyClass& surface_class,
                                          const CohomologyClass& curve_class,
                                          const BundleClasses& pulled_target) {
  CohomologyClass first_rhs = surface_class + pulled_target.w1;
  CohomologyClass second_rhs =
      curve_class + cup(pulled_target.w1, surface_class) + pulled_target.w2;
  const bool first = cohomologous(tangent_source.w1, first_rhs);
  const bool second = cohomologous(tangent_source.w2, second_rhs);
  return ClassConditions{first, second, tangent_source.w1, std::move(first_rhs), tangent_source.w2,
                         std::move(second_rhs)};
}

bool twisted_bundle_matches(const BundleClasses& twisted_source, const SimplicialMap& f,
                            const BundleClasses& target_classes, const ContextPtr& source_ctx) {
  return bundle_iso(twisted_source, pullback(f, target_classes, source_ctx));
}

RealizabilityVerdict check_realizability(const ProblemInstance& inst) {
  stage("validate instance", [&] {
    validate_instance(inst);
    return 0;
  });

  const ContextPtr ctx_m = stage("cohomology of M", [&] { return CohomologyContext::create(inst.source); });
  const ContextPtr ctx_n = stage("cohomology of N", [&] { return CohomologyContext::create(inst.target); });

  BundleClasses tangent_m = stage("tangent classes of M", [&] { return tangent_classes(*ctx_m); });
  BundleClasses tangent_n = stage("tangent classes of N", [&] { return tangent_classes(*ctx_n); });
  BundleClasses pulled = stage("pullback along f", [&] { return pullback(inst.map, tangent_n, ctx_m); });

  CohomologyClass s = stage("dual of fold surface", [&] { return pd_of_surface(*ctx_m, inst.locus); });
  CohomologyClass c = stage("dual of cusp curves", [&] { return pd_of_curves(*ctx_m, inst.locus); });

  ClassConditions conditions = stage("class conditions", [&] {
    return evaluate_class_conditions(tangent_m, s, c, pulled);
  });
  SwallowtailParityCheck parities = stage("swallowtail parities", [&] {
    return check_swallowtail_parities(*ctx_m, inst.locus, s);
  });

  const bool realizable = conditions.first && conditions.second && parities.holds;

  std::vector<std::string> diag;
  {
    std::ostringstream os;
    os << "betti(M) = (" << ctx_m->betti(0) << "," << ctx_m->betti(1) << "," << ctx_m->betti(2)
       << "," << ctx_m->betti(3) << "), betti(N) = (" << ctx_n->betti(0) << "," << ctx_n->betti(1)
       << "," << ctx_n->betti(2) << "," << ctx_n->betti(3) << ")";
    diag.push_back(os.str());
  }
  diag.push_back(describe("w1(M)", tangent_m.w1));
  diag.push_back(describe("w2(M)", tangent_m.w2));
  diag.push_back(describe("w1(N)", tangent_n.w1));
  diag.push_back(describe("w2(N)", tangent_n.w2));
  diag.push_back(describe("f*w1(N)", pulled.w1));
  diag.push_back(describe("f*w2(N)", pulled.w2));
  diag.push_back(describe("[S]", s));
  diag.push_back(describe("[C]", c));
  diag.push_back(std::string("w1(M) = [S] + f*w1(N): ") + (conditions.first ? "holds" : "fails"));
  diag.push_back(std::string("w2(M) = [C] + f*w1(N)[S] + f*w2(N): ") +
                 (conditions.second ? "holds" : "fails"));
  for (const auto& row : parities.components) {
    std::ostringstream os;
    os << "component " << row.component << ": [C'].[S] = " << row.intersection
       << ", |P ∩ C'| mod 2 = " << row.swallowtails << ": " << (row.holds ? "holds" : "fails");
    diag.push_back(os.str());
  }

  return RealizabilityVerdict{std::move(conditions), std::move(parities), realizable,
                              std::move(tangent_m),  std::move(tangent_n), std::move(pulled),
                              std::move(s),          std::move(c),         std::move(diag)};
}

}  // namespace genmap3
