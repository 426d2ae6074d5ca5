#include "mudom/cli.hpp"

#include "mudom/json_io.hpp"
#include "mudom/selftest.hpp"

namespace mudom::cli {

using nlohmann::json;

namespace {

std::string region_name(GammaRegion r) {
  switch (r) {
    case GammaRegion::Interior: return "interior";
    case GammaRegion::Closure: return "closure";
    case GammaRegion::Outside: return "outside";
  }
  return "outside";
}

json classify_gamma_common(const GammaClassification& cls, bool is_gamma2, bool royal) {
  json out{{"kind", is_gamma2 ? "gamma2" : "gammaN"},
           {"region", region_name(cls.region)},
           {"onBoundary", cls.on_boundary},
           {"defect", cls.defect}};
  std::string stratum;
  if (cls.on_boundary)
    stratum = is_gamma2 ? (royal ? "bGamma2Royal" : "bGamma2") : "bGammaN";
  else if (cls.region == GammaRegion::Interior)
    stratum = is_gamma2 ? "gamma2Interior" : "gammaNInterior";
  else if (cls.region == GammaRegion::Closure)
    stratum = is_gamma2 ? "gamma2Closure" : "gammaNClosure";
  else
    stratum = "outside";
  out["stratum"] = stratum;
  if (is_gamma2) out["royal"] = royal;
  return out;
}

json classify_one(const DomainPoint& point, const CommandRequest& req) {
  const Tolerance tol{req.tol};
  const MuOptions mu_opt{.resolution = req.resolution};

  if (const auto* q = std::get_if<Gamma2Point>(&point))
    return classify_gamma_common(classify_gamma2(*q, tol), true, royal_gamma2(*q, tol));
  if (const auto* c = std::get_if<GammaNPoint>(&point))
    return classify_gamma_common(classify_gamma_n(*c, tol), false, false);

  if (const auto* x = std::get_if<TetraPoint>(&point)) {
    const auto cls = classify_b_tetra(*x, tol);
    json out{{"kind", "tetra"},
             {"boundaryDefect", cls.boundary_defect},
             {"triangularDefect", cls.triangular_defect}};
    if (cls.label == TetraBoundaryLabel::BoundaryTriangular) {
      out["label"] = "boundaryTriangular";
      out["stratum"] = "bTetraTriangular";
    } else if (cls.label == TetraBoundaryLabel::BoundaryNonTriangular) {
      out["label"] = "boundaryNonTriangular";
      out["stratum"] = "bTetraNonTriangular";
    } else {
      // Interior membership has no closed form; ask the mu oracle.
      out["label"] = "notBoundary";
      const MuBracket b = mu(realize_tetra(*x), MuStructure::Diag, mu_opt);
      out["mu"] = to_json(b);
      out["stratum"] = b.upper < 1.0 - 1e-3 ? "tetraInterior"
                       : b.lower > 1.0 + 1e-3 ? "outside"
                                              : "boundaryBand";
    }
    return out;
  }

  const auto& q = std::get<PentaPoint>(point);
  const auto cls = classify_b_penta(q, tol);
  json out{{"kind", "penta"},
           {"boundaryDefect", cls.boundary_defect},
           {"royalDefect", cls.royal_defect}};
  if (cls.label == PentaBoundaryLabel::BoundaryRoyal) {
    out["label"] = "boundaryRoyal";
    out["stratum"] = "bPentaRoyal";
  } else if (cls.label == PentaBoundaryLabel::BoundaryNonRoyal) {
    out["label"] = "boundaryNonRoyal";
    out["stratum"] = "bPentaNonRoyal";
  } else {
    out["label"] = "notBoundary";
    const MuBracket b = mu(realize_penta(q), MuStructure::PentaSpan, mu_opt);
    out["mu"] = to_json(b);
    out["stratum"] = b.upper < 1.0 - 1e-3 ? "pentaInterior"
                     : b.lower > 1.0 + 1e-3 ? "outside"
                                            : "boundaryBand";
  }
  return out;
}

json run_classify(const CommandRequest& req) {
  if (req.payload.is_array()) {
    json out = json::array();
    for (const auto& e : req.payload) out.push_back(classify_one(parse_domain_point(e), req));
    return out;
  }
  return classify_one(parse_domain_point(req.payload), req);
}

json run_aut(const CommandRequest& req) {
  const std::string action =
      req.payload.contains("action") ? req.payload.at("action").get<std::string>() : "apply";
  const AutParams params = parse_aut_params(req.payload.at("params"));

  if (action == "apply") {
    if (!req.payload.contains("point")) throw MalformedInput("aut apply needs a point");
    const DomainPoint point = parse_domain_point(req.payload.at("point"));
    if (const auto* v = std::get_if<DiscAutomorphism>(&params))
      return to_json(tau_apply(*v, std::get<Gamma2Point>(point)));
    if (const auto* t = std::get_if<TetraAutParams>(&params))
      return to_json(tetra_apply(*t, std::get<TetraPoint>(point)));
    if (const auto* f = std::get_if<PentaAutParams>(&params))
      return to_json(penta_apply(*f, std::get<PentaPoint>(point)));
    return to_json(tau_blaschke_apply(std::get<BlaschkeProduct>(params),
                                      std::get<GammaNPoint>(point)));
  }
  if (action == "inverse") {
    if (const auto* v = std::get_if<DiscAutomorphism>(&params))
      return to_json(AutParams{aut_inverse(*v)});
    if (const auto* t = std::get_if<TetraAutParams>(&params))
      return to_json(AutParams{tetra_inverse(*t)});
    if (const auto* f = std::get_if<PentaAutParams>(&params))
      return to_json(AutParams{penta_inverse(*f)});
    throw MalformedInput("blaschke parameters have no group inverse");
  }
  if (action == "compose") {
    if (!req.payload.contains("params2")) throw MalformedInput("aut compose needs params2");
    const AutParams inner = parse_aut_params(req.payload.at("params2"));
    if (params.index() != inner.index())
      throw MalformedInput("compose requires parameters of the same kind");
    if (const auto* v = std::get_if<DiscAutomorphism>(&params))
      return to_json(AutParams{aut_compose(*v, std::get<DiscAutomorphism>(inner))});
    if (const auto* t = std::get_if<TetraAutParams>(&params))
      return to_json(AutParams{tetra_compose(*t, std::get<TetraAutParams>(inner))});
    if (const auto* f = std::get_if<PentaAutParams>(&params))
      return to_json(AutParams{penta_compose(*f, std::get<PentaAutParams>(inner))});
    throw MalformedInput("blaschke parameters do not compose here");
  }
  throw MalformedInput("unknown aut action: " + action);
}

json run_decompose(const CommandRequest& req) {
  const DomainPoint point = parse_domain_point(req.payload);
  const Tolerance tol{req.tol};
  if (const auto* q = std::get_if<Gamma2Point>(&point))
    return to_json(decompose_b_gamma2(*q, tol));
  if (const auto* c = std::get_if<GammaNPoint>(&point))
    return to_json(decompose_b_gamma_n(*c, tol));
  if (const auto* x = std::get_if<TetraPoint>(&point))
    return to_json(decompose_b_tetra(*x, tol));
  return to_json(decompose_b_penta(std::get<PentaPoint>(point), tol));
}

json run_mu(const CommandRequest& req) {
  const Mat2 A = parse_mat2(req.payload.at("matrix"));
  const MuStructure st =
      mu_structure_from_string(req.payload.at("structure").get<std::string>());
  return to_json(mu(A, st, MuOptions{.resolution = req.resolution}));
}

json run_sample(const CommandRequest& req) {
  const Stratum stratum =
      stratum_from_string(req.payload.at("stratum").get<std::string>());
  const int n = req.payload.contains("n") ? req.payload.at("n").get<int>() : 2;
  json out = json::array();
  for (const auto& p : sample_stratum(stratum, n, req.seed, req.samples))
    out.push_back(to_json(p));
  return out;
}

json run_interp(const CommandRequest& req) {
  std::vector<Complex> targets;
  for (const auto& e : req.payload.at("targets")) targets.push_back(e.get<Complex>());
  const BlaschkeProduct B = interpolate_roots_of_unity(targets, 1e-8, req.seed);
  return {{"blaschke", to_json(B)},
          {"residual", interpolation_residual(B, targets)},
          {"degree", B.degree()}};
}

json run_selftest_cmd(const CommandRequest& req, int& exit_code) {
  const SelftestReport report = run_selftest(req.samples, req.seed);
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  if (!report.passed) exit_code = 3;
  return {{"passed", report.passed}, {"checks", checks}};
}

}  // namespace

CommandResult run(const CommandRequest& request) {
  CommandResult result;
  try {
    if (!(request.tol > 0.0)) throw MalformedInput("--tol must be positive");
    if (!(request.resolution > 0.0)) throw MalformedInput("--resolution must be positive");
    if (request.samples < 1) throw MalformedInput("--samples must be positive");

    if (request.subcommand == "classify") result.output = run_classify(request);
    else if (request.subcommand == "aut") result.output = run_aut(request);
    else if (request.subcommand == "decompose") result.output = run_decompose(request);
    else if (request.subcommand == "mu") result.output = run_mu(request);
    else if (request.subcommand == "sample") result.output = run_sample(request);
    else if (request.subcommand == "interp") result.output = run_interp(request);
    else if (request.subcommand == "selftest")
      result.output = run_selftest_cmd(request, result.exit_code);
    else
      throw MalformedInput("unknown subcommand: " + request.subcommand);
  } catch (const MalformedInput& e) {
    result.exit_code = 1;
    result.error_message = e.what();
  } catch (const UnknownStratum& e) {
    result.exit_code = 1;
    result.error_message = e.what();
  } catch (const nlohmann::json::exception& e) {
    result.exit_code = 1;
    result.error_message = e.what();
  } catch (const InterpolationFailure& e) {
    result.exit_code = 3;
    result.error_message = e.what();
  } catch (const SolverFailure& e) {
    result.exit_code = 3;
    result.error_message = e.what();
  } catch (const InternalInconsistency& e) {
    result.exit_code = 3;
    result.error_message = e.what();
  } catch (const Error& e) {
    // Remaining library errors are domain errors: NotOnBoundary,
    // OutsideDomain, DegenerateDenominator, CoincidentPoints, bad parameters.
    result.exit_code = 2;
    result.error_message = e.what();
  } catch (const std::bad_variant_access&) {
    result.exit_code = 1;
    result.error_message = "parameter kind does not match the point kind";
  } catch (const std::exception& e) {
    result.exit_code = 3;
    result.error_message = e.what();
  }
  return result;
}

}  // namespace mudom::cli
