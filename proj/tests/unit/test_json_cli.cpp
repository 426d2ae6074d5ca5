#include <doctest.h>

#include "mudom/cli.hpp"
#include "mudom/json_io.hpp"

using namespace mudom;
using nlohmann::json;

namespace {

cli::CommandRequest request(const std::string& sub, json payload) {
  cli::CommandRequest r;
  r.subcommand = sub;
  r.payload = std::move(payload);
  return r;
}

}  // namespace

TEST_CASE("point JSON round trips across all kinds") {
  Rng rng(151);
  for (int t = 0; t < 100; ++t) {
    const std::vector<DomainPoint> points{
        sample_gamma2_interior(rng), sample_gamma_n_interior(rng, 4),
        sample_tetra_interior(rng), sample_penta_interior(rng)};
    for (const auto& p : points) {
      const DomainPoint back = parse_domain_point(to_json(p));
      CHECK(to_json(back) == to_json(p));
    }
  }
}

TEST_CASE("params JSON round trips across all kinds") {
  Rng rng(157);
  const std::vector<AutParams> params{
      DiscAutomorphism::make(rng.unimodular(), rng.in_disc(0.9)),
      TetraAutParams::make(rng.unimodular(), rng.in_disc(0.9), rng.unimodular(),
                           rng.in_disc(0.9), true),
      PentaAutParams::make(rng.unimodular(),
                           DiscAutomorphism::make(rng.unimodular(), rng.in_disc(0.9))),
      BlaschkeProduct::make(rng.unimodular(), {rng.in_disc(0.9), rng.in_disc(0.9)})};
  for (const auto& p : params) {
    const AutParams back = parse_aut_params(to_json(p));
    CHECK(to_json(back) == to_json(p));
  }
}

TEST_CASE("schema violations raise MalformedInput") {
  CHECK_THROWS_AS(parse_domain_point(json{{"kind", "circle"}, {"coords", json::array()}}),
                  MalformedInput);
  CHECK_THROWS_AS(parse_domain_point(json{{"kind", "gamma2"}, {"coords", {1, 2}}}),
                  MalformedInput);
  CHECK_THROWS_AS(parse_domain_point(json{{"coords", json::array()}}), MalformedInput);
  CHECK_THROWS_AS(parse_mat2(json{{"a11", {0, 0}}}), MalformedInput);
}

TEST_CASE("cli classify") {
  auto r = cli::run(request("classify", json::parse(R"({"kind":"gamma2","coords":[[0,0],[1,0]]})")));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("stratum") == "bGamma2");
  CHECK(r.output.at("royal") == false);
  CHECK(r.output.at("onBoundary") == true);

  r = cli::run(request("classify", json::parse(R"({"kind":"penta","coords":[[0,0],[2,0],[1,0]]})")));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("stratum") == "bPentaRoyal");
}

TEST_CASE("cli classify consults mu off the boundary") {
  auto r = cli::run(request(
      "classify", json::parse(R"({"kind":"tetra","coords":[[0.1,0],[0.1,0],[0.05,0]]})")));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("label") == "notBoundary");
  CHECK(r.output.at("stratum") == "tetraInterior");
  CHECK(r.output.contains("mu"));
}

TEST_CASE("cli decompose") {
  auto r = cli::run(request(
      "decompose", json::parse(R"({"kind":"tetra","coords":[[0,0],[0,0],[1,0]]})")));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("stratum") == "NonTriangularE");
  CHECK(r.output.at("residual").get<double>() == 0.0);
  const json xi1 = r.output.at("params").at("params").at("xi1");
  CHECK(xi1[0].get<double>() == doctest::Approx(1.0));
  CHECK(xi1[1].get<double>() == doctest::Approx(0.0));

  // interior point: domain error, exit 2
  r = cli::run(request("decompose", json::parse(R"({"kind":"gamma2","coords":[[0.5,0],[0,0]]})")));
  CHECK(r.exit_code == 2);
  CHECK_FALSE(r.error_message.empty());
}

TEST_CASE("cli mu") {
  auto r = cli::run(request("mu", json::parse(
      R"({"matrix":{"a11":[0,0],"a12":[0,0],"a21":[0,0],"a22":[0,0]},"structure":"diag"})")));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("lower").get<double>() == 0.0);
  CHECK(r.output.at("upper").get<double>() == 0.0);
  CHECK(r.output.at("structure") == "diag");
}

TEST_CASE("cli sample piped into classify lands on the requested stratum") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"bGamma2", "bGamma2"},
      {"bGamma2Royal", "bGamma2Royal"},
      {"bGammaN", "bGammaN"},
      {"bTetraNonTriangular", "bTetraNonTriangular"},
      {"bTetraTriangular", "bTetraTriangular"},
      {"bPentaRoyal", "bPentaRoyal"},
      {"bPentaNonRoyal", "bPentaNonRoyal"},
      {"gamma2Interior", "gamma2Interior"},
      {"gammaNInterior", "gammaNInterior"},
      {"tetraInterior", "tetraInterior"},
      {"pentaInterior", "pentaInterior"},
  };
  for (const auto& [stratum, expected] : cases) {
    cli::CommandRequest sample_req = request("sample", json{{"stratum", stratum}, {"n", 3}});
    sample_req.samples = 8;
    sample_req.seed = 11;
    const auto sampled = cli::run(sample_req);
    REQUIRE(sampled.exit_code == 0);
    REQUIRE(sampled.output.is_array());
    REQUIRE(sampled.output.size() == 8);

    const auto classified = cli::run(request("classify", sampled.output));
    REQUIRE(classified.exit_code == 0);
    for (const auto& c : classified.output) CHECK(c.at("stratum") == expected);
  }
}

TEST_CASE("cli aut apply, inverse and compose") {
  const json v = json::parse(R"({"kind":"gamma2","params":{"eta":[-1,0],"alpha":[0,0]}})");
  auto r = cli::run(request("aut", json{{"action", "apply"},
                                        {"params", v},
                                        {"point", json::parse(R"({"kind":"gamma2","coords":[[0,0],[1,0]]})")}}));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("kind") == "gamma2");

  r = cli::run(request("aut", json{{"action", "inverse"}, {"params", v}}));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("kind") == "gamma2");

  r = cli::run(request("aut", json{{"action", "compose"}, {"params", v}, {"params2", v}}));
  REQUIRE(r.exit_code == 0);

  // mismatched kinds: exit 1
  r = cli::run(request("aut", json{{"action", "apply"},
                                   {"params", v},
                                   {"point", json::parse(R"({"kind":"tetra","coords":[[0,0],[0,0],[1,0]]})")}}));
  CHECK(r.exit_code == 1);

  // proper map on a gammaN point through blaschke params
  const json B = json::parse(R"({"kind":"blaschke","params":{"unimodular":[-1,0],"zeros":[[0,0]]}})");
  r = cli::run(request("aut", json{{"action", "apply"},
                                   {"params", B},
                                   {"point", json::parse(R"({"kind":"gammaN","coords":[[0,0],[0,0],[1,0]]})")}}));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("kind") == "gammaN");

  r = cli::run(request("aut", json{{"action", "inverse"}, {"params", B}}));
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli interp") {
  auto r = cli::run(request("interp", json::parse(R"({"targets":[[1,0],[-1,0]]})")));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.at("residual").get<double>() < 1e-8);
  CHECK(r.output.at("degree").get<int>() <= 2);
}

TEST_CASE("cli error paths") {
  auto r = cli::run(request("unknowncmd", json{}));
  CHECK(r.exit_code == 1);

  r = cli::run(request("sample", json{{"stratum", "nowhere"}}));
  CHECK(r.exit_code == 1);

  r = cli::run(request("classify", json{{"kind", "gamma2"}}));
  CHECK(r.exit_code == 1);

  cli::CommandRequest bad = request("classify", json{});
  bad.tol = -1.0;
  CHECK(cli::run(bad).exit_code == 1);
}

TEST_CASE("cli output is deterministic") {
  cli::CommandRequest req = request("sample", json{{"stratum", "bPentaNonRoyal"}});
  req.samples = 20;
  req.seed = 3;
  const auto a = cli::run(req);
  const auto b = cli::run(req);
  CHECK(a.output.dump() == b.output.dump());
}

TEST_CASE("cli selftest at reduced scale") {
  cli::CommandRequest req;
  req.subcommand = "selftest";
  req.samples = 60;
  req.seed = 1;
  const auto r = cli::run(req);
  CHECK(r.exit_code == 0);
  CHECK(r.output.at("passed") == true);
  CHECK(r.output.at("checks").is_array());
}
