#include "mudom/json_io.hpp"

namespace nlohmann {

void adl_serializer<std::complex<double>>::to_json(json& j, const std::complex<double>& z) {
  j = json::array({z.real(), z.imag()});
}

void adl_serializer<std::complex<double>>::from_json(const json& j, std::complex<double>& z) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw mudom::MalformedInput("complex numbers are [re, im] arrays");
  z = {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace nlohmann

namespace mudom {

using nlohmann::json;

namespace {

json point_json(const char* kind, std::initializer_list<Complex> coords) {
  json arr = json::array();
  for (const Complex c : coords) arr.push_back(c);
  return {{"kind", kind}, {"coords", arr}};
}

Complex coord(const json& arr, std::size_t i) { return arr.at(i).get<Complex>(); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedInput(std::string("missing field: ") + key);
  return j.at(key);
}

}  // namespace

json to_json(const Gamma2Point& q) { return point_json("gamma2", {q.s, q.p}); }

json to_json(const GammaNPoint& c) {
  json arr = json::array();
  for (const Complex z : c.coeffs) arr.push_back(z);
  return {{"kind", "gammaN"}, {"coords", arr}};
}

json to_json(const TetraPoint& x) { return point_json("tetra", {x.x1, x.x2, x.x3}); }

json to_json(const PentaPoint& q) { return point_json("penta", {q.a, q.s, q.p}); }

json to_json(const DomainPoint& p) {
  return std::visit([](const auto& q) { return to_json(q); }, p);
}

// Parameter payloads are flat; the AutParams wrapper tags them with a kind,
// so decomposition output feeds straight back into the aut subcommand.

json to_json(const DiscAutomorphism& v) { return {{"eta", v.eta}, {"alpha", v.alpha}}; }

json to_json(const TetraAutParams& t) {
  return {{"xi1", t.xi1}, {"z1", t.z1}, {"xi2", t.xi2}, {"z2", t.z2}, {"flip", t.flip}};
}

json to_json(const PentaAutParams& f) {
  return {{"omega", f.omega}, {"eta", f.v.eta}, {"alpha", f.v.alpha}};
}

json to_json(const BlaschkeProduct& B) {
  json zeros = json::array();
  for (const Complex a : B.zeros) zeros.push_back(a);
  return {{"unimodular", B.unimodular}, {"zeros", zeros}};
}

json to_json(const AutParams& p) {
  const char* kinds[] = {"gamma2", "tetra", "penta", "blaschke"};
  return {{"kind", kinds[p.index()]},
          {"params", std::visit([](const auto& q) { return to_json(q); }, p)}};
}

json to_json(const Decomposition& d) {
  return {{"stratum", to_string(d.stratum)},
          {"params", to_json(d.params)},
          {"residual", d.residual}};
}

json to_json(const MuBracket& b) {
  return {{"lower", b.lower}, {"upper", b.upper}, {"structure", to_string(b.structure)}};
}

DomainPoint parse_domain_point(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  const json& coords = require(j, "coords");
  if (!coords.is_array()) throw MalformedInput("coords must be an array");
  try {
    if (kind == "gamma2") {
      if (coords.size() != 2) throw MalformedInput("gamma2 takes coords [s, p]");
      return Gamma2Point{coord(coords, 0), coord(coords, 1)};
    }
    if (kind == "gammaN") {
      if (coords.empty()) throw MalformedInput("gammaN needs at least one coefficient");
      GammaNPoint c;
      for (const auto& e : coords) c.coeffs.push_back(e.get<Complex>());
      return c;
    }
    if (kind == "tetra") {
      if (coords.size() != 3) throw MalformedInput("tetra takes coords [x1, x2, x3]");
      return TetraPoint{coord(coords, 0), coord(coords, 1), coord(coords, 2)};
    }
    if (kind == "penta") {
      if (coords.size() != 3) throw MalformedInput("penta takes coords [a, s, p]");
      return PentaPoint{coord(coords, 0), coord(coords, 1), coord(coords, 2)};
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad point payload: ") + e.what());
  }
  throw MalformedInput("unknown point kind: " + kind);
}

AutParams parse_aut_params(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  const json& p = require(j, "params");
  try {
    if (kind == "gamma2")
      return DiscAutomorphism::make(require(p, "eta").get<Complex>(),
                                    require(p, "alpha").get<Complex>());
    if (kind == "tetra")
      return TetraAutParams::make(require(p, "xi1").get<Complex>(),
                                  require(p, "z1").get<Complex>(),
                                  require(p, "xi2").get<Complex>(),
                                  require(p, "z2").get<Complex>(),
                                  p.contains("flip") ? p.at("flip").get<bool>() : false);
    if (kind == "penta")
      return PentaAutParams::make(
          require(p, "omega").get<Complex>(),
          DiscAutomorphism::make(require(p, "eta").get<Complex>(),
                                 require(p, "alpha").get<Complex>()));
    if (kind == "blaschke") {
      std::vector<Complex> zeros;
      for (const auto& e : require(p, "zeros")) zeros.push_back(e.get<Complex>());
      return BlaschkeProduct::make(require(p, "unimodular").get<Complex>(), std::move(zeros));
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad params payload: ") + e.what());
  }
  throw MalformedInput("unknown params kind: " + kind);
}

Mat2 parse_mat2(const json& j) {
  try {
    return Mat2{require(j, "a11").get<Complex>(), require(j, "a12").get<Complex>(),
                require(j, "a21").get<Complex>(), require(j, "a22").get<Complex>()};
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad matrix payload: ") + e.what());
  }
}

}  // namespace mudom
