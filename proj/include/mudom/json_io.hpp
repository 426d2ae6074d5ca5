#pragma once

#include <variant>

#include <json.hpp>

#include "mudom/automorphisms.hpp"
#include "mudom/domains.hpp"
#include "mudom/mu.hpp"
#include "mudom/orbits.hpp"

// Wire formats. Complex numbers are two-element arrays [re, im] everywhere;
// points are tagged {"kind": ..., "coords": [...]}; automorphism parameters
// are tagged {"kind": ..., "params": {...}}.

namespace nlohmann {
template <>
struct adl_serializer<std::complex<double>> {
  static void to_json(json& j, const std::complex<double>& z);
  static void from_json(const json& j, std::complex<double>& z);
};
}  // namespace nlohmann

namespace mudom {

using AutParams =
    std::variant<DiscAutomorphism, TetraAutParams, PentaAutParams, BlaschkeProduct>;

nlohmann::json to_json(const Gamma2Point& q);
nlohmann::json to_json(const GammaNPoint& c);
nlohmann::json to_json(const TetraPoint& x);
nlohmann::json to_json(const PentaPoint& q);
nlohmann::json to_json(const DomainPoint& p);

nlohmann::json to_json(const DiscAutomorphism& v);
nlohmann::json to_json(const TetraAutParams& t);
nlohmann::json to_json(const PentaAutParams& f);
nlohmann::json to_json(const BlaschkeProduct& B);
nlohmann::json to_json(const AutParams& p);

nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const MuBracket& b);

// Throw MalformedInput on schema violations.
DomainPoint parse_domain_point(const nlohmann::json& j);
AutParams parse_aut_params(const nlohmann::json& j);
Mat2 parse_mat2(const nlohmann::json& j);

}  // namespace mudom
