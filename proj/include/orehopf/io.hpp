#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "orehopf/quotient.hpp"
#include "orehopf/simple_modules.hpp"

namespace orehopf {

using Json = nlohmann::json;

struct Config {
  AlgebraSpec spec;
  std::optional<std::pair<Cyclotomic, Cyclotomic>> quotient;  // lambda1, lambda2
  std::optional<std::uint64_t> seed;
};

// Errors carry "line L" anchors pointing into the text.
Config parse_config(const std::string& text);
Config config_from_json(const Json& j, const std::string& text = {});
Config load_config(const std::string& path);
std::string read_file(const std::string& path);

// Literals: integer, "p/q" or an expression string such as "1 - 2*zeta^3",
// {"zeta_pow": k}, or {"coeffs": [c0, c1, ...]} in the power basis.
Cyclotomic parse_literal(const Json& j, int conductor);
Json literal_to_json(const Cyclotomic& c);
// Scalar text over Q(zeta_N): numbers, zeta, zeta^k, + - *.
Cyclotomic parse_scalar(const std::string& text, int conductor);

HopfElem parse_element(const std::string& text, const Algebra& alg);
// Sorted [[exps], i, j, coeff] entries.
Json element_to_json(const HopfElem& a);
Json tensor_to_json(const Tensor& t);

Json spec_to_json(const AlgebraSpec& spec);
std::string spec_fingerprint(const AlgebraSpec& spec);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t dim, int conductor);

Json module_to_json(const ModuleRep& m, const AlgebraSpec& spec, const std::optional<SimpleParams>& params = {});
struct LoadedModule {
  ModuleRep module;
  Config config;
  std::optional<SimpleParams> params;
};
// Accepts a module object or a report whose result holds one.
LoadedModule module_from_json(const Json& j);

Json params_to_json(const SimpleParams& p);
// Family-specific keys; skew families take lambda_N (values on the Hermite
// basis of N) or lambda_G (a character of G to restrict).
SimpleParams params_from_json(const Json& j, Family family, const AlgebraSpec& spec);

Json report_to_json(const std::string& command, const Report& report, std::optional<std::uint64_t> seed);

}  // namespace orehopf
