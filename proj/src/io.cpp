#include "orehopf/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace orehopf {

namespace {

// 1-based line of the first occurrence of "key" in text, or 1.
long key_line(const std::string& text, const std::string& key) {
  std::size_t pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 1;
  long line = 1;
  for (std::size_t k = 0; k < pos; ++k) line += text[k] == '\n';
  return line;
}

[[noreturn]] void fail_at(const std::string& text, const std::string& key, const std::string& msg) {
  throw Error("line " + std::to_string(key_line(text, key)) + ": " + msg);
}

const Json& require(const Json& obj, const std::string& key, const std::string& text, const std::string& parent) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail_at(text, parent, "missing key \"" + key + "\"");
  }
  return obj.at(key);
}

long as_integer(const Json& j, const std::string& text, const std::string& key) {
  if (!j.is_number_integer()) fail_at(text, key, "\"" + key + "\" must be an integer");
  return j.get<long>();
}

IntVec as_int_vector(const Json& j, const std::string& text, const std::string& key, std::size_t len) {
  if (!j.is_array()) fail_at(text, key, "\"" + key + "\" must be an array of integers");
  IntVec out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail_at(text, key, "\"" + key + "\" must be an array of integers");
    out.push_back(e.get<long>());
  }
  if (out.size() != len) {
    fail_at(text, key, "\"" + key + "\" needs " + std::to_string(len) + " entries, one per group generator");
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected an exact rational (integer or \"p/q\" string)");
}

// Recursive-descent parser shared by scalar and element expressions.
template <class Value>
class ExprParser {
 public:
  using Atom = std::function<Value(const std::string& name, long exponent, bool has_exponent, std::size_t column)>;
  using Scalar = std::function<Value(const Rational&)>;
  using Mul = std::function<Value(const Value&, const Value&)>;

  ExprParser(const std::string& s, Atom atom, Scalar scalar, Mul mul)
      : s_(s), atom_(std::move(atom)), scalar_(std::move(scalar)), mul_(std::move(mul)) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ < s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw Error("syntax error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Value expr() {
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    Value acc = term();
    if (neg) acc = mul_(scalar_(Rational(-1)), acc);
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Value term() {
    std::optional<Value> acc;
    while (true) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == '+' || s_[pos_] == '-' || s_[pos_] == ')') break;
      if (acc && s_[pos_] == '*') {
        ++pos_;
        skip();
      }
      Value f = factor();
      acc = acc ? mul_(*acc, f) : f;
    }
    if (!acc) error("expected a term");
    return *acc;
  }

  long exponent() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    long e = std::stol(s_.substr(start, pos_ - start));
    return neg ? -e : e;
  }

  Value factor() {
    skip();
    if (pos_ >= s_.size()) error("expected a factor");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t den = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (den == pos_) error("expected a denominator");
      }
      Rational r;
      try {
        r = parse_rational(s_.substr(start, pos_ - start));
      } catch (const Error& e) {
        error(e.what());
      }
      return scalar_(r);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      long e = 1;
      bool has = false;
      if (peek('^')) {
        ++pos_;
        e = exponent();
        has = true;
      }
      return atom_(name, e, has, start + 1);
    }
    error("unexpected '" + std::string(1, ch) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Atom atom_;
  Scalar scalar_;
  Mul mul_;
};

// zeta or zetaK (K | N) raised to e, inside Q(zeta_N).
std::optional<Cyclotomic> zeta_atom(const std::string& name, long e, int conductor, std::size_t column) {
  if (name.rfind("zeta", 0) != 0) return std::nullopt;
  std::string digits = name.substr(4);
  long k = conductor;
  if (!digits.empty()) {
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    }
    k = std::stol(digits);
    if (k < 1 || conductor % k != 0) {
      throw Error("column " + std::to_string(column) + ": " + name + " does not lie in Q(zeta" +
                  std::to_string(conductor) + ")");
    }
  }
  return root_of_unity(conductor, (conductor / k) * e);
}

Json monomial_json(const Monomial& m) { return Json::array({Json(m.g.exps), m.i, m.j}); }

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Cyclotomic parse_scalar(const std::string& text, int conductor) {
  ExprParser<Cyclotomic> p(
      text,
      [&](const std::string& name, long e, bool, std::size_t column) {
        auto z = zeta_atom(name, e, conductor, column);
        if (!z) throw Error("unknown identifier '" + name + "' at column " + std::to_string(column));
        return *z;
      },
      [](const Rational& r) { return Cyclotomic(r); }, [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; });
  return p.parse();
}

Cyclotomic parse_literal(const Json& j, int conductor) {
  if (j.is_number_integer()) return Cyclotomic(conductor, Rational(j.get<long>()));
  if (j.is_number()) throw Error("floating-point literals are not exact; use \"p/q\"");
  if (j.is_string()) {
    Cyclotomic v = parse_scalar(j.get<std::string>(), conductor);
    return v.conductor() == conductor ? v : v.lift(conductor);
  }
  if (j.is_object() && j.contains("zeta_pow")) {
    if (!j.at("zeta_pow").is_number_integer()) throw Error("\"zeta_pow\" must be an integer");
    Cyclotomic z = root_of_unity(conductor, j.at("zeta_pow").get<long>());
    if (j.contains("coeff")) z = parse_literal(j.at("coeff"), conductor) * z;
    return z;
  }
  if (j.is_object() && j.contains("coeffs")) {
    const Json& arr = j.at("coeffs");
    if (!arr.is_array()) throw Error("\"coeffs\" must be an array");
    std::vector<Rational> cs;
    for (const auto& e : arr) cs.push_back(rational_from_json(e));
    return Cyclotomic(conductor, cs);
  }
  throw Error("unrecognized cyclotomic literal " + j.dump());
}

Json literal_to_json(const Cyclotomic& c) {
  if (c.is_rational()) {
    Rational r = c.to_rational();
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
    return to_string(r);
  }
  if (auto k = zeta_exponent(c)) return Json{{"zeta_pow", *k}};
  Json arr = Json::array();
  for (const auto& r : c.coeffs()) arr.push_back(to_string(r));
  return Json{{"coeffs", arr}};
}

Config config_from_json(const Json& j, const std::string& text) {
  if (!j.is_object()) throw Error("line 1: config must be a JSON object");
  Config cfg;
  long conductor = as_integer(require(j, "conductor", text, "conductor"), text, "conductor");
  if (conductor < 1) fail_at(text, "conductor", "conductor must be positive");
  const Json& g = require(j, "group", text, "group");
  if (!g.is_object()) fail_at(text, "group", "\"group\" must be an object");
  long free_rank = g.contains("free_rank") ? as_integer(g.at("free_rank"), text, "free_rank") : 0;
  IntVec torsion;
  if (g.contains("torsion")) {
    if (!g.at("torsion").is_array()) fail_at(text, "torsion", "\"torsion\" must be an array of integers");
    for (const auto& t : g.at("torsion")) torsion.push_back(as_integer(t, text, "torsion"));
  }
  AbelianGroup group;
  try {
    group = AbelianGroup(static_cast<int>(free_rank), torsion);
  } catch (const Error& e) {
    fail_at(text, g.contains("torsion") ? "torsion" : "group", e.what());
  }
  std::size_t rank = group.rank();
  auto character = [&](const std::string& key) {
    IntVec k = as_int_vector(require(j, key, text, key), text, key, rank);
    try {
      return Character(group, k, static_cast<int>(conductor));
    } catch (const Error& e) {
      fail_at(text, key, e.what());
    }
  };
  Character chi = character("chi"), eta = character("eta");
  GroupElement b = group.element(as_int_vector(require(j, "b", text, "b"), text, "b", rank));
  GroupElement c = group.element(as_int_vector(require(j, "c", text, "c"), text, "c", rank));
  Cyclotomic beta;
  try {
    beta = parse_literal(require(j, "beta", text, "beta"), static_cast<int>(conductor));
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("line ", 0) == 0) throw;
    fail_at(text, "beta", e.what());
  }
  try {
    cfg.spec = AlgebraSpec::validate(group, chi, eta, b, c, beta);
  } catch (const Error& e) {
    std::string msg = e.what();
    fail_at(text, msg.find("β(1−cb)") != std::string::npos ? "beta" : "eta", msg);
  }
  if (j.contains("quotient")) {
    const Json& q = j.at("quotient");
    if (!q.is_object()) fail_at(text, "quotient", "\"quotient\" must be an object");
    auto lit = [&](const std::string& key) {
      try {
        return parse_literal(require(q, key, text, "quotient"), static_cast<int>(conductor));
      } catch (const Error& e) {
        if (std::string(e.what()).rfind("line ", 0) == 0) throw;
        fail_at(text, key, e.what());
      }
    };
    cfg.quotient = std::make_pair(lit("lambda1"), lit("lambda2"));
  }
  if (j.contains("seed")) {
    long s = as_integer(j.at("seed"), text, "seed");
    if (s < 0) fail_at(text, "seed", "seed must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  return cfg;
}

Config parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    long line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  return config_from_json(j, text);
}

Config load_config(const std::string& path) { return parse_config(read_file(path)); }

HopfElem parse_element(const std::string& text, const Algebra& alg) {
  int n = alg.conductor();
  const AbelianGroup& group = alg.group();
  ExprParser<HopfElem> p(
      text,
      [&](const std::string& name, long e, bool, std::size_t column) -> HopfElem {
        if (auto z = zeta_atom(name, e, n, column)) return alg.scalar(*z);
        if (name == "x" || name == "y" || name == "z") {
          if (e < 0) throw Error("column " + std::to_string(column) + ": negative power of " + name);
          HopfElem base = name == "x" ? alg.x() : name == "y" ? alg.y() : alg.z();
          return alg.pow(base, e);
        }
        if (name.size() > 1 && name[0] == 'g') {
          bool digits = true;
          for (std::size_t k = 1; k < name.size(); ++k) digits = digits && std::isdigit(static_cast<unsigned char>(name[k]));
          if (digits) {
            std::size_t idx = std::stoul(name.substr(1));
            if (idx >= 1 && idx <= group.rank()) return alg.group_elem(group.pow(group.generator(idx - 1), e));
          }
        }
        throw Error("unknown identifier '" + name + "' at column " + std::to_string(column));
      },
      [&](const Rational& r) { return alg.scalar(Cyclotomic(r)); },
      [&](const HopfElem& a, const HopfElem& b) { return alg.mul(a, b); });
  return p.parse();
}

Json element_to_json(const HopfElem& a) {
  Json arr = Json::array();
  for (const auto& [m, c] : a.terms()) arr.push_back(Json::array({Json(m.g.exps), m.i, m.j, literal_to_json(c)}));
  return arr;
}

Json tensor_to_json(const Tensor& t) {
  Json arr = Json::array();
  for (const auto& [word, c] : t.terms()) {
    Json w = Json::array();
    for (const auto& m : word) w.push_back(monomial_json(m));
    arr.push_back(Json::array({w, literal_to_json(c)}));
  }
  return arr;
}

Json spec_to_json(const AlgebraSpec& spec) {
  const AbelianGroup& g = spec.group();
  return Json{{"conductor", spec.conductor()},
              {"group", {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}}},
              {"chi", spec.chi().exponents()},
              {"eta", spec.eta().exponents()},
              {"b", spec.b().exps},
              {"c", spec.c().exps},
              {"beta", literal_to_json(spec.beta())}};
}

std::string spec_fingerprint(const AlgebraSpec& spec) {
  std::string s = spec_to_json(spec).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return hex64(h);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(literal_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t dim, int conductor) {
  if (!j.is_array() || j.size() != dim) throw Error("matrix must have " + std::to_string(dim) + " rows");
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!j[i].is_array() || j[i].size() != dim) throw Error("matrix rows must have " + std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = parse_literal(j[i][k], conductor);
  }
  return m;
}

Json module_to_json(const ModuleRep& m, const AlgebraSpec& spec, const std::optional<SimpleParams>& params) {
  Json gens = Json::object();
  for (std::size_t k = 0; k < m.group.size(); ++k) gens["g" + std::to_string(k + 1)] = matrix_to_json(m.group[k]);
  gens["x"] = matrix_to_json(m.X);
  gens["y"] = matrix_to_json(m.Y);
  Json j{{"dim", m.dim},
         {"presentation", to_string(m.presentation)},
         {"generators", gens},
         {"spec", spec_to_json(spec)},
         {"spec_fingerprint", spec_fingerprint(spec)}};
  if (params) j["params"] = params_to_json(*params);
  return j;
}

LoadedModule module_from_json(const Json& input) {
  const Json* j = &input;
  if (j->is_object() && j->contains("result") && (*j)["result"].is_object() && (*j)["result"].contains("module")) {
    j = &(*j)["result"]["module"];
  } else if (j->is_object() && j->contains("module")) {
    j = &(*j)["module"];
  }
  for (const char* key : {"dim", "presentation", "generators", "spec"}) {
    if (!j->is_object() || !j->contains(key)) throw Error(std::string("module is missing key \"") + key + "\"");
  }
  LoadedModule out;
  out.config = config_from_json(j->at("spec"));
  const AlgebraSpec& spec = out.config.spec;
  if (j->contains("spec_fingerprint") && j->at("spec_fingerprint") != spec_fingerprint(spec)) {
    throw Error("spec fingerprint mismatch");
  }
  if (!j->at("dim").is_number_unsigned()) throw Error("\"dim\" must be a nonnegative integer");
  std::size_t d = j->at("dim").get<std::size_t>();
  std::string pres = j->at("presentation").get<std::string>();
  if (pres != "raw" && pres != "normalized") throw Error("presentation must be \"raw\" or \"normalized\"");
  ModuleRep& m = out.module;
  m.dim = d;
  m.presentation = pres == "raw" ? Presentation::Raw : Presentation::Normalized;
  const Json& gens = j->at("generators");
  auto get = [&](const std::string& name) {
    if (!gens.contains(name)) throw Error("module is missing generator \"" + name + "\"");
    return matrix_from_json(gens.at(name), d, spec.conductor());
  };
  for (std::size_t k = 0; k < spec.group().rank(); ++k) m.group.push_back(get("g" + std::to_string(k + 1)));
  m.X = get("x");
  m.Y = get("y");
  if (j->contains("params")) {
    const Json& p = j->at("params");
    auto fam = family_from_string(p.value("family", ""));
    if (!fam) throw Error("module params have an unknown family");
    out.params = params_from_json(p, *fam, spec);
  }
  return out;
}

Json params_to_json(const SimpleParams& p) {
  Json j{{"family", to_string(p.family)}};
  auto chars = [](const std::vector<Cyclotomic>& vals) {
    Json arr = Json::array();
    for (const auto& v : vals) arr.push_back(literal_to_json(v));
    return arr;
  };
  switch (p.family) {
    case Family::TorsionChar:
    case Family::DiffVbar:
      j["rho"] = chars(p.rho.values());
      break;
    case Family::DiffVx:
    case Family::DiffVy:
      j["rho"] = chars(p.rho.values());
      j["lambda"] = literal_to_json(p.lambda);
      j["mu"] = literal_to_json(p.mu);
      break;
    case Family::SkewVxy:
      j["alpha_y"] = literal_to_json(p.alpha_y);
      j["t"] = p.t;
      [[fallthrough]];
    case Family::SkewVx:
    case Family::SkewVy:
      j[p.family == Family::SkewVxy ? "alpha_x" : "alpha"] = literal_to_json(p.alpha);
      j["lambda_N"] = chars(p.lambda_n.values());
      j["N_basis"] = p.lambda_n.subgroup().basis();
      break;
  }
  return j;
}

SimpleParams params_from_json(const Json& j, Family family, const AlgebraSpec& spec) {
  if (!j.is_object()) throw Error("params must be a JSON object");
  int n = spec.conductor();
  auto need = [&](const std::string& key) -> const Json& {
    if (!j.contains(key)) throw Error("params for " + to_string(family) + " need \"" + key + "\"");
    return j.at(key);
  };
  auto lit = [&](const std::string& key) { return parse_literal(need(key), n); };
  auto values = [&](const Json& arr) {
    if (!arr.is_array()) throw Error("character values must be an array of literals");
    std::vector<Cyclotomic> out;
    for (const auto& e : arr) out.push_back(parse_literal(e, n));
    return out;
  };
  SimpleParams p;
  p.family = family;
  switch (family) {
    case Family::TorsionChar:
    case Family::DiffVbar:
      p.rho = GroupCharacter(spec.group(), values(need("rho")));
      break;
    case Family::DiffVx:
    case Family::DiffVy:
      p.rho = GroupCharacter(spec.group(), values(need("rho")));
      p.lambda = lit("lambda");
      p.mu = lit("mu");
      break;
    case Family::SkewVx:
    case Family::SkewVy:
    case Family::SkewVxy: {
      if (family == Family::SkewVxy) {
        p.alpha = j.contains("alpha_x") ? lit("alpha_x") : lit("alpha");
        p.alpha_y = lit("alpha_y");
        p.t = need("t").get<long>();
      } else {
        p.alpha = lit("alpha");
      }
      Subgroup sub = skew_kernel(spec, family);
      if (j.contains("lambda_N")) {
        p.lambda_n = SubgroupCharacter(sub, values(j.at("lambda_N")));
      } else if (j.contains("lambda_G")) {
        p.lambda_n = GroupCharacter(spec.group(), values(j.at("lambda_G"))).restrict(sub);
      } else {
        throw Error("params for " + to_string(family) + " need \"lambda_N\" or \"lambda_G\"");
      }
      break;
    }
  }
  return p;
}

Json report_to_json(const std::string& command, const Report& report, std::optional<std::uint64_t> seed) {
  Json facts = Json::array();
  for (const auto& f : report.facts) facts.push_back(Json{{"name", f.name}, {"ok", f.ok}, {"detail", f.detail}});
  Json j{{"command", command},
         {"status", report.ok() ? "ok" : "fail"},
         {"facts", facts},
         {"witnesses", report.witnesses}};
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

}  // namespace orehopf
