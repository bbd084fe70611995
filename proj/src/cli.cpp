#include "orehopf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>

#include "orehopf/catalog.hpp"
#include "orehopf/hopf_checks.hpp"
#include "orehopf/io.hpp"

namespace orehopf {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Outcome {
  Report report;
  Json result = Json::object();
  std::optional<std::uint64_t> seed;
};

// Thrown for arguments that parse but make no sense.
struct UsageError : Error {
  using Error::Error;
};

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const std::optional<std::uint64_t>& config) {
  if (flag) return *flag;
  if (config) return *config;
  if (const char* env = std::getenv("ORE_HOPF_SEED")) {
    std::string s = env;
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw UsageError("ORE_HOPF_SEED must be a nonnegative integer");
    }
    return std::stoull(s);
  }
  return kDefaultSeed;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw Error("malformed JSON in " + what);
  }
}

Json load_json(const std::string& path) { return parse_json_text(read_file(path), path); }

Json element_result(const HopfElem& a) { return Json{{"element", element_to_json(a)}, {"text", to_string(a)}}; }

Outcome cmd_validate(const std::string& path) {
  Config cfg = load_config(path);
  const AlgebraSpec& spec = cfg.spec;
  Outcome o;
  o.report.add("spec valid", true, to_string(spec.mode()));
  o.result = Json{{"spec", spec_to_json(spec)},
                  {"spec_fingerprint", spec_fingerprint(spec)},
                  {"mode", to_string(spec.mode())},
                  {"q", literal_to_json(spec.q())},
                  {"n_chi", spec.n_chi()},
                  {"e_raw", to_string(spec.e_raw())},
                  {"e_norm", to_string(spec.e_norm())}};
  return o;
}

Outcome cmd_nf(const std::string& path, const std::string& expr) {
  Algebra alg(load_config(path).spec);
  Outcome o;
  HopfElem a = parse_element(expr, alg);
  o.report.add("normal form", true);
  o.result = element_result(a);
  return o;
}

Outcome cmd_coproduct(const std::string& path, const std::string& expr) {
  Algebra alg(load_config(path).spec);
  Tensor t = alg.comultiply(parse_element(expr, alg));
  Outcome o;
  o.report.add("coproduct", true);
  o.result = Json{{"tensor", tensor_to_json(t)}, {"text", to_string(t)}};
  return o;
}

Outcome cmd_antipode(const std::string& path, const std::string& expr, long power) {
  if (power < 0) throw UsageError("--power must be nonnegative");
  Algebra alg(load_config(path).spec);
  HopfElem a = parse_element(expr, alg);
  for (long k = 0; k < power; ++k) a = alg.antipode(a);
  Outcome o;
  o.report.add("antipode", true, "power " + std::to_string(power));
  o.result = element_result(a);
  o.result["power"] = power;
  return o;
}

Outcome cmd_hopf_check(const std::string& path, int samples, long max_degree, std::optional<std::uint64_t> seed_flag) {
  if (samples < 1) throw UsageError("--samples must be positive");
  if (max_degree < 0) throw UsageError("--max-degree must be nonnegative");
  Config cfg = load_config(path);
  Outcome o;
  o.seed = resolve_seed(seed_flag, cfg.seed);
  Algebra alg(cfg.spec);
  o.report = hopf_axiom_check(alg, samples, max_degree, *o.seed);
  o.result = Json{{"samples", samples}, {"max_degree", max_degree}, {"counterexamples", o.report.witnesses.size()}};
  return o;
}

Outcome cmd_quotient_check(const std::string& path, std::optional<std::uint64_t> seed_flag) {
  Config cfg = load_config(path);
  if (!cfg.quotient) throw Error("config has no \"quotient\" section");
  Outcome o;
  o.seed = resolve_seed(seed_flag, cfg.seed);
  auto alg = std::make_shared<const Algebra>(cfg.spec);
  QuotientSpec qs(alg, cfg.quotient->first, cfg.quotient->second);
  o.report = hopf_ideal_check(qs);
  QuotientBasis basis = quotient_basis(qs, 20, *o.seed);
  o.report.add("group algebra embeds", basis.group_algebra_fixed);
  Json monomials = Json::array();
  for (const auto& [i, j] : basis.monomials) monomials.push_back(Json::array({i, j}));
  o.result = Json{{"n", basis.n}, {"m", basis.m}, {"rank", basis.rank}, {"monomials", monomials}};
  o.result["dimension"] = basis.dimension ? Json(*basis.dimension) : Json(nullptr);
  return o;
}

Json load_params_arg(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, "--params");
  return load_json(arg);
}

Outcome cmd_module_build(const std::string& family_name, const std::string& path, const std::string& params_arg,
                         const std::string& out_path) {
  auto family = family_from_string(family_name);
  if (!family) throw UsageError("unknown family: " + family_name);
  Config cfg = load_config(path);
  SimpleParams p = params_from_json(load_params_arg(params_arg), *family, cfg.spec);
  ModuleRep m = build(p, cfg.spec);
  Outcome o;
  o.report = rep_check(m, cfg.spec);
  Json mj = module_to_json(m, cfg.spec, p);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write " + out_path);
    f << mj.dump(2) << "\n";
  }
  o.result = Json{{"module", mj}};
  return o;
}

Outcome cmd_module_check(const std::string& path) {
  LoadedModule lm = module_from_json(load_json(path));
  Outcome o;
  o.report = rep_check(lm.module, lm.config.spec);
  TorsionProfile tp = torsion_profile(lm.module);
  o.result = Json{{"dim", lm.module.dim}, {"x", to_string(tp.x)}, {"y", to_string(tp.y)}};
  return o;
}

Outcome cmd_module_simple(const std::string& path) {
  LoadedModule lm = module_from_json(load_json(path));
  BurnsideCertificate cert = is_simple_burnside(lm.module);
  Outcome o;
  o.report.add("simple", cert.simple,
               "span " + std::to_string(cert.span_dimension) + " of " + std::to_string(cert.full_dimension));
  if (!cert.simple) o.report.witness("action span has dimension " + std::to_string(cert.span_dimension));
  o.result = Json{{"simple", cert.simple}, {"span_dimension", cert.span_dimension}, {"full_dimension", cert.full_dimension}};
  return o;
}

Outcome cmd_module_classify(const std::string& path, std::optional<std::uint64_t> seed_flag) {
  LoadedModule lm = module_from_json(load_json(path));
  Outcome o;
  o.seed = resolve_seed(seed_flag, lm.config.seed);
  try {
    SimpleParams p = classify_simple(lm.module, lm.config.spec, *o.seed);
    o.report.add("classified", true, to_string(p.family));
    o.result = Json{{"family", to_string(p.family)}, {"params", params_to_json(p)}};
  } catch (const Error& e) {
    o.report.add("classified", false, e.what());
    o.report.witness(e.what());
  }
  return o;
}

Outcome cmd_module_iso(const std::string& path_a, const std::string& path_b, std::optional<std::uint64_t> seed_flag) {
  LoadedModule a = module_from_json(load_json(path_a));
  LoadedModule b = module_from_json(load_json(path_b));
  if (spec_fingerprint(a.config.spec) != spec_fingerprint(b.config.spec)) {
    throw Error("modules are over different algebras");
  }
  Outcome o;
  o.seed = resolve_seed(seed_flag, a.config.seed);
  ModuleRep mb = b.module;
  if (mb.presentation != a.module.presentation) mb = to_presentation(mb, a.config.spec, a.module.presentation);
  IsoResult iso = are_isomorphic(a.module, mb, *o.seed);
  std::string verdict = !iso.determinate ? "indeterminate" : iso.isomorphic ? "isomorphic" : "not isomorphic";
  o.report.add("isomorphic", iso.isomorphic, iso.detail.empty() ? verdict : verdict + ": " + iso.detail);
  if (!iso.isomorphic) o.report.witness(verdict);
  o.result = Json{{"verdict", verdict}, {"hom_dimension", iso.hom_dimension}};
  if (iso.intertwiner) o.result["intertwiner"] = matrix_to_json(*iso.intertwiner);
  if (a.params && b.params) {
    bool predicted = iso_criterion(*a.params, *b.params, a.config.spec);
    o.result["criterion"] = predicted;
    if (iso.determinate) o.report.add("criterion agrees", predicted == iso.isomorphic);
  }
  return o;
}

Outcome cmd_catalog(const std::string& name, const std::vector<std::string>& params) {
  if (name == "list") {
    Outcome o;
    o.report.add("catalog", true);
    o.result = Json{{"names", catalog_names()}};
    return o;
  }
  CatalogEntry e = catalog_entry(name, params);
  Outcome o;
  o.report = e.facts;
  o.result = Json{{"name", e.name}, {"spec", spec_to_json(e.spec())}, {"spec_fingerprint", spec_fingerprint(e.spec())}};
  if (e.quotient) {
    o.result["quotient"] = Json{{"lambda1", literal_to_json(e.quotient->lambda1())},
                                {"lambda2", literal_to_json(e.quotient->lambda2())},
                                {"n", e.quotient->n()},
                                {"m", e.quotient->m()}};
  }
  if (e.module) o.result["module"] = module_to_json(*e.module, e.spec());
  return o;
}

Json error_report(const std::string& command, const std::string& message) {
  return Json{{"command", command},
              {"status", "error"},
              {"error", message},
              {"facts", Json::array()},
              {"witnesses", Json::array()},
              {"seed", nullptr}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf-Ore extensions of group algebras: exact checks and simple modules", "orehopf"};
  app.require_subcommand(1);

  std::string config, expr, family, params_arg, out_path, file_a, file_b, name;
  std::vector<std::string> catalog_params;
  long power = 1;
  int samples = 100;
  long max_degree = 3;
  std::optional<std::uint64_t> seed;

  auto* validate = app.add_subcommand("validate", "Validate a config");
  validate->add_option("config", config)->required();

  auto* nf = app.add_subcommand("nf", "PBW normal form of an expression");
  nf->add_option("config", config)->required();
  nf->add_option("expr", expr)->required();

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of an expression");
  coproduct->add_option("config", config)->required();
  coproduct->add_option("expr", expr)->required();

  auto* antipode = app.add_subcommand("antipode", "Antipode of an expression");
  antipode->add_option("config", config)->required();
  antipode->add_option("expr", expr)->required();
  antipode->add_option("--power", power, "apply S this many times");

  auto* hopf = app.add_subcommand("hopf-check", "Randomized Hopf axiom check");
  hopf->add_option("config", config)->required();
  hopf->add_option("--samples", samples);
  hopf->add_option("--max-degree", max_degree);
  hopf->add_option("--seed", seed);

  auto* quotient = app.add_subcommand("quotient-check", "Hopf ideal check for the config quotient");
  quotient->add_option("config", config)->required();
  quotient->add_option("--seed", seed);

  auto* module = app.add_subcommand("module", "Finite-dimensional modules");
  module->require_subcommand(1);
  auto* mbuild = module->add_subcommand("build", "Build a simple module");
  mbuild->add_option("family", family)->required();
  mbuild->add_option("config", config)->required();
  mbuild->add_option("--params", params_arg, "inline JSON or a file")->required();
  mbuild->add_option("--out", out_path, "also write the module to this file");
  auto* mcheck = module->add_subcommand("check", "Check the defining relations");
  mcheck->add_option("file", file_a)->required();
  auto* msimple = module->add_subcommand("simple", "Burnside simplicity test");
  msimple->add_option("file", file_a)->required();
  auto* mclassify = module->add_subcommand("classify", "Identify family and parameters");
  mclassify->add_option("file", file_a)->required();
  mclassify->add_option("--seed", seed);
  auto* miso = module->add_subcommand("iso", "Decide isomorphism");
  miso->add_option("fileA", file_a)->required();
  miso->add_option("fileB", file_b)->required();
  miso->add_option("--seed", seed);

  auto* catalog = app.add_subcommand("catalog", "Build a named example (or 'list')");
  catalog->add_option("name", name)->required();
  catalog->add_option("params", catalog_params);

  std::string command = args.empty() ? "" : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << error_report(command, e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    Outcome o;
    if (*validate) {
      o = cmd_validate(config);
    } else if (*nf) {
      o = cmd_nf(config, expr);
    } else if (*coproduct) {
      o = cmd_coproduct(config, expr);
    } else if (*antipode) {
      o = cmd_antipode(config, expr, power);
    } else if (*hopf) {
      o = cmd_hopf_check(config, samples, max_degree, seed);
    } else if (*quotient) {
      o = cmd_quotient_check(config, seed);
    } else if (*mbuild) {
      command = "module build";
      o = cmd_module_build(family, config, params_arg, out_path);
    } else if (*mcheck) {
      command = "module check";
      o = cmd_module_check(file_a);
    } else if (*msimple) {
      command = "module simple";
      o = cmd_module_simple(file_a);
    } else if (*mclassify) {
      command = "module classify";
      o = cmd_module_classify(file_a, seed);
    } else if (*miso) {
      command = "module iso";
      o = cmd_module_iso(file_a, file_b, seed);
    } else {
      o = cmd_catalog(name, catalog_params);
    }
    Json report = report_to_json(command, o.report, o.seed);
    report["result"] = o.result;
    out << report.dump(2) << "\n";
    return o.report.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    out << error_report(command, e.what()).dump(2) << "\n";
    return 2;
  }
}

}  // namespace orehopf
