// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "orehopf/catalog.hpp"
#include "orehopf/hopf_checks.hpp"
#include "orehopf/qnumbers.hpp"
#include "orehopf/quotient.hpp"

using namespace orehopf;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  int failures = 0;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures++ < 5) detail << " [" << what << "]";
  }
};

long order_of(const Cyclotomic& z, long bound) {
  Cyclotomic p = z;
  for (long k = 1; k <= bound; ++k, p *= z)
    if (p.is_one()) return k;
  return 0;
}

std::string family_name(const SimpleParams& p) { return to_string(p.family); }

// C1
void hopf_axioms(Outcome& out) {
  auto start = std::chrono::steady_clock::now();
  CatalogEntry u1 = takeuchi_u1();
  std::vector<std::pair<std::string, std::shared_ptr<const Algebra>>> algebras = {
      {"U(1)", u1.algebra},
      {"skew n=4", std::make_shared<Algebra>(fixtures::skew_spec(4))},
      {"diff n=3", std::make_shared<Algebra>(fixtures::diff_spec(3))}};
  for (const auto& [name, alg] : algebras) {
    Report r = hopf_axiom_check(*alg, 100, 3, 7);
    out.require(r.ok() && r.witnesses.empty(), name + ": " + std::to_string(r.witnesses.size()) + " counterexamples");
    out.require(r.facts.size() >= 5, name + ": too few facts");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 60, "runtime over 60 s");
  out.detail << " 3 specs, 100 samples each, " << secs << " s";
}

// C2
void normal_form(Outcome& out) {
  SampleBounds bounds;
  std::vector<std::pair<std::string, AlgebraSpec>> specs = {{"skew", fixtures::skew_spec(4)},
                                                          {"diff", fixtures::diff_spec(3)}};
  for (auto& [name, spec] : specs) {
    Algebra alg(spec);
    oracle::Rewriter rw(alg.spec());
    std::mt19937_64 rng(name == "skew" ? 21 : 22);
    int agree = 0;
    for (int k = 0; k < 200; ++k) {
      HopfElem a = random_element(alg, rng, bounds), b = random_element(alg, rng, bounds);
      if (alg.mul(a, b) == rw.multiply(a, b)) ++agree;
    }
    out.require(agree == 200, name + ": oracle agreement " + std::to_string(agree) + "/200");
    int assoc = 0;
    for (int k = 0; k < 100; ++k) {
      HopfElem a = random_element(alg, rng, bounds), b = random_element(alg, rng, bounds),
               c = random_element(alg, rng, bounds);
      if (alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c))) ++assoc;
    }
    out.require(assoc == 100, name + ": associativity " + std::to_string(assoc) + "/100");
  }
  out.detail << " 200 pairs and 100 triples per mode";
}

// C3
void commutation(Outcome& out) {
  for (int n : {2, 3, 4, 6}) {
    AlgebraSpec spec = fixtures::diff_spec(n);
    Algebra alg(spec);
    Report r = change_of_variables_check(alg, 8);
    out.require(r.ok(), "n=" + std::to_string(n) + ": library check");

    oracle::Rewriter rw(alg.spec());
    const Cyclotomic& q = spec.q();
    Cyclotomic qi = oracle::euclid_inverse(q);
    HopfElem b = alg.group_elem(spec.b()), ci = alg.group_elem(spec.group().inv(spec.c()));
    HopfElem x = alg.x(), z = alg.z();
    HopfElem xprev = alg.one(), zprev = alg.one();
    for (long i = 1; i <= 8; ++i) {
      HopfElem xi = rw.multiply(xprev, x), zi = rw.multiply(zprev, z);
      HopfElem lhs3 = rw.multiply(z, xi), rhs3 = rw.multiply(xi, z) + rw.multiply(oracle::q_int(i, q) * ci - oracle::q_int(i, qi) * b, xprev);
      out.require(lhs3 == rhs3, "z x^" + std::to_string(i) + " at n=" + std::to_string(n));
      HopfElem lhs4 = rw.multiply(x, zi), rhs4 = rw.multiply(zi, x) + rw.multiply(oracle::q_int(i, q) * b - oracle::q_int(i, qi) * ci, zprev);
      out.require(lhs4 == rhs4, "x z^" + std::to_string(i) + " at n=" + std::to_string(n));
      HopfElem wind = alg.from_group_alg(oracle::direct_wind(spec.chi(), spec.e_norm(), i));
      out.require(lhs3 - rw.multiply(xi, z) == rw.multiply(xprev, wind), "wind identity i=" + std::to_string(i));
      xprev = xi;
      zprev = zi;
    }
    GroupAlgElem bg = GroupAlgElem::of(spec.b()), cg = GroupAlgElem::of(spec.group().inv(spec.c()));
    for (long i = 0; i <= 2 * n; ++i) {
      GroupAlgElem closed = oracle::q_int(i, qi) * cg - oracle::q_int(i, q) * bg;
      GroupAlgElem direct = oracle::direct_wind(spec.chi(), spec.e_norm(), i);
      out.require(closed == direct && alg.wind(spec.e_norm(), i) == direct, "wind closed form i=" + std::to_string(i));
    }
  }
  out.detail << " n in {2,3,4,6}, exponents 1..8, wind up to 2n";
}

// C4
void quotients(Outcome& out) {
  int checked = 0;
  for (int n : {2, 3, 4}) {
    for (int m : {2, 3, 4}) {
      for (bool twisted : {false, true}) {
        if (twisted && std::gcd(n, m) == 1) continue;
        AlgebraSpec spec = fixtures::quotient_spec(n, m, twisted);
        auto alg = std::make_shared<Algebra>(spec);
        const AbelianGroup& G = spec.group();
        std::mt19937_64 rng(100 * n + 10 * m + twisted);
        for (int k = 0; k < 5; ++k) {
          Cyclotomic l1 = k == 0 ? Cyclotomic(0) : fixtures::random_nonzero(rng, spec.conductor());
          Cyclotomic l2 = fixtures::random_nonzero(rng, spec.conductor());
          QuotientSpec qs(alg, l1, l2);
          std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + (twisted ? ",twisted" : "") + ")";
          out.require(qs.n() == n && qs.m() == m, tag + " orders");
          out.require(hopf_ideal_check(qs).ok(), tag + " hopf_ideal_check");
          // Closed forms: r is (g^k, 1)-primitive and S(r) = -g^-k r.
          struct Gen {
            HopfElem rel;
            GroupElement g;
            long k;
          };
          for (const Gen& gen : {Gen{qs.x_relation(), spec.b(), n}, Gen{qs.y_relation(), spec.c(), m}}) {
            HopfElem gk = alg->group_elem(G.pow(gen.g, gen.k));
            Tensor expected = tensor_product({gen.rel, alg->one()}) + tensor_product({gk, gen.rel});
            out.require(alg->comultiply(gen.rel) == expected, tag + " closed coproduct");
            HopfElem gki = alg->group_elem(G.pow(gen.g, -gen.k));
            out.require(alg->antipode(gen.rel) == -alg->mul(gki, gen.rel), tag + " closed antipode");
            out.require(alg->counit(gen.rel).is_zero(), tag + " counit");
          }
          ++checked;
        }
      }
    }
  }
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      Cyclotomic p = root_of_unity(n, k), direct(1);
      for (long e = 0; e < static_cast<long>(n) * (n + 1) / 2; ++e) direct *= p;
      if (n % 2) direct = -direct;
      out.require(direct == Cyclotomic(-1) && antipode_sign(p, n) == direct, "sign identity n=" + std::to_string(n));
    }
  }
  out.detail << " " << checked << " quotients, sign identity for primitive roots of order <= 12";
}

// C5
void antipode_orders(Outcome& out) {
  std::vector<AlgebraSpec> specs = {fixtures::u1_spec(),
                                    fixtures::skew_spec(2),
                                    fixtures::skew_spec(3),
                                    fixtures::skew_spec(4),
                                    fixtures::diff_spec(3),
                                    fixtures::diff_spec(4),
                                    fixtures::quotient_spec(2, 3, false),
                                    fixtures::quotient_spec(4, 2, true),
                                    fixtures::quotient_spec(3, 4, false),
                                    fixtures::quotient_spec(4, 4, true)};
  for (const auto& spec : specs) {
    long nb = order_of(spec.chi()(spec.b()), 4 * spec.conductor());
    long mc = order_of(spec.eta()(spec.c()), 4 * spec.conductor());
    long expected = 2 * std::lcm(nb, mc);
    long got = antipode_order(Algebra(spec));
    out.require(got == expected, "order " + std::to_string(got) + " vs " + std::to_string(expected));
    out.detail << " " << got;
  }
}

// The instance sweep shared by C6, C7, C12 and C13.
struct Instance {
  AlgebraSpec spec;
  std::optional<SimpleParams> params;  // absent for induced modules
  ModuleRep module;
  std::string label;
};

std::vector<Instance> sweep_instances() {
  std::vector<Instance> out;
  for (int n : {2, 3, 4}) {
    for (bool skew : {true, false}) {
      AlgebraSpec spec = skew ? fixtures::skew_spec(n) : fixtures::diff_spec(n);
      std::mt19937_64 rng(1000 + 10 * n + skew);
      for (Family f : fixtures::families_for(spec)) {
        for (int draw = 0; draw < 20; ++draw) {
          SimpleParams p = fixtures::random_params(f, spec, rng);
          long shifts = (f == Family::TorsionChar || f == Family::DiffVbar) ? 1 : n;
          for (long k = 0; k < shifts; ++k) {
            SimpleParams s = fixtures::shifted(p, k, spec);
            out.push_back({spec, s, build(s, spec), to_string(f) + " n=" + std::to_string(n)});
          }
        }
      }
      if (skew) {
        Subgroup kernel = char_kernel(spec.group(), std::vector<Character>{spec.chi(), spec.eta()});
        for (int draw = 0; draw < 20; ++draw) {
          Cyclotomic kx = fixtures::random_nonzero(rng, n), ky = fixtures::random_nonzero(rng, n);
          SubgroupCharacter lambda = fixtures::random_subgroup_character(rng, kernel, n);
          out.push_back({spec, std::nullopt, build_induced_skew(kx, ky, lambda, spec), "induced n=" + std::to_string(n)});
        }
      }
    }
  }
  return out;
}

// C6
void relations(Outcome& out, const std::vector<Instance>& all) {
  for (const auto& inst : all) out.require(rep_check(inst.module, inst.spec).ok(), inst.label);
  out.detail << " " << all.size() << " modules";
}

// C7
void burnside(Outcome& out, const std::vector<Instance>& all) {
  int controls = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& inst = all[k];
    BurnsideCertificate c = is_simple_burnside(inst.module);
    out.require(c.simple && c.span_dimension == inst.module.dim * inst.module.dim, inst.label);
    if (k % 7 == 0) {
      BurnsideCertificate twice = is_simple_burnside(direct_sum(inst.module, inst.module));
      out.require(!twice.simple, inst.label + " V+V control");
      ++controls;
    }
  }
  out.detail << " " << all.size() << " modules, " << controls << " V+V controls";
}

// C8
void iso_criteria(Outcome& out) {
  int compared = 0, positives = 0;
  auto compare = [&](const SimpleParams& a, const SimpleParams& b, const AlgebraSpec& spec, const std::string& tag) {
    IsoResult r = are_isomorphic(build(a, spec), build(b, spec));
    bool crit = iso_criterion(a, b, spec);
    out.require(r.determinate, tag + " indeterminate");
    out.require(crit == r.isomorphic, tag + (crit ? " criterion yes, oracle no" : " criterion no, oracle yes"));
    ++compared;
    positives += r.isomorphic;
  };
  for (int n : {2, 3, 4}) {
    for (bool skew : {true, false}) {
      AlgebraSpec spec = skew ? fixtures::skew_spec(n) : fixtures::diff_spec(n);
      std::mt19937_64 rng(2000 + 10 * n + skew);
      Cyclotomic qc = spec.chi()(spec.c());
      for (Family f : fixtures::families_for(spec)) {
        std::string tag = to_string(f) + " n=" + std::to_string(n);
        SimpleParams p = fixtures::random_params(f, spec, rng);
        if (f == Family::SkewVxy) {
          for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
              SimpleParams s = p;
              s.alpha = qc.pow(i) * p.alpha;
              s.alpha_y = qc.pow(j) * p.alpha_y;
              compare(s, p, spec, tag + " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
          }
        } else {
          for (long k = 0; k < n; ++k) {
            compare(fixtures::shifted(p, k, spec), p, spec, tag + " shift " + std::to_string(k));
            compare(fixtures::broken_shift(p, k, spec), p, spec, tag + " broken shift " + std::to_string(k));
          }
        }
        for (int draw = 0; draw < 20; ++draw) {
          SimpleParams a = fixtures::random_params(f, spec, rng), b = fixtures::random_params(f, spec, rng);
          compare(a, b, spec, tag + " random pair");
        }
      }
    }
  }
  out.detail << " " << compared << " comparisons, " << positives << " isomorphic";
}

// C9
void vbar_injectivity(Outcome& out) {
  AlgebraSpec spec = fixtures::diff_spec(4);
  std::vector<GroupCharacter> chars;
  for (int a = 2; chars.size() < 10; ++a) {
    GroupCharacter rho(spec.group(), {Cyclotomic(a), root_of_unity(4, a % 4)});
    if (oracle::least_vanishing_index(spec, rho, 4) == std::optional<long>(4)) chars.push_back(rho);
  }
  int pairs = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    ModuleRep a = build_Vbar_diff(chars[i], spec);
    out.require(a.dim == 4, "dimension");
    for (std::size_t j = i + 1; j < chars.size(); ++j) {
      IsoResult r = are_isomorphic(a, build_Vbar_diff(chars[j], spec));
      out.require(r.determinate && !r.isomorphic, "pair " + std::to_string(i) + "," + std::to_string(j));
      ++pairs;
    }
  }
  out.detail << " " << pairs << " pairs, truncation index 4";
}

// C10
void klein(Outcome& out) {
  AbelianGroup g(0, {2, 2});
  Character chi(g, {0, 1}, 2), eta(g, {1, 0}, 2);
  AlgebraSpec spec = AlgebraSpec::validate(g, chi, eta, g.generator(0), g.generator(1), Cyclotomic(0));
  Subgroup n = char_kernel(g, std::vector<Character>{chi, eta});
  SubgroupCharacter trivial(n, std::vector<Cyclotomic>(n.basis().size(), Cyclotomic(1)));
  ModuleRep m = build_induced_skew(Cyclotomic(1), Cyclotomic(1), trivial, spec);
  BurnsideCertificate c = is_simple_burnside(m);
  out.require(m.dim == 4, "dimension " + std::to_string(m.dim));
  out.require(c.simple && c.span_dimension == 16, "span " + std::to_string(c.span_dimension));
  out.require(rep_check(m, spec).ok(), "relations");
  out.detail << " dimension " << m.dim << ", span " << c.span_dimension;
}

// C11
void vbar_example(Outcome& out) {
  int discrepancies = 0;
  for (int n : {3, 4, 6}) {
    AlgebraSpec spec = fixtures::diff_spec(n);
    std::ostringstream row;
    for (int d = 1; d <= n; ++d) {
      GroupCharacter rho(spec.group(), {spec.q().pow(-d), Cyclotomic(1)});
      auto least = oracle::least_vanishing_index(spec, rho, 2 * n);
      ModuleRep m = build_Vbar_diff(rho, spec);
      out.require(least.has_value() && static_cast<long>(m.dim) == *least,
                  "n=" + std::to_string(n) + " d=" + std::to_string(d) + " dimension vs least vanishing index");
      if (static_cast<long>(m.dim) != d) ++discrepancies;
      row << " " << d << "->" << m.dim;
    }
    std::cout << "  n=" << n << " claimed->computed:" << row.str() << "\n";
  }
  out.detail << " " << discrepancies << " entries differ from the claimed dimension d (flagged, not asserted)";
}

// C12
void classification(Outcome& out, const std::vector<Instance>& all) {
  std::mt19937_64 rng(77);
  int relabeled = 0;
  for (const auto& inst : all) {
    for (bool conj : {false, true}) {
      ModuleRep m = conj ? conjugate(inst.module, random_invertible(inst.module.dim, inst.spec.conductor(), rng))
                         : inst.module;
      SimpleParams got;
      try {
        got = classify_simple(m, inst.spec);
      } catch (const std::exception& e) {
        out.require(false, inst.label + ": " + e.what());
        continue;
      }
      IsoResult r = are_isomorphic(build(got, inst.spec), inst.module);
      out.require(r.determinate && r.isomorphic, inst.label + (conj ? " conjugated" : "") + " classified as " +
                                                     family_name(got) + " not isomorphic");
      if (inst.params) {
        if (got.family == inst.params->family)
          out.require(iso_criterion(got, *inst.params, inst.spec), inst.label + " criterion");
        else
          ++relabeled;
      }
    }
  }
  out.detail << " " << 2 * all.size() << " round trips, " << relabeled << " assigned to another family";
}

// C13
void stratification(Outcome& out, const std::vector<Instance>& all) {
  std::map<Family, TorsionProfile> expected = {
      {Family::TorsionChar, {TorsionKind::Torsion, TorsionKind::Torsion}},
      {Family::SkewVx, {TorsionKind::TorsionFree, TorsionKind::Torsion}},
      {Family::SkewVy, {TorsionKind::Torsion, TorsionKind::TorsionFree}},
      {Family::SkewVxy, {TorsionKind::TorsionFree, TorsionKind::TorsionFree}}};
  std::map<Family, int> counts;
  for (const auto& inst : all) {
    if (inst.spec.mode() != Mode::SkewGroupRing) continue;
    long n = inst.spec.n_chi();
    std::size_t dim = inst.module.dim;
    out.require(dim == 1 || dim == static_cast<std::size_t>(n), inst.label + " dimension " + std::to_string(dim));
    TorsionProfile prof = torsion_profile(inst.module);
    out.require(prof.x != TorsionKind::Mixed && prof.y != TorsionKind::Mixed, inst.label + " mixed");
    Family tag = classify_simple(inst.module, inst.spec).family;
    out.require(expected.count(tag) && expected[tag] == prof, inst.label + " tag " + to_string(tag) + " vs profile");
    out.require((dim == 1) == (tag == Family::TorsionChar), inst.label + " dimension vs tag");
    if (inst.params) out.require(tag == inst.params->family, inst.label + " tag changed");
    ++counts[tag];
  }
  for (const auto& [f, c] : counts) out.detail << " " << to_string(f) << "=" << c;
  out.require(counts.size() == 4, "not all four families produced");
}

}  // namespace

int main() {
  std::vector<Instance> instances;
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "Hopf axiom suite", hopf_axioms},
      {2, "normal form vs rewriting oracle", normal_form},
      {3, "commutation identities", commutation},
      {4, "quotient certification", quotients},
      {5, "antipode order", antipode_orders},
      {6, "module relations", [&](Outcome& o) {
         instances = sweep_instances();
         relations(o, instances);
       }},
      {7, "simplicity certificates", [&](Outcome& o) { burnside(o, instances); }},
      {8, "isomorphism criteria vs oracle", iso_criteria},
      {9, "V-bar injectivity", vbar_injectivity},
      {10, "Klein example", klein},
      {11, "V-bar example audit", vbar_example},
      {12, "classification round trip", [&](Outcome& o) { classification(o, instances); }},
      {13, "stratification", [&](Outcome& o) { stratification(o, instances); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " C" << c.id << " " << c.name << ":" << o.detail.str();
    if (o.failures > 5) std::cout << " (+" << o.failures - 5 << " more)";
    std::cout << " (" << secs << " s)" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
