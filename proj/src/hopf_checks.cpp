#include "orehopf/hopf_checks.hpp"

#include <numeric>

#include "orehopf/qnumbers.hpp"

namespace orehopf {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Tensor as_tensor(const HopfElem& a) {
  Tensor t;
  for (const auto& [m, c] : a.terms()) t.add({m}, c);
  return t;
}

// Collects failures of one named law across many samples.
struct Law {
  std::string name;
  long failures = 0;
  long checked = 0;
};

void record(Report& report, std::vector<Law>& laws, std::size_t idx, bool ok, const std::string& what) {
  ++laws[idx].checked;
  if (!ok) {
    ++laws[idx].failures;
    if (report.witnesses.size() < 20) report.witness(laws[idx].name + ": " + what);
  }
}

}  // namespace

HopfElem random_element(const Algebra& alg, std::mt19937_64& rng, const SampleBounds& bounds) {
  const AbelianGroup& g = alg.group();
  HopfElem a;
  int terms = static_cast<int>(uniform(rng, 1, bounds.max_terms));
  for (int t = 0; t < terms; ++t) {
    IntVec e(g.rank());
    for (std::size_t k = 0; k < e.size(); ++k) {
      long n = g.generator_order(k);
      e[k] = n == 0 ? uniform(rng, -bounds.max_group_exp, bounds.max_group_exp) : uniform(rng, 0, n - 1);
    }
    long i = uniform(rng, 0, bounds.max_degree);
    long j = uniform(rng, 0, bounds.max_degree);
    long s = uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1);
    Cyclotomic coef = Cyclotomic(s) * root_of_unity(alg.conductor(), uniform(rng, 0, alg.conductor() - 1));
    a.add(Monomial{g.element(e), i, j}, coef);
  }
  return a;
}

Report hopf_axioms_on(const Algebra& alg, const std::vector<HopfElem>& samples) {
  Report report;
  std::vector<Law> laws = {{"coassociativity"},       {"left counit"},           {"right counit"},
                           {"left antipode"},         {"right antipode"},        {"coproduct multiplicative"},
                           {"counit multiplicative"}, {"antipode anti-multiplicative"}};
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const HopfElem& a = samples[s];
    Tensor d = alg.comultiply(a);
    record(report, laws, 0, alg.delta_at(d, 0) == alg.delta_at(d, 1), to_string(a));
    record(report, laws, 1, alg.counit_at(d, 0) == as_tensor(a), to_string(a));
    record(report, laws, 2, alg.counit_at(d, 1) == as_tensor(a), to_string(a));
    HopfElem unit = alg.scalar(alg.counit(a));
    record(report, laws, 3, alg.multiply_out(alg.antipode_at(d, 0)) == unit, to_string(a));
    record(report, laws, 4, alg.multiply_out(alg.antipode_at(d, 1)) == unit, to_string(a));
    if (s + 1 < samples.size()) {
      const HopfElem& b = samples[s + 1];
      HopfElem ab = alg.mul(a, b);
      std::string pair = "(" + to_string(a) + ") * (" + to_string(b) + ")";
      record(report, laws, 5, alg.comultiply(ab) == alg.tensor_mul(d, alg.comultiply(b)), pair);
      record(report, laws, 6, alg.counit(ab) == alg.counit(a) * alg.counit(b), pair);
      record(report, laws, 7, alg.antipode(ab) == alg.mul(alg.antipode(b), alg.antipode(a)), pair);
    }
  }
  for (const auto& law : laws) {
    report.add(law.name, law.failures == 0,
               std::to_string(law.checked - law.failures) + "/" + std::to_string(law.checked) + " passed");
  }
  return report;
}

Report hopf_axiom_check(const Algebra& alg, int sample_count, long max_degree, std::uint64_t seed) {
  if (sample_count < 1) throw Error("sample count must be at least 1");
  std::mt19937_64 rng(seed);
  SampleBounds bounds;
  bounds.max_degree = max_degree;
  std::vector<HopfElem> samples;
  // The generators always come first so every run exercises them.
  samples.push_back(alg.one());
  samples.push_back(alg.x());
  samples.push_back(alg.y());
  for (std::size_t k = 0; k < alg.group().rank(); ++k) samples.push_back(alg.group_elem(alg.group().generator(k)));
  for (int s = 0; s < sample_count; ++s) samples.push_back(random_element(alg, rng, bounds));
  return hopf_axioms_on(alg, samples);
}

long antipode_order(const Algebra& alg) {
  std::vector<HopfElem> gens = {alg.x(), alg.y()};
  for (std::size_t k = 0; k < alg.group().rank(); ++k) gens.push_back(alg.group_elem(alg.group().generator(k)));
  long n = alg.conductor();
  long bound = 2 * std::lcm(2L, n) + 2;
  std::vector<HopfElem> current = gens;
  for (long m = 1; m <= bound; ++m) {
    for (auto& h : current) h = alg.antipode(h);
    if (current == gens) return m;
  }
  throw Error("antipode order exceeds the bound " + std::to_string(bound));
}

Report change_of_variables_check(const Algebra& alg, long bound) {
  Report report;
  const AlgebraSpec& spec = alg.spec();
  HopfElem x = alg.x(), z = alg.z();
  GroupElement cinv = alg.group().inv(spec.c());
  HopfElem e = alg.from_group_alg(spec.e_norm());

  HopfElem comm = alg.commutator(z, x);
  report.add("zx - xz = e", comm == e, "zx - xz = " + to_string(comm));
  if (comm != e) report.witness("zx - xz = " + to_string(comm));

  Tensor expected = tensor_product({z, alg.group_elem(cinv)}) + tensor_product({alg.one(), z});
  Tensor dz = alg.comultiply(z);
  report.add("z is (c^-1,1)-primitive", dz == expected);
  if (dz != expected) report.witness("Delta(z) = " + to_string(dz));

  if (spec.mode() != Mode::DifferentialOperator) return report;

  const Cyclotomic& q = spec.q();
  Cyclotomic qinv = q.inverse();
  HopfElem b = alg.group_elem(spec.b()), ci = alg.group_elem(cinv);
  bool eq3 = true, eq4 = true, windid = true;
  HopfElem xn = alg.one(), zn = alg.one();
  for (long n = 1; n <= bound; ++n) {
    HopfElem xprev = xn, zprev = zn;
    xn = alg.mul(xn, x);
    zn = alg.mul(zn, z);
    HopfElem lhs3 = alg.mul(z, xn);
    HopfElem rhs3 = alg.mul(xn, z) + alg.mul(q_int(n, q) * ci - q_int(n, qinv) * b, xprev);
    if (lhs3 != rhs3) {
      eq3 = false;
      report.witness("z x^" + std::to_string(n) + " mismatch: " + to_string(lhs3 - rhs3));
    }
    HopfElem lhs4 = alg.mul(x, zn);
    HopfElem rhs4 = alg.mul(zn, x) + alg.mul(q_int(n, q) * b - q_int(n, qinv) * ci, zprev);
    if (lhs4 != rhs4) {
      eq4 = false;
      report.witness("x z^" + std::to_string(n) + " mismatch: " + to_string(lhs4 - rhs4));
    }
    HopfElem lhsw = alg.commutator(z, xn);
    HopfElem rhsw = alg.mul(xprev, alg.from_group_alg(alg.wind(spec.e_norm(), n)));
    if (lhsw != rhsw) {
      windid = false;
      report.witness("z x^" + std::to_string(n) + " - x^" + std::to_string(n) + " z mismatch: " + to_string(lhsw - rhsw));
    }
  }
  std::string range = "1 <= n <= " + std::to_string(bound);
  report.add("z x^n = x^n z + ([n]_q c^-1 - [n]_{q^-1} b) x^{n-1}", eq3, range);
  report.add("x z^n = z^n x + ([n]_q b - [n]_{q^-1} c^-1) z^{n-1}", eq4, range);
  report.add("z x^n - x^n z = x^{n-1} [e]_n", windid, range);
  return report;
}

CentralityResult centrality_check(const Algebra& alg, long n) {
  const AlgebraSpec& spec = alg.spec();
  if (n < 1) throw Error("hypotheses of Corollary not met");
  if (spec.mode() == Mode::DifferentialOperator) {
    if (spec.q().is_one()) throw Error("hypotheses of Corollary not met");
  } else if (!spec.chi().pow(n).is_trivial() || !spec.eta().pow(n).is_trivial()) {
    throw Error("hypotheses of Corollary not met");
  }
  CentralityResult result;
  HopfElem xn = alg.pow(alg.x(), n), zn = alg.pow(alg.z(), n);
  std::vector<std::pair<std::string, HopfElem>> others = {{"x", alg.x()}, {"z", alg.z()}};
  for (std::size_t k = 0; k < alg.group().rank(); ++k) {
    others.emplace_back("g" + std::to_string(k + 1), alg.group_elem(alg.group().generator(k)));
  }
  bool all = true;
  for (const auto& [label, power] : {std::pair{std::string("x"), xn}, std::pair{std::string("z"), zn}}) {
    for (const auto& [name, h] : others) {
      HopfElem comm = alg.commutator(power, h);
      std::string fact = label + "^" + std::to_string(n) + " commutes with " + name;
      result.report.add(fact, comm.is_zero());
      if (!comm.is_zero()) {
        all = false;
        result.report.witness("[" + label + "^" + std::to_string(n) + ", " + name + "] = " + to_string(comm));
      }
    }
  }
  result.central = all;
  return result;
}

}  // namespace orehopf
