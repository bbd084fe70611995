#include "orehopf/catalog.hpp"

#include <numeric>

#include "orehopf/hopf_checks.hpp"

namespace orehopf {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

void expect(Report& r, const std::string& name, bool ok, const std::string& detail = {}) {
  r.add(name, ok, detail);
  if (!ok) r.witness(name + (detail.empty() ? "" : ": " + detail));
}

CatalogEntry start(std::string name, AlgebraSpec spec) {
  CatalogEntry e;
  e.name = std::move(name);
  e.algebra = std::make_shared<const Algebra>(std::move(spec));
  return e;
}

// Delta(u) = u (x) g + 1 (x) u
bool is_primitive_like(const Algebra& a, const HopfElem& u, const GroupElement& g) {
  return a.comultiply(u) == tensor_product({u, a.group_elem(g)}) + tensor_product({a.one(), u});
}

void add_ideal_facts(CatalogEntry& e) {
  e.facts.merge(hopf_ideal_check(*e.quotient), "hopf ideal: ");
  QuotientBasis qb = quotient_basis(*e.quotient);
  expect(e.facts, "quotient rank n m over K[G]", qb.rank == qb.n * qb.m,
         std::to_string(qb.rank) + " = " + std::to_string(qb.n) + " * " + std::to_string(qb.m));
  expect(e.facts, "K[G] injects into the quotient", qb.group_algebra_fixed);
}

}  // namespace

CatalogEntry takeuchi_u1() {
  AbelianGroup g(1, {});
  Character chi(g, {1}, 2);
  GroupElement b = g.generator(0);
  CatalogEntry e = start("u1", AlgebraSpec::validate(g, chi, chi, b, b, Cyclotomic(-1)));
  const Algebra& a = *e.algebra;
  expect(e.facts, "mode is differential-operator", e.spec().mode() == Mode::DifferentialOperator);
  expect(e.facts, "q = eta(b) = -1", e.spec().q() == Cyclotomic(-1), e.spec().q().to_string());
  HopfElem yx = a.mul(a.y(), a.x());
  HopfElem expected = -a.mul(a.x(), a.y()) + a.group_elem(g.pow(b, 2)) - a.one();
  expect(e.facts, "yx = -xy + b^2 - 1", yx == expected, to_string(yx));
  Report axioms = hopf_axiom_check(a, 20, 3, 7);
  e.facts.merge(axioms, "hopf axioms: ");
  return e;
}

CatalogEntry generalized_taft(int big_n, long a11, long a12, long a21, long a22) {
  if (big_n < 2) throw Error("generalized Taft data needs N >= 2");
  if (mod(a11 - a12, big_n) == 0) throw Error("generalized Taft data violates a11 != a12 (mod N)");
  if (mod(a21 - a22, big_n) == 0) throw Error("generalized Taft data violates a21 != a22 (mod N)");
  if (mod(a11 * a22 + a12 * a21, big_n) != 0) throw Error("generalized Taft data violates a11 a22 + a12 a21 = 0 (mod N)");
  AbelianGroup g(0, {big_n});
  Character chi(g, {mod(-a22, big_n)}, big_n), eta(g, {mod(-a12, big_n)}, big_n);
  GroupElement gen = g.generator(0);
  GroupElement b = g.pow(gen, -a21), c = g.pow(gen, -a11);
  CatalogEntry e = start("taft", AlgebraSpec::validate(g, chi, eta, b, c, Cyclotomic(0)));
  const Algebra& a = *e.algebra;
  const AlgebraSpec& s = e.spec();
  Cyclotomic q = root_of_unity(big_n, 1);
  expect(e.facts, "eta(b) = chi(c^-1)", s.eta()(b) == s.chi()(g.inv(c)));
  HopfElem yp = a.mul(a.x(), a.group_elem(g.inv(b)));
  HopfElem xp = a.mul(a.group_elem(g.inv(c)), a.y());
  HopfElem lhs = a.mul(xp, yp), rhs = q.pow(a11 * a22) * a.mul(yp, xp);
  expect(e.facts, "x'y' = q^{a11 a22} y'x'", lhs == rhs, to_string(lhs - rhs));
  expect(e.facts, "y' is (g^{a21},1)-primitive", is_primitive_like(a, yp, g.pow(gen, a21)));
  expect(e.facts, "x' is (g^{a11},1)-primitive", is_primitive_like(a, xp, g.pow(gen, a11)));
  expect(e.facts, "counit vanishes on x', y'", a.counit(xp).is_zero() && a.counit(yp).is_zero());
  expect(e.facts, "S(y') = -y' g^{-a21}", a.antipode(yp) == -a.mul(yp, a.group_elem(g.pow(gen, -a21))));
  expect(e.facts, "S(x') = -x' g^{-a11}", a.antipode(xp) == -a.mul(xp, a.group_elem(g.pow(gen, -a11))));
  e.quotient.emplace(e.algebra, Cyclotomic(0), Cyclotomic(0));
  add_ideal_facts(e);
  return e;
}

CatalogEntry wang_wu_tan(int n, long n1, const Cyclotomic& beta1, const Cyclotomic& beta2, const Cyclotomic& beta3) {
  if (n < 2) throw Error("Wang-Wu-Tan data needs n >= 2");
  if (n1 < 1 || n1 > n) throw Error("Wang-Wu-Tan data needs 1 <= n1 <= n");
  if (std::gcd(static_cast<long>(n), n1) % 2 == 0) throw Error("Wang-Wu-Tan data needs gcd(n, n1) odd");
  AbelianGroup g(3, {});
  Character chi(g, {1, mod(-n1, n), mod(-n1, n)}, n);
  GroupElement ga = g.generator(0), ge = g.generator(1), gf = g.generator(2);
  CatalogEntry e = start("wwt", AlgebraSpec::validate(g, chi, chi.inverse(), ge, gf, beta3));
  const Algebra& a = *e.algebra;
  Cyclotomic q = root_of_unity(n, 1);
  HopfElem an1 = a.group_elem(g.pow(ga, n1));
  HopfElem ha = a.group_elem(ga);
  HopfElem X = a.mul(a.x(), an1), Y = a.mul(an1, a.y());
  GroupElement bb = g.mul(ge, g.pow(ga, n1)), cc = g.mul(gf, g.pow(ga, n1));
  HopfElem B = a.group_elem(bb), C = a.group_elem(cc);

  expect(e.facts, "Xa = qaX", a.mul(X, ha) == q * a.mul(ha, X));
  expect(e.facts, "Ya = q^-1 aY", a.mul(Y, ha) == q.inverse() * a.mul(ha, Y));
  HopfElem yx = a.mul(Y, X);
  HopfElem rhs = q.pow(-n1) * a.mul(X, Y) + beta3 * (a.group_elem(g.pow(ga, 2 * n1)) - a.mul(C, B));
  expect(e.facts, "YX = q^{-n1}XY + beta3(a^{2n1} - cb)", yx == rhs, to_string(yx - rhs));
  bool central = true;
  for (const auto& u : {B, C}) {
    for (const auto& v : {a.x(), a.y()}) central = central && a.commutator(u, v).is_zero();
  }
  expect(e.facts, "b = e a^{n1} and c = f a^{n1} are central", central);
  expect(e.facts, "Delta(X) = X (x) a^{n1} + b (x) X",
         a.comultiply(X) == tensor_product({X, an1}) + tensor_product({B, X}));
  expect(e.facts, "Delta(Y) = Y (x) a^{n1} + c (x) Y",
         a.comultiply(Y) == tensor_product({Y, an1}) + tensor_product({C, Y}));

  GroupElement ann = g.pow(ga, static_cast<long>(n) * n1);
  Cyclotomic sx = q.pow(n1 * (static_cast<long>(n) * (n + 1) / 2));
  Cyclotomic sy = q.pow(-n1 * (static_cast<long>(n) * (n - 1) / 2));
  HopfElem xn = a.pow(a.x(), n), yn = a.pow(a.y(), n);
  HopfElem Xn = a.pow(X, n), Yn = a.pow(Y, n);
  expect(e.facts, "X^n = q^{n1 n(n+1)/2} a^{n n1} x^n", Xn == sx * a.mul(a.group_elem(ann), xn),
         "sign " + sx.to_string());
  expect(e.facts, "Y^n = q^{-n1 n(n-1)/2} a^{n n1} y^n", Yn == sy * a.mul(a.group_elem(ann), yn),
         "sign " + sy.to_string());
  expect(e.facts, "q^{n1 n(n+1)/2} = +-1", sx == Cyclotomic(1) || sx == Cyclotomic(-1), sx.to_string());

  // X^n - beta1 (a^{nn1} - b^n) = sx a^{nn1} (x^n - sx^-1 beta1 (1 - e^n)), likewise for Y.
  Cyclotomic lambda1 = sx.inverse() * beta1, lambda2 = sy.inverse() * beta2;
  auto order_e = multiplicative_order(chi(ge));
  if (order_e && *order_e == n) {
    e.quotient.emplace(e.algebra, lambda1, lambda2);
    HopfElem relx = Xn - beta1 * (a.group_elem(ann) - a.group_elem(g.pow(bb, n)));
    HopfElem rely = Yn - beta2 * (a.group_elem(ann) - a.group_elem(g.pow(cc, n)));
    expect(e.facts, "X-relation = sign a^{nn1} (x-relation)",
           relx == sx * a.mul(a.group_elem(ann), e.quotient->x_relation()));
    expect(e.facts, "Y-relation = sign a^{nn1} (y-relation)",
           rely == sy * a.mul(a.group_elem(ann), e.quotient->y_relation()));
    e.facts.merge(hopf_ideal_check(*e.quotient), "hopf ideal: ");
  } else {
    e.facts.add("quotient", true, "skipped: chi(e) has order below n");
  }
  return e;
}

CatalogEntry fantino_garcia_core(long m, long i, const Cyclotomic& lambda) {
  if (m % 4 != 0 || m / 4 < 3) throw Error("Fantino-Garcia data needs m = 4t with t >= 3");
  if (i % 2 == 0 || i < 1 || 2 * i >= m) throw Error("Fantino-Garcia data needs i odd with 1 <= i < m/2");
  AbelianGroup g(0, {m});
  Character chi(g, {1}, 2);
  GroupElement h = g.generator(0);
  CatalogEntry e = start("fantino-garcia", AlgebraSpec::validate(g, chi, chi, g.pow(h, i), g.pow(h, -i), Cyclotomic(0)));
  const Algebra& a = *e.algebra;
  expect(e.facts, "q = chi(h^i) = -1", e.spec().chi()(g.pow(h, i)) == Cyclotomic(-1) && e.spec().q() == Cyclotomic(-1));
  HopfElem u = a.x(), v = a.y(), hh = a.group_elem(h);
  expect(e.facts, "vu = -uv", a.mul(v, u) == -a.mul(u, v));
  expect(e.facts, "uh = -hu", a.mul(u, hh) == -a.mul(hh, u));
  expect(e.facts, "vh = -hv", a.mul(v, hh) == -a.mul(hh, v));
  e.quotient.emplace(e.algebra, lambda, lambda);
  add_ideal_facts(e);
  QuotientBasis qb = quotient_basis(*e.quotient);
  expect(e.facts, "quotient dimension 4m", qb.dimension && *qb.dimension == 4 * m,
         qb.dimension ? std::to_string(*qb.dimension) : "infinite");
  return e;
}

CatalogEntry klein_example() {
  AbelianGroup g(0, {2, 2});
  Character chi(g, {0, 1}, 2), eta(g, {1, 0}, 2);
  CatalogEntry e = start("klein", AlgebraSpec::validate(g, chi, eta, g.generator(0), g.generator(1), Cyclotomic(0)));
  const AlgebraSpec& s = e.spec();
  Subgroup n = char_kernel(g, std::vector<Character>{chi, eta});
  expect(e.facts, "|G/N| = 4 with N trivial", n.index() && *n.index() == 4);
  SubgroupCharacter trivial(n, std::vector<Cyclotomic>(n.basis().size(), Cyclotomic(1)));
  ModuleRep m = build_induced_skew(Cyclotomic(1), Cyclotomic(1), trivial, s);
  expect(e.facts, "module dimension 4", m.dim == 4);
  e.facts.merge(rep_check(m, s), "relations: ");
  BurnsideCertificate cert = is_simple_burnside(m);
  expect(e.facts, "Burnside span 16", cert.simple && cert.span_dimension == 16, std::to_string(cert.span_dimension));
  TorsionProfile p = torsion_profile(m);
  expect(e.facts, "torsion profile (torsion-free, torsion-free)",
         p.x == TorsionKind::TorsionFree && p.y == TorsionKind::TorsionFree);
  e.module = m;
  return e;
}

std::vector<std::string> catalog_names() { return {"u1", "taft", "wwt", "fantino-garcia", "klein"}; }

CatalogEntry catalog_entry(const std::string& name, const std::vector<std::string>& params) {
  auto integer = [&](std::size_t k, long fallback) {
    if (k >= params.size()) return fallback;
    try {
      std::size_t used = 0;
      long v = std::stol(params[k], &used);
      if (used != params[k].size()) throw Error("");
      return v;
    } catch (...) {
      throw Error("catalog parameter " + std::to_string(k + 1) + " is not an integer: " + params[k]);
    }
  };
  auto rational = [&](std::size_t k, long fallback) {
    return k < params.size() ? Cyclotomic(parse_rational(params[k])) : Cyclotomic(fallback);
  };
  auto limit = [&](std::size_t count) {
    if (params.size() > count) throw Error("catalog " + name + " takes at most " + std::to_string(count) + " parameters");
  };
  if (name == "u1") {
    limit(0);
    return takeuchi_u1();
  }
  if (name == "taft") {
    limit(5);
    return generalized_taft(static_cast<int>(integer(0, 4)), integer(1, 1), integer(2, 2), integer(3, 1), integer(4, 2));
  }
  if (name == "wwt") {
    limit(5);
    return wang_wu_tan(static_cast<int>(integer(0, 3)), integer(1, 1), rational(2, 1), rational(3, 2), rational(4, 1));
  }
  if (name == "fantino-garcia") {
    limit(3);
    return fantino_garcia_core(integer(0, 12), integer(1, 1), rational(2, 1));
  }
  if (name == "klein") {
    limit(0);
    return klein_example();
  }
  throw Error("unknown catalog entry: " + name);
}

}  // namespace orehopf
