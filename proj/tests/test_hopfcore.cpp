#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "orehopf/hopf_checks.hpp"
#include "orehopf/qnumbers.hpp"

using namespace orehopf;

namespace {

HopfElem mono(const AbelianGroup& g, IntVec e, long i, long j, const Cyclotomic& c = Cyclotomic(1)) {
  return HopfElem::of(Monomial{g.element(std::move(e)), i, j}, c);
}

// (a1 (x) b1)(a2 (x) b2) = a1 a2 (x) b1 b2, expanded with the rewriting oracle.
Tensor naive_tensor_mul(const oracle::Rewriter& rw, const std::vector<std::pair<HopfElem, HopfElem>>& lhs,
                        const std::vector<std::pair<HopfElem, HopfElem>>& rhs) {
  Tensor out;
  for (const auto& [a1, b1] : lhs)
    for (const auto& [a2, b2] : rhs) out += tensor_product({rw.multiply(a1, a2), rw.multiply(b1, b2)});
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  AlgebraSpec u1 = fixtures::u1_spec();
  CHECK(u1.mode() == Mode::DifferentialOperator);
  CHECK(u1.q() == Cyclotomic(2, Rational(-1)));

  CHECK(fixtures::skew_spec(4).mode() == Mode::SkewGroupRing);

  AbelianGroup z2(2, {});
  CHECK_THROWS_WITH(AlgebraSpec::validate(z2, Character(z2, {1, 1}, 4), Character(z2, {3, 1}, 4), z2.element({1, 0}),
                                          z2.element({0, 1}), Cyclotomic(1)),
                    "β(1−cb) ≠ 0 but η ≠ χ⁻¹");
  CHECK_THROWS_WITH(AlgebraSpec::validate(z2, Character(z2, {1, 1}, 4), Character(z2, {1, 1}, 4), z2.element({1, 0}),
                                          z2.element({0, 1}), Cyclotomic(0)),
                    "constraint η(b) ≠ χ(c)⁻¹");
}

TEST_CASE("U(1): yx = -xy + b^2 - 1") {
  Algebra alg(fixtures::u1_spec());
  const AbelianGroup& g = alg.group();
  HopfElem expected = mono(g, {0}, 1, 1, Cyclotomic(-1)) + mono(g, {2}, 0, 0) - alg.one();
  CHECK(alg.mul(alg.y(), alg.x()) == expected);
}

TEST_CASE("x g = chi(g) g x") {
  AlgebraSpec spec = fixtures::skew_spec(4);
  Algebra alg(spec);
  GroupElement g = spec.group().element({2, -1});
  HopfElem lhs = alg.mul(alg.x(), alg.group_elem(g));
  CHECK(lhs == spec.chi()(g) * alg.mul(alg.group_elem(g), alg.x()));
  CHECK(lhs == mono(spec.group(), {2, -1}, 1, 0, spec.chi()(g)));
}

TEST_CASE("z x^3 in conductor 3 matches the rewriting oracle") {
  AlgebraSpec spec = fixtures::diff_spec(3);
  Algebra alg(spec);
  oracle::Rewriter rw(spec);
  HopfElem x3 = rw.product({alg.x(), alg.x(), alg.x()});
  HopfElem lhs = alg.mul(alg.z(), alg.pow(alg.x(), 3));
  CHECK(lhs == rw.multiply(alg.z(), x3));
  // [3]_{zeta_3} = 0, so z commutes with x^3.
  CHECK(lhs == alg.mul(x3, alg.z()));
}

TEST_CASE("multiply agrees with the rewriting oracle") {
  for (const AlgebraSpec& spec : {fixtures::u1_spec(), fixtures::skew_spec(4), fixtures::diff_spec(3)}) {
    Algebra alg(spec);
    oracle::Rewriter rw(spec);
    std::mt19937_64 rng(21);
    SampleBounds bounds;
    for (int k = 0; k < 25; ++k) {
      HopfElem a = random_element(alg, rng, bounds), b = random_element(alg, rng, bounds);
      CHECK(alg.mul(a, b) == rw.multiply(a, b));
    }
  }
}

TEST_CASE("wind elements") {
  AlgebraSpec u1 = fixtures::u1_spec();
  Algebra a1(u1);
  CHECK(a1.wind(u1.e_norm(), 0).is_zero());
  CHECK(a1.wind(u1.e_norm(), 2).is_zero());  // q = -1

  AlgebraSpec spec = fixtures::diff_spec(4);
  Algebra alg(spec);
  const Cyclotomic& q = spec.q();
  GroupElement ci = spec.group().inv(spec.c());
  for (long i = 0; i <= 8; ++i) {
    GroupAlgElem closed =
        GroupAlgElem::of(ci, oracle::q_int(i, q.inverse())) - GroupAlgElem::of(spec.b(), oracle::q_int(i, q));
    CHECK(alg.wind(spec.e_norm(), i) == closed);
    CHECK(alg.wind(spec.e_norm(), i) == oracle::direct_wind(spec.chi(), spec.e_norm(), i));
  }
}

TEST_CASE("coproduct") {
  Algebra alg(fixtures::u1_spec());
  const AbelianGroup& g = alg.group();
  HopfElem b = alg.group_elem(g.generator(0));
  CHECK(alg.comultiply(b) == tensor_product({b, b}));
  CHECK(alg.comultiply(alg.x()) == tensor_product({alg.x(), alg.one()}) + tensor_product({b, alg.x()}));

  // chi(b) = -1: the cross terms of (x (x) 1 + b (x) x)^2 cancel.
  oracle::Rewriter rw(alg.spec());
  std::vector<std::pair<HopfElem, HopfElem>> dx = {{alg.x(), alg.one()}, {b, alg.x()}};
  Tensor naive = naive_tensor_mul(rw, dx, dx);
  HopfElem x2 = alg.pow(alg.x(), 2);
  CHECK(alg.comultiply(x2) == naive);
  CHECK(naive == tensor_product({x2, alg.one()}) + tensor_product({alg.mul(b, b), x2}));
}

TEST_CASE("counit") {
  Algebra alg(fixtures::skew_spec(3));
  const AbelianGroup& g = alg.group();
  CHECK(alg.counit(alg.group_elem(g.generator(1))).is_one());
  CHECK(alg.counit(alg.x()).is_zero());
  HopfElem a = mono(g, {1, 0}, 0, 0, Cyclotomic(3)) + mono(g, {0, 2}, 1, 0, Cyclotomic(2));
  CHECK(alg.counit(a) == Cyclotomic(3));
}

TEST_CASE("antipode") {
  for (const AlgebraSpec& spec : {fixtures::u1_spec(), fixtures::skew_spec(4), fixtures::diff_spec(3)}) {
    Algebra alg(spec);
    const AbelianGroup& g = alg.group();
    HopfElem gen = alg.group_elem(g.generator(0));
    CHECK(alg.antipode(gen) == alg.group_elem(g.inv(g.generator(0))));
    HopfElem binv = alg.group_elem(g.inv(spec.b()));
    CHECK(alg.antipode(alg.x()) == Cyclotomic(-1) * alg.mul(binv, alg.x()));
    CHECK(alg.antipode(alg.antipode(alg.x())) == spec.chi()(spec.b()) * alg.x());
    CHECK(alg.antipode(alg.antipode(alg.y())) == spec.eta()(spec.c()) * alg.y());
    CHECK(alg.antipode(alg.antipode(gen)) == gen);
  }
}

TEST_CASE("Hopf axioms") {
  Algebra u1(fixtures::u1_spec());
  CHECK(hopf_axioms_on(u1, {u1.one(), u1.x(), u1.y(), u1.group_elem(u1.group().generator(0))}).ok());
  CHECK(hopf_axiom_check(u1, 10, 2, 3).ok());

  // eta != chi^{-1} with beta = 1 and c != b^{-1}: Delta is not multiplicative.
  AbelianGroup z2(2, {});
  AlgebraSpec bad = AlgebraSpec::unchecked(z2, Character(z2, {1, 1}, 4), Character(z2, {3, 1}, 4),
                                           z2.element({1, 0}), z2.element({0, 1}), Cyclotomic(1));
  Algebra alg(bad);
  // Delta respects yx = qxy + beta(1 - cb) itself; the defect is that
  // conjugation by g2 rescales yx - qxy by chi(g2) eta(g2) = -1.
  Tensor lhs = alg.comultiply(alg.mul(alg.y(), alg.x()));
  Tensor rhs = alg.tensor_mul(alg.comultiply(alg.y()), alg.comultiply(alg.x()));
  CHECK(lhs == rhs);
  HopfElem g2 = alg.group_elem(z2.generator(1));
  CHECK(alg.mul(alg.mul(alg.y(), alg.x()), g2) != alg.mul(alg.y(), alg.mul(alg.x(), g2)));
  Report r = hopf_axiom_check(alg, 10, 2, 3);
  CHECK_FALSE(r.ok());
  bool multiplicative = true;
  for (const auto& f : r.facts)
    if (f.name == "coproduct multiplicative") multiplicative = f.ok;
  CHECK_FALSE(multiplicative);
}

TEST_CASE("antipode order") {
  CHECK(antipode_order(Algebra(fixtures::quotient_spec(1, 1, false))) <= 2);
  CHECK(antipode_order(Algebra(fixtures::u1_spec())) == 4);
  // chi(b) = zeta_4, eta(c) = -1.
  CHECK(antipode_order(Algebra(fixtures::quotient_spec(4, 2, false))) == 8);
}

TEST_CASE("change of variables") {
  for (int n : {2, 3, 4}) {
    CHECK(change_of_variables_check(Algebra(fixtures::skew_spec(n))).ok());
    CHECK(change_of_variables_check(Algebra(fixtures::diff_spec(n)), 8).ok());
  }
  // [4]_{zeta_4} = 0: z commutes with x^4.
  Algebra alg(fixtures::diff_spec(4));
  HopfElem x4 = alg.pow(alg.x(), 4);
  CHECK(alg.commutator(alg.z(), x4).is_zero());
}

TEST_CASE("z x^i commutator and wind identity against the rewriting oracle") {
  for (int n : {3, 4, 6}) {
    AlgebraSpec spec = fixtures::diff_spec(n);
    Algebra alg(spec);
    oracle::Rewriter rw(spec);
    const Cyclotomic& q = spec.q();
    HopfElem b = alg.group_elem(spec.b()), ci = alg.group_elem(spec.group().inv(spec.c()));
    HopfElem xprev = alg.one();
    for (long i = 1; i <= 6; ++i) {
      HopfElem xi = rw.multiply(xprev, alg.x());
      HopfElem comm = rw.multiply(alg.z(), xi) - rw.multiply(xi, alg.z());
      HopfElem coeff = oracle::q_int(i, q) * ci - oracle::q_int(i, q.inverse()) * b;
      CHECK(comm == rw.multiply(coeff, xprev));
      HopfElem wind = alg.from_group_alg(oracle::direct_wind(spec.chi(), spec.e_norm(), i));
      CHECK(comm == rw.multiply(xprev, wind));
      xprev = xi;
    }
  }
}

TEST_CASE("centrality") {
  CHECK(centrality_check(Algebra(fixtures::skew_spec(4)), 4).central);
  CHECK(centrality_check(Algebra(fixtures::diff_spec(3)), 3).central);
  CentralityResult r = centrality_check(Algebra(fixtures::diff_spec(4)), 2);
  CHECK_FALSE(r.central);
  CHECK_FALSE(r.report.witnesses.empty());
  CHECK_THROWS_WITH(centrality_check(Algebra(fixtures::skew_spec(4)), 3), "hypotheses of Corollary not met");
}

TEST_CASE("q-binomial expansion of (u + v)^n in the tensor algebra") {
  for (int n : {2, 3, 4}) {
    AlgebraSpec spec = fixtures::quotient_spec(n, 2, false);
    Algebra alg(spec);
    HopfElem b = alg.group_elem(spec.b());
    Tensor u = tensor_product({alg.x(), alg.one()}), v = tensor_product({b, alg.x()});
    Cyclotomic q = spec.chi()(spec.b()).inverse();  // vu = q uv
    CHECK(alg.tensor_mul(v, u) == q * alg.tensor_mul(u, v));
    for (int k = 1; k <= n + 1; ++k) {
      Tensor lhs = u + v;
      for (int r = 1; r < k; ++r) lhs = alg.tensor_mul(lhs, u + v);
      Tensor rhs;
      for (int j = 0; j <= k; ++j) {
        Tensor term = tensor_product({alg.one(), alg.one()});
        for (int r = 0; r < j; ++r) term = alg.tensor_mul(term, u);
        for (int r = 0; r < k - j; ++r) term = alg.tensor_mul(term, v);
        rhs += q_binomial(k, j, q) * term;
      }
      CHECK(lhs == rhs);
    }
  }
}
