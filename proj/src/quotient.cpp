#include "orehopf/quotient.hpp"

#include <random>

namespace orehopf {

QuotientSpec::QuotientSpec(std::shared_ptr<const Algebra> base, Cyclotomic lambda1, Cyclotomic lambda2)
    : base_(std::move(base)), lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2)) {
  const AlgebraSpec& s = base_->spec();
  auto n = multiplicative_order(s.chi()(s.b()));
  auto m = multiplicative_order(s.eta()(s.c()));
  if (!n || *n < 2) throw Error("quotient requires chi(b) to be a primitive n-th root of unity with n > 1");
  if (!m || *m < 2) throw Error("quotient requires eta(c) to be a primitive m-th root of unity with m > 1");
  n_ = *n;
  m_ = *m;
  // b^n and c^m must commute with x and y for the reduction to be confluent.
  if (!s.eta()(s.b()).pow(n_).is_one() || !s.chi()(s.c()).pow(m_).is_one()) {
    throw Error("b^n and c^m are not central: need eta(b)^n = 1 and chi(c)^m = 1");
  }
}

HopfElem QuotientSpec::x_relation() const {
  const Algebra& a = *base_;
  GroupElement bn = a.group().pow(a.spec().b(), n_);
  return a.pow(a.x(), n_) - lambda1_ * (a.one() - a.group_elem(bn));
}

HopfElem QuotientSpec::y_relation() const {
  const Algebra& a = *base_;
  GroupElement cm = a.group().pow(a.spec().c(), m_);
  return a.pow(a.y(), m_) - lambda2_ * (a.one() - a.group_elem(cm));
}

bool is_reduced(const HopfElem& a, const QuotientSpec& qs) {
  for (const auto& [mono, c] : a.terms()) {
    if (mono.i >= qs.n() || mono.j >= qs.m()) return false;
  }
  return true;
}

HopfElem q_reduce(const HopfElem& a, const QuotientSpec& qs) {
  const AbelianGroup& group = qs.base().group();
  GroupElement bn = group.pow(qs.base().spec().b(), qs.n());
  GroupElement cm = group.pow(qs.base().spec().c(), qs.m());
  HopfElem current = a;
  while (!is_reduced(current, qs)) {
    HopfElem next;
    for (const auto& [mono, c] : current.terms()) {
      if (mono.i >= qs.n()) {
        Cyclotomic k = c * qs.lambda1();
        next.add(Monomial{mono.g, mono.i - qs.n(), mono.j}, k);
        next.add(Monomial{group.mul(mono.g, bn), mono.i - qs.n(), mono.j}, -k);
      } else if (mono.j >= qs.m()) {
        Cyclotomic k = c * qs.lambda2();
        next.add(Monomial{mono.g, mono.i, mono.j - qs.m()}, k);
        next.add(Monomial{group.mul(mono.g, cm), mono.i, mono.j - qs.m()}, -k);
      } else {
        next.add(mono, c);
      }
    }
    current = std::move(next);
  }
  return current;
}

HopfElem q_multiply(const HopfElem& a, const HopfElem& b, const QuotientSpec& qs) {
  return q_reduce(qs.base().mul(a, b), qs);
}

Cyclotomic antipode_sign(const Cyclotomic& p, long n) {
  Cyclotomic s = p.pow(n * (n + 1) / 2);
  return n % 2 == 0 ? s : -s;
}

Report hopf_ideal_check(const QuotientSpec& qs) {
  const Algebra& a = qs.base();
  const AbelianGroup& group = a.group();
  Report report;
  struct Gen {
    std::string label;
    HopfElem rel;
    GroupElement g;  // b^n or c^m
    Cyclotomic root;
    long order;
  };
  const AlgebraSpec& s = a.spec();
  std::vector<Gen> gens = {
      {"x^n - lambda1(1 - b^n)", qs.x_relation(), group.pow(s.b(), qs.n()), s.chi()(s.b()), qs.n()},
      {"y^m - lambda2(1 - c^m)", qs.y_relation(), group.pow(s.c(), qs.m()), s.eta()(s.c()), qs.m()},
  };
  for (const auto& gen : gens) {
    Tensor delta = a.comultiply(gen.rel);
    Tensor closed = tensor_product({gen.rel, a.one()}) + tensor_product({a.group_elem(gen.g), gen.rel});
    bool ok = delta == closed;
    report.add("coproduct of " + gen.label + " has the closed form", ok);
    if (!ok) report.witness("Delta(" + gen.label + ") - closed form = " + to_string(delta - closed));

    Cyclotomic eps = a.counit(gen.rel);
    report.add("counit of " + gen.label + " vanishes", eps.is_zero(), eps.to_string());

    Cyclotomic sign = antipode_sign(gen.root, gen.order);
    report.add("sign (-1)^n p^{n(n+1)/2} = -1 for " + gen.label, sign == Cyclotomic(-1), sign.to_string());

    HopfElem sx = a.antipode(gen.rel);
    HopfElem closed_s = -a.mul(a.group_elem(group.inv(gen.g)), gen.rel);
    bool sok = sx == closed_s;
    report.add("antipode of " + gen.label + " is -g^-1 times itself", sok);
    if (!sok) report.witness("S(" + gen.label + ") - closed form = " + to_string(sx - closed_s));
  }
  return report;
}

QuotientBasis quotient_basis(const QuotientSpec& qs, int samples, std::uint64_t seed) {
  QuotientBasis basis;
  basis.n = qs.n();
  basis.m = qs.m();
  basis.rank = qs.n() * qs.m();
  for (long i = 0; i < qs.n(); ++i) {
    for (long j = 0; j < qs.m(); ++j) basis.monomials.emplace_back(i, j);
  }
  const AbelianGroup& group = qs.base().group();
  if (auto order = group.order()) basis.dimension = *order * basis.rank;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    HopfElem u;
    for (int t = 0; t < 3; ++t) {
      IntVec e(group.rank());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::uniform_int_distribution<long>(-4, 4)(rng);
      u.add(Monomial{group.element(e), 0, 0}, Cyclotomic(std::uniform_int_distribution<long>(-5, 5)(rng)));
    }
    if (q_reduce(u, qs) != u) basis.group_algebra_fixed = false;
  }
  return basis;
}

}  // namespace orehopf
