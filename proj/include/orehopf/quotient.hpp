#pragma once

#include <memory>

#include "orehopf/hopf_algebra.hpp"
#include "orehopf/report.hpp"

namespace orehopf {

// H / <x^n - lambda1 (1 - b^n), y^m - lambda2 (1 - c^m)> with n, m the orders
// of chi(b) and eta(c).
class QuotientSpec {
 public:
  QuotientSpec(std::shared_ptr<const Algebra> base, Cyclotomic lambda1, Cyclotomic lambda2);

  const Algebra& base() const { return *base_; }
  std::shared_ptr<const Algebra> base_ptr() const { return base_; }
  const Cyclotomic& lambda1() const { return lambda1_; }
  const Cyclotomic& lambda2() const { return lambda2_; }
  long n() const { return n_; }
  long m() const { return m_; }

  // x^n - lambda1 (1 - b^n) and y^m - lambda2 (1 - c^m) as elements of H.
  HopfElem x_relation() const;
  HopfElem y_relation() const;

 private:
  std::shared_ptr<const Algebra> base_;
  Cyclotomic lambda1_, lambda2_;
  long n_ = 0, m_ = 0;
};

// Reduced form: every term has i < n and j < m.
HopfElem q_reduce(const HopfElem& a, const QuotientSpec& qs);
HopfElem q_multiply(const HopfElem& a, const HopfElem& b, const QuotientSpec& qs);
bool is_reduced(const HopfElem& a, const QuotientSpec& qs);

// (-1)^n p^{n(n+1)/2}
Cyclotomic antipode_sign(const Cyclotomic& p, long n);

Report hopf_ideal_check(const QuotientSpec& qs);

struct QuotientBasis {
  long n = 0, m = 0;
  long rank = 0;  // over K[G]
  std::vector<std::pair<long, long>> monomials;  // (i, j)
  std::optional<long> dimension;  // |G| n m when G is finite
  bool group_algebra_fixed = true;
};

QuotientBasis quotient_basis(const QuotientSpec& qs, int samples = 20, std::uint64_t seed = 1);

}  // namespace orehopf
