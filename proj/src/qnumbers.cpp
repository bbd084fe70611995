#include "orehopf/qnumbers.hpp"

#include <vector>

namespace orehopf {

Cyclotomic q_int(long i, const Cyclotomic& q) {
  if (i < 0) throw Error("out of range");
  Cyclotomic sum = Cyclotomic::zero(q.conductor());
  Cyclotomic power = Cyclotomic::one(q.conductor());
  for (long k = 0; k < i; ++k) {
    sum += power;
    power *= q;
  }
  return sum;
}

Cyclotomic q_factorial(long k, const Cyclotomic& q) {
  Cyclotomic prod = Cyclotomic::one(q.conductor());
  for (long i = 1; i <= k; ++i) prod *= q_int(i, q);
  return prod;
}

Cyclotomic q_binomial(long n, long k, const Cyclotomic& q) {
  if (n < 0 || k < 0 || k > n) throw Error("out of range");
  // row[j] holds binom(r, j); updated in place from the right.
  std::vector<Cyclotomic> row(static_cast<std::size_t>(k) + 1, Cyclotomic::zero(q.conductor()));
  row[0] = Cyclotomic::one(q.conductor());
  std::vector<Cyclotomic> qpow(static_cast<std::size_t>(k) + 1, Cyclotomic::one(q.conductor()));
  for (long j = 1; j <= k; ++j) qpow[j] = qpow[j - 1] * q;
  for (long r = 1; r <= n; ++r) {
    for (long j = std::min(r, k); j >= 1; --j) row[j] = row[j - 1] + qpow[j] * row[j];
  }
  return row[k];
}

Cyclotomic q_binomial_ratio(long n, long k, const Cyclotomic& q) {
  if (n < 0 || k < 0 || k > n) throw Error("out of range");
  Cyclotomic denom = q_factorial(k, q) * q_factorial(n - k, q);
  if (denom.is_zero()) throw Error("division by zero");
  return q_factorial(n, q) / denom;
}

}  // namespace orehopf
