#pragma once

#include "orehopf/cyclotomic.hpp"

namespace orehopf {

// [i]_q = 1 + q + ... + q^{i-1}.
Cyclotomic q_int(long i, const Cyclotomic& q);

// (k!)_q = [1]_q [2]_q ... [k]_q.
Cyclotomic q_factorial(long k, const Cyclotomic& q);

// Gauss binomial via the Pascal recurrence; well defined at roots of unity.
Cyclotomic q_binomial(long n, long k, const Cyclotomic& q);

// The factorial-ratio definition. Throws when a factorial in the
// denominator vanishes.
Cyclotomic q_binomial_ratio(long n, long k, const Cyclotomic& q);

}  // namespace orehopf
