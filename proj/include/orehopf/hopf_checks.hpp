#pragma once

#include <cstdint>
#include <random>

#include "orehopf/hopf_algebra.hpp"
#include "orehopf/report.hpp"

namespace orehopf {

struct SampleBounds {
  long max_degree = 3;   // bound on both i and j
  long max_group_exp = 3;
  int max_terms = 3;
};

HopfElem random_element(const Algebra& alg, std::mt19937_64& rng, const SampleBounds& bounds);

// Coassociativity, counit and antipode laws on each element, algebra-map
// properties of the coproduct and counit on consecutive pairs.
Report hopf_axioms_on(const Algebra& alg, const std::vector<HopfElem>& samples);
Report hopf_axiom_check(const Algebra& alg, int sample_count, long max_degree, std::uint64_t seed);

// Least m with S^m = id on x, y and the group generators.
long antipode_order(const Algebra& alg);

// Commutation identities of the generator z with x, up to x- or z-degree
// `bound`.
Report change_of_variables_check(const Algebra& alg, long bound = 8);

struct CentralityResult {
  bool central = false;
  Report report;
};

// Whether x^n and z^n commute with x, z and every group generator.
CentralityResult centrality_check(const Algebra& alg, long n);

}  // namespace orehopf
