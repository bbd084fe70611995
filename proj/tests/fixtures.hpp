#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "orehopf/simple_modules.hpp"

namespace fixtures {

using namespace orehopf;

inline AlgebraSpec make_spec(int conductor, int free_rank, IntVec torsion, IntVec chi, IntVec eta, IntVec b, IntVec c,
                             const Cyclotomic& beta) {
  AbelianGroup g(free_rank, torsion);
  return AlgebraSpec::validate(g, Character(g, chi, conductor), Character(g, eta, conductor), g.element(b),
                               g.element(c), beta);
}

inline AlgebraSpec u1_spec() { return make_spec(2, 1, {}, {1}, {1}, {1}, {1}, Cyclotomic(-1)); }

// G = Z^2, chi(b) = chi(c) = zeta_n^{-1}, eta = chi^{-1}, beta = 1; q = zeta_n.
inline AlgebraSpec diff_spec(int n) {
  return make_spec(n, 2, {}, {n - 1, n - 1}, {1, 1}, {1, 0}, {0, 1}, Cyclotomic(1));
}

// G = Z^2, chi = (1, 1), eta = chi^{n-1}, beta = 0; chi(c) = zeta_n.
inline AlgebraSpec skew_spec(int n) {
  return make_spec(n, 2, {}, {1, 1}, {n - 1, n - 1}, {1, 0}, {0, 1}, Cyclotomic(0));
}

// Skew spec with ord chi(b) = n and ord eta(c) = m; chi(c) = s has order
// dividing gcd(n, m) (s = 1 when twisted is false).
inline AlgebraSpec quotient_spec(int n, int m, bool twisted) {
  int big = std::lcm(n, m);
  long s = twisted ? big / std::gcd(n, m) : 0;
  return make_spec(big, 2, {}, {big / n, s}, {big - s, big / m}, {1, 0}, {0, 1}, Cyclotomic(0));
}

// r1 + r2 zeta^k with small integers, never zero.
inline Cyclotomic random_nonzero(std::mt19937_64& rng, int conductor) {
  std::uniform_int_distribution<int> small(-3, 3), expo(0, conductor - 1);
  while (true) {
    Cyclotomic v = Cyclotomic(conductor, Rational(small(rng))) +
                   Cyclotomic(conductor, Rational(small(rng), 1 + std::abs(small(rng)))) * root_of_unity(conductor, expo(rng));
    if (!v.is_zero()) return v;
  }
}

inline Cyclotomic random_root(std::mt19937_64& rng, int conductor) {
  return root_of_unity(conductor, std::uniform_int_distribution<int>(0, conductor - 1)(rng));
}

inline GroupCharacter random_character(std::mt19937_64& rng, const AlgebraSpec& spec) {
  std::vector<Cyclotomic> vals;
  for (std::size_t k = 0; k < spec.group().rank(); ++k) vals.push_back(random_nonzero(rng, spec.conductor()));
  return GroupCharacter(spec.group(), vals);
}

inline SubgroupCharacter random_subgroup_character(std::mt19937_64& rng, const Subgroup& sub, int conductor) {
  std::vector<Cyclotomic> vals;
  for (std::size_t k = 0; k < sub.basis().size(); ++k) vals.push_back(random_nonzero(rng, conductor));
  return SubgroupCharacter(sub, vals);
}

inline bool is_skew_family(Family f) {
  return f == Family::SkewVx || f == Family::SkewVy || f == Family::SkewVxy || f == Family::TorsionChar;
}

inline std::vector<Family> families_for(const AlgebraSpec& spec) {
  if (spec.mode() == Mode::DifferentialOperator) return {Family::DiffVbar, Family::DiffVx, Family::DiffVy};
  return {Family::TorsionChar, Family::SkewVx, Family::SkewVy, Family::SkewVxy};
}

// t with eta = chi^t for the sweep skew specs.
inline long skew_t(const AlgebraSpec& spec) { return spec.conductor() - 1; }

inline SimpleParams random_params(Family f, const AlgebraSpec& spec, std::mt19937_64& rng) {
  SimpleParams p;
  p.family = f;
  int n = spec.conductor();
  switch (f) {
    case Family::TorsionChar:
      p.rho = random_character(rng, spec);
      break;
    case Family::DiffVbar:
      p.rho = random_character(rng, spec);
      break;
    case Family::DiffVx:
    case Family::DiffVy:
      p.rho = random_character(rng, spec);
      p.lambda = random_nonzero(rng, n);
      p.mu = random_nonzero(rng, n);
      break;
    case Family::SkewVx:
    case Family::SkewVy:
      p.alpha = random_nonzero(rng, n);
      p.lambda_n = random_subgroup_character(rng, skew_kernel(spec, f), n);
      break;
    case Family::SkewVxy:
      p.alpha = random_nonzero(rng, n);
      p.alpha_y = random_nonzero(rng, n);
      p.t = skew_t(spec);
      p.lambda_n = random_subgroup_character(rng, skew_kernel(spec, f), n);
      break;
  }
  return p;
}

// Parameters of the module obtained from p by the k-th admissible shift,
// isomorphic to build(p) by the family's criterion.
inline SimpleParams shifted(const SimpleParams& p, long k, const AlgebraSpec& spec) {
  SimpleParams s = p;
  const Cyclotomic& q = spec.q();
  switch (p.family) {
    case Family::TorsionChar:
    case Family::DiffVbar:
      break;
    case Family::DiffVx:
      s.rho = p.rho.twist(spec.chi(), -k);
      s.mu = p.mu + wind_value(spec, p.rho, k, +1);
      break;
    case Family::DiffVy:
      s.rho = p.rho.twist(spec.chi(), k);
      s.lambda = p.lambda - wind_value(spec, p.rho, k, -1);
      break;
    case Family::SkewVx:
      s.alpha = spec.chi()(spec.c()).pow(k) * p.alpha;
      break;
    case Family::SkewVy:
      s.alpha = q.pow(k) * p.alpha;
      break;
    case Family::SkewVxy: {
      Cyclotomic qc = spec.chi()(spec.c());
      s.alpha = qc.pow(k) * p.alpha;
      s.alpha_y = qc.pow(k * p.t) * p.alpha_y;
      break;
    }
  }
  return s;
}

// A perturbation of the k-th shift that breaks the criterion: the
// continuous parameter moves off its orbit.
inline SimpleParams broken_shift(const SimpleParams& p, long k, const AlgebraSpec& spec) {
  SimpleParams s = shifted(p, k, spec);
  switch (p.family) {
    case Family::TorsionChar:
    case Family::DiffVbar: {
      std::vector<Cyclotomic> v = s.rho.values();
      v[0] *= Cyclotomic(2);
      GroupCharacter r(spec.group(), v);
      s.rho = r;
      break;
    }
    case Family::DiffVx:
      s.mu += Cyclotomic(1);
      break;
    case Family::DiffVy:
      s.lambda += Cyclotomic(1);
      break;
    case Family::SkewVx:
    case Family::SkewVy:
      s.alpha *= Cyclotomic(2);
      break;
    case Family::SkewVxy:
      s.alpha_y *= spec.chi()(spec.c());
      break;
  }
  return s;
}

}  // namespace fixtures
