#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orehopf/error.hpp"

namespace orehopf {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

// Shared, immutable data for Q(zeta_N): the N-th cyclotomic polynomial and the
// reduced coordinates of every power of zeta.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  // Coefficients of Phi_N, lowest degree first; monic of length degree()+1.
  const std::vector<long>& cyclotomic_polynomial() const { return phi_; }
  // Coordinates of zeta^k in the power basis, k taken modulo N.
  const std::vector<Rational>& zeta_power(long k) const;

  explicit CyclotomicField(int conductor);

 private:
  int conductor_;
  int degree_;
  std::vector<long> phi_;
  std::vector<std::vector<Rational>> powers_;
};

std::vector<long> cyclotomic_polynomial(int n);
int euler_phi(int n);

// An element of Q(zeta_N) in canonical power-basis form modulo Phi_N.
//
// Elements of conductor 1 are plain rationals and promote to any conductor
// when combined; two elements of different conductors N, M > 1 never mix.
class Cyclotomic {
 public:
  Cyclotomic();  // rational zero
  Cyclotomic(long value);  // NOLINT: rational literals are ubiquitous
  Cyclotomic(const Rational& value);  // NOLINT
  Cyclotomic(int conductor, const Rational& value);
  Cyclotomic(int conductor, std::vector<Rational> coeffs);  // reduces mod Phi_N

  static Cyclotomic zero(int conductor) { return Cyclotomic(conductor, Rational(0)); }
  static Cyclotomic one(int conductor) { return Cyclotomic(conductor, Rational(1)); }

  int conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;  // requires is_rational()

  Cyclotomic inverse() const;
  Cyclotomic pow(long exponent) const;
  // Re-express in a larger field Q(zeta_M), N | M.
  Cyclotomic lift(int conductor) const;

  // Value under the embedding zeta -> exp(2 pi i j / N).
  std::complex<long double> embed(int j) const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void promote_with(const Cyclotomic& other);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

Cyclotomic root_of_unity(int conductor, long k);

// Least n >= 1 with z^n = 1, or nullopt when z has infinite order.
std::optional<long> multiplicative_order(const Cyclotomic& z);
bool is_primitive_root(const Cyclotomic& z, long n);

// Some y in the same field with y^n = a, if one exists. Candidates come from
// the complex embeddings and an integrality bound; every returned value is
// verified exactly.
std::optional<Cyclotomic> nth_root(const Cyclotomic& a, int n);

// k with z = zeta_N^k, when z is a power of zeta_N.
std::optional<long> zeta_exponent(const Cyclotomic& z);

}  // namespace orehopf
