#include "orehopf/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace orehopf {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  if (s.empty()) throw Error("empty rational literal");
  auto valid_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start >= part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den)) throw Error("malformed rational literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw Error("division by zero");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("conductor must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> divisor = cyclotomic_polynomial(d);
    std::size_t dd = divisor.size() - 1;
    std::vector<long> quotient(poly.size() - dd, 0);
    for (std::size_t k = poly.size(); k-- > dd;) {
      long coef = poly[k];  // divisor is monic
      quotient[k - dd] = coef;
      for (std::size_t i = 0; i <= dd; ++i) poly[k - dd + i] -= coef * divisor[i];
    }
    poly = quotient;
  }
  return poly;
}

namespace {

void reduce_mod_phi(std::vector<Rational>& c, const std::vector<long>& phi) {
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    Rational coef = c[k];
    c[k] = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      if (phi[i] != 0) c[k - deg + i] -= coef * phi[i];
    }
  }
  c.resize(deg);
}

// Dense polynomial helpers over Q, lowest degree first, trimmed.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational coef = r.back() / b.back();
    q[shift] = coef;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= coef * b[i];
    trim(r);
  }
  trim(q);
}

}  // namespace

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), phi_(orehopf::cyclotomic_polynomial(conductor)) {
  powers_.reserve(conductor_);
  for (int k = 0; k < conductor_; ++k) {
    std::vector<Rational> c(std::max(k + 1, degree_), Rational(0));
    c[k] = 1;
    reduce_mod_phi(c, phi_);
    powers_.push_back(std::move(c));
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int conductor) {
  if (conductor < 1) throw Error("conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const CyclotomicField>(conductor);
  cache.emplace(conductor, field);
  return field;
}

const std::vector<Rational>& CyclotomicField::zeta_power(long k) const {
  long m = k % conductor_;
  if (m < 0) m += conductor_;
  return powers_[static_cast<std::size_t>(m)];
}

Cyclotomic::Cyclotomic() : Cyclotomic(1, Rational(0)) {}
Cyclotomic::Cyclotomic(long value) : Cyclotomic(1, Rational(value)) {}
Cyclotomic::Cyclotomic(const Rational& value) : Cyclotomic(1, value) {}

Cyclotomic::Cyclotomic(int conductor, const Rational& value)
    : field_(CyclotomicField::get(conductor)), coeffs_(field_->degree(), Rational(0)) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : field_(CyclotomicField::get(conductor)) {
  // Arbitrary-length input is first folded modulo x^N - 1, then reduced.
  std::vector<Rational> folded(static_cast<std::size_t>(std::max(field_->degree(), 1)), Rational(0));
  folded.resize(std::max<std::size_t>(folded.size(), static_cast<std::size_t>(conductor)), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].canonicalize();
    folded[k % static_cast<std::size_t>(conductor)] += coeffs[k];
  }
  reduce_mod_phi(folded, field_->cyclotomic_polynomial());
  coeffs_ = std::move(folded);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw Error("value is not rational");
  return coeffs_[0];
}

void Cyclotomic::promote_with(const Cyclotomic& other) {
  if (field_ == other.field_) return;
  if (other.conductor() == 1) return;
  if (conductor() == 1) {
    Rational v = coeffs_[0];
    field_ = other.field_;
    coeffs_.assign(field_->degree(), Rational(0));
    coeffs_[0] = v;
    return;
  }
  throw Error("conductor mismatch");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  promote_with(other);
  if (other.conductor() == 1 && conductor() != 1) {
    coeffs_[0] += other.coeffs_[0];
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  promote_with(other);
  if (other.conductor() == 1 && conductor() != 1) {
    coeffs_[0] -= other.coeffs_[0];
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  promote_with(other);
  if (other.conductor() == 1 || other.is_rational()) {
    Rational s = other.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    coeffs_ = other.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  std::size_t deg = coeffs_.size();
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (other.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  reduce_mod_phi(prod, field_->cyclotomic_polynomial());
  coeffs_ = std::move(prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) {
  promote_with(other);
  return *this *= other.inverse();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.conductor() == 1 || b.conductor() == 1) {
    const Cyclotomic& rat = a.conductor() == 1 ? a : b;
    const Cyclotomic& gen = a.conductor() == 1 ? b : a;
    return gen.is_rational() && gen.coeffs_[0] == rat.coeffs_[0];
  }
  throw Error("conductor mismatch");
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_rational()) return Cyclotomic(conductor(), Rational(1) / coeffs_[0]);
  // Extended Euclid: s * a + t * Phi = 1.
  Poly phi;
  for (long c : field_->cyclotomic_polynomial()) phi.emplace_back(c);
  Poly a = coeffs_;
  trim(a);
  Poly r0 = phi, r1 = a, s0 = {}, s1 = {Rational(1)};
  while (!r1.empty() && r1.size() > 1) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_N is irreducible.
  Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return Cyclotomic(conductor(), s1);
}

Cyclotomic Cyclotomic::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Cyclotomic result(conductor(), Rational(1));
  Cyclotomic base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::lift(int target) const {
  int n = conductor();
  if (target % n != 0) throw Error("conductor mismatch");
  int step = target / n;
  std::vector<Rational> c(static_cast<std::size_t>(target), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step % target] += coeffs_[k];
  return Cyclotomic(target, std::move(c));
}

std::complex<long double> Cyclotomic::embed(int j) const {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  int n = conductor();
  std::complex<long double> acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    long double angle = two_pi * static_cast<long double>((static_cast<long>(j) * static_cast<long>(k)) % n) / n;
    acc += static_cast<long double>(coeffs_[k].get_d()) * std::polar(1.0L, angle);
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    std::string c = coeffs_[k].get_str();
    if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
    else if (c[0] == '-') out += "-";
    std::string mag = c[0] == '-' ? c.substr(1) : c;
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += "zeta" + std::to_string(conductor());
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic root_of_unity(int conductor, long k) {
  auto field = CyclotomicField::get(conductor);
  return Cyclotomic(conductor, field->zeta_power(k));
}

std::optional<long> multiplicative_order(const Cyclotomic& z) {
  if (z.is_zero()) throw Error("zero has no order");
  long n = z.conductor();
  long bound = n % 2 == 0 ? n : 2 * n;  // roots of unity in Q(zeta_N) have order | lcm(2, N)
  if (!z.pow(bound).is_one()) return std::nullopt;
  for (long d = 1; d <= bound; ++d) {
    if (bound % d == 0 && z.pow(d).is_one()) return d;
  }
  return bound;
}

bool is_primitive_root(const Cyclotomic& z, long n) {
  if (n < 1 || z.is_zero()) return false;
  if (!z.pow(n).is_one()) return false;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0 && z.pow(d).is_one()) return false;
  }
  return true;
}

std::optional<long> zeta_exponent(const Cyclotomic& z) {
  auto field = z.field();
  for (long k = 0; k < field->conductor(); ++k) {
    if (field->zeta_power(k) == z.coeffs()) return k;
  }
  return std::nullopt;
}

namespace {

using Complex = std::complex<long double>;

// Solves V b = rhs by Gaussian elimination with partial pivoting.
std::vector<Complex> solve_complex(std::vector<std::vector<Complex>> m, std::vector<Complex> rhs) {
  std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[best][col])) best = r;
    }
    std::swap(m[col], m[best]);
    std::swap(rhs[col], rhs[best]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t r = n; r-- > 0;) {
    Complex acc = rhs[r];
    for (std::size_t k = r + 1; k < n; ++k) acc -= m[r][k] * x[k];
    x[r] = acc / m[r][r];
  }
  return x;
}

}  // namespace

std::optional<Cyclotomic> nth_root(const Cyclotomic& a, int n) {
  if (n < 1) throw Error("root index must be positive");
  if (n == 1 || a.is_zero()) return a;
  int big_n = a.conductor();
  int deg = a.field()->degree();
  // D * y is an algebraic integer whenever y^n = a, with D the common
  // denominator of a; Z[zeta_N] has the power basis as Z-basis.
  mpz_class denom = 1;
  for (const auto& c : a.coeffs()) denom = lcm(denom, mpz_class(c.get_den()));
  std::vector<int> units;
  for (int j = 1; j <= std::max(big_n, 1); ++j) {
    if (std::gcd(j, big_n) == 1) units.push_back(j % std::max(big_n, 1));
  }
  std::vector<int> reps;
  std::vector<int> partner(units.size(), -1);
  for (std::size_t u = 0; u < units.size(); ++u) {
    int conj = (big_n - units[u]) % big_n;
    for (std::size_t w = 0; w < units.size(); ++w) {
      if (units[w] == conj) partner[u] = static_cast<int>(w);
    }
    if (partner[u] >= static_cast<int>(u)) reps.push_back(static_cast<int>(u));
  }
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  std::vector<std::vector<Complex>> roots(units.size());
  for (int u : reps) {
    Complex v = a.embed(units[u]);
    long double mag = std::pow(std::abs(v), 1.0L / n);
    long double arg = std::arg(v);
    for (int s = 0; s < n; ++s) roots[u].push_back(std::polar(mag, (arg + two_pi * s) / n));
  }
  std::vector<std::vector<Complex>> vander(units.size(), std::vector<Complex>(deg));
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (int k = 0; k < deg; ++k) {
      vander[u][k] = std::polar(1.0L, two_pi * static_cast<long double>((static_cast<long>(units[u]) * k) % big_n) / big_n);
    }
  }
  std::vector<int> choice(reps.size(), 0);
  long double scale = denom.get_d();
  while (true) {
    std::vector<Complex> rhs(units.size());
    for (std::size_t r = 0; r < reps.size(); ++r) {
      int u = reps[r];
      Complex value = roots[u][choice[r]] * scale;
      if (partner[u] == u) {
        value = Complex(value.real(), 0);  // real embedding needs a real root
      }
      rhs[u] = value;
      rhs[partner[u]] = std::conj(value);
    }
    std::vector<Complex> sol = solve_complex(vander, rhs);
    std::vector<Rational> coeffs;
    bool ok = true;
    for (const auto& s : sol) {
      long double rounded = std::round(s.real());
      if (std::abs(s.real() - rounded) > 1e-6L * std::max(1.0L, std::abs(rounded))) ok = false;
      coeffs.emplace_back(mpz_class(static_cast<long>(rounded)), denom);
      coeffs.back().canonicalize();
    }
    if (ok) {
      Cyclotomic candidate(big_n, coeffs);
      if (candidate.pow(n) == a) return candidate;
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == n) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return std::nullopt;
}

}  // namespace orehopf
