#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "orehopf/group_algebra.hpp"

namespace orehopf {

enum class Mode { SkewGroupRing, DifferentialOperator };

std::string to_string(Mode mode);

// The data (G, chi, eta, b, c, beta) with its derived quantities.
class AlgebraSpec {
 public:
  AlgebraSpec() = default;

  static AlgebraSpec validate(AbelianGroup group, Character chi, Character eta, GroupElement b, GroupElement c,
                              Cyclotomic beta);
  // Skips the constraint checks; used to exhibit failures on bad data.
  static AlgebraSpec unchecked(AbelianGroup group, Character chi, Character eta, GroupElement b, GroupElement c,
                               Cyclotomic beta);

  const AbelianGroup& group() const { return group_; }
  const Character& chi() const { return chi_; }
  const Character& eta() const { return eta_; }
  const GroupElement& b() const { return b_; }
  const GroupElement& c() const { return c_; }
  const Cyclotomic& beta() const { return beta_; }
  int conductor() const { return chi_.conductor(); }
  Mode mode() const { return mode_; }
  // q = eta(b) = chi(c)^{-1}
  const Cyclotomic& q() const { return q_; }
  long n_chi() const { return chi_.order(); }
  // beta(1 - cb), the constant term of yx - qxy.
  const GroupAlgElem& e_raw() const { return e_raw_; }
  // c^{-1} - b in the differential-operator case, 0 otherwise.
  const GroupAlgElem& e_norm() const { return e_norm_; }

 private:
  void derive();

  AbelianGroup group_;
  Character chi_, eta_;
  GroupElement b_, c_;
  Cyclotomic beta_;
  Mode mode_ = Mode::SkewGroupRing;
  Cyclotomic q_;
  GroupAlgElem e_raw_, e_norm_;
};

struct Monomial {
  GroupElement g;
  long i = 0;
  long j = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sum of coeff * g x^i y^j in PBW normal form.
class HopfElem {
 public:
  HopfElem() = default;
  static HopfElem of(Monomial m, const Cyclotomic& coef = Cyclotomic(1));

  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial& m, const Cyclotomic& coef);
  long max_x_degree() const;
  long max_y_degree() const;

  HopfElem& operator+=(const HopfElem& o);
  HopfElem& operator-=(const HopfElem& o);
  friend HopfElem operator+(HopfElem a, const HopfElem& b) { return a += b; }
  friend HopfElem operator-(HopfElem a, const HopfElem& b) { return a -= b; }
  HopfElem operator-() const;
  friend HopfElem operator*(const Cyclotomic& s, const HopfElem& a);
  friend bool operator==(const HopfElem&, const HopfElem&) = default;

 private:
  std::map<Monomial, Cyclotomic> terms_;
};

// Elements of H^{(x)k}, each word a list of k monomials.
class Tensor {
 public:
  Tensor() = default;
  const std::map<std::vector<Monomial>, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const std::vector<Monomial>& word, const Cyclotomic& coef);

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Cyclotomic& s, const Tensor& a);
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::map<std::vector<Monomial>, Cyclotomic> terms_;
};

Tensor tensor_product(const std::vector<HopfElem>& factors);

std::string to_string(const Monomial& m);
std::string to_string(const HopfElem& a);
std::string to_string(const Tensor& t);

// Arithmetic in H(G, chi, eta, b, c, beta). Products of PBW words are
// memoized; the caches are internally synchronized.
class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  const AbelianGroup& group() const { return spec_.group(); }
  int conductor() const { return spec_.conductor(); }

  HopfElem one() const;
  HopfElem scalar(const Cyclotomic& s) const;
  HopfElem x() const;
  HopfElem y() const;
  // The normalized generator: c^{-1} y, or beta^{-1} c^{-1} y when the
  // derivation is nonzero. It satisfies zx = xz + e_norm.
  HopfElem z() const;
  HopfElem group_elem(const GroupElement& g) const;
  HopfElem from_group_alg(const GroupAlgElem& u) const;

  HopfElem mul(const HopfElem& a, const HopfElem& b) const;
  HopfElem pow(const HopfElem& a, long k) const;
  HopfElem commutator(const HopfElem& a, const HopfElem& b) const;

  // Coefficient D_a in y x^a = q^a x^a y + D_a x^{a-1}.
  GroupAlgElem derivation_coefficient(long a) const;

  Cyclotomic counit(const HopfElem& a) const;
  HopfElem antipode(const HopfElem& a) const;
  Tensor comultiply(const HopfElem& a) const;

  Tensor tensor_mul(const Tensor& a, const Tensor& b) const;
  // Applies a map to one tensor slot.
  Tensor delta_at(const Tensor& t, std::size_t slot) const;
  Tensor counit_at(const Tensor& t, std::size_t slot) const;
  Tensor antipode_at(const Tensor& t, std::size_t slot) const;
  // Multiplies all slots together.
  HopfElem multiply_out(const Tensor& t) const;

  // sigma^k(u) with sigma(g) = chi(g) g.
  GroupAlgElem sigma(const GroupAlgElem& u, long k) const;
  // [u]_i = u + sigma^{-1}(u) + ... + sigma^{-(i-1)}(u).
  GroupAlgElem wind(const GroupAlgElem& u, long i) const;

 private:
  HopfElem mul_monomials(const Monomial& a, const Monomial& b) const;
  const HopfElem& y_pow_x_pow(long j, long k) const;
  const Tensor& delta_word(long i, long j) const;
  const HopfElem& antipode_word(long i, long j) const;
  HopfElem left_group(const GroupElement& g, const HopfElem& a) const;
  HopfElem right_group(const HopfElem& a, const GroupElement& g) const;

  AlgebraSpec spec_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<long, long>, HopfElem> yx_cache_;
  mutable std::vector<GroupAlgElem> d_cache_;
  mutable std::map<std::pair<long, long>, Tensor> delta_cache_;
  mutable std::map<std::pair<long, long>, HopfElem> antipode_cache_;
};

}  // namespace orehopf
