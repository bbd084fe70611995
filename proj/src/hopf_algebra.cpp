#include "orehopf/hopf_algebra.hpp"

namespace orehopf {

std::string to_string(Mode mode) {
  return mode == Mode::DifferentialOperator ? "DifferentialOperator" : "SkewGroupRing";
}

AlgebraSpec AlgebraSpec::unchecked(AbelianGroup group, Character chi, Character eta, GroupElement b, GroupElement c,
                                   Cyclotomic beta) {
  AlgebraSpec s;
  s.group_ = std::move(group);
  if (chi.exponents().size() != s.group_.rank() || eta.exponents().size() != s.group_.rank()) {
    throw Error("group mismatch");
  }
  if (chi.conductor() != eta.conductor()) throw Error("conductor mismatch");
  if (beta.conductor() != 1 && beta.conductor() != chi.conductor()) throw Error("conductor mismatch");
  s.chi_ = std::move(chi);
  s.eta_ = std::move(eta);
  s.b_ = s.group_.element(b.exps);
  s.c_ = s.group_.element(c.exps);
  s.beta_ = beta;
  s.derive();
  return s;
}

AlgebraSpec AlgebraSpec::validate(AbelianGroup group, Character chi, Character eta, GroupElement b, GroupElement c,
                                  Cyclotomic beta) {
  AlgebraSpec s = unchecked(std::move(group), std::move(chi), std::move(eta), std::move(b), std::move(c), beta);
  if (s.eta_(s.b_) != s.chi_(s.c_).inverse()) throw Error("constraint η(b) ≠ χ(c)⁻¹");
  if (s.mode_ == Mode::DifferentialOperator && s.eta_ != s.chi_.inverse()) throw Error("β(1−cb) ≠ 0 but η ≠ χ⁻¹");
  return s;
}

void AlgebraSpec::derive() {
  q_ = eta_(b_);
  GroupElement cb = group_.mul(c_, b_);
  e_raw_ = GroupAlgElem::of(group_.identity(), beta_) - GroupAlgElem::of(cb, beta_);
  mode_ = e_raw_.is_zero() ? Mode::SkewGroupRing : Mode::DifferentialOperator;
  e_norm_ = GroupAlgElem();
  if (mode_ == Mode::DifferentialOperator) {
    e_norm_ = GroupAlgElem::of(group_.inv(c_)) - GroupAlgElem::of(b_);
  }
}

HopfElem HopfElem::of(Monomial m, const Cyclotomic& coef) {
  HopfElem a;
  a.add(m, coef);
  return a;
}

void HopfElem::add(const Monomial& m, const Cyclotomic& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long HopfElem::max_x_degree() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.i);
  return d;
}

long HopfElem::max_y_degree() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.j);
  return d;
}

HopfElem& HopfElem::operator+=(const HopfElem& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

HopfElem& HopfElem::operator-=(const HopfElem& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

HopfElem HopfElem::operator-() const { return Cyclotomic(-1) * *this; }

HopfElem operator*(const Cyclotomic& s, const HopfElem& a) {
  HopfElem r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.terms_) r.add(m, s * c);
  return r;
}

void Tensor::add(const std::vector<Monomial>& word, const Cyclotomic& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Tensor operator*(const Cyclotomic& s, const Tensor& a) {
  Tensor r;
  for (const auto& [w, c] : a.terms_) r.add(w, s * c);
  return r;
}

Tensor tensor_product(const std::vector<HopfElem>& factors) {
  Tensor acc;
  acc.add({}, Cyclotomic(1));
  for (const auto& f : factors) {
    Tensor next;
    for (const auto& [w, c] : acc.terms()) {
      for (const auto& [m, d] : f.terms()) {
        auto word = w;
        word.push_back(m);
        next.add(word, c * d);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

std::string monomial_atoms(const Monomial& m) {
  std::string s;
  auto push = [&](const std::string& atom) {
    if (!s.empty()) s += "*";
    s += atom;
  };
  for (std::size_t k = 0; k < m.g.exps.size(); ++k) {
    long e = m.g.exps[k];
    if (e == 0) continue;
    push("g" + std::to_string(k + 1) + (e == 1 ? "" : "^" + std::to_string(e)));
  }
  if (m.i) push(m.i == 1 ? "x" : "x^" + std::to_string(m.i));
  if (m.j) push(m.j == 1 ? "y" : "y^" + std::to_string(m.j));
  return s;
}

}  // namespace

std::string to_string(const Monomial& m) {
  std::string s = monomial_atoms(m);
  return s.empty() ? "1" : s;
}

std::string to_string(const HopfElem& a) {
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    std::string atoms = monomial_atoms(m);
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      const Rational& r = c.coeffs()[k];
      if (r == 0) continue;
      bool neg = r < 0;
      Rational mag = neg ? Rational(-r) : r;
      std::string tail = atoms;
      if (k > 0) tail = "zeta" + (k == 1 ? std::string() : "^" + std::to_string(k)) + (tail.empty() ? "" : "*" + tail);
      std::string term;
      if (tail.empty()) term = mag.get_str();
      else if (mag == 1) term = tail;
      else term = mag.get_str() + "*" + tail;
      if (out.empty()) out += neg ? "-" + term : term;
      else out += (neg ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const Tensor& t) {
  std::string out;
  for (const auto& [w, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? " (x) " : " ") + to_string(w[k]);
  }
  return out.empty() ? "0" : out;
}

Algebra::Algebra(AlgebraSpec spec) : spec_(std::move(spec)) {}

HopfElem Algebra::one() const { return HopfElem::of(Monomial{group().identity(), 0, 0}); }

HopfElem Algebra::scalar(const Cyclotomic& s) const { return HopfElem::of(Monomial{group().identity(), 0, 0}, s); }

HopfElem Algebra::x() const { return HopfElem::of(Monomial{group().identity(), 1, 0}); }

HopfElem Algebra::y() const { return HopfElem::of(Monomial{group().identity(), 0, 1}); }

HopfElem Algebra::z() const {
  Cyclotomic coef(1);
  if (spec_.mode() == Mode::DifferentialOperator) coef = spec_.beta().inverse();
  return HopfElem::of(Monomial{group().inv(spec_.c()), 0, 1}, coef);
}

HopfElem Algebra::group_elem(const GroupElement& g) const { return HopfElem::of(Monomial{group().element(g.exps), 0, 0}); }

HopfElem Algebra::from_group_alg(const GroupAlgElem& u) const {
  HopfElem r;
  for (const auto& [g, c] : u.terms()) r.add(Monomial{g, 0, 0}, c);
  return r;
}

GroupAlgElem Algebra::sigma(const GroupAlgElem& u, long k) const { return winding(spec_.chi(), u, k); }

GroupAlgElem Algebra::wind(const GroupAlgElem& u, long i) const {
  GroupAlgElem r;
  for (long k = 0; k < i; ++k) r += sigma(u, -k);
  return r;
}

GroupAlgElem Algebra::derivation_coefficient(long a) const {
  if (a < 1) throw Error("out of range");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (d_cache_.empty()) d_cache_.push_back(GroupAlgElem());
  while (static_cast<long>(d_cache_.size()) <= a) {
    long k = static_cast<long>(d_cache_.size());
    // D_k = D_{k-1} + q^{k-1} sigma^{k-1}(f)
    GroupAlgElem next = d_cache_.back() + spec_.q().pow(k - 1) * sigma(spec_.e_raw(), k - 1);
    d_cache_.push_back(std::move(next));
  }
  return d_cache_[a];
}

const HopfElem& Algebra::y_pow_x_pow(long j, long k) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto key = std::make_pair(j, k);
  auto it = yx_cache_.find(key);
  if (it != yx_cache_.end()) return it->second;
  HopfElem result;
  const GroupElement id = group().identity();
  if (j == 0 || k == 0) {
    result = HopfElem::of(Monomial{id, k, j});
  } else {
    const HopfElem& prev = y_pow_x_pow(j - 1, k);
    // y (u x^a y^b) = eta(u) u (q^a x^a y + D_a x^{a-1}) y^b
    for (const auto& [m, coef] : prev.terms()) {
      Cyclotomic c = spec_.eta()(m.g) * coef;
      result.add(Monomial{m.g, m.i, m.j + 1}, c * spec_.q().pow(m.i));
      if (m.i > 0) {
        const GroupAlgElem da = derivation_coefficient(m.i);
        for (const auto& [w, d] : da.terms()) {
          result.add(Monomial{group().mul(m.g, w), m.i - 1, m.j}, c * d);
        }
      }
    }
  }
  return yx_cache_.emplace(key, std::move(result)).first->second;
}

HopfElem Algebra::mul_monomials(const Monomial& a, const Monomial& b) const {
  // (g x^i y^j)(h x^k y^l) = chi(h)^i eta(h)^j gh x^i (y^j x^k) y^l
  Cyclotomic coef = spec_.chi()(b.g).pow(a.i) * spec_.eta()(b.g).pow(a.j);
  GroupElement gh = group().mul(a.g, b.g);
  HopfElem result;
  for (const auto& [m, c] : y_pow_x_pow(a.j, b.i).terms()) {
    Cyclotomic k = coef * c;
    if (a.i) k *= spec_.chi()(m.g).pow(a.i);
    result.add(Monomial{group().mul(gh, m.g), a.i + m.i, m.j + b.j}, k);
  }
  return result;
}

HopfElem Algebra::mul(const HopfElem& a, const HopfElem& b) const {
  HopfElem r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Cyclotomic s = ca * cb;
      const HopfElem prod = mul_monomials(ma, mb);
      for (const auto& [m, c] : prod.terms()) r.add(m, s * c);
    }
  }
  return r;
}

HopfElem Algebra::pow(const HopfElem& a, long k) const {
  if (k < 0) throw Error("negative power of an algebra element");
  HopfElem r = one();
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

HopfElem Algebra::commutator(const HopfElem& a, const HopfElem& b) const { return mul(a, b) - mul(b, a); }

Cyclotomic Algebra::counit(const HopfElem& a) const {
  Cyclotomic s(0);
  for (const auto& [m, c] : a.terms()) {
    if (m.i == 0 && m.j == 0) s += c;
  }
  return s;
}

HopfElem Algebra::left_group(const GroupElement& g, const HopfElem& a) const {
  HopfElem r;
  for (const auto& [m, c] : a.terms()) r.add(Monomial{group().mul(g, m.g), m.i, m.j}, c);
  return r;
}

HopfElem Algebra::right_group(const HopfElem& a, const GroupElement& g) const {
  HopfElem r;
  Cyclotomic xi = spec_.chi()(g), eta = spec_.eta()(g);
  for (const auto& [m, c] : a.terms()) r.add(Monomial{group().mul(m.g, g), m.i, m.j}, c * xi.pow(m.i) * eta.pow(m.j));
  return r;
}

const HopfElem& Algebra::antipode_word(long i, long j) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto key = std::make_pair(i, j);
  auto it = antipode_cache_.find(key);
  if (it != antipode_cache_.end()) return it->second;
  HopfElem result;
  if (i == 0 && j == 0) {
    result = one();
  } else if (j > 0) {
    // S(x^i y^j) = S(y) S(x^i y^{j-1})
    HopfElem sy = HopfElem::of(Monomial{group().inv(spec_.c()), 0, 1}, Cyclotomic(-1));
    result = mul(sy, antipode_word(i, j - 1));
  } else {
    HopfElem sx = HopfElem::of(Monomial{group().inv(spec_.b()), 1, 0}, Cyclotomic(-1));
    result = mul(sx, antipode_word(i - 1, 0));
  }
  return antipode_cache_.emplace(key, std::move(result)).first->second;
}

HopfElem Algebra::antipode(const HopfElem& a) const {
  HopfElem r;
  for (const auto& [m, c] : a.terms()) r += c * right_group(antipode_word(m.i, m.j), group().inv(m.g));
  return r;
}

const Tensor& Algebra::delta_word(long i, long j) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto key = std::make_pair(i, j);
  auto it = delta_cache_.find(key);
  if (it != delta_cache_.end()) return it->second;
  Tensor result;
  const GroupElement id = group().identity();
  Monomial one_m{id, 0, 0};
  if (i == 0 && j == 0) {
    result.add({one_m, one_m}, Cyclotomic(1));
  } else if (j > 0) {
    Tensor dy;
    dy.add({Monomial{id, 0, 1}, one_m}, Cyclotomic(1));
    dy.add({Monomial{spec_.c(), 0, 0}, Monomial{id, 0, 1}}, Cyclotomic(1));
    result = tensor_mul(delta_word(i, j - 1), dy);
  } else {
    Tensor dx;
    dx.add({Monomial{id, 1, 0}, one_m}, Cyclotomic(1));
    dx.add({Monomial{spec_.b(), 0, 0}, Monomial{id, 1, 0}}, Cyclotomic(1));
    result = tensor_mul(delta_word(i - 1, 0), dx);
  }
  return delta_cache_.emplace(key, std::move(result)).first->second;
}

Tensor Algebra::comultiply(const HopfElem& a) const {
  Tensor r;
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [w, d] : delta_word(m.i, m.j).terms()) {
      std::vector<Monomial> word = w;
      for (auto& piece : word) piece.g = group().mul(m.g, piece.g);
      r.add(word, c * d);
    }
  }
  return r;
}

Tensor Algebra::tensor_mul(const Tensor& a, const Tensor& b) const {
  Tensor r;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.size() != wb.size()) throw Error("tensor arity mismatch");
      std::vector<HopfElem> factors;
      factors.reserve(wa.size());
      for (std::size_t k = 0; k < wa.size(); ++k) factors.push_back(mul_monomials(wa[k], wb[k]));
      Cyclotomic s = ca * cb;
      const Tensor prod = tensor_product(factors);
      for (const auto& [w, c] : prod.terms()) r.add(w, s * c);
    }
  }
  return r;
}

Tensor Algebra::delta_at(const Tensor& t, std::size_t slot) const {
  Tensor r;
  for (const auto& [w, c] : t.terms()) {
    const Tensor piece = comultiply(HopfElem::of(w.at(slot)));
    for (const auto& [dw, d] : piece.terms()) {
      std::vector<Monomial> word(w.begin(), w.begin() + static_cast<long>(slot));
      word.insert(word.end(), dw.begin(), dw.end());
      word.insert(word.end(), w.begin() + static_cast<long>(slot) + 1, w.end());
      r.add(word, c * d);
    }
  }
  return r;
}

Tensor Algebra::counit_at(const Tensor& t, std::size_t slot) const {
  Tensor r;
  for (const auto& [w, c] : t.terms()) {
    const Monomial& m = w.at(slot);
    if (m.i != 0 || m.j != 0) continue;
    std::vector<Monomial> word = w;
    word.erase(word.begin() + static_cast<long>(slot));
    r.add(word, c);
  }
  return r;
}

Tensor Algebra::antipode_at(const Tensor& t, std::size_t slot) const {
  Tensor r;
  for (const auto& [w, c] : t.terms()) {
    const HopfElem piece = antipode(HopfElem::of(w.at(slot)));
    for (const auto& [m, d] : piece.terms()) {
      std::vector<Monomial> word = w;
      word[slot] = m;
      r.add(word, c * d);
    }
  }
  return r;
}

HopfElem Algebra::multiply_out(const Tensor& t) const {
  HopfElem r;
  for (const auto& [w, c] : t.terms()) {
    HopfElem prod = one();
    for (const auto& m : w) prod = mul(prod, HopfElem::of(m));
    r += c * prod;
  }
  return r;
}

}  // namespace orehopf
