#pragma once

// Independent reference computations. Nothing here calls the library's
// multiplication, inversion, kernel or wind routines.

#include <map>
#include <optional>
#include <vector>

#include "orehopf/hopf_algebra.hpp"
#include "orehopf/simple_modules.hpp"

namespace oracle {

using orehopf::AbelianGroup;
using orehopf::AlgebraSpec;
using orehopf::Character;
using orehopf::Cyclotomic;
using orehopf::GroupAlgElem;
using orehopf::GroupElement;
using orehopf::HopfElem;
using orehopf::Monomial;
using orehopf::Rational;

using Poly = std::vector<Rational>;  // lowest degree first

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by b (b nonzero).
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Phi_n as x^n - 1 divided by Phi_d for every proper divisor d.
inline Poly cyclotomic_poly(int n) {
  Poly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divmod(p, cyclotomic_poly(d)).first;
  }
  return p;
}

// Inverse of a modulo Phi_N by the extended Euclidean algorithm.
inline Cyclotomic euclid_inverse(const Cyclotomic& a) {
  int n = a.conductor();
  Poly phi = cyclotomic_poly(n);
  Poly r0 = phi, r1 = a.coeffs();
  trim(r1);
  Poly s0, s1 = {Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
    trim(r1);
  }
  // r1 is a nonzero constant c; a * s1 = c mod phi.
  Rational c = r1.at(0);
  for (auto& v : s1) v /= c;
  return Cyclotomic(n, s1);
}

// [i]_q as a direct geometric sum.
inline Cyclotomic q_int(long i, const Cyclotomic& q) {
  Cyclotomic s(0), p(1);
  for (long k = 0; k < i; ++k) {
    s += p;
    p *= q;
  }
  return s;
}

// Gauss binomial as a sum over k-subsets S of {0..n-1} of q^{sum S - k(k-1)/2}.
inline Cyclotomic q_binomial_subsets(int n, int k, const Cyclotomic& q) {
  Cyclotomic total(0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    long s = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s += i;
    total += q.pow(s - static_cast<long>(k) * (k - 1) / 2);
  }
  return total;
}

// Sum_{k<i} sigma^{-k}(u) with sigma(g) = chi(g) g, term by term.
inline GroupAlgElem direct_wind(const Character& chi, const GroupAlgElem& u, long i) {
  GroupAlgElem out;
  for (long k = 0; k < i; ++k) {
    for (const auto& [g, c] : u.terms()) out.add(g, c * chi(g).pow(-k));
  }
  return out;
}

// rho applied to each group term of u.
inline Cyclotomic apply(const orehopf::GroupCharacter& rho, const GroupAlgElem& u) {
  Cyclotomic s(0);
  for (const auto& [g, c] : u.terms()) s += c * rho(g);
  return s;
}

// Least i >= 1 with rho(direct_wind(e, i)) = 0, up to a bound.
inline std::optional<long> least_vanishing_index(const AlgebraSpec& spec, const orehopf::GroupCharacter& rho,
                                                 long bound) {
  for (long i = 1; i <= bound; ++i) {
    if (apply(rho, direct_wind(spec.chi(), spec.e_norm(), i)).is_zero()) return i;
  }
  return std::nullopt;
}

// Exhaustive kernel membership, used against Subgroup::contains.
inline bool in_kernel(const Character& chi, const GroupElement& g) { return chi(g).is_one(); }

// Naive rewriting multiply in the raw presentation. Words are letters
// g, x, y; one adjacent out-of-order pair is rewritten at a time using
// gh -> (gh), xg -> chi(g) g x, yg -> eta(g) g y, yx -> q xy + beta(1 - cb).
class Rewriter {
 public:
  explicit Rewriter(const AlgebraSpec& spec) : spec_(spec) {}

  HopfElem multiply(const HopfElem& a, const HopfElem& b) const {
    HopfElem out;
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) {
        Word w = word(ma);
        Word wb = word(mb);
        w.insert(w.end(), wb.begin(), wb.end());
        normalize(w, ca * cb, out);
      }
    }
    return out;
  }

  HopfElem product(const std::vector<HopfElem>& factors) const {
    HopfElem acc = HopfElem::of(Monomial{spec_.group().identity(), 0, 0});
    for (const auto& f : factors) acc = multiply(acc, f);
    return acc;
  }

 private:
  struct Letter {
    int kind;  // 0 group, 1 x, 2 y
    GroupElement g;
    friend auto operator<=>(const Letter&, const Letter&) = default;
    friend bool operator==(const Letter&, const Letter&) = default;
  };
  using Word = std::vector<Letter>;

  Word word(const Monomial& m) const {
    Word w;
    if (!spec_.group().is_identity(m.g)) w.push_back({0, m.g});
    for (long i = 0; i < m.i; ++i) w.push_back({1, {}});
    for (long j = 0; j < m.j; ++j) w.push_back({2, {}});
    return w;
  }

  void normalize(const Word& start, const Cyclotomic& coef, HopfElem& out) const {
    const AbelianGroup& G = spec_.group();
    std::map<Word, Cyclotomic> pending;
    pending[start] = coef;
    while (!pending.empty()) {
      // Equal words meet in the map and merge before they are rewritten.
      auto it = std::prev(pending.end());
      Word w = it->first;
      Cyclotomic c = it->second;
      pending.erase(it);
      if (c.is_zero()) continue;
      std::size_t k = 0;
      for (; k + 1 < w.size(); ++k) {
        if (w[k].kind > w[k + 1].kind || (w[k].kind == 0 && w[k + 1].kind == 0)) break;
      }
      if (k + 1 >= w.size()) {
        Monomial m{G.identity(), 0, 0};
        for (const auto& l : w) {
          if (l.kind == 0) m.g = l.g;
          if (l.kind == 1) ++m.i;
          if (l.kind == 2) ++m.j;
        }
        out.add(m, c);
        continue;
      }
      auto emit = [&](std::vector<Letter> middle, const Cyclotomic& f) {
        Word nw(w.begin(), w.begin() + static_cast<long>(k));
        for (auto& l : middle) {
          if (l.kind == 0 && G.is_identity(l.g)) continue;
          nw.push_back(l);
        }
        nw.insert(nw.end(), w.begin() + static_cast<long>(k) + 2, w.end());
        pending[nw] += f * c;
      };
      const Letter a = w[k], b = w[k + 1];
      if (a.kind == 0 && b.kind == 0) {
        emit({{0, G.mul(a.g, b.g)}}, Cyclotomic(1));
      } else if (a.kind == 1 && b.kind == 0) {
        emit({b, a}, spec_.chi()(b.g));
      } else if (a.kind == 2 && b.kind == 0) {
        emit({b, a}, spec_.eta()(b.g));
      } else {  // y x
        emit({b, a}, spec_.q());
        if (!spec_.beta().is_zero()) {
          emit({}, spec_.beta());
          emit({{0, G.mul(spec_.c(), spec_.b())}}, -spec_.beta());
        }
      }
    }
  }

  const AlgebraSpec& spec_;
};

}  // namespace oracle
