#include "orehopf/group_algebra.hpp"

namespace orehopf {

GroupAlgElem GroupAlgElem::of(const GroupElement& g, const Cyclotomic& coef) {
  GroupAlgElem u;
  u.add(g, coef);
  return u;
}

void GroupAlgElem::add(const GroupElement& g, const Cyclotomic& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

GroupAlgElem operator*(const Cyclotomic& s, const GroupAlgElem& a) {
  GroupAlgElem r;
  for (const auto& [g, c] : a.terms_) r.add(g, s * c);
  return r;
}

GroupAlgElem ga_mul(const AbelianGroup& group, const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem r;
  for (const auto& [g, c] : a.terms()) {
    for (const auto& [h, d] : b.terms()) r.add(group.mul(g, h), c * d);
  }
  return r;
}

GroupAlgElem winding(const Character& chi, const GroupAlgElem& u, long k) {
  GroupAlgElem r;
  for (const auto& [g, c] : u.terms()) r.add(g, chi(g).pow(k) * c);
  return r;
}

Cyclotomic evaluate(const Character& rho, const GroupAlgElem& u) {
  Cyclotomic s = Cyclotomic::zero(rho.conductor());
  for (const auto& [g, c] : u.terms()) s += rho(g) * c;
  return s;
}

std::string to_string(const GroupAlgElem& u) {
  if (u.is_zero()) return "0";
  std::string s;
  for (const auto& [g, c] : u.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*g" + to_string(g);
  }
  return s;
}

}  // namespace orehopf
