#pragma once

#include <map>

#include "orehopf/abelian_group.hpp"

namespace orehopf {

// A finite linear combination of group elements; zero coefficients are
// never stored.
class GroupAlgElem {
 public:
  GroupAlgElem() = default;
  static GroupAlgElem of(const GroupElement& g, const Cyclotomic& coef = Cyclotomic(1));

  const std::map<GroupElement, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const GroupElement& g, const Cyclotomic& coef);

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem& operator-=(const GroupAlgElem& o);
  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
  friend GroupAlgElem operator*(const Cyclotomic& s, const GroupAlgElem& a);
  friend bool operator==(const GroupAlgElem&, const GroupAlgElem&) = default;

 private:
  std::map<GroupElement, Cyclotomic> terms_;
};

GroupAlgElem ga_mul(const AbelianGroup& group, const GroupAlgElem& a, const GroupAlgElem& b);

// g -> chi(g)^k g, i.e. the k-th power of the winding automorphism.
GroupAlgElem winding(const Character& chi, const GroupAlgElem& u, long k);

// Linear extension of a character.
Cyclotomic evaluate(const Character& rho, const GroupAlgElem& u);

std::string to_string(const GroupAlgElem& u);

}  // namespace orehopf
