#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orehopf/cyclotomic.hpp"

namespace orehopf {

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;

struct GroupElement {
  IntVec exps;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Z^r x Z_{n_1} x ... x Z_{n_s}, generators ordered free part first.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(int free_rank, IntVec torsion);

  int free_rank() const { return free_rank_; }
  const IntVec& torsion() const { return torsion_; }
  std::size_t rank() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }
  // 0 for free generators.
  long generator_order(std::size_t i) const;
  bool is_finite() const { return free_rank_ == 0; }
  std::optional<long> order() const;

  GroupElement identity() const;
  GroupElement generator(std::size_t i) const;
  GroupElement element(IntVec exps) const;  // reduces torsion coordinates

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, long k) const;
  bool is_identity(const GroupElement& a) const;

  // Relation vectors n_i e_i, one per torsion generator.
  IntMat relations() const;
  std::vector<GroupElement> elements() const;  // finite groups only

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  void check(const GroupElement& a) const;

  int free_rank_ = 0;
  IntVec torsion_;
};

std::string to_string(const GroupElement& g);

// chi(g_i) = zeta_N^{k_i}.
class Character {
 public:
  Character() = default;
  Character(const AbelianGroup& group, IntVec zeta_exponents, int conductor);

  const IntVec& exponents() const { return k_; }
  int conductor() const { return conductor_; }

  Cyclotomic operator()(const GroupElement& g) const;
  long exponent_at(const GroupElement& g) const;  // k with chi(g) = zeta^k
  long order() const;
  bool is_trivial() const;

  Character inverse() const;
  Character pow(long k) const;
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character&, const Character&) = default;

 private:
  IntVec k_;
  int conductor_ = 1;
};

std::string to_string(const Character& chi);

// Integer row operations.
IntMat hermite_normal_form(IntMat rows, std::size_t width);
// Integer u with u A = 0, as an HNF basis.
IntMat integer_left_kernel(const IntMat& a);

// A subgroup H of G, stored as the Hermite basis of its preimage lattice in
// Z^rank (which always contains the torsion relations).
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const AbelianGroup& group, const std::vector<GroupElement>& generators);

  static Subgroup from_lattice(const AbelianGroup& group, IntMat lattice);

  const AbelianGroup& group() const { return group_; }
  const IntMat& basis() const { return basis_; }
  // Basis rows viewed as group elements (some may be trivial in G).
  std::vector<GroupElement> generators() const;

  bool contains(const GroupElement& g) const;
  // Integer coordinates of a member with respect to basis().
  IntVec coordinates(const GroupElement& g) const;
  // Index [G : H], or nullopt if infinite.
  std::optional<long> index() const;
  // Canonical coset representative of gH (requires finite index).
  GroupElement coset_rep(const GroupElement& g) const;
  std::vector<GroupElement> coset_reps() const;

 private:
  AbelianGroup group_;
  IntMat basis_;
  bool full_rank_ = false;
};

// Kernel of a family of characters.
Subgroup char_kernel(const AbelianGroup& group, const std::vector<Character>& chars);
Subgroup char_kernel(const AbelianGroup& group, const Character& chi);

std::vector<GroupElement> transversal(const AbelianGroup& group, const Subgroup& sub, const GroupElement& c, long n);
GroupElement cocycle_gamma(const AbelianGroup& group, long i, long j, const GroupElement& c, long n);

// A character of a subgroup, given by its values on the basis rows.
class SubgroupCharacter {
 public:
  SubgroupCharacter() = default;
  SubgroupCharacter(Subgroup sub, std::vector<Cyclotomic> values);
  static SubgroupCharacter restrict(const Subgroup& sub, const Character& chi);

  const Subgroup& subgroup() const { return sub_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  Cyclotomic operator()(const GroupElement& g) const;
  bool operator==(const SubgroupCharacter& other) const;

 private:
  Subgroup sub_;
  std::vector<Cyclotomic> values_;
};

}  // namespace orehopf
