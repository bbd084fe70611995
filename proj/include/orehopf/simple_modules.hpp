#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orehopf/module_rep.hpp"

namespace orehopf {

// A character of G with arbitrary nonzero values, given on the generators.
class GroupCharacter {
 public:
  GroupCharacter() = default;
  GroupCharacter(const AbelianGroup& group, std::vector<Cyclotomic> values);
  static GroupCharacter from(const AbelianGroup& group, const Character& chi);

  const std::vector<Cyclotomic>& values() const { return values_; }
  Cyclotomic operator()(const GroupElement& g) const;
  Cyclotomic operator()(const GroupAlgElem& u) const;
  // rho * chi^k
  GroupCharacter twist(const Character& chi, long k) const;
  SubgroupCharacter restrict(const Subgroup& sub) const;

  friend bool operator==(const GroupCharacter&, const GroupCharacter&) = default;

 private:
  std::vector<Cyclotomic> values_;
};

enum class Family { TorsionChar, SkewVx, SkewVy, SkewVxy, DiffVbar, DiffVx, DiffVy };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct SimpleParams {
  Family family = Family::TorsionChar;
  GroupCharacter rho;         // TorsionChar and the differential families
  SubgroupCharacter lambda_n; // character of N for the skew families
  Cyclotomic alpha;           // SkewVx, SkewVy, and alpha_x for SkewVxy
  Cyclotomic alpha_y;         // SkewVxy
  long t = 1;                 // SkewVxy: eta = chi^t
  Cyclotomic lambda, mu;      // DiffVx, DiffVy
};

// Subgroups carrying lambda_n: ker chi for SkewVx and SkewVxy, ker eta for SkewVy.
Subgroup skew_kernel(const AlgebraSpec& spec, Family family);

// rho([e]_i): sign +1 uses sigma^{-k}, sign -1 uses sigma^{k}.
Cyclotomic wind_value(const AlgebraSpec& spec, const GroupCharacter& rho, long i, int sign = 1);
// Least d >= 1 with rho([e]_d) = 0, searched up to order(chi).
std::optional<long> vbar_truncation_index(const GroupCharacter& rho, const AlgebraSpec& spec);

ModuleRep build_torsion_char(const GroupCharacter& lambda, const AlgebraSpec& spec);
// Module induced from lambda on N = ker chi cap ker eta; x and z act on v_g by
// chi(g) kx and eta(g) ky.
ModuleRep build_induced_skew(const Cyclotomic& kx, const Cyclotomic& ky, const SubgroupCharacter& lambda,
                             const AlgebraSpec& spec);
ModuleRep build_Vx_skew(const Cyclotomic& alpha, const SubgroupCharacter& lambda, const AlgebraSpec& spec);
ModuleRep build_Vy_skew(const Cyclotomic& alpha, const SubgroupCharacter& lambda, const AlgebraSpec& spec);
ModuleRep build_Vxy_skew(const Cyclotomic& alpha_x, const Cyclotomic& alpha_y, const SubgroupCharacter& lambda,
                         long t, const AlgebraSpec& spec);
ModuleRep build_Vbar_diff(const GroupCharacter& rho, const AlgebraSpec& spec);
ModuleRep build_Vx_diff(const GroupCharacter& rho, const Cyclotomic& lambda, const Cyclotomic& mu,
                        const AlgebraSpec& spec);
ModuleRep build_Vy_diff(const GroupCharacter& rho, const Cyclotomic& lambda, const Cyclotomic& mu,
                        const AlgebraSpec& spec);

ModuleRep build(const SimpleParams& p, const AlgebraSpec& spec);

bool iso_criterion(const SimpleParams& a, const SimpleParams& b, const AlgebraSpec& spec);

SimpleParams classify_simple(const ModuleRep& m, const AlgebraSpec& spec, std::uint64_t seed = 1);

}  // namespace orehopf
