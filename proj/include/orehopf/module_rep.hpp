#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orehopf/hopf_algebra.hpp"
#include "orehopf/matrix.hpp"
#include "orehopf/report.hpp"

namespace orehopf {

// Raw: Y realizes y. Normalized: Y realizes z with zx = xz + e.
enum class Presentation { Raw, Normalized };

std::string to_string(Presentation p);

struct ModuleRep {
  std::size_t dim = 0;
  std::vector<Matrix> group;  // one matrix per group generator
  Matrix X, Y;
  Presentation presentation = Presentation::Normalized;

  // Every action matrix: group generators, then X, then Y.
  std::vector<Matrix> generators() const;
};

Matrix group_matrix(const ModuleRep& m, const GroupElement& g);
Matrix group_algebra_matrix(const ModuleRep& m, const GroupAlgElem& u);

ModuleRep to_presentation(const ModuleRep& m, const AlgebraSpec& spec, Presentation target);

Report rep_check(const ModuleRep& m, const AlgebraSpec& spec);

enum class TorsionKind { Torsion, TorsionFree, Mixed };
std::string to_string(TorsionKind k);

struct TorsionProfile {
  TorsionKind x = TorsionKind::Torsion;
  TorsionKind y = TorsionKind::Torsion;
  friend bool operator==(const TorsionProfile&, const TorsionProfile&) = default;
};

TorsionProfile torsion_profile(const ModuleRep& m);

struct BurnsideCertificate {
  bool simple = false;
  std::size_t span_dimension = 0;
  std::size_t full_dimension = 0;  // d^2
};

BurnsideCertificate is_simple_burnside(const ModuleRep& m);

struct IsoResult {
  bool isomorphic = false;
  bool determinate = true;
  std::optional<Matrix> intertwiner;  // T with T M1 = M2 T
  std::size_t hom_dimension = 0;
  std::string detail;
};

IsoResult are_isomorphic(const ModuleRep& a, const ModuleRep& b, std::uint64_t seed = 1);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
// T M T^{-1}
ModuleRep conjugate(const ModuleRep& m, const Matrix& t);
// Random invertible matrix with small integer and root-of-unity entries.
Matrix random_invertible(std::size_t d, int conductor, std::mt19937_64& rng);

}  // namespace orehopf
