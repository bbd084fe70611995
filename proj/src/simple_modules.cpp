#include "orehopf/simple_modules.hpp"

#include <numeric>

namespace orehopf {

GroupCharacter::GroupCharacter(const AbelianGroup& group, std::vector<Cyclotomic> values)
    : values_(std::move(values)) {
  if (values_.size() != group.rank()) throw Error("character needs one value per group generator");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k].is_zero()) throw Error("character values must be nonzero");
    long n = group.generator_order(k);
    if (n > 0 && !values_[k].pow(n).is_one()) {
      throw Error("character value on g" + std::to_string(k + 1) + " is not a root of unity of order dividing " +
                  std::to_string(n));
    }
  }
}

GroupCharacter GroupCharacter::from(const AbelianGroup& group, const Character& chi) {
  std::vector<Cyclotomic> vals;
  for (std::size_t k = 0; k < group.rank(); ++k) vals.push_back(chi(group.generator(k)));
  return GroupCharacter(group, std::move(vals));
}

Cyclotomic GroupCharacter::operator()(const GroupElement& g) const {
  if (g.exps.size() != values_.size()) throw Error("group mismatch");
  Cyclotomic r(1);
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (g.exps[k] != 0) r *= values_[k].pow(g.exps[k]);
  }
  return r;
}

Cyclotomic GroupCharacter::operator()(const GroupAlgElem& u) const {
  Cyclotomic s;
  for (const auto& [g, c] : u.terms()) s += (*this)(g) * c;
  return s;
}

GroupCharacter GroupCharacter::twist(const Character& chi, long k) const {
  GroupCharacter r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    IntVec e(values_.size(), 0);
    e[i] = 1;
    r.values_[i] *= chi(GroupElement{e}).pow(k);
  }
  return r;
}

SubgroupCharacter GroupCharacter::restrict(const Subgroup& sub) const {
  std::vector<Cyclotomic> vals;
  for (const auto& row : sub.basis()) vals.push_back((*this)(GroupElement{row}));
  return SubgroupCharacter(sub, std::move(vals));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::TorsionChar:
      return "TorsionChar";
    case Family::SkewVx:
      return "SkewVx";
    case Family::SkewVy:
      return "SkewVy";
    case Family::SkewVxy:
      return "SkewVxy";
    case Family::DiffVbar:
      return "DiffVbar";
    case Family::DiffVx:
      return "DiffVx";
    case Family::DiffVy:
      return "DiffVy";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::TorsionChar, Family::SkewVx, Family::SkewVy, Family::SkewVxy, Family::DiffVbar,
                   Family::DiffVx, Family::DiffVy}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void outside(const std::string& why) { throw Error("outside Corollary hypotheses: " + why); }

void require_mode(const AlgebraSpec& spec, Mode mode) {
  if (spec.mode() != mode) outside("the algebra is in " + to_string(spec.mode()) + " mode");
}

// Data of a cyclic transversal {s^i} for ker psi.
struct Cyclic {
  GroupElement s;
  Character psi;
  Cyclotomic q;  // psi(s)
  long n = 0;
};

Cyclic cyclic_data(const GroupElement& s, const Character& psi, const char* label) {
  Cyclic cy{s, psi, psi(s), 0};
  auto ord = multiplicative_order(cy.q);
  cy.n = ord ? *ord : 0;
  if (cy.n < 2) outside(std::string(label) + " is not a primitive n-th root of unity with n >= 2");
  if (psi.order() != cy.n) outside(std::string("the image of the character is not generated by ") + label);
  return cy;
}

void require_kernel(const SubgroupCharacter& lambda, const Subgroup& n) {
  if (lambda.subgroup().basis() != n.basis()) throw Error("lambda must be a character of the kernel subgroup N");
}

// Group action on the module induced from lambda on N, basis indexed by reps.
std::vector<Matrix> induced_action(const AbelianGroup& group, const Subgroup& n, const std::vector<GroupElement>& reps,
                                   const SubgroupCharacter& lambda) {
  std::size_t d = reps.size();
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < group.rank(); ++k) {
    GroupElement s = group.generator(k);
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      GroupElement sg = group.mul(s, reps[i]);
      bool found = false;
      for (std::size_t r = 0; r < d && !found; ++r) {
        GroupElement h = group.mul(sg, group.inv(reps[r]));
        if (n.contains(h)) {
          m(r, i) = lambda(h);
          found = true;
        }
      }
      if (!found) throw Error("coset representatives do not cover G/N");
    }
    mats.push_back(std::move(m));
  }
  return mats;
}

std::vector<GroupElement> powers(const AbelianGroup& group, const GroupElement& s, long n) {
  std::vector<GroupElement> out;
  for (long i = 0; i < n; ++i) out.push_back(group.pow(s, i));
  return out;
}

Matrix diagonal_by(const std::vector<GroupElement>& reps, const Character& chi, const Cyclotomic& k) {
  Vector d;
  for (const auto& g : reps) d.push_back(chi(g) * k);
  return Matrix::diagonal(d);
}

std::vector<Matrix> twisted_group_action(const AlgebraSpec& spec, const GroupCharacter& rho, long d, long sign) {
  // g v_i = rho(g) chi(g)^{sign * i} v_i
  std::vector<Matrix> mats;
  const AbelianGroup& group = spec.group();
  for (std::size_t k = 0; k < group.rank(); ++k) {
    GroupElement g = group.generator(k);
    Cyclotomic base = rho(g), c = spec.chi()(g).pow(sign);
    Vector diag;
    Cyclotomic v = base;
    for (long i = 0; i < d; ++i) {
      diag.push_back(v);
      v *= c;
    }
    mats.push_back(Matrix::diagonal(diag));
  }
  return mats;
}

ModuleRep make(std::size_t d, std::vector<Matrix> group, Matrix x, Matrix y) {
  ModuleRep m;
  m.dim = d;
  m.group = std::move(group);
  m.X = std::move(x);
  m.Y = std::move(y);
  m.presentation = Presentation::Normalized;
  return m;
}

}  // namespace

Subgroup skew_kernel(const AlgebraSpec& spec, Family family) {
  return char_kernel(spec.group(), family == Family::SkewVy ? spec.eta() : spec.chi());
}

Cyclotomic wind_value(const AlgebraSpec& spec, const GroupCharacter& rho, long i, int sign) {
  Cyclotomic s;
  for (long k = 0; k < i; ++k) s += rho(winding(spec.chi(), spec.e_norm(), -sign * k));
  return s;
}

std::optional<long> vbar_truncation_index(const GroupCharacter& rho, const AlgebraSpec& spec) {
  long n = spec.n_chi();
  for (long d = 1; d <= n; ++d) {
    if (wind_value(spec, rho, d).is_zero()) return d;
  }
  return std::nullopt;
}

ModuleRep build_torsion_char(const GroupCharacter& lambda, const AlgebraSpec& spec) {
  if (lambda.values().size() != spec.group().rank()) throw Error("group mismatch");
  if (spec.mode() == Mode::DifferentialOperator && !lambda(spec.e_norm()).is_zero()) {
    throw Error("relation yx − xy = e unsatisfiable in dimension 1");
  }
  std::vector<Matrix> group;
  for (const auto& v : lambda.values()) group.push_back(Matrix::diagonal({v}));
  return make(1, std::move(group), Matrix(1, 1), Matrix(1, 1));
}

ModuleRep build_induced_skew(const Cyclotomic& kx, const Cyclotomic& ky, const SubgroupCharacter& lambda,
                             const AlgebraSpec& spec) {
  require_mode(spec, Mode::SkewGroupRing);
  if (kx.is_zero() || ky.is_zero()) throw Error("not X-torsion-free");
  Subgroup n = char_kernel(spec.group(), std::vector<Character>{spec.chi(), spec.eta()});
  require_kernel(lambda, n);
  std::vector<GroupElement> reps = n.coset_reps();
  auto group = induced_action(spec.group(), n, reps, lambda);
  return make(reps.size(), std::move(group), diagonal_by(reps, spec.chi(), kx), diagonal_by(reps, spec.eta(), ky));
}

ModuleRep build_Vx_skew(const Cyclotomic& alpha, const SubgroupCharacter& lambda, const AlgebraSpec& spec) {
  require_mode(spec, Mode::SkewGroupRing);
  if (alpha.is_zero()) throw Error("alpha must be nonzero");
  Cyclic cy = cyclic_data(spec.c(), spec.chi(), "chi(c)");
  Subgroup n = char_kernel(spec.group(), spec.chi());
  require_kernel(lambda, n);
  auto reps = powers(spec.group(), spec.c(), cy.n);
  auto group = induced_action(spec.group(), n, reps, lambda);
  std::size_t d = static_cast<std::size_t>(cy.n);
  return make(d, std::move(group), diagonal_by(reps, spec.chi(), alpha), Matrix(d, d));
}

ModuleRep build_Vy_skew(const Cyclotomic& alpha, const SubgroupCharacter& lambda, const AlgebraSpec& spec) {
  require_mode(spec, Mode::SkewGroupRing);
  if (alpha.is_zero()) throw Error("alpha must be nonzero");
  Cyclic cy = cyclic_data(spec.b(), spec.eta(), "eta(b)");
  Subgroup n = char_kernel(spec.group(), spec.eta());
  require_kernel(lambda, n);
  auto reps = powers(spec.group(), spec.b(), cy.n);
  auto group = induced_action(spec.group(), n, reps, lambda);
  std::size_t d = static_cast<std::size_t>(cy.n);
  return make(d, std::move(group), Matrix(d, d), diagonal_by(reps, spec.eta(), alpha));
}

ModuleRep build_Vxy_skew(const Cyclotomic& alpha_x, const Cyclotomic& alpha_y, const SubgroupCharacter& lambda,
                         long t, const AlgebraSpec& spec) {
  require_mode(spec, Mode::SkewGroupRing);
  if (alpha_x.is_zero() || alpha_y.is_zero()) throw Error("alpha_x and alpha_y must be nonzero");
  Cyclic cy = cyclic_data(spec.c(), spec.chi(), "chi(c)");
  if (std::gcd(t, cy.n) != 1) outside("gcd(t, n) != 1");
  if (spec.chi().pow(t) != spec.eta()) outside("eta != chi^t");
  Subgroup n = char_kernel(spec.group(), spec.chi());
  require_kernel(lambda, n);
  auto reps = powers(spec.group(), spec.c(), cy.n);
  auto group = induced_action(spec.group(), n, reps, lambda);
  return make(reps.size(), std::move(group), diagonal_by(reps, spec.chi(), alpha_x),
              diagonal_by(reps, spec.eta(), alpha_y));
}

ModuleRep build_Vbar_diff(const GroupCharacter& rho, const AlgebraSpec& spec) {
  require_mode(spec, Mode::DifferentialOperator);
  auto dd = vbar_truncation_index(rho, spec);
  if (!dd) throw Error("no finite-dimensional torsion quotient for this ρ");
  long d = *dd;
  std::size_t sd = static_cast<std::size_t>(d);
  Matrix x(sd, sd), y(sd, sd);
  for (long i = 0; i + 1 < d; ++i) x(i + 1, i) = Cyclotomic(1);
  for (long i = 1; i < d; ++i) y(i - 1, i) = wind_value(spec, rho, i);
  return make(sd, twisted_group_action(spec, rho, d, -1), x, y);
}

ModuleRep build_Vx_diff(const GroupCharacter& rho, const Cyclotomic& lambda, const Cyclotomic& mu,
                        const AlgebraSpec& spec) {
  require_mode(spec, Mode::DifferentialOperator);
  if (lambda.is_zero()) throw Error("lambda must be nonzero");
  long n = spec.n_chi();
  if (!wind_value(spec, rho, n).is_zero()) throw Error("relation yx − xy = e fails: ρ([e]_n) ≠ 0");
  std::size_t sn = static_cast<std::size_t>(n);
  Matrix x(sn, sn), y(sn, sn);
  for (long i = 0; i + 1 < n; ++i) x(i + 1, i) = Cyclotomic(1);
  x(0, sn - 1) += lambda;
  y(sn - 1, 0) += lambda.inverse() * mu;
  for (long i = 1; i < n; ++i) y(i - 1, i) = mu + wind_value(spec, rho, i);
  return make(sn, twisted_group_action(spec, rho, n, -1), x, y);
}

ModuleRep build_Vy_diff(const GroupCharacter& rho, const Cyclotomic& lambda, const Cyclotomic& mu,
                        const AlgebraSpec& spec) {
  require_mode(spec, Mode::DifferentialOperator);
  if (mu.is_zero()) throw Error("mu must be nonzero");
  long n = spec.n_chi();
  if (!wind_value(spec, rho, n, -1).is_zero()) throw Error("relation yx − xy = e fails: ρ([e]_n) ≠ 0");
  std::size_t sn = static_cast<std::size_t>(n);
  Matrix x(sn, sn), y(sn, sn);
  for (long i = 0; i + 1 < n; ++i) y(i + 1, i) = Cyclotomic(1);
  y(0, sn - 1) += mu;
  x(sn - 1, 0) += mu.inverse() * lambda;
  for (long i = 1; i < n; ++i) x(i - 1, i) = lambda - wind_value(spec, rho, i, -1);
  return make(sn, twisted_group_action(spec, rho, n, 1), x, y);
}

ModuleRep build(const SimpleParams& p, const AlgebraSpec& spec) {
  switch (p.family) {
    case Family::TorsionChar:
      return build_torsion_char(p.rho, spec);
    case Family::SkewVx:
      return build_Vx_skew(p.alpha, p.lambda_n, spec);
    case Family::SkewVy:
      return build_Vy_skew(p.alpha, p.lambda_n, spec);
    case Family::SkewVxy:
      return build_Vxy_skew(p.alpha, p.alpha_y, p.lambda_n, p.t, spec);
    case Family::DiffVbar:
      return build_Vbar_diff(p.rho, spec);
    case Family::DiffVx:
      return build_Vx_diff(p.rho, p.lambda, p.mu, spec);
    case Family::DiffVy:
      return build_Vy_diff(p.rho, p.lambda, p.mu, spec);
  }
  throw Error("unknown family");
}

bool iso_criterion(const SimpleParams& a, const SimpleParams& b, const AlgebraSpec& spec) {
  if (a.family != b.family) return false;
  switch (a.family) {
    case Family::TorsionChar:
    case Family::DiffVbar:
      return a.rho == b.rho;
    case Family::SkewVx:
    case Family::SkewVy: {
      if (!(a.lambda_n == b.lambda_n)) return false;
      Cyclotomic q = a.family == Family::SkewVx ? spec.chi()(spec.c()) : spec.eta()(spec.b());
      long n = *multiplicative_order(q);
      for (long i = 0; i < n; ++i) {
        if (a.alpha == q.pow(i) * b.alpha) return true;
      }
      return false;
    }
    case Family::SkewVxy: {
      if (!(a.lambda_n == b.lambda_n) || a.t != b.t) return false;
      Cyclotomic q = spec.chi()(spec.c());
      long n = *multiplicative_order(q);
      for (long i = 0; i < n; ++i) {
        if (a.alpha == q.pow(i) * b.alpha && a.alpha_y == q.pow(i * a.t) * b.alpha_y) return true;
      }
      return false;
    }
    case Family::DiffVx: {
      if (a.lambda != b.lambda) return false;
      for (long k = 0; k < spec.n_chi(); ++k) {
        if (a.rho == b.rho.twist(spec.chi(), -k) && a.mu == b.mu + wind_value(spec, b.rho, k)) return true;
      }
      return false;
    }
    case Family::DiffVy: {
      if (a.mu != b.mu) return false;
      for (long k = 0; k < spec.n_chi(); ++k) {
        if (a.rho == b.rho.twist(spec.chi(), k) && a.lambda == b.lambda - wind_value(spec, b.rho, k, -1)) return true;
      }
      return false;
    }
  }
  return false;
}

namespace {

[[noreturn]] void unclassifiable(const std::string& why) { throw Error("unclassifiable: " + why); }

std::vector<Vector> mat_columns(const Matrix& b) {
  std::vector<Vector> out(b.cols(), Vector(b.rows()));
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < b.rows(); ++i) out[j][i] = b(i, j);
  }
  return out;
}

// Basis of {v in span(w) : a v = s v}.
std::vector<Vector> eigen_within(const Matrix& a, const Cyclotomic& s, const std::vector<Vector>& w, std::size_t d) {
  Matrix b = from_columns(w, d);
  Matrix shifted = a - s * Matrix::identity(d);
  std::vector<Vector> out;
  for (const auto& k : (shifted * b).nullspace()) out.push_back(b * k);
  return out;
}

// Eigenvalue u of a on span(w) with a^p = s, for p with a^p scalar.
std::optional<std::pair<Cyclotomic, std::vector<Vector>>> find_eigen(const Matrix& a, long p, int conductor,
                                                                     const std::vector<Vector>& w, std::size_t d) {
  auto s = a.pow(p).scalar_value();
  if (!s) return std::nullopt;
  auto r = nth_root(*s, static_cast<int>(p));
  if (!r) return std::nullopt;
  int big_n = std::max(conductor, r->conductor());
  for (int sign : {1, -1}) {
    for (int j = 0; j < big_n; ++j) {
      Cyclotomic cand = Cyclotomic(sign) * *r * root_of_unity(big_n, j);
      if (cand.pow(p) != *s) continue;
      auto space = eigen_within(a, cand, w, d);
      if (!space.empty()) return std::make_pair(cand, space);
    }
  }
  return std::nullopt;
}

// A joint eigenvector of the group action and its character.
std::pair<Vector, GroupCharacter> joint_eigenvector(const ModuleRep& m, const AlgebraSpec& spec,
                                                    std::vector<Vector> w) {
  long p = spec.n_chi();
  std::vector<Cyclotomic> vals;
  for (std::size_t k = 0; k < m.group.size(); ++k) {
    long order = spec.group().generator_order(k);
    long pk = order > 0 ? std::lcm(p, order) : p;
    auto found = find_eigen(m.group[k], pk, spec.conductor(), w, m.dim);
    if (!found) unclassifiable("no exact eigenvalue for g" + std::to_string(k + 1));
    vals.push_back(found->first);
    w = found->second;
  }
  if (w.empty()) unclassifiable("empty joint eigenspace");
  return {w[0], GroupCharacter(spec.group(), vals)};
}

// s with a v = s v.
Cyclotomic eigenvalue_on(const Matrix& a, const Vector& v) {
  Vector av = a * v;
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  if (k == v.size()) unclassifiable("zero vector");
  Cyclotomic s = av[k] / v[k];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (av[i] != s * v[i]) unclassifiable("vector is not an eigenvector");
  }
  return s;
}

std::vector<Vector> whole_space(std::size_t d) { return mat_columns(Matrix::identity(d)); }

SubgroupCharacter scalar_character(const ModuleRep& m, const Subgroup& n) {
  std::vector<Cyclotomic> vals;
  for (const auto& row : n.basis()) {
    auto s = group_matrix(m, GroupElement{row}).scalar_value();
    if (!s) unclassifiable("N does not act by scalars");
    vals.push_back(*s);
  }
  return SubgroupCharacter(n, vals);
}

Cyclotomic scalar_root(const Matrix& a, long n) {
  auto s = a.pow(n).scalar_value();
  if (!s) unclassifiable("the n-th power does not act by a scalar");
  auto r = nth_root(*s, static_cast<int>(n));
  if (!r) unclassifiable("no n-th root in the field");
  return *r;
}

SimpleParams classify_params(const ModuleRep& m, const AlgebraSpec& spec) {
  TorsionProfile prof = torsion_profile(m);
  if (prof.x == TorsionKind::Mixed || prof.y == TorsionKind::Mixed) unclassifiable("mixed torsion profile");
  SimpleParams p;
  bool xt = prof.x == TorsionKind::Torsion, yt = prof.y == TorsionKind::Torsion;
  if (spec.mode() == Mode::SkewGroupRing) {
    if (xt && yt) {
      if (m.dim != 1) unclassifiable("torsion simple module of dimension > 1");
      p.family = Family::TorsionChar;
      std::vector<Cyclotomic> vals;
      for (const auto& g : m.group) vals.push_back(g(0, 0));
      p.rho = GroupCharacter(spec.group(), vals);
      return p;
    }
    long n = static_cast<long>(m.dim);
    if (!xt && yt) {
      p.family = Family::SkewVx;
      p.lambda_n = scalar_character(m, skew_kernel(spec, p.family));
      p.alpha = scalar_root(m.X, n);
      return p;
    }
    if (xt && !yt) {
      p.family = Family::SkewVy;
      p.lambda_n = scalar_character(m, skew_kernel(spec, p.family));
      p.alpha = scalar_root(m.Y, n);
      return p;
    }
    p.family = Family::SkewVxy;
    long nc = spec.chi().order();
    bool found = false;
    for (long t = 1; t <= nc && !found; ++t) {
      if (std::gcd(t, nc) == 1 && spec.chi().pow(t) == spec.eta()) {
        p.t = t;
        found = true;
      }
    }
    if (!found) unclassifiable("eta is not chi^t with gcd(t, n) = 1");
    p.lambda_n = scalar_character(m, skew_kernel(spec, p.family));
    p.alpha = scalar_root(m.X, n);
    auto space = eigen_within(m.X, p.alpha, whole_space(m.dim), m.dim);
    if (space.empty()) unclassifiable("alpha_x is not an eigenvalue");
    p.alpha_y = eigenvalue_on(m.Y, space[0]);
    return p;
  }
  if (!xt) {
    p.family = Family::DiffVx;
    auto s = m.X.pow(spec.n_chi()).scalar_value();
    if (!s) unclassifiable("x^n does not act by a scalar");
    p.lambda = *s;
    auto [v, rho] = joint_eigenvector(m, spec, whole_space(m.dim));
    p.rho = rho;
    p.mu = eigenvalue_on(m.X * m.Y, v);
    return p;
  }
  if (!yt) {
    p.family = Family::DiffVy;
    auto s = m.Y.pow(spec.n_chi()).scalar_value();
    if (!s) unclassifiable("y^n does not act by a scalar");
    p.mu = *s;
    auto [v, rho] = joint_eigenvector(m, spec, whole_space(m.dim));
    p.rho = rho;
    p.lambda = eigenvalue_on(m.Y * m.X, v);
    return p;
  }
  p.family = Family::DiffVbar;
  auto ker = m.Y.nullspace();
  if (ker.empty()) unclassifiable("y has no kernel");
  auto [v, rho] = joint_eigenvector(m, spec, ker);
  p.rho = rho;
  return p;
}

}  // namespace

SimpleParams classify_simple(const ModuleRep& input, const AlgebraSpec& spec, std::uint64_t seed) {
  ModuleRep m = to_presentation(input, spec, Presentation::Normalized);
  if (m.dim == 0 || !rep_check(m, spec).ok() || !is_simple_burnside(m).simple) {
    throw Error("classify_simple requires a simple module");
  }
  SimpleParams p = classify_params(m, spec);
  ModuleRep rebuilt;
  try {
    rebuilt = build(p, spec);
  } catch (const Error& e) {
    unclassifiable(std::string("rebuilding failed: ") + e.what());
  }
  if (!are_isomorphic(rebuilt, m, seed).isomorphic) unclassifiable("rebuilt module is not isomorphic");
  return p;
}

}  // namespace orehopf
