#include "orehopf/abelian_group.hpp"

#include <numeric>

namespace orehopf {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

void axpy(IntVec& y, long a, const IntVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Unimodular row reduction with pivots searched in the first `width` columns.
// Returns the rank; rows past the rank are zero in those columns.
std::size_t echelon(IntMat& rows, std::size_t width) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < width && row < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = row; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (best == rows.size() || std::labs(rows[r][col]) < std::labs(rows[best][col]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[row], rows[best]);
      bool clean = true;
      for (std::size_t r = row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        axpy(rows[r], -floor_div(rows[r][col], rows[row][col]), rows[row]);
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[row][col] == 0) continue;
    if (rows[row][col] < 0) {
      for (auto& v : rows[row]) v = -v;
    }
    for (std::size_t r = 0; r < row; ++r) axpy(rows[r], -floor_div(rows[r][col], rows[row][col]), rows[row]);
    ++row;
  }
  return row;
}

std::size_t pivot_column(const IntVec& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) return i;
  }
  return row.size();
}

}  // namespace

AbelianGroup::AbelianGroup(int free_rank, IntVec torsion) : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw Error("free rank must be nonnegative");
  for (long n : torsion_) {
    if (n < 2) throw Error("torsion orders must be ≥ 2");
  }
}

long AbelianGroup::generator_order(std::size_t i) const {
  if (i < static_cast<std::size_t>(free_rank_)) return 0;
  return torsion_.at(i - free_rank_);
}

std::optional<long> AbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  long n = 1;
  for (long t : torsion_) n *= t;
  return n;
}

GroupElement AbelianGroup::identity() const { return GroupElement{IntVec(rank(), 0)}; }

GroupElement AbelianGroup::generator(std::size_t i) const {
  GroupElement g = identity();
  g.exps.at(i) = 1;
  return element(g.exps);
}

GroupElement AbelianGroup::element(IntVec exps) const {
  if (exps.size() != rank()) throw Error("group mismatch");
  for (std::size_t i = free_rank_; i < exps.size(); ++i) exps[i] = mod(exps[i], torsion_[i - free_rank_]);
  return GroupElement{std::move(exps)};
}

void AbelianGroup::check(const GroupElement& a) const {
  if (a.exps.size() != rank()) throw Error("group mismatch");
}

GroupElement AbelianGroup::mul(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  IntVec e(rank());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps[i] + b.exps[i];
  return element(std::move(e));
}

GroupElement AbelianGroup::inv(const GroupElement& a) const { return pow(a, -1); }

GroupElement AbelianGroup::pow(const GroupElement& a, long k) const {
  check(a);
  IntVec e(rank());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps[i] * k;
  return element(std::move(e));
}

bool AbelianGroup::is_identity(const GroupElement& a) const { return element(a.exps) == identity(); }

IntMat AbelianGroup::relations() const {
  IntMat rel;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    IntVec r(rank(), 0);
    r[free_rank_ + i] = torsion_[i];
    rel.push_back(std::move(r));
  }
  return rel;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  if (!is_finite()) throw Error("group is infinite");
  std::vector<GroupElement> out;
  IntVec e(rank(), 0);
  while (true) {
    out.push_back(GroupElement{e});
    std::size_t pos = 0;
    while (pos < e.size() && ++e[pos] == torsion_[pos]) e[pos++] = 0;
    if (pos == e.size()) break;
  }
  return out;
}

std::string to_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.exps.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.exps[i]);
  }
  return s + ")";
}

Character::Character(const AbelianGroup& group, IntVec zeta_exponents, int conductor)
    : k_(std::move(zeta_exponents)), conductor_(conductor) {
  if (conductor_ < 1) throw Error("conductor must be positive");
  if (k_.size() != group.rank()) throw Error("character has wrong number of generator values");
  for (std::size_t i = 0; i < k_.size(); ++i) {
    k_[i] = mod(k_[i], conductor_);
    long n = group.generator_order(i);
    if (n != 0 && mod(n * k_[i], conductor_) != 0) {
      throw Error("character value on generator " + std::to_string(i + 1) + " is not an n-th root of unity for its order n");
    }
  }
}

long Character::exponent_at(const GroupElement& g) const {
  if (g.exps.size() != k_.size()) throw Error("group mismatch");
  long s = 0;
  for (std::size_t i = 0; i < k_.size(); ++i) s = mod(s + mod(k_[i] * mod(g.exps[i], conductor_), conductor_), conductor_);
  return s;
}

Cyclotomic Character::operator()(const GroupElement& g) const { return root_of_unity(conductor_, exponent_at(g)); }

long Character::order() const {
  long ord = 1;
  for (long k : k_) ord = std::lcm(ord, conductor_ / std::gcd(k, static_cast<long>(conductor_)));
  return ord;
}

bool Character::is_trivial() const {
  for (long k : k_) {
    if (k != 0) return false;
  }
  return true;
}

Character Character::inverse() const { return pow(-1); }

Character Character::pow(long e) const {
  Character r = *this;
  for (auto& k : r.k_) k = mod(k * mod(e, conductor_), conductor_);
  return r;
}

Character operator*(const Character& a, const Character& b) {
  if (a.conductor_ != b.conductor_) throw Error("conductor mismatch");
  if (a.k_.size() != b.k_.size()) throw Error("group mismatch");
  Character r = a;
  for (std::size_t i = 0; i < r.k_.size(); ++i) r.k_[i] = mod(r.k_[i] + b.k_[i], r.conductor_);
  return r;
}

std::string to_string(const Character& chi) {
  std::string s = "[";
  for (std::size_t i = 0; i < chi.exponents().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(chi.exponents()[i]);
  }
  return s + "]/" + std::to_string(chi.conductor());
}

IntMat hermite_normal_form(IntMat rows, std::size_t width) {
  for (const auto& r : rows) {
    if (r.size() != width) throw Error("ragged integer matrix");
  }
  std::size_t rank = echelon(rows, width);
  rows.resize(rank);
  return rows;
}

IntMat integer_left_kernel(const IntMat& a) {
  if (a.empty()) return {};
  std::size_t m = a.size();
  std::size_t p = a[0].size();
  IntMat aug(m, IntVec(p + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < p; ++j) aug[i][j] = a[i][j];
    aug[i][p + i] = 1;
  }
  std::size_t rank = echelon(aug, p);
  IntMat kernel;
  for (std::size_t r = rank; r < m; ++r) kernel.emplace_back(aug[r].begin() + static_cast<long>(p), aug[r].end());
  return hermite_normal_form(std::move(kernel), m);
}

Subgroup::Subgroup(const AbelianGroup& group, const std::vector<GroupElement>& generators) {
  IntMat rows;
  for (const auto& g : generators) {
    if (g.exps.size() != group.rank()) throw Error("group mismatch");
    rows.push_back(g.exps);
  }
  *this = from_lattice(group, rows);
}

Subgroup Subgroup::from_lattice(const AbelianGroup& group, IntMat lattice) {
  for (auto& r : group.relations()) lattice.push_back(r);
  Subgroup s;
  s.group_ = group;
  s.basis_ = hermite_normal_form(std::move(lattice), group.rank());
  s.full_rank_ = s.basis_.size() == group.rank();
  return s;
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> out;
  for (const auto& r : basis_) out.push_back(group_.element(r));
  return out;
}

namespace {

bool reduce_against(const IntMat& basis, IntVec v, IntVec* coords) {
  if (coords) coords->assign(basis.size(), 0);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    std::size_t p = pivot_column(basis[r]);
    if (v[p] % basis[r][p] != 0) return false;
    long k = v[p] / basis[r][p];
    if (coords) (*coords)[r] = k;
    axpy(v, -k, basis[r]);
  }
  for (long x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

bool Subgroup::contains(const GroupElement& g) const {
  if (g.exps.size() != group_.rank()) throw Error("group mismatch");
  return reduce_against(basis_, g.exps, nullptr);
}

IntVec Subgroup::coordinates(const GroupElement& g) const {
  if (g.exps.size() != group_.rank()) throw Error("group mismatch");
  IntVec coords;
  if (!reduce_against(basis_, g.exps, &coords)) throw Error("element " + to_string(g) + " is not in the subgroup");
  return coords;
}

std::optional<long> Subgroup::index() const {
  if (!full_rank_) return std::nullopt;
  long idx = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) idx *= basis_[i][i];
  return idx;
}

GroupElement Subgroup::coset_rep(const GroupElement& g) const {
  if (!full_rank_) throw Error("subgroup has infinite index");
  IntVec v = g.exps;
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, -floor_div(v[i], basis_[i][i]), basis_[i]);
  return group_.element(v);
}

std::vector<GroupElement> Subgroup::coset_reps() const {
  if (!full_rank_) throw Error("subgroup has infinite index");
  std::vector<GroupElement> out;
  IntVec e(group_.rank(), 0);
  while (true) {
    out.push_back(group_.element(e));
    std::size_t pos = 0;
    while (pos < e.size() && ++e[pos] == basis_[pos][pos]) e[pos++] = 0;
    if (pos == e.size()) break;
  }
  return out;
}

Subgroup char_kernel(const AbelianGroup& group, const std::vector<Character>& chars) {
  std::size_t t = group.rank();
  if (chars.empty()) {
    IntMat id(t, IntVec(t, 0));
    for (std::size_t i = 0; i < t; ++i) id[i][i] = 1;
    return Subgroup::from_lattice(group, id);
  }
  int n = chars[0].conductor();
  std::size_t rcount = chars.size();
  // Solve sum_i k^(r)_i v_i + N w_r = 0 over the integers.
  IntMat a(t + rcount, IntVec(rcount, 0));
  for (std::size_t r = 0; r < rcount; ++r) {
    if (chars[r].conductor() != n) throw Error("conductor mismatch");
    for (std::size_t i = 0; i < t; ++i) a[i][r] = chars[r].exponents()[i];
    a[t + r][r] = n;
  }
  IntMat kernel = integer_left_kernel(a);
  IntMat lattice;
  for (auto& row : kernel) lattice.emplace_back(row.begin(), row.begin() + static_cast<long>(t));
  return Subgroup::from_lattice(group, std::move(lattice));
}

Subgroup char_kernel(const AbelianGroup& group, const Character& chi) {
  return char_kernel(group, std::vector<Character>{chi});
}

std::vector<GroupElement> transversal(const AbelianGroup& group, const Subgroup& sub, const GroupElement& c, long n) {
  if (n < 1) throw Error("not a cyclic transversal");
  auto idx = sub.index();
  if (!idx || *idx != n) throw Error("not a cyclic transversal");
  std::vector<GroupElement> out;
  for (long i = 0; i < n; ++i) {
    GroupElement ci = group.pow(c, i);
    if (i > 0 && sub.contains(ci)) throw Error("not a cyclic transversal");
    out.push_back(ci);
  }
  return out;
}

GroupElement cocycle_gamma(const AbelianGroup& group, long i, long j, const GroupElement& c, long n) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error("out of range");
  return i + j < n ? group.identity() : group.pow(c, n);
}

SubgroupCharacter::SubgroupCharacter(Subgroup sub, std::vector<Cyclotomic> values)
    : sub_(std::move(sub)), values_(std::move(values)) {
  if (values_.size() != sub_.basis().size()) {
    throw Error("subgroup character needs " + std::to_string(sub_.basis().size()) + " values");
  }
  for (const auto& v : values_) {
    if (v.is_zero()) throw Error("subgroup character values must be nonzero");
  }
  for (const auto& rel : sub_.group().relations()) {
    if (!(*this)(sub_.group().element(rel)).is_one() || !(*this)(GroupElement{rel}).is_one()) {
      throw Error("subgroup character is not trivial on torsion relations");
    }
  }
}

SubgroupCharacter SubgroupCharacter::restrict(const Subgroup& sub, const Character& chi) {
  std::vector<Cyclotomic> vals;
  for (const auto& row : sub.basis()) vals.push_back(chi(GroupElement{row}));
  return SubgroupCharacter(sub, std::move(vals));
}

Cyclotomic SubgroupCharacter::operator()(const GroupElement& g) const {
  IntVec coords = sub_.coordinates(g);
  Cyclotomic r(1);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) r *= values_[i].pow(coords[i]);
  }
  return r;
}

bool SubgroupCharacter::operator==(const SubgroupCharacter& other) const {
  return sub_.basis() == other.sub_.basis() && values_ == other.values_;
}

}  // namespace orehopf
