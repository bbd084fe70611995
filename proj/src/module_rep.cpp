#include "orehopf/module_rep.hpp"

#include <deque>

namespace orehopf {

std::string to_string(Presentation p) { return p == Presentation::Raw ? "raw" : "normalized"; }

std::string to_string(TorsionKind k) {
  switch (k) {
    case TorsionKind::Torsion:
      return "torsion";
    case TorsionKind::TorsionFree:
      return "torsion-free";
    case TorsionKind::Mixed:
      return "mixed";
  }
  return "?";
}

std::vector<Matrix> ModuleRep::generators() const {
  std::vector<Matrix> out = group;
  out.push_back(X);
  out.push_back(Y);
  return out;
}

Matrix group_matrix(const ModuleRep& m, const GroupElement& g) {
  if (g.exps.size() != m.group.size()) throw Error("group mismatch");
  Matrix r = Matrix::identity(m.dim);
  for (std::size_t k = 0; k < g.exps.size(); ++k) {
    if (g.exps[k] != 0) r = r * m.group[k].pow(g.exps[k]);
  }
  return r;
}

Matrix group_algebra_matrix(const ModuleRep& m, const GroupAlgElem& u) {
  Matrix r(m.dim, m.dim);
  for (const auto& [g, coef] : u.terms()) r += coef * group_matrix(m, g);
  return r;
}

namespace {

// Factor relating y and z: y = factor * c * z.
Cyclotomic y_over_cz(const AlgebraSpec& spec) {
  return spec.mode() == Mode::DifferentialOperator ? spec.beta() : Cyclotomic(1);
}

void check_shapes(const ModuleRep& m, const AlgebraSpec& spec) {
  if (m.group.size() != spec.group().rank()) throw Error("module has the wrong number of group matrices");
  auto square = [&](const Matrix& a) { return a.rows() == m.dim && a.cols() == m.dim; };
  for (const auto& g : m.group) {
    if (!square(g)) throw Error("module matrix has the wrong size");
  }
  if (!square(m.X) || !square(m.Y)) throw Error("module matrix has the wrong size");
}

}  // namespace

ModuleRep to_presentation(const ModuleRep& m, const AlgebraSpec& spec, Presentation target) {
  check_shapes(m, spec);
  if (m.presentation == target) return m;
  ModuleRep r = m;
  r.presentation = target;
  Matrix c = group_matrix(m, spec.c());
  Cyclotomic f = y_over_cz(spec);
  if (target == Presentation::Raw) {
    r.Y = f * (c * m.Y);
  } else {
    r.Y = f.inverse() * (group_matrix(m, spec.group().inv(spec.c())) * m.Y);
  }
  return r;
}

Report rep_check(const ModuleRep& m, const AlgebraSpec& spec) {
  check_shapes(m, spec);
  Report report;
  const AbelianGroup& group = spec.group();
  std::size_t r = group.rank();
  auto fact = [&](const std::string& name, bool ok) {
    report.add(name, ok);
    if (!ok) report.witness("relation fails: " + name);
  };

  for (std::size_t k = 0; k < r; ++k) {
    std::string gk = "g" + std::to_string(k + 1);
    fact(gk + " invertible", m.group[k].rank() == m.dim);
    long n = group.generator_order(k);
    if (n > 0) fact(gk + "^" + std::to_string(n) + " = 1", m.group[k].pow(n) == Matrix::identity(m.dim));
    for (std::size_t l = k + 1; l < r; ++l) {
      fact(gk + " g" + std::to_string(l + 1) + " = g" + std::to_string(l + 1) + " " + gk,
           m.group[k] * m.group[l] == m.group[l] * m.group[k]);
    }
  }

  const std::string y = m.presentation == Presentation::Raw ? "y" : "z";
  for (std::size_t k = 0; k < r; ++k) {
    GroupElement g = group.generator(k);
    std::string gk = "g" + std::to_string(k + 1);
    const Matrix& G = m.group[k];
    fact("x " + gk + " = chi(" + gk + ") " + gk + " x", m.X * G == spec.chi()(g) * (G * m.X));
    fact(y + " " + gk + " = eta(" + gk + ") " + gk + " " + y, m.Y * G == spec.eta()(g) * (G * m.Y));
  }

  if (m.presentation == Presentation::Raw) {
    Matrix lhs = m.Y * m.X - spec.q() * (m.X * m.Y);
    fact("yx = q xy + beta(1 - cb)", lhs == group_algebra_matrix(m, spec.e_raw()));
  } else {
    Matrix lhs = m.Y * m.X - m.X * m.Y;
    fact("zx = xz + e", lhs == group_algebra_matrix(m, spec.e_norm()));
  }
  return report;
}

TorsionProfile torsion_profile(const ModuleRep& m) {
  auto kind = [&](const Matrix& a) {
    if (m.dim == 0) return TorsionKind::Torsion;
    if (a.rank() == m.dim) return TorsionKind::TorsionFree;
    if (a.pow(static_cast<long>(m.dim)).is_zero()) return TorsionKind::Torsion;
    return TorsionKind::Mixed;
  };
  return TorsionProfile{kind(m.X), kind(m.Y)};
}

BurnsideCertificate is_simple_burnside(const ModuleRep& m) {
  BurnsideCertificate cert;
  std::size_t d = m.dim;
  cert.full_dimension = d * d;
  if (d == 0) return cert;
  std::vector<Matrix> gens = m.generators();
  SpanBuilder span(d * d);
  std::deque<Matrix> queue;
  Matrix id = Matrix::identity(d);
  span.insert(id.data());
  queue.push_back(id);
  while (!queue.empty() && span.dimension() < d * d) {
    Matrix w = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix p = g * w;
      if (span.insert(p.data())) queue.push_back(std::move(p));
    }
  }
  cert.span_dimension = span.dimension();
  cert.simple = cert.span_dimension == d * d;
  return cert;
}

IsoResult are_isomorphic(const ModuleRep& a, const ModuleRep& b, std::uint64_t seed) {
  IsoResult result;
  if (a.dim != b.dim) {
    result.detail = "dimension mismatch";
    return result;
  }
  if (a.presentation != b.presentation) throw Error("presentation mismatch");
  if (a.group.size() != b.group.size()) throw Error("group mismatch");
  std::size_t d = a.dim;
  if (d == 0) {
    result.isomorphic = true;
    result.intertwiner = Matrix();
    result.detail = "zero modules";
    return result;
  }
  std::vector<Matrix> ga = a.generators(), gb = b.generators();
  // Unknown T_{pq} at column p*d + q; one equation per entry of T A - B T.
  Matrix system(ga.size() * d * d, d * d);
  for (std::size_t s = 0; s < ga.size(); ++s) {
    const Matrix& A = ga[s];
    const Matrix& B = gb[s];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        std::size_t row = s * d * d + i * d + j;
        for (std::size_t l = 0; l < d; ++l) {
          if (!A(l, j).is_zero()) system(row, i * d + l) += A(l, j);
          if (!B(i, l).is_zero()) system(row, l * d + j) -= B(i, l);
        }
      }
    }
  }
  std::vector<Vector> hom = system.nullspace();
  result.hom_dimension = hom.size();
  auto as_matrix = [&](const Vector& v) {
    Matrix t(d, d);
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q < d; ++q) t(p, q) = v[p * d + q];
    }
    return t;
  };
  if (hom.empty()) {
    result.detail = "not isomorphic: no nonzero intertwiner";
    return result;
  }
  std::vector<Matrix> candidates;
  for (const auto& v : hom) candidates.push_back(as_matrix(v));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 20 && hom.size() > 1; ++t) {
    Matrix c(d, d);
    for (std::size_t k = 0; k < hom.size(); ++k) {
      long coef = std::uniform_int_distribution<long>(-5, 5)(rng);
      if (coef != 0) c += Cyclotomic(coef) * candidates[k];
    }
    candidates.push_back(std::move(c));
  }
  for (const auto& t : candidates) {
    if (t.rank() == d) {
      result.isomorphic = true;
      result.intertwiner = t;
      result.detail = "isomorphic: invertible intertwiner found";
      return result;
    }
  }
  bool both_simple = is_simple_burnside(a).simple && is_simple_burnside(b).simple;
  if (both_simple) {
    // A nonzero map between absolutely simple modules is invertible.
    throw Error("singular intertwiner between simple modules");
  }
  result.determinate = false;
  result.detail = "indeterminate: intertwiners exist but none found invertible";
  return result;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  if (a.group.size() != b.group.size() || a.presentation != b.presentation) throw Error("group mismatch");
  std::size_t d = a.dim + b.dim;
  auto block = [&](const Matrix& p, const Matrix& q) {
    Matrix r(d, d);
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t j = 0; j < a.dim; ++j) r(i, j) = p(i, j);
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      for (std::size_t j = 0; j < b.dim; ++j) r(a.dim + i, a.dim + j) = q(i, j);
    }
    return r;
  };
  ModuleRep r;
  r.dim = d;
  r.presentation = a.presentation;
  for (std::size_t k = 0; k < a.group.size(); ++k) r.group.push_back(block(a.group[k], b.group[k]));
  r.X = block(a.X, b.X);
  r.Y = block(a.Y, b.Y);
  return r;
}

ModuleRep conjugate(const ModuleRep& m, const Matrix& t) {
  auto inv = t.inverse();
  if (!inv) throw Error("conjugating matrix is singular");
  ModuleRep r = m;
  for (auto& g : r.group) g = t * g * *inv;
  r.X = t * m.X * *inv;
  r.Y = t * m.Y * *inv;
  return r;
}

Matrix random_invertible(std::size_t d, int conductor, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-2, 2), power(0, conductor - 1);
  for (;;) {
    Matrix t(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) t(i, j) = Cyclotomic(small(rng)) * root_of_unity(conductor, power(rng));
    }
    if (t.rank() == d) return t;
  }
}

}  // namespace orehopf
