#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfcheck/linalg.hpp"

namespace hopfcheck {

// A finite-dimensional vector space with a fixed, labelled basis. Labels are
// shared so spaces copy cheaply; equality of spaces is dimensional.
struct BasedSpace {
  int dim = 0;
  std::shared_ptr<const std::vector<std::string>> labels;

  BasedSpace() = default;
  explicit BasedSpace(std::vector<std::string> names)
      : dim(static_cast<int>(names.size())),
        labels(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  const std::string& label(int i) const { return (*labels)[i]; }
};

inline BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(a.dim) * b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) names.push_back(a.label(i) + "⊗" + b.label(j));
  return BasedSpace(std::move(names));
}

struct LinearMap {
  BasedSpace domain;
  BasedSpace codomain;
  Matrix mat;  // codomain.dim x domain.dim

  LinearMap() = default;
  LinearMap(BasedSpace dom, BasedSpace cod)
      : domain(std::move(dom)), codomain(std::move(cod)), mat(codomain.dim, domain.dim) {}
  LinearMap(BasedSpace dom, BasedSpace cod, Matrix m)
      : domain(std::move(dom)), codomain(std::move(cod)), mat(std::move(m)) {
    if (mat.rows != codomain.dim || mat.cols != domain.dim)
      throw DimensionError("LinearMap: matrix shape does not match spaces");
  }

  SparseVec apply(const SparseVec& v) const { return mat.apply(v); }

  LinearMap compose(const LinearMap& inner) const {
    if (inner.codomain.dim != domain.dim)
      throw DimensionError("LinearMap::compose: domain/codomain mismatch");
    return LinearMap(inner.domain, codomain, mat.compose(inner.mat));
  }
};

inline LinearMap identity_map(const BasedSpace& s) {
  return LinearMap(s, s, Matrix::identity(s.dim));
}

inline LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
  return LinearMap(tensor_space(f.domain, g.domain), tensor_space(f.codomain, g.codomain),
                   f.mat.kron(g.mat));
}

// flip: A⊗B -> B⊗A, pure permutation of the pair basis.
inline LinearMap flip_map(const BasedSpace& a, const BasedSpace& b) {
  LinearMap f(tensor_space(a, b), tensor_space(b, a));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) f.mat.set(j * a.dim + i, i * b.dim + j, Rational(1));
  return f;
}

// Renders a vector in reduced canonical form, e.g. "x⊗g + 2·(1⊗gx)".
inline std::string render_vec(const BasedSpace& space, const SparseVec& v) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a == 1)
      out += space.label(i);
    else
      out += format_rational(a) + "·(" + space.label(i) + ")";
    first = false;
  }
  return out;
}

}  // namespace hopfcheck
