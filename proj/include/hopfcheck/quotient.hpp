#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfcheck/space.hpp"

namespace hopfcheck {

// Quotient of a based space by the span of relation vectors. The quotient
// basis is the set of non-pivot ambient coordinates after leftmost-pivot
// reduction of the relation span, so serialized data is reproducible.
//
// Equality of quotient elements is always decided on projected coordinates,
// never on ambient representatives.
struct QuotientSpace {
  BasedSpace ambient;
  BasedSpace quotient;
  std::vector<SparseVec> relations;
  LinearMap projection;          // ambient -> quotient
  LinearMap section;             // quotient -> ambient
  std::vector<int> basis_cols;   // ambient indices forming the quotient basis

  SparseVec project(const SparseVec& v) const { return projection.apply(v); }
};

inline QuotientSpace quotient_by_relations(const BasedSpace& ambient,
                                           std::vector<SparseVec> relations) {
  const int n = ambient.dim;
  Echelon ech;
  for (const auto& r : relations) {
    for (const auto& [i, v] : r)
      if (i < 0 || i >= n) throw DimensionError("quotient_by_relations: relation out of range");
    ech.insert(r);
  }
  ech.finalize();

  QuotientSpace q;
  q.ambient = ambient;
  q.relations = std::move(relations);
  std::vector<int> coord_of(n, -1);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    if (!ech.has_pivot(i)) {
      coord_of[i] = static_cast<int>(q.basis_cols.size());
      q.basis_cols.push_back(i);
      names.push_back(ambient.label(i));
    }
  }
  q.quotient = BasedSpace(std::move(names));
  q.projection = LinearMap(ambient, q.quotient);
  for (int i = 0; i < n; ++i) {
    if (coord_of[i] >= 0) {
      q.projection.mat.set(coord_of[i], i, Rational(1));
    } else {
      // Pivot coordinate: rewrite through its fully reduced relation row,
      // e_i = -(tail of row) modulo the relation span.
      const SparseVec& row = ech.rows().at(i);
      for (const auto& [c, v] : row) {
        if (c == i) continue;
        q.projection.mat.set(coord_of[c], i, -v);
      }
    }
  }
  q.section = LinearMap(q.quotient, ambient);
  for (size_t k = 0; k < q.basis_cols.size(); ++k)
    q.section.mat.set(q.basis_cols[k], static_cast<int>(k), Rational(1));
  return q;
}

struct InduceResult {
  bool ok = false;
  LinearMap map;  // dom.quotient -> cod.quotient, only meaningful when ok
  SparseVec offending_relation;
  SparseVec offending_image;  // its nonzero image in cod.quotient
};

// Descends an ambient map to the quotients after certifying that
// cod.projection ∘ f annihilates every generator of dom.relations.
inline InduceResult induce_map(const LinearMap& f, const QuotientSpace& dom,
                               const QuotientSpace& cod) {
  if (f.domain.dim != dom.ambient.dim || f.codomain.dim != cod.ambient.dim)
    throw DimensionError("induce_map: map does not match ambient spaces");
  InduceResult res;
  for (const auto& r : dom.relations) {
    SparseVec img = cod.projection.apply(f.apply(r));
    if (!img.empty()) {
      res.offending_relation = r;
      res.offending_image = std::move(img);
      return res;
    }
  }
  res.ok = true;
  res.map = cod.projection.compose(f).compose(dom.section);
  res.map.domain = dom.quotient;
  res.map.codomain = cod.quotient;
  return res;
}

struct MembershipResult {
  bool member = false;
  SparseVec coefficients;  // over the generator list
  SparseVec separating;    // reduced-system row proving non-membership
};

inline MembershipResult subspace_membership(const BasedSpace& space,
                                            const std::vector<SparseVec>& generators,
                                            const SparseVec& v) {
  Matrix A(space.dim, static_cast<int>(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j) {
    for (const auto& [i, x] : generators[j]) {
      if (i < 0 || i >= space.dim)
        throw DimensionError("subspace_membership: generator out of range");
      A.col[j].emplace(i, x);
    }
  }
  for (const auto& [i, x] : v)
    if (i < 0 || i >= space.dim) throw DimensionError("subspace_membership: vector out of range");
  auto sols = rref_solve(A, {v});
  MembershipResult res;
  res.member = sols[0].member;
  res.coefficients = std::move(sols[0].coeffs);
  res.separating = std::move(sols[0].separating);
  return res;
}

}  // namespace hopfcheck
