#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcheck/space.hpp"

namespace hopfcheck {

// Fixed axiom registry. Reports are always emitted in this order, which makes
// them diff-friendly and pins down "first failing axiom" deterministically.
inline const std::vector<std::string>& axiom_registry() {
  static const std::vector<std::string> ids = {
      "hopf.dimension-consistency",
      "hopf.assoc",
      "hopf.unit-left",
      "hopf.unit-right",
      "hopf.coassoc",
      "hopf.counit-left",
      "hopf.counit-right",
      "hopf.comult-multiplicative",
      "hopf.comult-unit",
      "hopf.counit-multiplicative",
      "hopf.counit-unit",
      "hopf.antipode-present",
      "hopf.antipode-left",
      "hopf.antipode-right",
      "action.module-associative",
      "action.module-unit",
      "action.module-algebra-multiplicative",
      "action.module-algebra-unit",
      "coaction.comodule-coassociative",
      "coaction.comodule-counit",
      "coaction.comodule-coalgebra-comult",
      "coaction.comodule-coalgebra-counit",
      "bicross.compat-ii",
      "bicross.compat-iii",
      "bicross.compat-iv",
      "peiffer.phi-antialgebra-map",
      "peiffer.phi-coalgebra-map",
      "peiffer.cond-1",
      "peiffer.cond-2",
      "peiffer.cond-3",
      "peiffer.cond-4",
      "algebroid.source-algebra-map",
      "algebroid.target-antialgebra-map",
      "algebroid.source-target-commute",
      "algebroid.coproduct-well-defined",
      "algebroid.coproduct-bilinear",
      "algebroid.counit-bilinear",
      "algebroid.coassoc",
      "algebroid.counit-left",
      "algebroid.counit-right",
      "algebroid.takeuchi-membership",
      "algebroid.coproduct-multiplicative",
      "algebroid.coproduct-unit",
      "algebroid.counit-unit",
      "algebroid.counit-right-character",
      "algebroid.lambda-well-defined",
      "algebroid.lambda-bijective",
      "algebroid.lambda-inverse-verified",
      "algebroid.mu-well-defined",
      "algebroid.mu-bijective",
      "algebroid.mu-inverse-verified",
      "algebroid.antipode-present",
      "algebroid.antipode-invertible",
      "algebroid.antipode-antialgebra",
      "algebroid.antipode-source-target",
      "algebroid.antipode-mixed-left",
      "algebroid.antipode-mixed-right",
      "hopf2.shared-algebra",
      "hopf2.counit-coalgebra-map",
      "hopf2.source-bialgebra-map",
      "hopf2.target-bialgebra-map",
      "hopf2.cocommutation-well-defined",
      "hopf2.cocommutation",
  };
  return ids;
}

inline int registry_rank(const std::string& id) {
  const auto& ids = axiom_registry();
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return static_cast<int>(i);
  throw std::logic_error("unknown axiom id: " + id);
}

struct Witness {
  std::string element;       // basis tuple label, e.g. "x⊗g" or "(g, x)"
  std::vector<int> indices;  // raw basis indices of the tuple
  std::string lhs;           // both sides rendered in reduced canonical form
  std::string rhs;
  SparseVec lhs_vec;
  SparseVec rhs_vec;
  std::string note;
};

struct AxiomResult {
  std::string id;
  bool pass = false;
  std::optional<Witness> witness;
  std::vector<int> failing_columns;  // every basis tuple where the sides differ
};

struct CheckReport {
  std::vector<AxiomResult> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  const AxiomResult* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  const AxiomResult* first_failure() const {
    for (const auto& e : entries)
      if (!e.pass) return &e;
    return nullptr;
  }

  void add_pass(const std::string& id) { entries.push_back({id, true, std::nullopt, {}}); }

  void add(AxiomResult r) { entries.push_back(std::move(r)); }

  void merge(CheckReport other) {
    for (auto& e : other.entries) entries.push_back(std::move(e));
  }

  void sort_by_registry() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const AxiomResult& a, const AxiomResult& b) {
                       return registry_rank(a.id) < registry_rank(b.id);
                     });
  }
};

// Compares two maps that should agree axiom-wise; witnesses name the first
// differing basis tuple of the common domain.
inline AxiomResult compare_maps(const std::string& id, const LinearMap& lhs,
                                const LinearMap& rhs, const std::string& note = "") {
  if (lhs.mat.rows != rhs.mat.rows || lhs.mat.cols != rhs.mat.cols)
    throw DimensionError("compare_maps(" + id + "): shape mismatch");
  AxiomResult r;
  r.id = id;
  r.failing_columns = lhs.mat.differing_columns(rhs.mat);
  r.pass = r.failing_columns.empty();
  if (!r.pass) {
    int j = r.failing_columns.front();
    Witness w;
    w.element = lhs.domain.label(j);
    w.indices = {j};
    w.lhs_vec = lhs.mat.col[j];
    w.rhs_vec = rhs.mat.col[j];
    w.lhs = render_vec(lhs.codomain, w.lhs_vec);
    w.rhs = render_vec(rhs.codomain, w.rhs_vec);
    w.note = note;
    r.witness = std::move(w);
  }
  return r;
}

inline AxiomResult compare_vecs(const std::string& id, const BasedSpace& space,
                                const SparseVec& lhs, const SparseVec& rhs,
                                const std::string& element, const std::string& note = "") {
  AxiomResult r;
  r.id = id;
  r.pass = (lhs == rhs);
  if (!r.pass) {
    Witness w;
    w.element = element;
    w.lhs_vec = lhs;
    w.rhs_vec = rhs;
    w.lhs = render_vec(space, lhs);
    w.rhs = render_vec(space, rhs);
    w.note = note;
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace hopfcheck
