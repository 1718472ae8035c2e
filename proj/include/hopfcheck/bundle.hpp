#pragma once

#include <optional>
#include <string>

#include "hopfcheck/bicross.hpp"

namespace hopfcheck {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One loadable/serializable object. Interpretation depends on kind:
//   hopf              main is the Hopf algebra
//   bialgebroid       main is the total algebra, base + algebroid sections set
//   bicross           main is A, base is B, action/coaction set
//   bicrossed_module  bicross plus phi
//   hopf2             assembled bundle: main is the total Hopf algebra, base,
//                     algebroid sections, optional algebroid antipode and
//                     optional bicross provenance (factor_a, action, coaction,
//                     phi) used to reconstruct the candidate inverses of λ, μ
struct Bundle {
  std::string kind;
  std::string name;
  HopfData main;
  std::optional<HopfData> base;
  std::optional<LinearMap> source;
  std::optional<LinearMap> target;
  std::optional<LinearMap> algebroid_coproduct;
  std::optional<LinearMap> algebroid_counit;
  std::optional<LinearMap> algebroid_antipode;
  std::optional<HopfData> factor_a;
  std::optional<LinearMap> action;    // B⊗A -> B
  std::optional<LinearMap> coaction;  // A -> B⊗A
  std::optional<LinearMap> phi;       // B -> A
};

inline BicrossData bicross_data_of(const Bundle& b) {
  if (b.kind == "bicross" || b.kind == "bicrossed_module") {
    if (!b.base || !b.action || !b.coaction)
      throw UsageError("bundle '" + b.name + "' lacks bicross sections");
    return BicrossData{b.main, *b.base, *b.action, *b.coaction};
  }
  if (!b.factor_a || !b.base || !b.action || !b.coaction)
    throw UsageError("bundle '" + b.name + "' carries no bicross provenance");
  return BicrossData{*b.factor_a, *b.base, *b.action, *b.coaction};
}

inline Hopf2Algebra assemble_hopf2(const Bundle& b) {
  if (!b.base || !b.source || !b.target || !b.algebroid_coproduct || !b.algebroid_counit)
    throw UsageError("bundle '" + b.name + "' lacks algebroid sections");
  Hopf2Algebra h2;
  h2.hopf = b.main;
  h2.algebroid = build_right_bialgebroid(b.main, *b.base, *b.source, *b.target,
                                         *b.algebroid_coproduct, *b.algebroid_counit);
  h2.algebroid.full_antipode = b.algebroid_antipode;
  if (b.factor_a && b.action && b.coaction && b.phi && b.factor_a->antipode) {
    BicrossedModule bm{BicrossData{*b.factor_a, *b.base, *b.action, *b.coaction}, *b.phi};
    h2.lambda_inv_rep =
        theorem::lambda_inv_rep(*b.factor_a, *b.base, h2.hopf.space, h2.hopf);
    InvertResult inv = invert_matrix(*b.factor_a->antipode);
    if (inv.ok) h2.mu_inv_rep = theorem::mu_inv_rep(bm, h2.hopf.space, h2.hopf, inv.inverse);
  }
  return h2;
}

inline CheckReport check_bicross_prereqs(const BicrossData& d,
                                         const std::optional<LinearMap>& phi) {
  CheckReport rep = check_action_module_algebra(d.as_action_data());
  rep.merge(check_coaction_comodule_coalgebra(d.as_coaction_data()));
  rep.merge(check_bicross_conditions(d));
  if (phi) rep.merge(check_peiffer(BicrossedModule{d, *phi}));
  rep.sort_by_registry();
  return rep;
}

inline const std::vector<std::string>& check_levels() {
  static const std::vector<std::string> levels = {
      "hopf", "bialgebroid", "hopf-algebroid", "full-hopf-algebroid", "hopf2"};
  return levels;
}

namespace detail {

inline CheckReport run_algebroid_levels(Hopf2Algebra& h2, const std::string& level) {
  CheckReport rep = check_bialgebroid_axioms(h2.algebroid);
  if (level == "bialgebroid") return rep;
  rep.merge(check_lambda_bijective(h2.algebroid, h2.lambda_inv_rep, h2.canonical));
  if (level == "hopf-algebroid") {
    rep.sort_by_registry();
    return rep;
  }
  rep.merge(check_mu_bijective(h2.algebroid, h2.mu_inv_rep, h2.canonical));
  if (h2.algebroid.full_antipode) {
    rep.merge(check_full_hopf_antipode(h2.algebroid, *h2.algebroid.full_antipode));
  } else {
    AxiomResult a;
    a.id = "algebroid.antipode-present";
    a.pass = false;
    Witness w;
    w.element = "antipode";
    w.note = "no algebroid antipode data in bundle";
    a.witness = std::move(w);
    rep.add(std::move(a));
  }
  if (level == "full-hopf-algebroid") {
    rep.sort_by_registry();
    return rep;
  }
  rep.merge(check_hopf2_conditions(h2));
  rep.sort_by_registry();
  return rep;
}

}  // namespace detail

// Runs the axiom groups belonging to a level on a bundle. Levels are
// cumulative on the algebroid side:
//   bialgebroid          right-bialgebroid axioms
//   hopf-algebroid       + λ bijectivity (candidate verified when available)
//   full-hopf-algebroid  + μ and the full-antipode axioms
//   hopf2                + the Hopf-2 conditions (i)-(iv)
// Level hopf runs the plain Hopf-algebra suite on the total object (for
// bicross kinds: on the bicrossproduct built from the data, after its
// compatibility prerequisites).
inline CheckReport run_check_level(const Bundle& b, const std::string& level) {
  bool known = false;
  for (const auto& l : check_levels()) known = known || l == level;
  if (!known) throw UsageError("unknown level '" + level + "'");

  if (b.kind == "hopf") {
    if (level != "hopf")
      throw UsageError("level '" + level + "' needs algebroid structure; kind is 'hopf'");
    return check_hopf_axioms(b.main, HopfLevel::Hopf);
  }

  if (b.kind == "bicross" || b.kind == "bicrossed_module") {
    BicrossData d = bicross_data_of(b);
    CheckReport rep = check_bicross_prereqs(d, b.phi);
    if (level == "hopf") {
      if (rep.all_pass()) rep.merge(check_hopf_axioms(build_bicrossproduct(d), HopfLevel::Hopf));
      rep.sort_by_registry();
      return rep;
    }
    if (b.kind == "bicross")
      throw UsageError("level '" + level + "' needs a bicrossed module (phi section)");
    if (!rep.all_pass()) {
      rep.sort_by_registry();
      return rep;
    }
    BuildHopf2Result built = build_hopf2(BicrossedModule{d, *b.phi});
    rep.merge(detail::run_algebroid_levels(built.h2, level));
    rep.sort_by_registry();
    return rep;
  }

  if (b.kind == "bialgebroid" || b.kind == "hopf2") {
    if (level == "hopf") {
      if (b.kind != "hopf2")
        throw UsageError("level 'hopf' needs the Hopf coalgebra sections; kind is 'bialgebroid'");
      return check_hopf_axioms(b.main, HopfLevel::Hopf);
    }
    if (level == "hopf2" && b.kind != "hopf2")
      throw UsageError("level 'hopf2' needs kind 'hopf2'");
    Hopf2Algebra h2 = assemble_hopf2(b);
    return detail::run_algebroid_levels(h2, level);
  }

  throw UsageError("kind '" + b.kind + "' is not checkable; use the build command");
}

}  // namespace hopfcheck
