#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcheck/report.hpp"

namespace hopfcheck {

// Structure-constant bundle for an algebra/coalgebra/bialgebra/Hopf algebra.
// Nothing is assumed: every axiom is checkable data. Conventions:
//   mult   : n x n^2, column i*n+j holds e_i · e_j
//   comult : n^2 x n, row j*n+k of column i holds the e_j⊗e_k coefficient of Δ(e_i)
//   unit   : coordinates of 1
//   counit : covector, counit[i] = ε(e_i)
//   antipode : optional n x n matrix, stored as data and verified, never assumed
struct HopfData {
  BasedSpace space;
  Matrix mult;
  SparseVec unit;
  Matrix comult;
  SparseVec counit;
  std::optional<Matrix> antipode;

  int dim() const { return space.dim; }

  const SparseVec& mul_basis(int i, int j) const { return mult.col[i * dim() + j]; }

  SparseVec mul(const SparseVec& u, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, a] : u)
      for (const auto& [j, b] : v) add_scaled(out, mul_basis(i, j), a * b);
    return out;
  }

  Rational counit_of(const SparseVec& v) const {
    Rational r(0);
    for (const auto& [i, a] : v) r += vec_get(counit, i) * a;
    return r;
  }

  SparseVec antipode_of(const SparseVec& v) const { return antipode->apply(v); }
};

// Δ(e_i) as a list of (j, k, coefficient) terms.
using CoTerms = std::vector<std::tuple<int, int, Rational>>;

inline std::vector<CoTerms> comult_table(const HopfData& h) {
  const int n = h.dim();
  std::vector<CoTerms> t(n);
  for (int i = 0; i < n; ++i)
    for (const auto& [p, c] : h.comult.col[i]) t[i].emplace_back(p / n, p % n, c);
  return t;
}

inline SparseVec kron_vec(const SparseVec& u, const SparseVec& v, int dim_right) {
  SparseVec out;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) out.emplace(i * dim_right + j, a * b);
  return out;
}

enum class HopfLevel { Algebra, Coalgebra, Bialgebra, Hopf };

inline HopfLevel parse_hopf_level(const std::string& s) {
  if (s == "algebra") return HopfLevel::Algebra;
  if (s == "coalgebra") return HopfLevel::Coalgebra;
  if (s == "bialgebra") return HopfLevel::Bialgebra;
  if (s == "hopf") return HopfLevel::Hopf;
  throw ParseError("unknown hopf level: " + s);
}

namespace detail {

inline AxiomResult check_dims(const HopfData& h) {
  const int n = h.dim();
  AxiomResult r;
  r.id = "hopf.dimension-consistency";
  r.pass = h.mult.rows == n && h.mult.cols == n * n && h.comult.rows == n * n &&
           h.comult.cols == n && (!h.antipode || (h.antipode->rows == n && h.antipode->cols == n));
  if (r.pass) {
    for (const auto& [i, c] : h.unit) r.pass = r.pass && i >= 0 && i < n;
    for (const auto& [i, c] : h.counit) r.pass = r.pass && i >= 0 && i < n;
  }
  if (!r.pass) {
    Witness w;
    w.element = "structure tensors";
    w.note = "structure tensor shapes do not match dim " + std::to_string(n);
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace detail

inline CheckReport check_algebra_axioms(const HopfData& h) {
  const int n = h.dim();
  const BasedSpace& H = h.space;
  CheckReport rep;
  rep.add(detail::check_dims(h));

  BasedSpace H3 = tensor_space(tensor_space(H, H), H);
  LinearMap lhs(H3, H), rhs(H3, H);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int col = (i * n + j) * n + k;
        lhs.mat.col[col] = h.mul(h.mul_basis(i, j), unit_vec(k));
        rhs.mat.col[col] = h.mul(unit_vec(i), h.mul_basis(j, k));
      }
  rep.add(compare_maps("hopf.assoc", lhs, rhs));

  LinearMap ul(H, H), ur(H, H), idm = identity_map(H);
  for (int j = 0; j < n; ++j) {
    ul.mat.col[j] = h.mul(h.unit, unit_vec(j));
    ur.mat.col[j] = h.mul(unit_vec(j), h.unit);
  }
  rep.add(compare_maps("hopf.unit-left", ul, idm));
  rep.add(compare_maps("hopf.unit-right", ur, idm));
  return rep;
}

inline CheckReport check_coalgebra_axioms(const HopfData& h) {
  const int n = h.dim();
  const BasedSpace& H = h.space;
  auto ct = comult_table(h);
  CheckReport rep;

  BasedSpace H3 = tensor_space(tensor_space(H, H), H);
  LinearMap lhs(H, H3), rhs(H, H3);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, k, c] : ct[i]) {
      for (const auto& [a, b, d] : ct[j]) lhs.mat.add((a * n + b) * n + k, i, c * d);
      for (const auto& [a, b, d] : ct[k]) rhs.mat.add((j * n + a) * n + b, i, c * d);
    }
  rep.add(compare_maps("hopf.coassoc", lhs, rhs));

  LinearMap cl(H, H), cr(H, H), idm = identity_map(H);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, k, c] : ct[i]) {
      add_scaled(cl.mat.col[i], unit_vec(k), c * vec_get(h.counit, j));
      add_scaled(cr.mat.col[i], unit_vec(j), c * vec_get(h.counit, k));
    }
  rep.add(compare_maps("hopf.counit-left", cl, idm));
  rep.add(compare_maps("hopf.counit-right", cr, idm));
  return rep;
}

inline CheckReport check_bialgebra_compat(const HopfData& h) {
  const int n = h.dim();
  const BasedSpace& H = h.space;
  BasedSpace HH = tensor_space(H, H);
  auto ct = comult_table(h);
  CheckReport rep;

  LinearMap lhs(HH, HH), rhs(HH, HH);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int col = i * n + j;
      lhs.mat.col[col] = h.comult.apply(h.mul_basis(i, j));
      SparseVec& out = rhs.mat.col[col];
      for (const auto& [a, b, c1] : ct[i])
        for (const auto& [u, v, c2] : ct[j])
          add_scaled(out, kron_vec(h.mul_basis(a, u), h.mul_basis(b, v), n), c1 * c2);
    }
  rep.add(compare_maps("hopf.comult-multiplicative", lhs, rhs));

  rep.add(compare_vecs("hopf.comult-unit", HH, h.comult.apply(h.unit),
                       kron_vec(h.unit, h.unit, n), "1"));

  BasedSpace K(std::vector<std::string>{"k"});
  LinearMap el(HH, K), er(HH, K);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int col = i * n + j;
      Rational a = h.counit_of(h.mul_basis(i, j));
      Rational b = vec_get(h.counit, i) * vec_get(h.counit, j);
      if (a != 0) el.mat.col[col].emplace(0, a);
      if (b != 0) er.mat.col[col].emplace(0, b);
    }
  rep.add(compare_maps("hopf.counit-multiplicative", el, er));

  AxiomResult cu;
  cu.id = "hopf.counit-unit";
  Rational e1 = h.counit_of(h.unit);
  cu.pass = (e1 == 1);
  if (!cu.pass) {
    Witness w;
    w.element = "1";
    w.lhs = format_rational(e1);
    w.rhs = "1";
    cu.witness = std::move(w);
  }
  rep.add(std::move(cu));
  return rep;
}

inline CheckReport check_antipode_axioms(const HopfData& h) {
  const int n = h.dim();
  const BasedSpace& H = h.space;
  CheckReport rep;
  AxiomResult present;
  present.id = "hopf.antipode-present";
  present.pass = h.antipode.has_value();
  if (!present.pass) {
    Witness w;
    w.element = "antipode";
    w.note = "no antipode data in bundle";
    present.witness = std::move(w);
  }
  bool have = present.pass;
  rep.add(std::move(present));
  if (!have) return rep;

  auto ct = comult_table(h);
  LinearMap sl(H, H), sr(H, H), target(H, H);
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, k, c] : ct[i]) {
      add_scaled(sl.mat.col[i], h.mul(h.antipode->col[j], unit_vec(k)), c);
      add_scaled(sr.mat.col[i], h.mul(unit_vec(j), h.antipode->col[k]), c);
    }
    add_scaled(target.mat.col[i], h.unit, vec_get(h.counit, i));
  }
  rep.add(compare_maps("hopf.antipode-left", sl, target));
  rep.add(compare_maps("hopf.antipode-right", sr, target));
  return rep;
}

// One report entry per axiom at or below the requested level, each failure
// carrying the first offending basis tuple and both sides' coordinates.
inline CheckReport check_hopf_axioms(const HopfData& h, HopfLevel level) {
  CheckReport rep;
  switch (level) {
    case HopfLevel::Algebra:
      rep = check_algebra_axioms(h);
      break;
    case HopfLevel::Coalgebra:
      rep.add(detail::check_dims(h));
      rep.merge(check_coalgebra_axioms(h));
      break;
    case HopfLevel::Bialgebra:
    case HopfLevel::Hopf:
      rep = check_algebra_axioms(h);
      rep.merge(check_coalgebra_axioms(h));
      rep.merge(check_bialgebra_compat(h));
      if (level == HopfLevel::Hopf) rep.merge(check_antipode_axioms(h));
      break;
  }
  rep.sort_by_registry();
  return rep;
}

enum class Variant { Op, Cop, OpCop };

// Opposite / coopposite bialgebra. The antipode is carried over unchanged;
// its axiom status is for callers to re-check (S is an antipode for H_cop
// iff S^{-1} is one for H).
inline HopfData variant(const HopfData& h, Variant which) {
  const int n = h.dim();
  HopfData out = h;
  if (which == Variant::Op || which == Variant::OpCop) {
    Matrix m(n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.col[i * n + j] = h.mult.col[j * n + i];
    out.mult = std::move(m);
  }
  if (which == Variant::Cop || which == Variant::OpCop) {
    Matrix c(n * n, n);
    for (int i = 0; i < n; ++i)
      for (const auto& [p, v] : h.comult.col[i]) c.col[i].emplace((p % n) * n + p / n, v);
    out.comult = std::move(c);
  }
  return out;
}

struct ConvolutionInverseResult {
  bool ok = false;
  LinearMap inverse;
  SparseVec kernel;  // kernel vector of the left-convolution operator when singular
};

// Convolution inverse of f: C -> A in Hom(C, A), computed by solving the
// exact linear system f ⋆ g = η∘ε. In finite dimension a one-sided
// convolution inverse is two-sided; both identities are re-verified.
inline ConvolutionInverseResult convolution_inverse(const LinearMap& f, const HopfData& coalg,
                                                    const HopfData& alg) {
  if (f.domain.dim != coalg.dim() || f.codomain.dim != alg.dim())
    throw DimensionError("convolution_inverse: map does not match the given (co)algebras");
  const int nc = coalg.dim(), na = alg.dim();
  auto ct = comult_table(coalg);
  const int dim = nc * na;  // unknown g as vec, index c*na + a
  Matrix L(dim, dim);
  SparseVec rhs;
  for (int c = 0; c < nc; ++c) {
    for (const auto& [c1, c2, gamma] : ct[c]) {
      SparseVec fc1 = f.apply(unit_vec(c1));
      for (int a = 0; a < na; ++a) {
        SparseVec w = alg.mul(fc1, unit_vec(a));
        for (const auto& [row, val] : w) L.add(c * na + row, c2 * na + a, gamma * val);
      }
    }
    for (const auto& [i, v] : alg.unit) {
      Rational t = vec_get(coalg.counit, c) * v;
      if (t != 0) rhs.emplace(c * na + i, t);
    }
  }
  ConvolutionInverseResult res;
  auto inv = invert_matrix(L);
  if (!inv.ok) {
    res.kernel = std::move(inv.kernel);
    return res;
  }
  SparseVec x = inv.inverse.apply(rhs);
  LinearMap g(f.domain, f.codomain);
  for (const auto& [u, v] : x) g.mat.set(u % na, u / na, v);

  // verify both f ⋆ g and g ⋆ f equal η∘ε
  for (int c = 0; c < nc; ++c) {
    SparseVec s1, s2;
    for (const auto& [c1, c2, gamma] : ct[c]) {
      add_scaled(s1, alg.mul(f.apply(unit_vec(c1)), g.apply(unit_vec(c2))), gamma);
      add_scaled(s2, alg.mul(g.apply(unit_vec(c1)), f.apply(unit_vec(c2))), gamma);
    }
    SparseVec want = scaled(alg.unit, vec_get(coalg.counit, c));
    if (s1 != want || s2 != want)
      throw std::logic_error("convolution_inverse: verification failed");
  }
  res.ok = true;
  res.inverse = std::move(g);
  return res;
}

// Right module-algebra data: carrier ⊗ acting -> carrier.
struct ActionData {
  HopfData acting;
  HopfData carrier;
  LinearMap map;

  SparseVec act(const SparseVec& b, const SparseVec& h) const {
    return map.apply(kron_vec(b, h, acting.dim()));
  }
};

inline CheckReport check_action_module_algebra(const ActionData& a) {
  const int nb = a.carrier.dim(), nh = a.acting.dim();
  const BasedSpace& B = a.carrier.space;
  const BasedSpace& H = a.acting.space;
  if (a.map.domain.dim != nb * nh || a.map.codomain.dim != nb)
    throw DimensionError("check_action_module_algebra: action map shape mismatch");
  auto ct = comult_table(a.acting);
  CheckReport rep;

  // (b◁h)◁h' = b◁(hh')
  BasedSpace D1 = tensor_space(tensor_space(B, H), H);
  LinearMap l1(D1, B), r1(D1, B);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nh; ++j)
      for (int k = 0; k < nh; ++k) {
        int col = (i * nh + j) * nh + k;
        l1.mat.col[col] = a.act(a.act(unit_vec(i), unit_vec(j)), unit_vec(k));
        r1.mat.col[col] = a.act(unit_vec(i), a.acting.mul_basis(j, k));
      }
  rep.add(compare_maps("action.module-associative", l1, r1));

  LinearMap l2(B, B), id = identity_map(B);
  for (int i = 0; i < nb; ++i) l2.mat.col[i] = a.act(unit_vec(i), a.acting.unit);
  rep.add(compare_maps("action.module-unit", l2, id));

  // (bb')◁h = (b◁h₁)(b'◁h₂)
  BasedSpace D2 = tensor_space(tensor_space(B, B), H);
  LinearMap l3(D2, B), r3(D2, B);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nh; ++k) {
        int col = (i * nb + j) * nh + k;
        l3.mat.col[col] = a.act(a.carrier.mul_basis(i, j), unit_vec(k));
        SparseVec& out = r3.mat.col[col];
        for (const auto& [h1, h2, c] : ct[k])
          add_scaled(out,
                     a.carrier.mul(a.act(unit_vec(i), unit_vec(h1)),
                                   a.act(unit_vec(j), unit_vec(h2))),
                     c);
      }
  rep.add(compare_maps("action.module-algebra-multiplicative", l3, r3));

  // 1◁h = ε(h)1
  LinearMap l4(H, B), r4(H, B);
  for (int k = 0; k < nh; ++k) {
    l4.mat.col[k] = a.act(a.carrier.unit, unit_vec(k));
    r4.mat.col[k] = scaled(a.carrier.unit, vec_get(a.acting.counit, k));
  }
  rep.add(compare_maps("action.module-algebra-unit", l4, r4));
  rep.sort_by_registry();
  return rep;
}

// Left comodule-coalgebra data: carrier -> coacting ⊗ carrier,
// δ(c) = c^{[-1]} ⊗ c^{[0]}.
struct CoactionData {
  HopfData coacting;
  HopfData carrier;
  LinearMap map;

  SparseVec coact(const SparseVec& v) const { return map.apply(v); }
};

inline CheckReport check_coaction_comodule_coalgebra(const CoactionData& c) {
  const int na = c.carrier.dim(), nb = c.coacting.dim();
  const BasedSpace& A = c.carrier.space;
  const BasedSpace& B = c.coacting.space;
  if (c.map.domain.dim != na || c.map.codomain.dim != nb * na)
    throw DimensionError("check_coaction_comodule_coalgebra: coaction map shape mismatch");
  auto ctB = comult_table(c.coacting);
  auto ctA = comult_table(c.carrier);
  // δ(e_a) as (w, z, coeff) terms
  std::vector<std::vector<std::tuple<int, int, Rational>>> dl(na);
  for (int i = 0; i < na; ++i)
    for (const auto& [p, v] : c.map.mat.col[i]) dl[i].emplace_back(p / na, p % na, v);
  CheckReport rep;

  // (Δ_B⊗id)δ = (id⊗δ)δ in B⊗B⊗A
  BasedSpace BBA = tensor_space(tensor_space(B, B), A);
  LinearMap l1(A, BBA), r1(A, BBA);
  for (int i = 0; i < na; ++i)
    for (const auto& [w, z, cv] : dl[i]) {
      for (const auto& [w1, w2, d] : ctB[w]) l1.mat.add((w1 * nb + w2) * na + z, i, cv * d);
      for (const auto& [w2, z2, d] : dl[z]) r1.mat.add((w * nb + w2) * na + z2, i, cv * d);
    }
  rep.add(compare_maps("coaction.comodule-coassociative", l1, r1));

  LinearMap l2(A, A), id = identity_map(A);
  for (int i = 0; i < na; ++i)
    for (const auto& [w, z, cv] : dl[i])
      add_scaled(l2.mat.col[i], unit_vec(z), cv * vec_get(c.coacting.counit, w));
  rep.add(compare_maps("coaction.comodule-counit", l2, id));

  // c^{[-1]}⊗c^{[0]}₁⊗c^{[0]}₂ = c₁^{[-1]}c₂^{[-1]}⊗c₁^{[0]}⊗c₂^{[0]} in B⊗A⊗A
  BasedSpace BAA = tensor_space(tensor_space(B, A), A);
  LinearMap l3(A, BAA), r3(A, BAA);
  for (int i = 0; i < na; ++i) {
    for (const auto& [w, z, cv] : dl[i])
      for (const auto& [z1, z2, d] : ctA[z]) l3.mat.add((w * na + z1) * na + z2, i, cv * d);
    for (const auto& [a1, a2, d] : ctA[i])
      for (const auto& [w1, z1, c1] : dl[a1])
        for (const auto& [w2, z2, c2] : dl[a2]) {
          SparseVec prod = c.coacting.mul_basis(w1, w2);
          for (const auto& [p, pv] : prod)
            r3.mat.add((p * na + z1) * na + z2, i, d * c1 * c2 * pv);
        }
  }
  rep.add(compare_maps("coaction.comodule-coalgebra-comult", l3, r3));

  // c^{[-1]}ε(c^{[0]}) = ε(c)1_B
  LinearMap l4(A, B), r4(A, B);
  for (int i = 0; i < na; ++i) {
    for (const auto& [w, z, cv] : dl[i])
      add_scaled(l4.mat.col[i], unit_vec(w), cv * vec_get(c.carrier.counit, z));
    r4.mat.col[i] = scaled(c.coacting.unit, vec_get(c.carrier.counit, i));
  }
  rep.add(compare_maps("coaction.comodule-coalgebra-counit", l4, r4));
  rep.sort_by_registry();
  return rep;
}

}  // namespace hopfcheck
