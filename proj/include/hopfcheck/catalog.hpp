#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcheck/bundle.hpp"

namespace hopfcheck {

struct FiniteGroupData {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i g_j
  std::vector<std::string> labels;
  int identity = -1;
  std::vector<int> inverse;
};

// Checks the group axioms by enumeration and fills identity/inverse.
// Returns a witness string on failure.
inline std::optional<std::string> validate_group(FiniteGroupData& g) {
  const int n = g.order;
  if (n <= 0) return "empty group";
  if (static_cast<int>(g.table.size()) != n) return "multiplication table has wrong row count";
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(g.table[i].size()) != n) return "row " + std::to_string(i) + " malformed";
    for (int j = 0; j < n; ++j)
      if (g.table[i][j] < 0 || g.table[i][j] >= n)
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range";
  }
  if (g.labels.empty())
    for (int i = 0; i < n; ++i) g.labels.push_back("g" + std::to_string(i));
  if (static_cast<int>(g.labels.size()) != n) return "label count does not match order";
  g.identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && g.table[e][i] == i && g.table[i][e] == i;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) return "no identity element";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
          return "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                 "," + std::to_string(k) + ")";
  g.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (g.table[i][j] == g.identity && g.table[j][i] == g.identity) {
        g.inverse[i] = j;
        break;
      }
    if (g.inverse[i] < 0) return "element " + std::to_string(i) + " has no inverse";
  }
  return std::nullopt;
}

inline FiniteGroupData checked_group(FiniteGroupData g) {
  if (auto err = validate_group(g)) throw ParseError("invalid group table: " + *err);
  return g;
}

inline FiniteGroupData cyclic_group(int n) {
  FiniteGroupData g;
  g.order = n;
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  for (int i = 0; i < n; ++i)
    g.labels.push_back(i == 0 ? "1" : (i == 1 ? "c" : "c" + std::to_string(i)));
  return checked_group(std::move(g));
}

inline FiniteGroupData direct_product(const FiniteGroupData& a, const FiniteGroupData& b) {
  FiniteGroupData g;
  g.order = a.order * b.order;
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int i = 0; i < a.order; ++i)
    for (int j = 0; j < b.order; ++j) {
      g.labels.push_back("(" + a.labels[i] + "|" + b.labels[j] + ")");
      for (int k = 0; k < a.order; ++k)
        for (int l = 0; l < b.order; ++l)
          g.table[i * b.order + j][k * b.order + l] = a.table[i][k] * b.order + b.table[j][l];
    }
  return checked_group(std::move(g));
}

inline FiniteGroupData symmetric3() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  FiniteGroupData g;
  g.order = 6;
  g.table.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    std::string l = "p";
    for (int t = 0; t < 3; ++t) l += static_cast<char>('0' + perms[i][t]);
    g.labels.push_back(l);
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int c[3];
      for (int t = 0; t < 3; ++t) c[t] = perms[i][perms[j][t]];
      for (int k = 0; k < 6; ++k)
        if (c[0] == perms[k][0] && c[1] == perms[k][1] && c[2] == perms[k][2]) g.table[i][j] = k;
    }
  return checked_group(std::move(g));
}

inline FiniteGroupData dihedral4() {
  // r^4 = s^2 = 1, s r s = r^-1; element i*2+j encodes r^i s^j.
  FiniteGroupData g;
  g.order = 8;
  g.table.assign(8, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string l = i ? "r" + (i > 1 ? std::to_string(i) : std::string()) : std::string();
      if (j) l += "s";
      if (l.empty()) l = "1";
      g.labels.push_back(l);
    }
  auto idx = [](int r, int s) { return ((r % 4 + 4) % 4) * 2 + s; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l)
          g.table[idx(i, j)][idx(k, l)] = idx(j ? i - k : i + k, (j + l) % 2);
  return checked_group(std::move(g));
}

inline FiniteGroupData quaternion8() {
  // units 1, i, j, k with both signs; index = base*2 + (sign < 0)
  FiniteGroupData g;
  g.order = 8;
  g.labels = {"1", "m1", "i", "mi", "j", "mj", "k", "mk"};
  // i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j, ji = -k, kj = -i, ik = -j
  static const int base_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg_tab[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  g.table.assign(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int bx = x / 2, sx = x % 2, by = y / 2, sy = y % 2;
      g.table[x][y] = base_tab[bx][by] * 2 + (sx + sy + neg_tab[bx][by]) % 2;
    }
  return checked_group(std::move(g));
}

inline HopfData trivial_hopf() {
  HopfData h;
  h.space = BasedSpace(std::vector<std::string>{"1"});
  h.mult = Matrix(1, 1);
  h.mult.set(0, 0, Rational(1));
  h.unit = unit_vec(0);
  h.comult = Matrix(1, 1);
  h.comult.set(0, 0, Rational(1));
  h.counit = unit_vec(0);
  h.antipode = Matrix::identity(1);
  return h;
}

// Group algebra kG: grouplike coproduct, S(g) = g^{-1}.
inline HopfData group_algebra(const FiniteGroupData& g) {
  const int n = g.order;
  HopfData h;
  h.space = BasedSpace(g.labels);
  h.mult = Matrix(n, n * n);
  h.comult = Matrix(n * n, n);
  Matrix S(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h.mult.set(g.table[i][j], i * n + j, Rational(1));
    h.comult.set(i * n + i, i, Rational(1));
    h.counit.emplace(i, 1);
    S.set(g.inverse[i], i, Rational(1));
  }
  h.unit = unit_vec(g.identity);
  h.antipode = std::move(S);
  return h;
}

// Function Hopf algebra A(G): pointwise product, Δ(f_g) = Σ_{g₁g₂=g} f_{g₁}⊗f_{g₂},
// ε(f_g) = δ_{g,e}, S(f_g) = f_{g⁻¹}, unit Σ_g f_g.
inline HopfData function_hopf_algebra(const FiniteGroupData& g) {
  const int n = g.order;
  HopfData h;
  std::vector<std::string> names;
  for (const auto& l : g.labels) names.push_back("f_" + l);
  h.space = BasedSpace(std::move(names));
  h.mult = Matrix(n, n * n);
  h.comult = Matrix(n * n, n);
  Matrix S(n, n);
  for (int i = 0; i < n; ++i) {
    h.mult.set(i, i * n + i, Rational(1));
    h.unit.emplace(i, 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g.table[a][b] == i) h.comult.set(a * n + b, i, Rational(1));
    S.set(g.inverse[i], i, Rational(1));
  }
  h.counit = unit_vec(g.identity);
  h.antipode = std::move(S);
  return h;
}

// Sweedler's 4-dimensional Hopf algebra on the basis (1, g, x, gx):
// x² = 0, g² = 1, xg + gx = 0, Δ(x) = 1⊗x + x⊗g, Δ(g) = g⊗g,
// ε(x) = 0, ε(g) = 1, S(x) = -xg, S(g) = g.
inline HopfData sweedler_h4() {
  HopfData h;
  h.space = BasedSpace(std::vector<std::string>{"1", "g", "x", "gx"});
  h.mult = Matrix(4, 16);
  auto set = [&](int i, int j, int k, long c) { h.mult.set(k, i * 4 + j, rat(c)); };
  for (int j = 0; j < 4; ++j) set(0, j, j, 1);
  set(1, 0, 1, 1);
  set(2, 0, 2, 1);
  set(3, 0, 3, 1);
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 1, 3, -1);  // x g = -gx
  set(3, 1, 2, -1);  // gx g = -x
  h.unit = unit_vec(0);
  h.comult = Matrix(16, 4);
  h.comult.set(0 * 4 + 0, 0, rat(1));                             // Δ1 = 1⊗1
  h.comult.set(1 * 4 + 1, 1, rat(1));                             // Δg = g⊗g
  h.comult.set(0 * 4 + 2, 2, rat(1));                             // Δx = 1⊗x + x⊗g
  h.comult.set(2 * 4 + 1, 2, rat(1));
  h.comult.set(1 * 4 + 3, 3, rat(1));                             // Δgx = g⊗gx + gx⊗1
  h.comult.set(3 * 4 + 0, 3, rat(1));
  h.counit = SparseVec{{0, rat(1)}, {1, rat(1)}};
  Matrix S(4, 4);
  S.set(0, 0, rat(1));
  S.set(1, 1, rat(1));
  S.set(3, 2, rat(1));   // S(x) = -xg = gx
  S.set(2, 3, rat(-1));  // S(gx) = -x
  h.antipode = std::move(S);
  return h;
}

struct CrossedModuleData {
  FiniteGroupData g;                    // base group G
  FiniteGroupData h;                    // fiber group H
  std::vector<int> boundary;            // ∂ : H -> G
  std::vector<std::vector<int>> action; // action[g][h] = g▷h
};

// Equivariance ∂(g▷h) = g∂(h)g⁻¹ and the Peiffer identity
// ∂(h)▷h' = h h' h⁻¹, plus homomorphism/action sanity, all enumerated.
inline std::optional<std::string> validate_crossed_module(const CrossedModuleData& c) {
  const auto& G = c.g;
  const auto& H = c.h;
  if (static_cast<int>(c.boundary.size()) != H.order) return "boundary has wrong length";
  if (static_cast<int>(c.action.size()) != G.order) return "action has wrong length";
  for (int x = 0; x < G.order; ++x)
    if (static_cast<int>(c.action[x].size()) != H.order)
      return "action row " + std::to_string(x) + " malformed";
  if (c.boundary[H.identity] != G.identity) return "boundary does not preserve the identity";
  for (int a = 0; a < H.order; ++a)
    for (int b = 0; b < H.order; ++b)
      if (c.boundary[H.table[a][b]] != G.table[c.boundary[a]][c.boundary[b]])
        return "boundary is not a homomorphism at (" + H.labels[a] + ", " + H.labels[b] + ")";
  for (int h = 0; h < H.order; ++h)
    if (c.action[G.identity][h] != h) return "identity does not act trivially";
  for (int x = 0; x < G.order; ++x) {
    for (int a = 0; a < H.order; ++a)
      for (int b = 0; b < H.order; ++b)
        if (c.action[x][H.table[a][b]] != H.table[c.action[x][a]][c.action[x][b]])
          return "g = " + G.labels[x] + " does not act by automorphisms";
    for (int y = 0; y < G.order; ++y)
      for (int h = 0; h < H.order; ++h)
        if (c.action[G.table[x][y]][h] != c.action[x][c.action[y][h]])
          return "action is not a group action at (" + G.labels[x] + ", " + G.labels[y] + ")";
  }
  for (int x = 0; x < G.order; ++x)
    for (int h = 0; h < H.order; ++h) {
      int lhs = c.boundary[c.action[x][h]];
      int rhs = G.table[G.table[x][c.boundary[h]]][G.inverse[x]];
      if (lhs != rhs)
        return "equivariance fails at (g, h) = (" + G.labels[x] + ", " + H.labels[h] + ")";
    }
  for (int h = 0; h < H.order; ++h)
    for (int h2 = 0; h2 < H.order; ++h2) {
      int lhs = c.action[c.boundary[h]][h2];
      int rhs = H.table[H.table[h][h2]][H.inverse[h]];
      if (lhs != rhs)
        return "Peiffer identity fails at (h, h') = (" + H.labels[h] + ", " + H.labels[h2] + ")";
    }
  return std::nullopt;
}

// Strict 2-group: horizontal group G1 over objects G0, vertical groupoid
// composition vert[(p,q)] = p∘q defined when src(p) = tgt(q).
struct TwoGroupData {
  FiniteGroupData g0;
  FiniteGroupData g1;
  std::vector<int> src, tgt;              // G1 -> G0
  std::map<std::pair<int, int>, int> vert;
  std::vector<int> ident;                  // G0 -> G1

  bool composable(int p, int q) const { return src[p] == tgt[q]; }
  int vcomp(int p, int q) const { return vert.at({p, q}); }
  int vinv(int e) const {
    for (int f = 0; f < g1.order; ++f)
      if (composable(f, e) && vcomp(f, e) == ident[src[e]] && composable(e, f) &&
          vcomp(e, f) == ident[tgt[e]])
        return f;
    throw ParseError("2-group cell has no vertical inverse");
  }
};

inline std::optional<std::string> validate_two_group(const TwoGroupData& t) {
  const auto& G0 = t.g0;
  const auto& G1 = t.g1;
  if (static_cast<int>(t.src.size()) != G1.order || static_cast<int>(t.tgt.size()) != G1.order)
    return "src/tgt have wrong length";
  if (static_cast<int>(t.ident.size()) != G0.order) return "ident has wrong length";
  for (int e = 0; e < G1.order; ++e)
    if (t.src[e] < 0 || t.src[e] >= G0.order || t.tgt[e] < 0 || t.tgt[e] >= G0.order)
      return "src/tgt out of range";
  for (int a = 0; a < G1.order; ++a)
    for (int b = 0; b < G1.order; ++b) {
      int p = G1.table[a][b];
      if (t.src[p] != G0.table[t.src[a]][t.src[b]]) return "src is not a homomorphism";
      if (t.tgt[p] != G0.table[t.tgt[a]][t.tgt[b]]) return "tgt is not a homomorphism";
    }
  for (int g = 0; g < G0.order; ++g) {
    int e = t.ident[g];
    if (e < 0 || e >= G1.order) return "ident out of range";
    if (t.src[e] != g || t.tgt[e] != g) return "ident(g) is not an endo-cell of g";
  }
  for (int g = 0; g < G0.order; ++g)
    for (int g2 = 0; g2 < G0.order; ++g2)
      if (G1.table[t.ident[g]][t.ident[g2]] != t.ident[G0.table[g][g2]])
        return "ident is not a homomorphism";
  // vertical composition: defined exactly on composable pairs
  for (int p = 0; p < G1.order; ++p)
    for (int q = 0; q < G1.order; ++q) {
      bool defined = t.vert.count({p, q}) != 0;
      if (defined != t.composable(p, q))
        return "vertical table domain mismatch at (" + G1.labels[p] + ", " + G1.labels[q] + ")";
      if (defined) {
        int v = t.vert.at({p, q});
        if (v < 0 || v >= G1.order) return "vertical table out of range";
        if (t.src[v] != t.src[q] || t.tgt[v] != t.tgt[p])
          return "vertical composite has wrong endpoints";
      }
    }
  for (int p = 0; p < G1.order; ++p) {
    if (t.vcomp(p, t.ident[t.src[p]]) != p || t.vcomp(t.ident[t.tgt[p]], p) != p)
      return "identity 2-cells are not neutral";
    bool has_inverse = false;
    for (int f = 0; f < G1.order; ++f)
      if (t.composable(f, p) && t.vcomp(f, p) == t.ident[t.src[p]] && t.composable(p, f) &&
          t.vcomp(p, f) == t.ident[t.tgt[p]])
        has_inverse = true;
    if (!has_inverse) return "cell " + G1.labels[p] + " has no vertical inverse";
  }
  for (int p = 0; p < G1.order; ++p)
    for (int q = 0; q < G1.order; ++q) {
      if (!t.composable(p, q)) continue;
      for (int r = 0; r < G1.order; ++r) {
        if (!t.composable(q, r)) continue;
        if (t.vcomp(t.vcomp(p, q), r) != t.vcomp(p, t.vcomp(q, r)))
          return "vertical composition is not associative";
      }
    }
  // Interchange: (p∘q)·(r∘s) = (p·r)∘(q·s) for vertically composable pairs.
  for (int p = 0; p < G1.order; ++p)
    for (int q = 0; q < G1.order; ++q) {
      if (!t.composable(p, q)) continue;
      for (int r = 0; r < G1.order; ++r)
        for (int s = 0; s < G1.order; ++s) {
          if (!t.composable(r, s)) continue;
          int lhs = G1.table[t.vcomp(p, q)][t.vcomp(r, s)];
          int rhs = t.vcomp(G1.table[p][r], G1.table[q][s]);
          if (lhs != rhs)
            return "interchange law fails at (" + G1.labels[p] + ", " + G1.labels[q] + ", " +
                   G1.labels[r] + ", " + G1.labels[s] + ")";
        }
    }
  return std::nullopt;
}

// 2-group of a crossed module: G1 = G⋉H with (g,h)(g',h') = (gg', h·(g▷h')),
// src(g,h) = g, tgt(g,h) = ∂(h)g, vertical (∂(h)g,h')∘(g,h) = (g,h'h),
// ident(g) = (g,1).
inline TwoGroupData two_group_from_crossed_module(const CrossedModuleData& c) {
  if (auto err = validate_crossed_module(c))
    throw ParseError("invalid crossed module: " + *err);
  const auto& G = c.g;
  const auto& H = c.h;
  TwoGroupData t;
  t.g0 = G;
  auto enc = [&](int g, int h) { return g * H.order + h; };
  FiniteGroupData g1;
  g1.order = G.order * H.order;
  g1.table.assign(g1.order, std::vector<int>(g1.order));
  for (int g = 0; g < G.order; ++g)
    for (int h = 0; h < H.order; ++h) {
      g1.labels.push_back("(" + G.labels[g] + "|" + H.labels[h] + ")");
      for (int g2 = 0; g2 < G.order; ++g2)
        for (int h2 = 0; h2 < H.order; ++h2)
          g1.table[enc(g, h)][enc(g2, h2)] =
              enc(G.table[g][g2], H.table[h][c.action[g][h2]]);
    }
  t.g1 = checked_group(std::move(g1));
  t.src.resize(t.g1.order);
  t.tgt.resize(t.g1.order);
  for (int g = 0; g < G.order; ++g)
    for (int h = 0; h < H.order; ++h) {
      t.src[enc(g, h)] = g;
      t.tgt[enc(g, h)] = G.table[c.boundary[h]][g];
    }
  t.ident.assign(G.order, -1);
  for (int g = 0; g < G.order; ++g) t.ident[g] = enc(g, H.identity);
  for (int p = 0; p < t.g1.order; ++p)
    for (int q = 0; q < t.g1.order; ++q)
      if (t.src[p] == t.tgt[q]) {
        int qg = q / H.order, qh = q % H.order, ph = p % H.order;
        t.vert[{p, q}] = enc(qg, H.table[ph][qh]);
      }
  if (auto err = validate_two_group(t))
    throw ParseError("crossed module produced an invalid 2-group: " + *err);
  return t;
}

// Function algebroid of a finite 2-group: B = A(G0), H = A(G1) with the
// horizontal Hopf structure, s(f_g) = Σ_{src(e)=g} f_e, t(f_g) = Σ_{tgt(e)=g} f_e,
// ε_H(f_e) = [e = id_g] f_g, ▲(f_e) = Σ_{e₁∘e₂=e} f_{e₁}⊗_B f_{e₂} (vertical),
// algebroid antipode f_e -> f_{e^{-1}} (vertical inverse).
inline Bundle two_group_function_algebroid(const TwoGroupData& t, std::string name) {
  if (auto err = validate_two_group(t)) throw ParseError("invalid 2-group: " + *err);
  const int n = t.g1.order, nb = t.g0.order;
  Bundle b;
  b.kind = "hopf2";
  b.name = std::move(name);
  b.main = function_hopf_algebra(t.g1);
  b.base = function_hopf_algebra(t.g0);
  const BasedSpace& H = b.main.space;
  const BasedSpace& B = b.base->space;

  LinearMap s(B, H), tg(B, H);
  for (int e = 0; e < n; ++e) {
    s.mat.set(e, t.src[e], Rational(1));
    tg.mat.set(e, t.tgt[e], Rational(1));
  }
  b.source = std::move(s);
  b.target = std::move(tg);

  LinearMap cp(H, tensor_space(H, H));
  for (const auto& [pq, v] : t.vert) cp.mat.set(pq.first * n + pq.second, v, Rational(1));
  b.algebroid_coproduct = std::move(cp);

  LinearMap eH(H, B);
  for (int g = 0; g < nb; ++g) eH.mat.set(g, t.ident[g], Rational(1));
  b.algebroid_counit = std::move(eH);

  LinearMap S(H, H);
  for (int e = 0; e < n; ++e) S.mat.set(t.vinv(e), e, Rational(1));
  b.algebroid_antipode = std::move(S);
  return b;
}

// Partial linearization of a 2-group: the vertical groupoid algebra KG¹
// (product q∘p when composable, else 0; unit Σ_g id_g) carrying the grouplike
// coproduct Δ(e) = e⊗e, ε(e) = 1, over B = A(G0) with s(f_g) = t(f_g) = id_g,
// ▲(e) = e⊗_B e, ε_H(e) = f_{tgt(e)}, S(e) = vertical inverse.
inline Bundle remark_counterexample(const TwoGroupData& t, std::string name) {
  if (auto err = validate_two_group(t)) throw ParseError("invalid 2-group: " + *err);
  const int n = t.g1.order, nb = t.g0.order;
  Bundle b;
  b.kind = "hopf2";
  b.name = std::move(name);

  HopfData h;
  h.space = BasedSpace(t.g1.labels);
  h.mult = Matrix(n, n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (t.composable(q, p)) h.mult.set(t.vcomp(q, p), p * n + q, Rational(1));
  for (int g = 0; g < nb; ++g) h.unit.emplace(t.ident[g], 1);
  h.comult = Matrix(n * n, n);
  Matrix S(n, n);
  for (int e = 0; e < n; ++e) {
    h.comult.set(e * n + e, e, Rational(1));
    h.counit.emplace(e, 1);
    S.set(t.vinv(e), e, Rational(1));
  }
  h.antipode = S;
  b.main = std::move(h);
  b.base = function_hopf_algebra(t.g0);

  const BasedSpace& H = b.main.space;
  const BasedSpace& B = b.base->space;
  LinearMap s(B, H);
  for (int g = 0; g < nb; ++g) s.mat.set(t.ident[g], g, Rational(1));
  b.target = s;
  b.source = std::move(s);

  LinearMap cp(H, tensor_space(H, H));
  for (int e = 0; e < n; ++e) cp.mat.set(e * n + e, e, Rational(1));
  b.algebroid_coproduct = std::move(cp);

  LinearMap eH(H, B);
  for (int e = 0; e < n; ++e) eH.mat.set(t.tgt[e], e, Rational(1));
  b.algebroid_counit = std::move(eH);
  b.algebroid_antipode = LinearMap(H, H, std::move(S));
  return b;
}

// Assembled mirror bundle (H⋈H_cop over H_cop) with bicross provenance.
inline Bundle mirror_bundle(const HopfData& h, std::string name) {
  BicrossedModule m = build_mirror(h);
  BuildHopf2Result r = build_hopf2(m);
  Bundle b;
  b.kind = "hopf2";
  b.name = std::move(name);
  b.main = r.h2.hopf;
  b.base = m.base.B;
  b.source = r.h2.algebroid.source;
  b.target = r.h2.algebroid.target;
  b.algebroid_coproduct = r.h2.algebroid.coproduct_rep;
  b.algebroid_counit = r.h2.algebroid.counit;
  b.algebroid_antipode = r.h2.algebroid.full_antipode;
  b.factor_a = m.base.A;
  b.action = m.base.action;
  b.coaction = m.base.coaction;
  b.phi = m.phi;
  return b;
}

inline CrossedModuleData crossed_module_z2z2() {
  CrossedModuleData c;
  c.g = cyclic_group(2);
  c.h = cyclic_group(2);
  c.boundary = {0, 0};  // trivial boundary
  c.action = {{0, 1}, {0, 1}};  // trivial action
  if (auto err = validate_crossed_module(c)) throw ParseError("builtin crossed module: " + *err);
  return c;
}

inline Bundle bicrossed_module_bundle(const HopfData& h, std::string name) {
  BicrossedModule m = build_mirror(h);
  Bundle b;
  b.kind = "bicrossed_module";
  b.name = std::move(name);
  b.main = m.base.A;
  b.base = m.base.B;
  b.action = m.base.action;
  b.coaction = m.base.coaction;
  b.phi = m.phi;
  return b;
}

inline std::vector<std::string> builtin_names() {
  return {"sweedler",  "group-z2",  "group-z3",  "group-s3", "func-z2",
          "func-s3",   "bicross-h4", "mirror-h4", "mirror-z2", "mirror-s3",
          "crossed-z2z2", "two-group-z2z2", "remark-scenario1"};
}

struct BuiltinObject {
  std::optional<Bundle> bundle;
  std::optional<CrossedModuleData> crossed;
  std::optional<TwoGroupData> two_group;
};

inline BuiltinObject builtin_object(const std::string& name) {
  BuiltinObject out;
  auto hopf_bundle = [&](HopfData h) {
    Bundle b;
    b.kind = "hopf";
    b.name = name;
    b.main = std::move(h);
    out.bundle = std::move(b);
  };
  if (name == "sweedler") {
    hopf_bundle(sweedler_h4());
  } else if (name == "group-z2") {
    hopf_bundle(group_algebra(cyclic_group(2)));
  } else if (name == "group-z3") {
    hopf_bundle(group_algebra(cyclic_group(3)));
  } else if (name == "group-s3") {
    hopf_bundle(group_algebra(symmetric3()));
  } else if (name == "func-z2") {
    hopf_bundle(function_hopf_algebra(cyclic_group(2)));
  } else if (name == "func-s3") {
    hopf_bundle(function_hopf_algebra(symmetric3()));
  } else if (name == "bicross-h4") {
    out.bundle = bicrossed_module_bundle(sweedler_h4(), name);
  } else if (name == "mirror-h4") {
    out.bundle = mirror_bundle(sweedler_h4(), name);
  } else if (name == "mirror-z2") {
    out.bundle = mirror_bundle(group_algebra(cyclic_group(2)), name);
  } else if (name == "mirror-s3") {
    out.bundle = mirror_bundle(group_algebra(symmetric3()), name);
  } else if (name == "crossed-z2z2") {
    out.crossed = crossed_module_z2z2();
  } else if (name == "two-group-z2z2") {
    out.two_group = two_group_from_crossed_module(crossed_module_z2z2());
    out.bundle = two_group_function_algebroid(*out.two_group, name);
  } else if (name == "remark-scenario1") {
    out.bundle = remark_counterexample(two_group_from_crossed_module(crossed_module_z2z2()),
                                       name);
  } else {
    throw UsageError("unknown builtin '" + name + "'");
  }
  return out;
}

}  // namespace hopfcheck
