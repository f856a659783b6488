#pragma once

// LCD predicates at every level of the sigma-decomposition, and the duality
// relations between the decompositions of C and C^perp.
//
// Hermitian duals of module codes are evaluated on binary images: for a
// module M inside I_j^c, w in I_{j'}^c satisfies <v,w> = 0 for all v in M
// exactly when the binary image of w is Euclidean-orthogonal to the binary
// image of M (the image is closed under the cyclic shift, and the
// coefficient of x^k in <v,w> is v . sigma^k(w)).

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "decomposition.hpp"
#include "gf2.hpp"

namespace lcdforge {

inline bool is_lcd(const BinaryCode& c) { return hull(c).dimension() == 0; }

/// <u,v> = sum_j u_j(x) v_j(x^{-1}).
inline RingPoly hermitian_product(std::span<const RingPoly> u, std::span<const RingPoly> v) {
  if (u.size() != v.size()) throw std::invalid_argument("hermitian_product: length mismatch");
  if (u.empty()) throw std::invalid_argument("hermitian_product: empty vectors");
  RingPoly acc = RingPoly::zero(u.front().modulus());
  for (std::size_t j = 0; j < u.size(); ++j) acc = acc + u[j] * v[j].conjugate();
  return acc;
}

/// Binary image of {w in I_target^c : <v,w> = 0 for all v in the code}.
inline BinaryCode hermitian_dual_in(const Factorization& fz, const BinaryCode& image, std::size_t target, int c) {
  return intersect(ideal_space(fz, target, c), dual_code(image));
}

/// Hermitian dual of M_j, a code over the partner ideal of I_j.
inline ModuleCode hermitian_dual(const Factorization& fz, const ModuleCode& m) {
  const std::size_t target = fz.ideals.at(m.ideal).partner;
  const int c = static_cast<int>(m.length);
  return module_from_binary(fz, target, hermitian_dual_in(fz, module_binary_image(fz, m), target, c), c);
}

/// Binary image of the even-weight space P^c.
inline BinaryCode even_space(int p, int c) {
  const auto n = static_cast<std::size_t>(p * c);
  std::vector<BitVector> rows;
  for (int b = 0; b < c; ++b) {
    for (int i = 1; i < p; ++i) {
      rows.push_back(BitVector::from_word(n, RingPoly::from_exponents(p, {0, i}).bits() << static_cast<std::size_t>(b * p)));
    }
  }
  return BinaryCode(n, rows);
}

/// Binary image of C_phi^perp under the Hermitian product on P^c.
inline BinaryCode phi_hermitian_dual(const BinaryCode& estar, int p, int c) {
  return intersect(even_space(p, c), dual_code(estar));
}

struct LcdLevel {
  std::string name;
  std::size_t hull_dimension = 0;   // over F_2
  std::optional<BitVector> witness;  // a nonzero hull vector when hull_dimension > 0
};

struct LcdVerdict {
  bool is_lcd = true;
  std::vector<LcdLevel> levels;

  const LcdLevel* find(std::string_view name) const {
    for (const auto& l : levels) {
      if (l.name == name) return &l;
    }
    return nullptr;
  }
};

namespace detail {

inline LcdLevel level_from(std::string name, const BinaryCode& intersection) {
  LcdLevel l{std::move(name), intersection.dimension(), std::nullopt};
  if (!intersection.generator().empty()) l.witness = intersection.generator().front();
  return l;
}

}  // namespace detail

struct ModuleLcdReport {
  bool ok = true;
  std::vector<LcdLevel> checks;
};

/// M_i ∩ M_i^perp = 0 for self-reciprocal ideals, and M'_j ∩ (M''_j)^perp = 0,
/// M''_j ∩ (M'_j)^perp = 0 for each reciprocal pair. `modules` holds one
/// entry per ideal 1..r, as produced by phi_project.
inline ModuleLcdReport module_lcd_check(std::span<const ModuleCode> modules, const Factorization& fz) {
  ModuleLcdReport rep;
  auto by_ideal = [&](std::size_t j) -> const ModuleCode* {
    for (const auto& m : modules) {
      if (m.ideal == j) return &m;
    }
    return nullptr;
  };
  for (const auto& m : modules) {
    const IdealField& I = fz.ideals.at(m.ideal);
    const BinaryCode mine = module_binary_image(fz, m);
    BinaryCode other_dual;
    std::string name = "M_" + std::to_string(m.ideal);
    if (I.partner == m.ideal) {
      other_dual = dual_code(mine);
      name += " ∩ M_" + std::to_string(m.ideal) + "^perp";
    } else {
      const ModuleCode* partner = by_ideal(I.partner);
      const BinaryCode pimg = partner ? module_binary_image(fz, *partner) : BinaryCode(mine.length());
      other_dual = dual_code(pimg);
      name += " ∩ M_" + std::to_string(I.partner) + "^perp";
    }
    auto level = detail::level_from(name, intersect(mine, other_dual));
    level.hull_dimension /= static_cast<std::size_t>(I.degree);
    if (level.hull_dimension != 0) rep.ok = false;
    rep.checks.push_back(std::move(level));
  }
  return rep;
}

/// LCD verdict assembled from the decomposition: F_sigma, E_sigma, C_pi,
/// the Hermitian hull of C_phi, and the per-module conditions.
inline LcdVerdict lcd_via_structure(const BinaryCode& code, const SigmaPermutation& sigma, const Factorization& fz) {
  const Decomposition d = decompose(code, sigma, fz);
  LcdVerdict v;
  v.levels.push_back(detail::level_from("E_sigma", hull(d.even)));
  v.levels.push_back(detail::level_from("F_sigma", hull(d.fixed)));
  v.levels.push_back(detail::level_from("C_pi", hull(d.c_pi)));
  BinaryCode phi_image(d.even_star.length());
  for (const auto& m : d.modules) phi_image = code_sum(phi_image, module_binary_image(fz, m));
  v.levels.push_back(detail::level_from("C_phi", intersect(phi_image, phi_hermitian_dual(phi_image, fz.p, sigma.c()))));
  const auto mods = module_lcd_check(d.modules, fz);
  v.levels.insert(v.levels.end(), mods.checks.begin(), mods.checks.end());
  for (const auto& l : v.levels) {
    if (l.hull_dimension != 0) v.is_lcd = false;
  }
  return v;
}

struct HullExtension {
  std::size_t before = 0;
  std::size_t after = 0;
  bool holds = true;  // after + 1 >= before
};

/// dim hull(<C, x>) >= dim hull(C) - 1 for x outside C.
inline HullExtension hull_extension_bound(const BinaryCode& c, const BitVector& x) {
  if (c.contains(x)) throw std::invalid_argument("extension vector already lies in the code");
  HullExtension h;
  h.before = hull(c).dimension();
  h.after = hull(c.extended_by(std::span<const BitVector>(&x, 1))).dimension();
  h.holds = h.after + 1 >= h.before;
  return h;
}

/// k of every reciprocal pair of modules agree (M'_j and M''_j).
inline bool k1_equals_k2_check(const Decomposition& d, const Factorization& fz) {
  for (const auto& m : d.modules) {
    const std::size_t partner = fz.ideals.at(m.ideal).partner;
    for (const auto& o : d.modules) {
      if (o.ideal == partner && o.dimension() != m.dimension()) return false;
    }
  }
  return true;
}

/// Relations between the decompositions of C and of C^perp.
struct DualityReport {
  bool pi_dual = false;         // pi(F_sigma(C^perp)) = C_pi^perp
  bool phi_dual = false;        // phi(E_sigma(C^perp)*) = C_phi^perp (Hermitian)
  bool module_duals = false;    // Hermitian dual of M_j = dual-side module in the partner ideal
  bool direct_sum = false;      // hat C_phi = (+)_j M_j^perp, every ideal included
  bool dimension_ledger = false;  // c(p-1)/m = sum k_j + sum hat k_j
};

inline DualityReport duality_transfer(const BinaryCode& code, const SigmaPermutation& sigma, const Factorization& fz) {
  const Decomposition d = decompose(code, sigma, fz);
  const Decomposition dd = decompose(dual_code(code), sigma, fz);
  DualityReport r;
  r.pi_dual = dd.c_pi == dual_code(d.c_pi);
  r.phi_dual = dd.even_star == phi_hermitian_dual(d.even_star, fz.p, sigma.c());
  r.module_duals = true;
  BinaryCode sum(d.even_star.length());
  std::size_t total = 0;
  for (std::size_t j = 0; j < d.modules.size(); ++j) {
    const ModuleCode dual_module = hermitian_dual(fz, d.modules[j]);
    const std::size_t partner = fz.ideals[d.modules[j].ideal].partner;
    if (!(dual_module == dd.modules.at(partner - 1))) r.module_duals = false;
    sum = code_sum(sum, module_binary_image(fz, dual_module));
    total += d.modules[j].dimension() + dd.modules[j].dimension();
  }
  r.direct_sum = sum == dd.even_star;
  r.dimension_ledger = sigma.c() == 0 || total * static_cast<std::size_t>(fz.m) ==
                                              static_cast<std::size_t>(sigma.c() * (fz.p - 1));
  return r;
}

}  // namespace lcdforge
