#pragma once

// Decomposition of a binary code C with an automorphism sigma of odd prime
// order p (c cycles of length p followed by f fixed points):
//
//   C = F_sigma(C) (+) E_sigma(C),   C_pi = pi(F_sigma(C)),
//   C_phi = phi(E_sigma(C)*) = M_1 (+) ... (+) M_r,
//
// and the inverse assembly of C from C_pi and the module components M_j.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "gf2.hpp"

namespace lcdforge {

class NotAnAutomorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// sigma = Omega_1 ... Omega_c (cp+1) ... (cp+f), Omega_i = ((i-1)p+1, ..., ip).
class SigmaPermutation {
 public:
  SigmaPermutation() = default;
  SigmaPermutation(int p, int c, int f) : p_(p), c_(c), f_(f) {
    require_odd_prime(p);
    if (c < 0 || f < 0) throw std::invalid_argument("cycle and fixed-point counts must be nonnegative");
    detail::checked_length(n());
  }

  int p() const noexcept { return p_; }
  int c() const noexcept { return c_; }
  int f() const noexcept { return f_; }
  std::size_t n() const noexcept { return static_cast<std::size_t>(c_ * p_ + f_); }
  std::size_t cycle_part() const noexcept { return static_cast<std::size_t>(c_ * p_); }

  /// Image of each coordinate (0-based).
  std::vector<std::size_t> images() const {
    std::vector<std::size_t> img(n());
    for (std::size_t i = 0; i < n(); ++i) {
      if (i < cycle_part()) {
        const std::size_t base = i - i % static_cast<std::size_t>(p_);
        img[i] = base + (i - base + 1) % static_cast<std::size_t>(p_);
      } else {
        img[i] = i;
      }
    }
    return img;
  }

  /// v sigma: the entry at coordinate i moves to coordinate sigma(i). On a
  /// cycle block this is multiplication of the block polynomial by x.
  BitVector apply(const BitVector& v) const {
    require_length(v.size());
    BitVector out(n());
    for (int b = 0; b < c_; ++b) out = out ^ block_to_vector(block(v, b).shifted(1), b);
    for (std::size_t i = cycle_part(); i < n(); ++i) out.set(i, v.test(i));
    return out;
  }

  /// The cycle polynomial of block b.
  RingPoly block(const BitVector& v, int b) const {
    const auto off = static_cast<std::size_t>(b * p_);
    return RingPoly(p_, (v.word() >> off) & detail::low_mask(static_cast<std::size_t>(p_)));
  }
  BitVector block_to_vector(const RingPoly& a, int b) const {
    return BitVector::from_word(n(), a.bits() << static_cast<std::size_t>(b * p_));
  }

  /// "(1,2,...,7)(8,...,14)" style, 1-based, fixed points omitted.
  std::string to_string() const {
    std::string s;
    for (int b = 0; b < c_; ++b) {
      s += '(';
      for (int i = 0; i < p_; ++i) {
        if (i) s += ',';
        s += std::to_string(b * p_ + i + 1);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  void require_length(std::size_t len) const {
    if (len != n()) {
      throw std::invalid_argument("length " + std::to_string(len) + " does not match sigma of degree " +
                                  std::to_string(n()));
    }
  }

  friend bool operator==(const SigmaPermutation&, const SigmaPermutation&) = default;

 private:
  int p_ = 3;
  int c_ = 0;
  int f_ = 0;
};

inline bool is_automorphism(const BinaryCode& c, const SigmaPermutation& sigma) {
  sigma.require_length(c.length());
  for (const auto& g : c.generator()) {
    if (!c.contains(sigma.apply(g))) return false;
  }
  return true;
}

/// Basis of {a : sum_i a_i rows_i = 0}, vectors of length rows.size().
inline std::vector<BitVector> left_kernel(std::span<const BitVector> rows) {
  const std::size_t k = rows.size();
  if (k == 0) return {};
  const std::size_t cols = rows.front().size();
  std::vector<BitVector> columns;
  columns.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    BitVector col(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].test(j)) col.set(i);
    }
    columns.push_back(col);
  }
  return dual_code(BinaryCode(k, columns)).generator();
}

namespace detail {

inline BinaryCode combine(const BinaryCode& c, std::span<const BitVector> coefficient_rows) {
  const auto& g = c.generator();
  std::vector<BitVector> out;
  for (const auto& a : coefficient_rows) {
    BitVector v(c.length());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (a.test(i)) v ^= g[i];
    }
    out.push_back(v);
  }
  return BinaryCode(c.length(), out);
}

inline void require_automorphism(const BinaryCode& c, const SigmaPermutation& sigma) {
  if (!is_automorphism(c, sigma)) throw NotAnAutomorphismError("sigma " + sigma.to_string() + " is not an automorphism");
}

/// Parities of v on each cycle, then v on each fixed point.
inline BitVector parity_profile(const BitVector& v, const SigmaPermutation& sigma) {
  BitVector out(static_cast<std::size_t>(sigma.c() + sigma.f()));
  for (int b = 0; b < sigma.c(); ++b) {
    if (sigma.block(v, b).weight() % 2) out.set(static_cast<std::size_t>(b));
  }
  for (int i = 0; i < sigma.f(); ++i) {
    if (v.test(sigma.cycle_part() + static_cast<std::size_t>(i))) out.set(static_cast<std::size_t>(sigma.c() + i));
  }
  return out;
}

}  // namespace detail

/// F_sigma(C) = {v in C : v sigma = v}.
inline BinaryCode fixed_subcode(const BinaryCode& c, const SigmaPermutation& sigma) {
  detail::require_automorphism(c, sigma);
  std::vector<BitVector> diff;
  for (const auto& g : c.generator()) diff.push_back(sigma.apply(g) ^ g);
  return detail::combine(c, left_kernel(diff));
}

/// E_sigma(C): codewords of even weight on every cycle and zero on every
/// fixed point.
inline BinaryCode even_subcode(const BinaryCode& c, const SigmaPermutation& sigma) {
  detail::require_automorphism(c, sigma);
  std::vector<BitVector> profile;
  for (const auto& g : c.generator()) profile.push_back(detail::parity_profile(g, sigma));
  return detail::combine(c, left_kernel(profile));
}

inline bool is_cycle_constant(const BitVector& v, const SigmaPermutation& sigma) {
  for (int b = 0; b < sigma.c(); ++b) {
    const auto w = sigma.block(v, b).weight();
    if (w != 0 && w != sigma.p()) return false;
  }
  return true;
}

/// pi: one coordinate per cycle, then the fixed points.
inline BitVector pi_project(const BitVector& v, const SigmaPermutation& sigma) {
  sigma.require_length(v.size());
  if (!is_cycle_constant(v, sigma)) throw std::invalid_argument("vector is not constant on the cycles of sigma");
  BitVector out(static_cast<std::size_t>(sigma.c() + sigma.f()));
  for (int b = 0; b < sigma.c(); ++b) out.set(static_cast<std::size_t>(b), v.test(static_cast<std::size_t>(b * sigma.p())));
  for (int i = 0; i < sigma.f(); ++i) {
    out.set(static_cast<std::size_t>(sigma.c() + i), v.test(sigma.cycle_part() + static_cast<std::size_t>(i)));
  }
  return out;
}

inline BinaryCode pi_project(const BinaryCode& fixed, const SigmaPermutation& sigma) {
  std::vector<BitVector> rows;
  for (const auto& g : fixed.generator()) rows.push_back(pi_project(g, sigma));
  return BinaryCode(static_cast<std::size_t>(sigma.c() + sigma.f()), rows);
}

/// pi^{-1}: repeats each cycle coordinate p times.
inline BitVector pi_lift(const BitVector& u, const SigmaPermutation& sigma) {
  if (u.size() != static_cast<std::size_t>(sigma.c() + sigma.f())) throw std::invalid_argument("pi_lift: length mismatch");
  BitVector out(sigma.n());
  for (int b = 0; b < sigma.c(); ++b) {
    if (u.test(static_cast<std::size_t>(b))) out ^= sigma.block_to_vector(RingPoly(sigma.p(), ~std::uint64_t{0}), b);
  }
  for (int i = 0; i < sigma.f(); ++i) {
    out.set(sigma.cycle_part() + static_cast<std::size_t>(i), u.test(static_cast<std::size_t>(sigma.c() + i)));
  }
  return out;
}

inline BinaryCode pi_lift(const BinaryCode& c_pi, const SigmaPermutation& sigma) {
  std::vector<BitVector> rows;
  for (const auto& g : c_pi.generator()) rows.push_back(pi_lift(g, sigma));
  return BinaryCode(sigma.n(), rows);
}

/// E* : deletes the fixed coordinates (which must be zero).
inline BinaryCode truncate_fixed(const BinaryCode& e, const SigmaPermutation& sigma) {
  sigma.require_length(e.length());
  const std::uint64_t fixed_mask = ~detail::low_mask(sigma.cycle_part()) & detail::low_mask(sigma.n());
  std::vector<BitVector> rows;
  for (const auto& g : e.generator()) {
    if (g.word() & fixed_mask) throw std::invalid_argument("codeword is nonzero on a fixed point");
    rows.push_back(BitVector::from_word(sigma.cycle_part(), g.word()));
  }
  return BinaryCode(sigma.cycle_part(), rows);
}

/// Inverse of truncate_fixed: pads zeros on the fixed points.
inline BinaryCode extend_fixed(const BinaryCode& estar, const SigmaPermutation& sigma) {
  if (estar.length() != sigma.cycle_part()) throw std::invalid_argument("extend_fixed: length mismatch");
  std::vector<BitVector> rows;
  for (const auto& g : estar.generator()) rows.push_back(BitVector::from_word(sigma.n(), g.word()));
  return BinaryCode(sigma.n(), rows);
}

/// phi on a single vector of length c*p.
inline std::vector<RingPoly> to_ring_vector(const BitVector& v, int p, int c) {
  if (v.size() != static_cast<std::size_t>(p * c)) throw std::invalid_argument("to_ring_vector: length mismatch");
  std::vector<RingPoly> out;
  for (int b = 0; b < c; ++b) {
    out.emplace_back(p, (v.word() >> static_cast<std::size_t>(b * p)) & detail::low_mask(static_cast<std::size_t>(p)));
  }
  return out;
}

inline BitVector from_ring_vector(std::span<const RingPoly> u) {
  if (u.empty()) return BitVector(0);
  const int p = u.front().modulus();
  std::uint64_t w = 0;
  for (std::size_t b = 0; b < u.size(); ++b) w |= u[b].bits() << (b * static_cast<std::size_t>(p));
  return BitVector::from_word(u.size() * static_cast<std::size_t>(p), w);
}

/// A linear code over the field I_j: generator rows in reduced echelon form
/// over the field (leading entries equal to e_j), so equal codes have equal rows.
struct ModuleCode {
  std::size_t ideal = 0;
  std::size_t length = 0;
  std::vector<std::vector<RingPoly>> rows;

  std::size_t dimension() const { return rows.size(); }
  friend bool operator==(const ModuleCode&, const ModuleCode&) = default;
};

/// Row-reduces the given rows over I_ideal. Every entry must lie in the ideal.
inline ModuleCode make_module(const Factorization& fz, std::size_t ideal, std::size_t length,
                              std::vector<std::vector<RingPoly>> rows) {
  if (ideal == 0 || ideal >= fz.ideals.size()) throw std::out_of_range("module ideal index out of range");
  const IdealField& field = fz.ideals[ideal];
  for (const auto& r : rows) {
    if (r.size() != length) throw std::invalid_argument("module row length mismatch");
    for (const auto& a : r) {
      if (a.modulus() != fz.p || !field.contains(a)) {
        throw std::invalid_argument("module entry " + a.to_string() + " lies outside the ideal");
      }
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const RingPoly inv = field.inverse(rows[rank][col]);
    for (auto& a : rows[rank]) a = a * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const RingPoly factor = rows[r][col];
      for (std::size_t j = 0; j < length; ++j) rows[r][j] = rows[r][j] + factor * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  return ModuleCode{ideal, length, std::move(rows)};
}

/// Binary image phi^{-1}(M) of length c*p: each row times x^0..x^{m-1}.
inline BinaryCode module_binary_image(const Factorization& fz, const ModuleCode& m) {
  const int deg = fz.ideals.at(m.ideal).degree;
  std::vector<BitVector> rows;
  for (const auto& r : m.rows) {
    for (int t = 0; t < deg; ++t) {
      std::vector<RingPoly> shifted;
      for (const auto& a : r) shifted.push_back(a.shifted(t));
      rows.push_back(from_ring_vector(shifted));
    }
  }
  return BinaryCode(m.length * static_cast<std::size_t>(fz.p), rows);
}

/// Multiplies every block of every codeword by the polynomial a.
inline BinaryCode multiply_blocks(const BinaryCode& c, const RingPoly& a) {
  const int p = a.modulus();
  const int blocks = static_cast<int>(c.length()) / p;
  std::vector<BitVector> rows;
  for (const auto& g : c.generator()) {
    auto u = to_ring_vector(g, p, blocks);
    for (auto& x : u) x = x * a;
    rows.push_back(from_ring_vector(u));
  }
  return BinaryCode(c.length(), rows);
}

/// Binary image of the ideal space I_j^c.
inline BinaryCode ideal_space(const Factorization& fz, std::size_t ideal, int c) {
  const IdealField& I = fz.ideals.at(ideal);
  const auto n = static_cast<std::size_t>(c * fz.p);
  std::vector<BitVector> rows;
  for (int b = 0; b < c; ++b) {
    for (int t = 0; t < I.degree; ++t) {
      rows.push_back(BitVector::from_word(n, I.idempotent.shifted(t).bits() << static_cast<std::size_t>(b * fz.p)));
    }
  }
  return BinaryCode(n, rows);
}

/// Converts a binary code lying inside I_ideal^c into a module code.
inline ModuleCode module_from_binary(const Factorization& fz, std::size_t ideal, const BinaryCode& image, int c) {
  std::vector<std::vector<RingPoly>> rows;
  for (const auto& g : image.generator()) rows.push_back(to_ring_vector(g, fz.p, c));
  return make_module(fz, ideal, static_cast<std::size_t>(c), std::move(rows));
}

/// M_1..M_r of C_phi for a code of length c*p that is even on every cycle.
inline std::vector<ModuleCode> phi_project(const BinaryCode& estar, const Factorization& fz, int c) {
  if (estar.length() != static_cast<std::size_t>(c * fz.p)) throw std::invalid_argument("phi_project: length mismatch");
  for (const auto& g : estar.generator()) {
    for (const auto& a : to_ring_vector(g, fz.p, c)) {
      if (a.weight() % 2) throw std::invalid_argument("phi_project: codeword has odd weight on a cycle");
    }
  }
  std::vector<ModuleCode> out;
  for (std::size_t j = 1; j < fz.ideals.size(); ++j) {
    out.push_back(module_from_binary(fz, j, multiply_blocks(estar, fz.ideals[j].idempotent), c));
  }
  return out;
}

/// Binary code with sigma as automorphism, C_pi as its fixed-subcode image
/// and the given module components: lifted C_pi rows plus the binary
/// images of the modules padded with zeros on the fixed points.
inline BinaryCode assemble_code(const BinaryCode& c_pi, std::span<const ModuleCode> modules, const Factorization& fz,
                                const SigmaPermutation& sigma) {
  if (sigma.p() != fz.p) throw std::invalid_argument("factorization and sigma use different primes");
  if (c_pi.length() != static_cast<std::size_t>(sigma.c() + sigma.f())) {
    throw std::invalid_argument("C_pi length differs from c + f");
  }
  std::vector<BitVector> rows = pi_lift(c_pi, sigma).generator();
  for (const auto& m : modules) {
    if (m.length != static_cast<std::size_t>(sigma.c())) throw std::invalid_argument("module length differs from c");
    const BinaryCode image = module_binary_image(fz, m);
    for (const auto& g : image.generator()) rows.push_back(BitVector::from_word(sigma.n(), g.word()));
  }
  return BinaryCode(sigma.n(), rows);
}

struct Decomposition {
  SigmaPermutation sigma;
  BinaryCode fixed;      // F_sigma(C)
  BinaryCode even;       // E_sigma(C)
  BinaryCode even_star;  // E_sigma(C)*
  BinaryCode c_pi;
  std::vector<ModuleCode> modules;  // modules[j-1] = M_j

  std::size_t k_pi() const { return c_pi.dimension(); }
  std::vector<std::size_t> module_dimensions() const {
    std::vector<std::size_t> k;
    for (const auto& m : modules) k.push_back(m.dimension());
    return k;
  }
};

inline Decomposition decompose(const BinaryCode& c, const SigmaPermutation& sigma, const Factorization& fz) {
  if (sigma.p() != fz.p) throw std::invalid_argument("factorization and sigma use different primes");
  Decomposition d;
  d.sigma = sigma;
  d.fixed = fixed_subcode(c, sigma);
  d.even = even_subcode(c, sigma);
  d.even_star = truncate_fixed(d.even, sigma);
  d.c_pi = pi_project(d.fixed, sigma);
  d.modules = phi_project(d.even_star, fz, sigma.c());
  return d;
}

}  // namespace lcdforge
