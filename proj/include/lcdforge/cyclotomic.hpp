#pragma once

// Arithmetic in F_2[x]/(x^p - 1) for an odd prime p: cyclotomic cosets, the
// factorization of x^p - 1, primitive idempotents of the minimal ideals and
// field arithmetic inside each ideal.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf2.hpp"

namespace lcdforge {

/// Largest ring modulus: coefficients of x^0..x^{p-1} fit one word.
inline constexpr int kMaxModulus = 64;

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

/// Polynomial over GF(2) of degree at most 63; bit i is the coefficient of x^i.
class Gf2Poly {
 public:
  constexpr Gf2Poly() = default;
  constexpr explicit Gf2Poly(std::uint64_t bits) : bits_(bits) {}

  static Gf2Poly from_exponents(std::initializer_list<int> exps) {
    std::uint64_t b = 0;
    for (int e : exps) b ^= std::uint64_t{1} << e;
    return Gf2Poly(b);
  }
  /// x^p - 1 (= x^p + 1 over GF(2)).
  static Gf2Poly x_pow_minus_one(int p) {
    if (p < 1 || p > 63) throw std::out_of_range("x^p - 1 needs 1 <= p <= 63");
    return Gf2Poly((std::uint64_t{1} << p) | 1U);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool is_zero() const noexcept { return bits_ == 0; }
  int degree() const noexcept { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }
  bool coefficient(int i) const { return (bits_ >> i) & 1U; }

  Gf2Poly reciprocal() const {
    const int d = degree();
    std::uint64_t r = 0;
    for (int i = 0; i <= d; ++i) {
      if (coefficient(i)) r |= std::uint64_t{1} << (d - i);
    }
    return Gf2Poly(r);
  }

  /// Descending monomials: "x^3+x+1".
  std::string to_string() const {
    if (bits_ == 0) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (!coefficient(i)) continue;
      if (!s.empty()) s += '+';
      if (i == 0) {
        s += '1';
      } else if (i == 1) {
        s += 'x';
      } else {
        s += "x^" + std::to_string(i);
      }
    }
    return s;
  }

  friend Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return Gf2Poly(a.bits_ ^ b.bits_); }
  friend Gf2Poly operator*(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() || b.is_zero()) return Gf2Poly{};
    if (a.degree() + b.degree() > 63) throw std::overflow_error("Gf2Poly product degree exceeds 63");
    std::uint64_t r = 0;
    for (std::uint64_t m = a.bits_; m != 0; m &= m - 1) r ^= b.bits_ << std::countr_zero(m);
    return Gf2Poly(r);
  }
  friend bool operator==(Gf2Poly, Gf2Poly) = default;
  friend auto operator<=>(Gf2Poly, Gf2Poly) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Quotient and remainder of a by b.
inline std::pair<Gf2Poly, Gf2Poly> divmod(Gf2Poly a, Gf2Poly b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  std::uint64_t q = 0;
  std::uint64_t r = a.bits();
  for (int dr = Gf2Poly(r).degree(); dr >= db; dr = Gf2Poly(r).degree()) {
    q |= std::uint64_t{1} << (dr - db);
    r ^= b.bits() << (dr - db);
  }
  return {Gf2Poly(q), Gf2Poly(r)};
}

inline Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) a = std::exchange(b, divmod(a, b).second);
  return a;
}

namespace detail {

/// a * b mod q with deg a, deg b < deg q <= 62.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q, int m) {
  std::uint64_t r = 0;
  const std::uint64_t top = std::uint64_t{1} << m;
  for (int i = 63 - std::countl_zero(b | 1); i >= 0; --i) {
    r <<= 1;
    if (r & top) r ^= q;
    if ((b >> i) & 1U) r ^= a;
  }
  return r;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q, int m) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, q, m);
    a = mulmod(a, a, q, m);
    e >>= 1;
  }
  return r;
}

/// Rabin's test.
inline bool is_irreducible(Gf2Poly q) {
  const int m = q.degree();
  if (m <= 0) return false;
  if (m == 1) return true;
  if (m > 62) throw std::out_of_range("irreducibility test limited to degree 62");
  auto frob = [&](int k) {  // x^(2^k) mod q
    std::uint64_t r = 2;
    for (int i = 0; i < k; ++i) r = mulmod(r, r, q.bits(), m);
    return r;
  };
  if (frob(m) != 2) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(m))) {
    const Gf2Poly h(frob(m / static_cast<int>(r)) ^ 2U);
    if (gcd(q, h).degree() != 0) return false;
  }
  return true;
}

/// Lexicographically first irreducible polynomial of degree m.
inline Gf2Poly first_irreducible(int m) {
  for (std::uint64_t low = 1; low < (std::uint64_t{1} << m); low += 2) {
    const Gf2Poly q((std::uint64_t{1} << m) | low);
    if (is_irreducible(q)) return q;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace detail

inline void require_odd_prime(int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  }
}

/// Multiplicative order of 2 modulo the odd prime p.
inline int ord2_mod(int p) {
  require_odd_prime(p);
  int m = 1;
  for (int v = 2 % p; v != 1; v = (2 * v) % p) ++m;
  return m;
}

/// 2-cyclotomic cosets modulo p, ordered by least element, each listed in
/// doubling order from its least element.
inline std::vector<std::vector<int>> cyclotomic_cosets(int p) {
  require_odd_prime(p);
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < p; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> coset;
    for (int v = s; !seen[static_cast<std::size_t>(v)]; v = (2 * v) % p) {
      seen[static_cast<std::size_t>(v)] = true;
      coset.push_back(v);
    }
    out.push_back(std::move(coset));
  }
  return out;
}

/// Element of R_p = F_2[x]/(x^p - 1); bit i is the coefficient of x^i.
class RingPoly {
 public:
  RingPoly() = default;
  RingPoly(int p, std::uint64_t bits) : p_(check_modulus(p)), bits_(bits & detail::low_mask(static_cast<std::size_t>(p))) {}

  static RingPoly zero(int p) { return RingPoly(p, 0); }
  static RingPoly one(int p) { return RingPoly(p, 1); }
  static RingPoly monomial(int p, long long i) {
    const long long r = ((i % p) + p) % p;
    return RingPoly(p, std::uint64_t{1} << r);
  }
  static RingPoly from_exponents(int p, std::initializer_list<int> exps) {
    RingPoly v(p, 0);
    for (int e : exps) v = v + monomial(p, e);
    return v;
  }
  static RingPoly from_gf2(int p, Gf2Poly f) { return RingPoly(p, 0) + reduce_gf2(p, f); }
  static RingPoly from_bits(const BitVector& v) {
    return RingPoly(static_cast<int>(v.size()), v.word());
  }

  int modulus() const noexcept { return p_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool coefficient(int i) const { return (bits_ >> i) & 1U; }
  int weight() const noexcept { return std::popcount(bits_); }
  bool is_zero() const noexcept { return bits_ == 0; }
  BitVector to_bits() const { return BitVector::from_word(static_cast<std::size_t>(p_), bits_); }

  /// x^k * v, a cyclic shift of the coefficients.
  RingPoly shifted(long long k) const {
    const int s = static_cast<int>(((k % p_) + p_) % p_);
    return RingPoly(p_, rotate(bits_, s));
  }
  /// v(x^t).
  RingPoly substitute(long long t) const {
    std::uint64_t r = 0;
    const long long tt = ((t % p_) + p_) % p_;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      const long long i = std::countr_zero(b);
      r ^= std::uint64_t{1} << ((i * tt) % p_);
    }
    return RingPoly(p_, r);
  }
  /// v(x^{-1}) = v(x^{p-1}).
  RingPoly conjugate() const { return substitute(p_ - 1); }

  /// Ascending monomials: "1+x^3+x^5+x^6".
  std::string to_string() const {
    if (bits_ == 0) return "0";
    std::string s;
    for (int i = 0; i < p_; ++i) {
      if (!coefficient(i)) continue;
      if (!s.empty()) s += '+';
      if (i == 0) {
        s += '1';
      } else if (i == 1) {
        s += 'x';
      } else {
        s += "x^" + std::to_string(i);
      }
    }
    return s;
  }

  friend RingPoly operator+(const RingPoly& a, const RingPoly& b) {
    a.require_same_ring(b);
    return RingPoly(a.p_, a.bits_ ^ b.bits_);
  }
  friend RingPoly operator*(const RingPoly& a, const RingPoly& b) {
    a.require_same_ring(b);
    std::uint64_t r = 0;
    for (std::uint64_t m = a.bits_; m != 0; m &= m - 1) r ^= a.rotate(b.bits_, std::countr_zero(m));
    return RingPoly(a.p_, r);
  }
  friend bool operator==(const RingPoly&, const RingPoly&) = default;
  friend auto operator<=>(const RingPoly&, const RingPoly&) = default;

 private:
  static int check_modulus(int p) {
    if (p < 1 || p > kMaxModulus) throw std::out_of_range("ring modulus must lie in [1, 64]");
    return p;
  }
  static RingPoly reduce_gf2(int p, Gf2Poly f) {
    std::uint64_t r = 0;
    for (std::uint64_t b = f.bits(); b != 0; b &= b - 1) r ^= std::uint64_t{1} << (std::countr_zero(b) % p);
    return RingPoly(p, r);
  }
  std::uint64_t rotate(std::uint64_t b, int s) const {
    if (s == 0) return b;
    return ((b << s) | (b >> (p_ - s))) & detail::low_mask(static_cast<std::size_t>(p_));
  }
  void require_same_ring(const RingPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ring elements with different moduli");
  }

  int p_ = 1;
  std::uint64_t bits_ = 0;
};

/// a^k with a^0 = identity (the identity of the ideal a lives in).
inline RingPoly pow(RingPoly a, std::uint64_t k, const RingPoly& identity) {
  RingPoly r = identity;
  while (k != 0) {
    if (k & 1U) r = r * a;
    a = a * a;
    k >>= 1;
  }
  return r;
}

inline Gf2Poly to_gf2(const RingPoly& a) { return Gf2Poly(a.bits()); }

/// Dimension over F_2 of the principal ideal generated by a.
inline int ideal_dimension(const RingPoly& a) {
  const int p = a.modulus();
  if (a.is_zero()) return 0;
  return p - gcd(Gf2Poly::x_pow_minus_one(p), to_gf2(a)).degree();
}

/// Least k >= 1 with a^k = e, for a nonzero a in the field ideal generated by
/// the idempotent e.
inline std::uint64_t ideal_element_order(const RingPoly& a, const RingPoly& e) {
  if (a.is_zero()) throw std::invalid_argument("zero has no multiplicative order");
  if (a.modulus() != e.modulus()) throw std::invalid_argument("element and idempotent in different rings");
  if (e * e != e || e.is_zero()) throw std::invalid_argument("second argument is not a nonzero idempotent");
  if (a * e != a) throw std::invalid_argument("element lies outside the ideal of the idempotent");
  const int dim = ideal_dimension(e);
  if (dim > 63) throw std::out_of_range("ideal too large");
  const std::uint64_t group = (std::uint64_t{1} << dim) - 1;
  if (pow(a, group, e) != e) throw std::invalid_argument("ideal of the idempotent is not a field");
  std::uint64_t order = group;
  for (auto q : prime_factors(group)) {
    while (order % q == 0 && pow(a, order / q, e) == e) order /= q;
  }
  return order;
}

/// Multiplicative inverse inside the field ideal of e.
inline RingPoly ideal_inverse(const RingPoly& a, const RingPoly& e) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  const int dim = ideal_dimension(e);
  return pow(a, (std::uint64_t{1} << dim) - 2, e);
}

/// The primitive idempotent of the minimal ideal <(x^p-1)/factor>, found by
/// searching sums of whole cyclotomic cosets.
inline RingPoly idempotent_of(Gf2Poly factor, int p) {
  require_odd_prime(p);
  if (p > 62) throw std::out_of_range("modulus too large");
  if (!divmod(Gf2Poly::x_pow_minus_one(p), factor).second.is_zero()) {
    throw std::invalid_argument(factor.to_string() + " does not divide x^" + std::to_string(p) + "-1");
  }
  if (!detail::is_irreducible(factor)) throw std::invalid_argument(factor.to_string() + " is reducible");
  const auto cosets = cyclotomic_cosets(p);
  const RingPoly f = RingPoly::from_gf2(p, factor);
  std::vector<RingPoly> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cosets.size()); ++mask) {
    std::uint64_t bits = 0;
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      if (!((mask >> c) & 1U)) continue;
      for (int i : cosets[c]) bits |= std::uint64_t{1} << i;
    }
    const RingPoly e(p, bits);
    if (e * e == e && (e * f).is_zero()) found.push_back(e);
  }
  if (found.size() != 1) throw std::logic_error("expected exactly one nonzero idempotent in a minimal ideal");
  return found.front();
}

enum class FactorKind { self_reciprocal, pair_first, pair_second };

inline const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::self_reciprocal:
      return "self_reciprocal";
    case FactorKind::pair_first:
      return "pair_first";
    case FactorKind::pair_second:
      return "pair_second";
  }
  return "?";
}

/// One minimal ideal I_j of R_p, a field with 2^degree elements.
struct IdealField {
  Gf2Poly factor;
  FactorKind kind = FactorKind::self_reciprocal;
  RingPoly idempotent;
  std::size_t partner = 0;  // e_j(x^{-1}) = e_partner(x)
  int degree = 0;
  std::uint64_t order = 0;  // element count
  RingPoly generator;       // a primitive element of the field

  bool contains(const RingPoly& a) const { return a * idempotent == a; }
  RingPoly inverse(const RingPoly& a) const { return pow(a, order - 2, idempotent); }
  RingPoly power(const RingPoly& a, std::uint64_t k) const { return pow(a, k, idempotent); }
};

/// x^p - 1 = (x-1) g_1...g_s h_1 h_1^*...h_t h_t^*, with ideals indexed as
/// I_0 = <x-1 part>, I_1..I_s, I_{s+j} = H_j, I_{s+t+j} = H_j^*.
struct Factorization {
  int p = 0;
  int m = 0;  // ord_p(2)
  int s = 0;
  int t = 0;
  std::vector<IdealField> ideals;

  std::size_t r() const { return ideals.size() - 1; }

  Gf2Poly product() const {
    Gf2Poly acc(1);
    for (const auto& I : ideals) acc = acc * I.factor;
    return acc;
  }

  /// "(x-1)(x^3+x+1)(x^3+x^2+1)"
  std::string to_string() const {
    std::string out = "(x-1)";
    for (std::size_t j = 1; j < ideals.size(); ++j) out += "(" + ideals[j].factor.to_string() + ")";
    return out;
  }

  /// Index of the ideal containing the nonzero a, or nullopt when a spans
  /// several ideals.
  std::optional<std::size_t> ideal_containing(const RingPoly& a) const {
    if (a.is_zero()) return std::nullopt;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (ideals[j].contains(a)) return j;
    }
    return std::nullopt;
  }

  /// Index j' with e_j(x^t) = e_{j'}(x).
  std::size_t substituted_ideal(std::size_t j, long long t) const {
    const RingPoly img = ideals[j].idempotent.substitute(t);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (ideals[i].idempotent == img) return i;
    }
    throw std::logic_error("substitution does not permute the idempotents");
  }
};

/// For each field, the index of the field holding its conjugate idempotent.
inline std::vector<std::size_t> reciprocal_pairing(const std::vector<IdealField>& fields) {
  std::vector<std::size_t> out(fields.size());
  for (std::size_t j = 0; j < fields.size(); ++j) {
    const RingPoly c = fields[j].idempotent.conjugate();
    auto it = std::find_if(fields.begin(), fields.end(), [&](const IdealField& f) { return f.idempotent == c; });
    if (it == fields.end()) throw std::logic_error("conjugate idempotent not among the fields");
    out[j] = static_cast<std::size_t>(it - fields.begin());
  }
  return out;
}

namespace detail {

/// Minimal polynomials of alpha^c over GF(2), one per nonzero cyclotomic
/// coset, with alpha a primitive p-th root of unity in GF(2^m).
inline std::vector<Gf2Poly> minimal_polynomials(int p, int m) {
  const Gf2Poly q = first_irreducible(m);
  const std::uint64_t group = (std::uint64_t{1} << m) - 1;
  std::uint64_t alpha = 0;
  for (std::uint64_t g = 2; g <= group; ++g) {
    const std::uint64_t h = powmod(g, group / static_cast<std::uint64_t>(p), q.bits(), m);
    if (h != 1) {
      alpha = h;
      break;
    }
  }
  if (alpha == 0) throw std::logic_error("no primitive p-th root of unity");
  std::vector<Gf2Poly> out;
  const auto cosets = cyclotomic_cosets(p);
  for (std::size_t c = 1; c < cosets.size(); ++c) {
    // coefficients in GF(2^m), lowest degree first
    std::vector<std::uint64_t> poly{1};
    for (int i : cosets[c]) {
      const std::uint64_t root = powmod(alpha, static_cast<std::uint64_t>(i), q.bits(), m);
      std::vector<std::uint64_t> next(poly.size() + 1, 0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] ^= poly[d];
        next[d] ^= mulmod(poly[d], root, q.bits(), m);
      }
      poly = std::move(next);
    }
    std::uint64_t bits = 0;
    for (std::size_t d = 0; d < poly.size(); ++d) {
      if (poly[d] > 1) throw std::logic_error("minimal polynomial has coefficients outside GF(2)");
      bits |= poly[d] << d;
    }
    out.emplace_back(bits);
  }
  return out;
}

inline RingPoly primitive_element(const IdealField& f, int p) {
  if (f.order == 2) return f.idempotent;
  const std::uint64_t group = f.order - 1;
  const auto primes = prime_factors(group);
  for (std::uint64_t combo = 1; combo <= group; ++combo) {
    RingPoly a = RingPoly::zero(p);
    for (int t = 0; t < f.degree; ++t) {
      if ((combo >> t) & 1U) a = a + f.idempotent.shifted(t);
    }
    if (a.is_zero()) continue;
    const bool primitive = std::all_of(primes.begin(), primes.end(),
                                       [&](std::uint64_t q) { return f.power(a, group / q) != f.idempotent; });
    if (primitive) return a;
  }
  throw std::logic_error("field without a primitive element");
}

}  // namespace detail

/// Deterministic factorization of x^p - 1 with idempotents, reciprocal
/// partners and primitive elements of every minimal ideal.
inline Factorization factor_xp_minus1(int p) {
  require_odd_prime(p);
  if (p > 61) throw std::out_of_range("p must be at most 61");
  Factorization fz;
  fz.p = p;
  fz.m = ord2_mod(p);

  std::vector<Gf2Poly> selfrec;
  std::vector<std::pair<Gf2Poly, Gf2Poly>> pairs;
  auto factors = detail::minimal_polynomials(p, fz.m);
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors) {
    const Gf2Poly rec = f.reciprocal();
    if (rec == f) {
      selfrec.push_back(f);
    } else if (f < rec) {
      pairs.emplace_back(f, rec);
    }
  }
  fz.s = static_cast<int>(selfrec.size());
  fz.t = static_cast<int>(pairs.size());

  auto make = [&](Gf2Poly f, FactorKind kind) {
    IdealField I;
    I.factor = f;
    I.kind = kind;
    I.degree = f.degree();
    I.order = std::uint64_t{1} << I.degree;
    I.idempotent = idempotent_of(f, p);
    return I;
  };
  fz.ideals.push_back(make(Gf2Poly(0b11), FactorKind::self_reciprocal));
  for (const auto& g : selfrec) fz.ideals.push_back(make(g, FactorKind::self_reciprocal));
  for (const auto& pr : pairs) fz.ideals.push_back(make(pr.first, FactorKind::pair_first));
  for (const auto& pr : pairs) fz.ideals.push_back(make(pr.second, FactorKind::pair_second));

  const auto partner = reciprocal_pairing(fz.ideals);
  for (std::size_t j = 0; j < fz.ideals.size(); ++j) {
    fz.ideals[j].partner = partner[j];
    fz.ideals[j].generator = detail::primitive_element(fz.ideals[j], p);
  }
  if (fz.product() != Gf2Poly::x_pow_minus_one(p)) throw std::logic_error("factor product differs from x^p - 1");
  return fz;
}

}  // namespace lcdforge
