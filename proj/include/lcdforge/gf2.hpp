#pragma once

// Bit-packed GF(2) vectors and binary linear codes: row reduction, duals,
// intersections, hulls, exhaustive distance and weight enumeration.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcdforge {

/// Longest supported code length. Every codeword fits one machine word.
inline constexpr std::size_t kMaxLength = 64;

/// Default limit on the dimension of codes enumerated exhaustively (2^k words).
inline constexpr std::size_t kDefaultEnumerationCap = 24;

class EnumerationLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

inline std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline std::size_t checked_length(std::size_t n) {
  if (n > kMaxLength) {
    throw std::length_error("code length " + std::to_string(n) + " exceeds " + std::to_string(kMaxLength));
  }
  return n;
}

}  // namespace detail

/// A vector in F_2^n. Coordinate i is character i of the string form.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(detail::checked_length(n)) {}

  static BitVector from_word(std::size_t n, std::uint64_t word) {
    BitVector v(n);
    v.bits_ = word & detail::low_mask(n);
    return v;
  }

  static BitVector from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        v.bits_ |= std::uint64_t{1} << i;
      } else if (s[i] != '0') {
        throw std::invalid_argument("bit string contains '" + std::string(1, s[i]) + "'");
      }
    }
    return v;
  }

  static BitVector ones(std::size_t n) { return from_word(n, ~std::uint64_t{0}); }

  std::size_t size() const noexcept { return n_; }
  std::uint64_t word() const noexcept { return bits_; }

  bool test(std::size_t i) const { return (bits_ >> check_index(i)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const auto bit = std::uint64_t{1} << check_index(i);
    bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
  }
  void flip(std::size_t i) { bits_ ^= std::uint64_t{1} << check_index(i); }

  int weight() const noexcept { return std::popcount(bits_); }
  bool is_zero() const noexcept { return bits_ == 0; }

  BitVector& operator^=(const BitVector& other) {
    require_same_length(other);
    bits_ ^= other.bits_;
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  friend BitVector operator&(BitVector a, const BitVector& b) {
    a.require_same_length(b);
    a.bits_ &= b.bits_;
    return a;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
      if ((bits_ >> i) & 1U) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::size_t check_index(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("bit index " + std::to_string(i) + " out of range");
    return i;
  }
  void require_same_length(const BitVector& other) const {
    if (n_ != other.n_) throw std::invalid_argument("bit vector length mismatch");
  }

  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Euclidean inner product over GF(2).
inline int dot(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
  return std::popcount(u.word() & v.word()) & 1;
}

struct RrefResult {
  std::vector<BitVector> rows;  // same row count as the input; zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over GF(2); pivots ascend with the row index.
inline RrefResult rref(std::span<const BitVector> matrix) {
  RrefResult out;
  out.rows.assign(matrix.begin(), matrix.end());
  if (out.rows.empty()) return out;
  const std::size_t cols = out.rows.front().size();
  for (const auto& r : out.rows) {
    if (r.size() != cols) throw std::invalid_argument("rref: ragged matrix");
  }
  std::vector<std::uint64_t> w(out.rows.size());
  std::transform(out.rows.begin(), out.rows.end(), w.begin(), [](const BitVector& v) { return v.word(); });
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < w.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = rank;
    while (pivot < w.size() && !(w[pivot] & bit)) ++pivot;
    if (pivot == w.size()) continue;
    std::swap(w[rank], w[pivot]);
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (r != rank && (w[r] & bit)) w[r] ^= w[rank];
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.rank = rank;
  for (std::size_t r = 0; r < w.size(); ++r) out.rows[r] = BitVector::from_word(cols, w[r]);
  return out;
}

inline std::size_t rank(std::span<const BitVector> matrix) { return rref(matrix).rank; }

/// Counts A_0..A_n of codewords by weight.
struct WeightEnumerator {
  std::vector<std::uint64_t> coeffs;

  std::size_t length() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::uint64_t operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto a : coeffs) s += a;
    return s;
  }
  /// Smallest i >= 1 with A_i != 0.
  std::optional<int> min_weight() const {
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) return static_cast<int>(i);
    }
    return std::nullopt;
  }
  /// "1+21y^12+21y^14"
  std::string to_string(char var = 'y') const {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      if (!s.empty()) s += '+';
      if (i == 0) {
        s += std::to_string(coeffs[i]);
        continue;
      }
      if (coeffs[i] != 1) s += std::to_string(coeffs[i]);
      s += var;
      if (i != 1) s += '^' + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// A binary linear [n,k] code. The generator is kept in reduced row echelon
/// form, which is canonical for the row space, so equality of codes is
/// equality of row spaces.
class BinaryCode {
 public:
  BinaryCode() = default;
  explicit BinaryCode(std::size_t n) : n_(detail::checked_length(n)) {}

  BinaryCode(std::size_t n, std::span<const BitVector> generators) : n_(detail::checked_length(n)) {
    for (const auto& g : generators) {
      if (g.size() != n) throw std::invalid_argument("generator row length differs from code length");
    }
    auto reduced = rref(generators);
    reduced.rows.resize(reduced.rank);
    gen_ = std::move(reduced.rows);
    pivots_ = std::move(reduced.pivots);
  }

  BinaryCode(std::size_t n, std::initializer_list<BitVector> generators)
      : BinaryCode(n, std::span<const BitVector>(generators.begin(), generators.size())) {}

  static BinaryCode full_space(std::size_t n) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      BitVector v(n);
      v.set(i);
      rows.push_back(v);
    }
    return BinaryCode(n, rows);
  }

  static BinaryCode from_strings(std::span<const std::string> rows, std::size_t n) {
    std::vector<BitVector> g;
    for (const auto& r : rows) g.push_back(BitVector::from_string(r));
    return BinaryCode(n, g);
  }

  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return gen_.size(); }
  const std::vector<BitVector>& generator() const noexcept { return gen_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v against the generator; zero remainder means membership.
  BitVector reduce(const BitVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length differs from code length");
    std::uint64_t w = v.word();
    for (std::size_t r = 0; r < gen_.size(); ++r) {
      if ((w >> pivots_[r]) & 1U) w ^= gen_[r].word();
    }
    return BitVector::from_word(n_, w);
  }
  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
  bool contains(const BinaryCode& other) const {
    if (other.n_ != n_) return false;
    return std::all_of(other.gen_.begin(), other.gen_.end(), [&](const BitVector& g) { return contains(g); });
  }

  BinaryCode extended_by(std::span<const BitVector> rows) const {
    std::vector<BitVector> all = gen_;
    all.insert(all.end(), rows.begin(), rows.end());
    return BinaryCode(n_, all);
  }

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BitVector> gen_;
  std::vector<std::size_t> pivots_;
};

/// C^perp, of dimension n - k.
inline BinaryCode dual_code(const BinaryCode& c) {
  const std::size_t n = c.length();
  const auto& g = c.generator();
  const auto& piv = c.pivots();
  std::uint64_t pivot_mask = 0;
  for (auto p : piv) pivot_mask |= std::uint64_t{1} << p;
  std::vector<BitVector> rows;
  rows.reserve(n - g.size());
  for (std::size_t j = 0; j < n; ++j) {
    if ((pivot_mask >> j) & 1U) continue;
    std::uint64_t w = std::uint64_t{1} << j;
    for (std::size_t r = 0; r < g.size(); ++r) {
      if ((g[r].word() >> j) & 1U) w |= std::uint64_t{1} << piv[r];
    }
    rows.push_back(BitVector::from_word(n, w));
  }
  return BinaryCode(n, rows);
}

inline BinaryCode code_sum(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length()) throw std::invalid_argument("code_sum: length mismatch");
  return a.extended_by(b.generator());
}

/// A ∩ B, computed as (A^perp + B^perp)^perp.
inline BinaryCode intersect(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length()) throw std::invalid_argument("intersect: length mismatch");
  return dual_code(code_sum(dual_code(a), dual_code(b)));
}

/// C ∩ C^perp.
inline BinaryCode hull(const BinaryCode& c) { return intersect(c, dual_code(c)); }

/// k - rank(G G^T); equals dim hull(C) for any generator matrix G.
inline std::size_t hull_dimension_by_gram(const BinaryCode& c) {
  const auto& g = c.generator();
  std::vector<BitVector> gram;
  for (const auto& r : g) {
    BitVector row(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (dot(r, g[j])) row.set(j);
    }
    gram.push_back(row);
  }
  return g.size() - rank(gram);
}

namespace detail {

inline void check_cap(const BinaryCode& c, std::size_t cap) {
  if (c.dimension() > cap) {
    throw EnumerationLimitError("dimension " + std::to_string(c.dimension()) + " exceeds enumeration cap " +
                                std::to_string(cap));
  }
}

/// Visits offset + every codeword once, in Gray-code order; stops when
/// visit returns false.
template <typename Visit>
void gray_walk(const BinaryCode& c, std::uint64_t offset, Visit&& visit) {
  const auto& g = c.generator();
  std::vector<std::uint64_t> rows(g.size());
  std::transform(g.begin(), g.end(), rows.begin(), [](const BitVector& v) { return v.word(); });
  std::uint64_t w = offset;
  if (!visit(w)) return;
  const std::uint64_t count = std::uint64_t{1} << rows.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    if (!visit(w)) return;
  }
}

}  // namespace detail

/// Calls visit(BitVector) on every codeword, zero included.
template <typename Visit>
void for_each_codeword(const BinaryCode& c, Visit&& visit, std::size_t cap = kDefaultEnumerationCap) {
  detail::check_cap(c, cap);
  const std::size_t n = c.length();
  detail::gray_walk(c, 0, [&](std::uint64_t w) {
    visit(BitVector::from_word(n, w));
    return true;
  });
}

/// Exact minimum weight by full enumeration; nullopt for the zero code.
inline std::optional<int> min_distance(const BinaryCode& c, std::size_t cap = kDefaultEnumerationCap) {
  detail::check_cap(c, cap);
  if (c.dimension() == 0) return std::nullopt;
  int best = static_cast<int>(c.length()) + 1;
  detail::gray_walk(c, 0, [&](std::uint64_t w) {
    if (w != 0) best = std::min(best, std::popcount(w));
    return true;
  });
  return best;
}

/// True iff every nonzero codeword has weight >= bound. Exits on the first
/// lighter word.
inline bool min_distance_at_least(const BinaryCode& c, int bound, std::size_t cap = kDefaultEnumerationCap) {
  detail::check_cap(c, cap);
  bool ok = true;
  detail::gray_walk(c, 0, [&](std::uint64_t w) {
    if (w != 0 && std::popcount(w) < bound) ok = false;
    return ok;
  });
  return ok;
}

/// Minimum weight of the coset v + C.
inline int coset_min_weight(const BinaryCode& c, const BitVector& v, std::size_t cap = kDefaultEnumerationCap) {
  detail::check_cap(c, cap);
  if (v.size() != c.length()) throw std::invalid_argument("coset_min_weight: length mismatch");
  int best = static_cast<int>(c.length()) + 1;
  detail::gray_walk(c, v.word(), [&](std::uint64_t w) {
    best = std::min(best, std::popcount(w));
    return true;
  });
  return best;
}

inline WeightEnumerator weight_enumerator(const BinaryCode& c, std::size_t cap = kDefaultEnumerationCap) {
  detail::check_cap(c, cap);
  WeightEnumerator we;
  we.coeffs.assign(c.length() + 1, 0);
  detail::gray_walk(c, 0, [&](std::uint64_t w) {
    ++we.coeffs[static_cast<std::size_t>(std::popcount(w))];
    return true;
  });
  return we;
}

/// Weight enumerator of the dual of an [n,k] code with enumerator `we`,
/// via Krawtchouk polynomials. Throws if the transform is not integral.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& we) {
  using Int = __int128;
  const std::size_t n = we.length();
  const std::uint64_t size = we.total();
  if (size == 0 || !std::has_single_bit(size)) throw std::invalid_argument("enumerator total is not a power of two");
  std::vector<std::vector<Int>> binom(n + 1, std::vector<Int>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  WeightEnumerator out;
  out.coeffs.assign(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (we[i] == 0) continue;
      Int kraw = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        const Int term = binom[i][s] * binom[n - i][j - s];
        kraw += (s % 2 == 0) ? term : -term;
      }
      acc += kraw * static_cast<Int>(we[i]);
    }
    if (acc < 0 || acc % static_cast<Int>(size) != 0) throw std::domain_error("MacWilliams transform is not integral");
    out.coeffs[j] = static_cast<std::uint64_t>(acc / static_cast<Int>(size));
  }
  return out;
}

}  // namespace lcdforge
