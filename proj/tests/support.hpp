#pragma once

// Shared test helpers: seeded randomness and brute-force oracles that avoid
// the library's Gray-code and echelon paths.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lcdforge/decomposition.hpp"
#include "lcdforge/gf2.hpp"

namespace lcdforge::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20241019);
  return g;
}

inline BitVector random_vector(std::size_t n, std::mt19937_64& g = rng()) {
  return BitVector::from_word(n, g());
}

/// Random code spanned by `rows` random vectors (dimension may be smaller).
inline BinaryCode random_code(std::size_t n, std::size_t rows, std::mt19937_64& g = rng()) {
  std::vector<BitVector> v;
  for (std::size_t i = 0; i < rows; ++i) v.push_back(random_vector(n, g));
  return BinaryCode(n, v);
}

/// Every codeword, by summing subsets of the generator rows directly.
inline std::set<std::uint64_t> codeword_set(const BinaryCode& c) {
  std::set<std::uint64_t> out;
  const auto& g = c.generator();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    std::uint64_t w = 0;
    for (std::size_t r = 0; r < g.size(); ++r) {
      if ((mask >> r) & 1U) w ^= g[r].word();
    }
    out.insert(w);
  }
  return out;
}

/// Every vector of F_2^n orthogonal to all rows, by exhaustive scan (n <= 20).
inline std::set<std::uint64_t> dual_set(const BinaryCode& c) {
  std::set<std::uint64_t> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << c.length()); ++w) {
    bool ok = true;
    for (const auto& r : c.generator()) ok = ok && std::popcount(w & r.word()) % 2 == 0;
    if (ok) out.insert(w);
  }
  return out;
}

inline std::vector<std::uint64_t> brute_enumerator(const BinaryCode& c) {
  std::vector<std::uint64_t> a(c.length() + 1, 0);
  for (auto w : codeword_set(c)) ++a[static_cast<std::size_t>(std::popcount(w))];
  return a;
}

/// Naive rank over GF(2) on an unpacked 0/1 matrix.
inline std::size_t naive_rank(std::vector<std::vector<int>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][col] != 0) {
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = (m[r][j] + m[rank][j]) % 2;
      }
    }
    ++rank;
  }
  return rank;
}

/// A random sigma-invariant code: random rows closed under sigma.
inline BinaryCode random_invariant_code(const SigmaPermutation& sigma, std::size_t seeds, std::mt19937_64& g = rng()) {
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < seeds; ++i) {
    BitVector v = random_vector(sigma.n(), g);
    // Sparse seeds keep the dimension moderate.
    v = v & random_vector(sigma.n(), g) & random_vector(sigma.n(), g);
    for (int t = 0; t < sigma.p(); ++t) {
      rows.push_back(v);
      v = sigma.apply(v);
    }
  }
  return BinaryCode(sigma.n(), rows);
}

inline BinaryCode hamming_7_4() {
  const std::vector<std::string> rows{"1000110", "0100101", "0010011", "0001111"};
  return BinaryCode::from_strings(rows, 7);
}

inline BinaryCode extended_hamming_8_4() {
  const std::vector<std::string> rows{"10001110", "01001101", "00101011", "00010111"};
  return BinaryCode::from_strings(rows, 8);
}

}  // namespace lcdforge::testing
