#pragma once

// Permutation equivalence of binary codes and automorphism group orders.
//
// A code is represented by the incidence structure of its codewords in the
// lightest weight classes that together span the code; a coordinate
// permutation preserves the code iff it preserves that structure. Column
// partitions are refined to equitable colorings of the column/word incidence
// graph, and remaining cells are resolved by individualization and
// backtracking. Group orders come from a stabilizer chain along the first
// search path: |Aut| = product of basic orbit lengths.
//
// orbit_reduce acts on module tuples (C_pi plus module components) with the
// transformations that preserve the sigma-decomposition: x -> x^t, scaling a
// coordinate by x^t, permuting cycles, permuting fixed points.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclotomic.hpp"
#include "decomposition.hpp"
#include "gf2.hpp"

namespace lcdforge {

inline constexpr std::size_t kEquivalenceMaxLength = 40;
inline constexpr std::size_t kEquivalenceMaxDimension = 20;

class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// perm[i] is the image of coordinate i.
using Permutation = std::vector<std::size_t>;

inline BitVector apply_permutation(const BitVector& v, const Permutation& perm) {
  if (perm.size() != v.size()) throw std::invalid_argument("permutation degree differs from vector length");
  BitVector out(v.size());
  for (std::uint64_t b = v.word(); b != 0; b &= b - 1) out.set(perm[static_cast<std::size_t>(std::countr_zero(b))]);
  return out;
}

inline BinaryCode apply_permutation(const BinaryCode& c, const Permutation& perm) {
  std::vector<BitVector> rows;
  for (const auto& g : c.generator()) rows.push_back(apply_permutation(g, perm));
  return BinaryCode(c.length(), rows);
}

/// One-line cycle notation, 1-based; "()" for the identity.
inline std::string cycle_notation(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string s;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      if (j != i) s += ',';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

struct EquivalenceCertificate {
  bool equivalent = false;
  Permutation permutation;  // maps the first code onto the second when equivalent

  std::string cycles() const { return equivalent ? cycle_notation(permutation) : ""; }
};

namespace detail {

inline void check_equivalence_bounds(const BinaryCode& c) {
  if (c.length() > kEquivalenceMaxLength || c.dimension() > kEquivalenceMaxDimension) {
    throw SizeBoundError("equivalence testing limited to n <= " + std::to_string(kEquivalenceMaxLength) +
                         ", k <= " + std::to_string(kEquivalenceMaxDimension));
  }
}

struct Structure {
  std::size_t n = 0;
  std::vector<std::uint64_t> blocks;  // sorted
  std::vector<std::vector<std::uint32_t>> blocks_of_column;
};

/// Lightest weights whose codewords span the code.
inline std::vector<int> spanning_weights(const BinaryCode& c) {
  std::vector<std::vector<BitVector>> by_weight(c.length() + 1);
  for_each_codeword(c, [&](const BitVector& v) {
    if (!v.is_zero()) by_weight[static_cast<std::size_t>(v.weight())].push_back(v);
  }, kEquivalenceMaxDimension);
  std::vector<int> weights;
  std::vector<BitVector> acc;
  for (std::size_t w = 1; w <= c.length() && rank(acc) < c.dimension(); ++w) {
    if (by_weight[w].empty()) continue;
    weights.push_back(static_cast<int>(w));
    const auto r = rref(by_weight[w]);
    acc.insert(acc.end(), r.rows.begin(), r.rows.begin() + static_cast<std::ptrdiff_t>(r.rank));
  }
  return weights;
}

inline Structure build_structure(const BinaryCode& c, const std::vector<int>& weights) {
  Structure s;
  s.n = c.length();
  std::vector<bool> want(c.length() + 1, false);
  for (int w : weights) want[static_cast<std::size_t>(w)] = true;
  for_each_codeword(c, [&](const BitVector& v) {
    if (!v.is_zero() && want[static_cast<std::size_t>(v.weight())]) s.blocks.push_back(v.word());
  }, kEquivalenceMaxDimension);
  std::sort(s.blocks.begin(), s.blocks.end());
  s.blocks_of_column.assign(s.n, {});
  for (std::uint32_t b = 0; b < s.blocks.size(); ++b) {
    for (std::uint64_t m = s.blocks[b]; m != 0; m &= m - 1) {
      s.blocks_of_column[static_cast<std::size_t>(std::countr_zero(m))].push_back(b);
    }
  }
  return s;
}

struct Coloring {
  std::vector<int> col;
  std::vector<int> blk;
  int col_colors = 0;
  int blk_colors = 0;

  bool discrete() const { return static_cast<std::size_t>(col_colors) == col.size(); }
};

inline void mix(std::uint64_t& h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

/// Replaces colors by ranks of their signatures; folds the sorted
/// signature multiset into the trace.
template <typename Sig>
int recolor(std::vector<Sig>& sigs, std::vector<int>& colors, std::uint64_t& trace) {
  std::vector<std::uint32_t> order(sigs.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sigs[a] < sigs[b]; });
  int next = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || sigs[order[i]] != sigs[order[i - 1]]) {
      ++next;
      mix(trace, 0xabcdefULL);
      for (auto x : sigs[order[i]]) mix(trace, static_cast<std::uint64_t>(x));
    }
    mix(trace, static_cast<std::uint64_t>(next));
    colors[order[i]] = next;
  }
  return next + 1;
}

/// Refines to an equitable coloring; returns an isomorphism-invariant trace.
inline std::uint64_t refine(const Structure& s, Coloring& k) {
  std::uint64_t trace = 0x12345678ULL;
  std::vector<std::vector<int>> bsig(s.blocks.size());
  std::vector<std::vector<int>> csig(s.n);
  while (true) {
    const int before = k.col_colors + k.blk_colors;
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      auto& sig = bsig[b];
      sig.assign(static_cast<std::size_t>(k.col_colors) + 1, 0);
      sig[0] = k.blk[b];
      for (std::uint64_t m = s.blocks[b]; m != 0; m &= m - 1) {
        ++sig[static_cast<std::size_t>(k.col[static_cast<std::size_t>(std::countr_zero(m))]) + 1];
      }
    }
    k.blk_colors = recolor(bsig, k.blk, trace);
    for (std::size_t c = 0; c < s.n; ++c) {
      auto& sig = csig[c];
      sig.clear();
      for (auto b : s.blocks_of_column[c]) sig.push_back(k.blk[b]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), k.col[c]);
    }
    k.col_colors = recolor(csig, k.col, trace);
    if (k.col_colors + k.blk_colors == before) break;
  }
  mix(trace, static_cast<std::uint64_t>(k.col_colors));
  return trace;
}

inline Coloring initial_coloring(const Structure& s) {
  Coloring k;
  k.col.assign(s.n, 0);
  k.col_colors = s.n ? 1 : 0;
  k.blk.resize(s.blocks.size());
  for (std::size_t b = 0; b < s.blocks.size(); ++b) k.blk[b] = std::popcount(s.blocks[b]);
  k.blk_colors = 0;
  return k;
}

inline void individualize(Coloring& k, std::size_t column) { k.col[column] = k.col_colors++; }

/// Smallest non-singleton column cell, lowest color on ties.
inline std::vector<std::size_t> target_cell(const Coloring& k) {
  std::vector<int> size(static_cast<std::size_t>(k.col_colors), 0);
  for (int c : k.col) ++size[static_cast<std::size_t>(c)];
  int best = -1;
  for (int c = 0; c < k.col_colors; ++c) {
    if (size[static_cast<std::size_t>(c)] > 1 && (best < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(best)])) best = c;
  }
  std::vector<std::size_t> cell;
  for (std::size_t i = 0; i < k.col.size(); ++i) {
    if (k.col[i] == best) cell.push_back(i);
  }
  return cell;
}

inline bool maps_blocks(const Structure& x, const Structure& y, const Permutation& perm) {
  for (auto b : x.blocks) {
    std::uint64_t img = 0;
    for (std::uint64_t m = b; m != 0; m &= m - 1) img |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
    if (!std::binary_search(y.blocks.begin(), y.blocks.end(), img)) return false;
  }
  return true;
}

/// Finds a column bijection carrying the colored structure x onto y. Both
/// colorings must be refined with equal traces.
inline bool search_isomorphism(const Structure& sx, const Coloring& cx, const Structure& sy, const Coloring& cy,
                               Permutation& out) {
  if (cx.discrete()) {
    std::vector<std::size_t> by_color(sy.n);
    for (std::size_t i = 0; i < sy.n; ++i) by_color[static_cast<std::size_t>(cy.col[i])] = i;
    Permutation perm(sx.n);
    for (std::size_t i = 0; i < sx.n; ++i) perm[i] = by_color[static_cast<std::size_t>(cx.col[i])];
    if (!maps_blocks(sx, sy, perm)) return false;
    out = std::move(perm);
    return true;
  }
  const auto cell_x = target_cell(cx);
  const int color = cx.col[cell_x.front()];
  Coloring nx = cx;
  individualize(nx, cell_x.front());
  const std::uint64_t hx = refine(sx, nx);
  for (std::size_t y = 0; y < sy.n; ++y) {
    if (cy.col[y] != color) continue;
    Coloring ny = cy;
    individualize(ny, y);
    if (refine(sy, ny) != hx) continue;
    if (search_isomorphism(sx, nx, sy, ny, out)) return true;
  }
  return false;
}

inline std::vector<std::size_t> orbit_of(std::size_t point, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> orbit{point};
  std::vector<bool> in(gens.empty() ? point + 1 : gens.front().size(), false);
  in[point] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      const std::size_t q = g[orbit[i]];
      if (!in[q]) {
        in[q] = true;
        orbit.push_back(q);
      }
    }
  }
  return orbit;
}

}  // namespace detail

/// Exact permutation-equivalence test with a verified witness.
inline EquivalenceCertificate are_equivalent(const BinaryCode& a, const BinaryCode& b) {
  detail::check_equivalence_bounds(a);
  detail::check_equivalence_bounds(b);
  EquivalenceCertificate cert;
  if (a.length() != b.length() || a.dimension() != b.dimension()) return cert;
  if (weight_enumerator(a, kEquivalenceMaxDimension) != weight_enumerator(b, kEquivalenceMaxDimension)) return cert;
  const auto weights = detail::spanning_weights(a);
  const auto sa = detail::build_structure(a, weights);
  const auto sb = detail::build_structure(b, weights);
  if (sa.blocks.size() != sb.blocks.size()) return cert;
  {
    std::vector<BitVector> rows;
    for (auto w : sb.blocks) rows.push_back(BitVector::from_word(b.length(), w));
    if (rank(rows) != b.dimension()) return cert;
  }
  auto ca = detail::initial_coloring(sa);
  auto cb = detail::initial_coloring(sb);
  if (detail::refine(sa, ca) != detail::refine(sb, cb)) return cert;
  Permutation perm;
  if (!detail::search_isomorphism(sa, ca, sb, cb, perm)) return cert;
  if (!(apply_permutation(a, perm) == b)) throw std::logic_error("equivalence witness failed verification");
  cert.equivalent = true;
  cert.permutation = std::move(perm);
  return cert;
}

struct AutomorphismGroup {
  std::uint64_t order = 1;
  std::vector<Permutation> generators;
  std::vector<std::size_t> base;
  std::vector<std::size_t> orbit_lengths;
};

inline AutomorphismGroup automorphism_group(const BinaryCode& c) {
  detail::check_equivalence_bounds(c);
  const auto s = detail::build_structure(c, detail::spanning_weights(c));
  AutomorphismGroup g;
  std::vector<detail::Coloring> states;
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::uint64_t> traces;
  auto cur = detail::initial_coloring(s);
  detail::refine(s, cur);
  while (!cur.discrete()) {
    auto cell = detail::target_cell(cur);
    states.push_back(cur);
    g.base.push_back(cell.front());
    cells.push_back(cell);
    detail::individualize(cur, cell.front());
    traces.push_back(detail::refine(s, cur));
    states.push_back(cur);
    // states holds (before, after) pairs
  }
  const std::size_t levels = g.base.size();
  g.orbit_lengths.assign(levels, 1);
  for (std::size_t lv = levels; lv-- > 0;) {
    const auto& before = states[2 * lv];
    const auto& after = states[2 * lv + 1];
    auto orbit = detail::orbit_of(g.base[lv], g.generators);
    for (auto v : cells[lv]) {
      if (std::find(orbit.begin(), orbit.end(), v) != orbit.end()) continue;
      auto alt = before;
      detail::individualize(alt, v);
      if (detail::refine(s, alt) != traces[lv]) continue;
      Permutation perm;
      if (detail::search_isomorphism(s, after, s, alt, perm)) {
        g.generators.push_back(std::move(perm));
        orbit = detail::orbit_of(g.base[lv], g.generators);
      }
    }
    g.orbit_lengths[lv] = orbit.size();
    if (g.order > UINT64_MAX / orbit.size()) throw std::overflow_error("automorphism group order exceeds 64 bits");
    g.order *= orbit.size();
  }
  for (const auto& p : g.generators) {
    if (!(apply_permutation(c, p) == c)) throw std::logic_error("automorphism generator failed verification");
  }
  return g;
}

inline std::uint64_t automorphism_group_order(const BinaryCode& c) { return automorphism_group(c).order; }

// ---------------------------------------------------------------------------
// Orbit reduction of module tuples.

/// C_pi together with module components, labelled by the exponent tuple that
/// generated it.
struct ModuleTuple {
  std::vector<int> label;
  BinaryCode c_pi;
  std::vector<ModuleCode> modules;  // nonzero modules, sorted by ideal
};

inline ModuleTuple normalized(ModuleTuple t) {
  std::erase_if(t.modules, [](const ModuleCode& m) { return m.dimension() == 0; });
  std::sort(t.modules.begin(), t.modules.end(), [](const ModuleCode& a, const ModuleCode& b) { return a.ideal < b.ideal; });
  return t;
}

/// x -> x^t on every module entry; modules move to the image ideals.
inline ModuleTuple substitute(const ModuleTuple& in, const Factorization& fz, long long t) {
  if (t % fz.p == 0) throw std::invalid_argument("substitution exponent must be prime to p");
  ModuleTuple out{in.label, in.c_pi, {}};
  for (const auto& m : in.modules) {
    auto rows = m.rows;
    for (auto& r : rows) {
      for (auto& a : r) a = a.substitute(t);
    }
    out.modules.push_back(make_module(fz, fz.substituted_ideal(m.ideal, t), m.length, std::move(rows)));
  }
  return normalized(std::move(out));
}

/// Multiplies coordinate j of every module by x^t.
inline ModuleTuple multiply_coordinate(const ModuleTuple& in, const Factorization& fz, std::size_t j, long long t) {
  ModuleTuple out{in.label, in.c_pi, {}};
  for (const auto& m : in.modules) {
    auto rows = m.rows;
    for (auto& r : rows) r.at(j) = r.at(j).shifted(t);
    out.modules.push_back(make_module(fz, m.ideal, m.length, std::move(rows)));
  }
  return normalized(std::move(out));
}

/// Moves cycle i to position perm[i], in the modules and in C_pi.
inline ModuleTuple permute_cycles(const ModuleTuple& in, const Factorization& fz, const Permutation& perm) {
  const std::size_t c = perm.size();
  Permutation full(in.c_pi.length());
  std::iota(full.begin(), full.end(), 0U);
  std::copy(perm.begin(), perm.end(), full.begin());
  ModuleTuple out{in.label, apply_permutation(in.c_pi, full), {}};
  for (const auto& m : in.modules) {
    if (m.length != c) throw std::invalid_argument("cycle permutation degree differs from module length");
    auto rows = m.rows;
    for (auto& r : rows) {
      std::vector<RingPoly> moved(c);
      for (std::size_t i = 0; i < c; ++i) moved[perm[i]] = r[i];
      r = std::move(moved);
    }
    out.modules.push_back(make_module(fz, m.ideal, m.length, std::move(rows)));
  }
  return normalized(std::move(out));
}

/// Moves fixed point i to position perm[i] in C_pi.
inline ModuleTuple permute_fixed(const ModuleTuple& in, const Permutation& perm, int c) {
  Permutation full(in.c_pi.length());
  std::iota(full.begin(), full.end(), 0U);
  for (std::size_t i = 0; i < perm.size(); ++i) full[static_cast<std::size_t>(c) + i] = static_cast<std::size_t>(c) + perm[i];
  return ModuleTuple{in.label, apply_permutation(in.c_pi, full), in.modules};
}

/// Serialization that is equal exactly for equal (C_pi, modules).
inline std::string canonical_key(const ModuleTuple& t) {
  std::string k = std::to_string(t.c_pi.length()) + ":";
  for (const auto& g : t.c_pi.generator()) k += std::to_string(g.word()) + ",";
  const ModuleTuple norm = normalized(t);
  for (const auto& m : norm.modules) {
    k += "|" + std::to_string(m.ideal) + ":";
    for (const auto& r : m.rows) {
      for (const auto& a : r) k += std::to_string(a.bits()) + ",";
      k += ";";
    }
  }
  return k;
}

struct CandidateOrbit {
  std::size_t representative = 0;   // index of the lexicographically least label
  std::vector<std::size_t> members;  // indices, ascending
};

inline int primitive_root(int p) {
  require_odd_prime(p);
  const auto primes = prime_factors(static_cast<std::uint64_t>(p - 1));
  for (int g = 2; g < p; ++g) {
    const bool ok = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t q) {
      long long r = 1;
      for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(p - 1) / q; ++i) r = r * g % p;
      return r != 1;
    });
    if (ok) return g;
  }
  return 1;
}

/// Generators of the group of decomposition-preserving transformations.
inline std::vector<std::function<ModuleTuple(const ModuleTuple&)>> decomposition_symmetries(const Factorization& fz, int c,
                                                                                              int f) {
  std::vector<std::function<ModuleTuple(const ModuleTuple&)>> gens;
  const int g = primitive_root(fz.p);
  gens.emplace_back([&fz, g](const ModuleTuple& t) { return substitute(t, fz, g); });
  if (c >= 1) gens.emplace_back([&fz](const ModuleTuple& t) { return multiply_coordinate(t, fz, 0, 1); });
  if (c >= 2) {
    Permutation swap(static_cast<std::size_t>(c));
    std::iota(swap.begin(), swap.end(), 0U);
    std::swap(swap[0], swap[1]);
    Permutation cycle(static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < cycle.size(); ++i) cycle[i] = (i + 1) % cycle.size();
    gens.emplace_back([&fz, swap](const ModuleTuple& t) { return permute_cycles(t, fz, swap); });
    if (c > 2) gens.emplace_back([&fz, cycle](const ModuleTuple& t) { return permute_cycles(t, fz, cycle); });
  }
  if (f >= 2) {
    Permutation swap(static_cast<std::size_t>(f));
    std::iota(swap.begin(), swap.end(), 0U);
    std::swap(swap[0], swap[1]);
    Permutation cycle(static_cast<std::size_t>(f));
    for (std::size_t i = 0; i < cycle.size(); ++i) cycle[i] = (i + 1) % cycle.size();
    gens.emplace_back([swap, c](const ModuleTuple& t) { return permute_fixed(t, swap, c); });
    if (f > 2) gens.emplace_back([cycle, c](const ModuleTuple& t) { return permute_fixed(t, cycle, c); });
  }
  return gens;
}

/// Partitions the candidates into orbits of the group generated by the
/// decomposition symmetries, restricted to the candidate list: two
/// candidates share an orbit when a chain of generator applications links
/// them inside the list. Candidates must be ordered by label.
inline std::vector<CandidateOrbit> orbit_reduce(std::span<const ModuleTuple> candidates, const Factorization& fz, int c,
                                                int f) {
  std::vector<std::size_t> parent(candidates.size());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto [it, fresh] = index.emplace(canonical_key(candidates[i]), i);
    if (!fresh) unite(it->second, i);
  }
  const auto gens = decomposition_symmetries(fz, c, f);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (const auto& g : gens) {
      auto it = index.find(canonical_key(g(candidates[i])));
      if (it != index.end()) unite(i, it->second);
    }
  }
  std::map<std::size_t, CandidateOrbit> orbits;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& o = orbits[find(i)];
    o.representative = find(i);
    o.members.push_back(i);
  }
  std::vector<CandidateOrbit> out;
  for (auto& [root, o] : orbits) out.push_back(std::move(o));
  return out;
}

}  // namespace lcdforge
