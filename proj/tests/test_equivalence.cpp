#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lcdforge/campaigns.hpp"
#include "lcdforge/equivalence.hpp"
#include "support.hpp"

using namespace lcdforge;
using namespace lcdforge::testing;

namespace {

BinaryCode build(const Candidate& c, const SigmaPermutation& s, const Factorization& fz) {
  return assemble_code(c.tuple.c_pi, c.tuple.modules, fz, s);
}

Permutation random_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(ApplyPermutation, MovesCoordinates) {
  const Permutation p{1, 2, 0};
  EXPECT_EQ(apply_permutation(BitVector::from_string("100"), p), BitVector::from_string("010"));
  EXPECT_EQ(cycle_notation(p), "(1,2,3)");
  EXPECT_EQ(cycle_notation(Permutation{0, 1}), "()");
  EXPECT_EQ(cycle_notation(Permutation{1, 0, 2, 4, 3}), "(1,2)(4,5)");
}

TEST(AreEquivalent, PermutedCodeWithVerifiedWitness) {
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 6 + rng()() % 20;
    const auto a = random_code(n, 2 + rng()() % 5);
    const auto b = apply_permutation(a, random_permutation(n));
    const auto cert = are_equivalent(a, b);
    ASSERT_TRUE(cert.equivalent);
    EXPECT_EQ(apply_permutation(a, cert.permutation), b);
  }
}

TEST(AreEquivalent, DifferentWeightEnumeratorsAreInequivalent) {
  EXPECT_FALSE(are_equivalent(hamming_7_4(), BinaryCode::full_space(7)).equivalent);
  EXPECT_FALSE(are_equivalent(BinaryCode(4, {BitVector::from_string("1100")}),
                              BinaryCode(4, {BitVector::from_string("1110")}))
                   .equivalent);
  EXPECT_FALSE(are_equivalent(BinaryCode(4), BinaryCode(5)).equivalent);
}

TEST(AreEquivalent, SizeBounds) {
  EXPECT_THROW(are_equivalent(BinaryCode(41), BinaryCode(41)), SizeBoundError);
  EXPECT_THROW(automorphism_group(BinaryCode::full_space(21)), SizeBoundError);
}

TEST(AreEquivalent, EquivalenceRelation) {
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 8 + rng()() % 10;
    const auto a = random_code(n, 3);
    const auto b = apply_permutation(a, random_permutation(n));
    const auto c = apply_permutation(b, random_permutation(n));
    const auto other = random_code(n, 3);
    EXPECT_TRUE(are_equivalent(a, a).equivalent);
    EXPECT_TRUE(are_equivalent(b, a).equivalent);
    EXPECT_TRUE(are_equivalent(a, c).equivalent);
    EXPECT_EQ(are_equivalent(a, other).equivalent, are_equivalent(other, a).equivalent);
    EXPECT_EQ(are_equivalent(a, other).equivalent, are_equivalent(c, other).equivalent);
  }
}

TEST(AreEquivalent, P7ClassifiedCodesPairwiseDistinct) {
  const P7Elements el;
  const SigmaPermutation s(7, 4, 0);
  const auto refs = p7_reference(el, 0);
  std::vector<BinaryCode> codes;
  for (const auto& r : refs) codes.push_back(build(r, s, el.fz));
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) EXPECT_FALSE(are_equivalent(codes[i], codes[j]).equivalent);
  }
  std::vector<std::uint64_t> orders;
  for (const auto& c : codes) orders.push_back(automorphism_group_order(c));
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{7, 14, 42}));
}

TEST(AreEquivalent, EqualWeightEnumeratorsButInequivalent) {
  const P11Elements el;
  const SigmaPermutation s(11, 3, 0);
  const auto a = build(p11_candidate(el, 0, 1, 5, 0, 0), s, el.fz);
  const auto b = build(p11_candidate(el, 1, 1, 22, 1, 0), s, el.fz);
  EXPECT_EQ(weight_enumerator(a), weight_enumerator(b));
  EXPECT_FALSE(are_equivalent(a, b).equivalent);
}

TEST(AutomorphismGroup, Examples) {
  EXPECT_EQ(automorphism_group_order(hamming_7_4()), 168U);
  EXPECT_EQ(automorphism_group_order(extended_hamming_8_4()), 1344U);
  EXPECT_EQ(automorphism_group_order(BinaryCode(5, {BitVector::from_string("11000")})), 12U);
  EXPECT_EQ(automorphism_group_order(BinaryCode(4)), 24U);
  const P17Elements el;
  const auto c = build(p17_k1_candidate(el, 0, 5, 0), SigmaPermutation(17, 2, 0), el.fz);
  EXPECT_EQ(c.dimension(), 8U);
  const auto g = automorphism_group(c);
  EXPECT_EQ(g.order, 136U);
  for (const auto& p : g.generators) EXPECT_EQ(apply_permutation(c, p), c);
}

TEST(AutomorphismGroup, InvariantUnderEquivalence) {
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 6 + rng()() % 14;
    const auto a = random_code(n, 2 + rng()() % 4);
    const auto b = apply_permutation(a, random_permutation(n));
    const auto oa = automorphism_group_order(a);
    EXPECT_EQ(oa, automorphism_group_order(b));
    EXPECT_EQ(factorial(n) % oa, 0U);
    std::uint64_t prod = 1;
    for (auto l : automorphism_group(a).orbit_lengths) prod *= l;
    EXPECT_EQ(prod, oa);
  }
}

TEST(OrbitReduce, IdentityCase) {
  const P7Elements el;
  const std::vector<ModuleTuple> one{p7_reference(el, 0)[0].tuple};
  const auto orbits = orbit_reduce(one, el.fz, 4, 0);
  ASSERT_EQ(orbits.size(), 1U);
  EXPECT_EQ(orbits[0].representative, 0U);
  EXPECT_EQ(orbits[0].members, std::vector<std::size_t>{0});
  std::vector<ModuleTuple> refs;
  for (const auto& r : p7_reference(el, 0)) refs.push_back(r.tuple);
  EXPECT_EQ(orbit_reduce(refs, el.fz, 4, 0).size(), 3U);
}

TEST(OrbitReduce, SeventeenShiftsCollapse) {
  const P17Elements el;
  for (int j : {5, 10}) {
    std::vector<ModuleTuple> cands;
    for (int i = 0; i < 17; ++i) cands.push_back(p17_k1_candidate(el, i, j, 0).tuple);
    const auto orbits = orbit_reduce(cands, el.fz, 2, 0);
    ASSERT_EQ(orbits.size(), 1U);
    EXPECT_EQ(orbits[0].members.size(), 17U);
  }
}

TEST(OrbitReduce, CubingSwapsP7Modules) {
  const P7Elements el;
  const auto t = p7_reference(el, 0)[0].tuple;
  const auto u = substitute(t, el.fz, 3);
  ASSERT_EQ(u.modules.size(), 2U);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& src = t.modules[k];
    const auto it = std::find_if(u.modules.begin(), u.modules.end(),
                                 [&](const ModuleCode& m) { return m.ideal == el.fz.ideals[src.ideal].partner; });
    ASSERT_NE(it, u.modules.end());
    EXPECT_EQ(it->dimension(), src.dimension());
  }
  const SigmaPermutation s(7, 4, 0);
  EXPECT_TRUE(are_equivalent(assemble_code(t.c_pi, t.modules, el.fz, s), assemble_code(u.c_pi, u.modules, el.fz, s))
                  .equivalent);
}

TEST(OrbitReduce, OrbitMatesAreEquivalent) {
  const P7Elements el;
  const SigmaPermutation s(7, 4, 0);
  auto cands = p7_base_candidates(el);
  cands.resize(200);
  std::vector<ModuleTuple> tuples;
  for (const auto& c : cands) tuples.push_back(c.tuple);
  const auto orbits = orbit_reduce(tuples, el.fz, 4, 0);
  EXPECT_LT(orbits.size(), tuples.size());
  std::size_t checked = 0;
  for (const auto& o : orbits) {
    EXPECT_EQ(o.representative, o.members.front());
    const auto rep = build(cands[o.representative], s, el.fz);
    for (std::size_t k = 1; k < o.members.size() && k < 4; ++k) {
      EXPECT_TRUE(are_equivalent(rep, build(cands[o.members[k]], s, el.fz)).equivalent);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0U);
}

TEST(OrbitReduce, SymmetriesPreserveEquivalenceClass) {
  const P11Elements el;
  const SigmaPermutation s(11, 3, 2);
  const auto t = detail::with_c_pi(p11_candidate(el, 0, 1, 5, 0, 2), BinaryCode(5, {BitVector::from_string("00111")}),
                                   "")
                     .tuple;
  const auto base = assemble_code(t.c_pi, t.modules, el.fz, s);
  for (const auto& g : decomposition_symmetries(el.fz, 3, 2)) {
    const auto u = g(t);
    EXPECT_TRUE(are_equivalent(base, assemble_code(u.c_pi, u.modules, el.fz, s)).equivalent);
  }
}
