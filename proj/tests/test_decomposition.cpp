#include <gtest/gtest.h>

#include "lcdforge/decomposition.hpp"
#include "lcdforge/lcd_theory.hpp"
#include "support.hpp"

using namespace lcdforge;
using namespace lcdforge::testing;

namespace {

struct P7 {
  Factorization fz = factor_xp_minus1(7);
  RingPoly e1 = RingPoly::from_exponents(7, {0, 1, 2, 4});
  RingPoly e2 = RingPoly::from_exponents(7, {0, 3, 5, 6});
  RingPoly z = RingPoly::zero(7);
  std::size_t i1 = *fz.ideal_containing(e1);
  std::size_t i2 = *fz.ideal_containing(e2);

  /// M_1 = <(e1,e1,e1,0)>, M_2 = <(e2,xe2,0,e2)>.
  BinaryCode code() const {
    const std::vector<ModuleCode> m{make_module(fz, i1, 4, {{e1, e1, e1, z}}),
                                    make_module(fz, i2, 4, {{e2, e2.shifted(1), z, e2}})};
    return assemble_code(BinaryCode(4), m, fz, SigmaPermutation(7, 4, 0));
  }
};

BitVector block_ones(std::size_t n, std::size_t from, std::size_t to) {
  BitVector v(n);
  for (std::size_t i = from; i < to; ++i) v.set(i);
  return v;
}

}  // namespace

TEST(Sigma, CycleStructure) {
  const SigmaPermutation s(7, 4, 2);
  EXPECT_EQ(s.n(), 30U);
  const auto img = s.images();
  EXPECT_EQ(img[0], 1U);
  EXPECT_EQ(img[6], 0U);
  EXPECT_EQ(img[13], 7U);
  EXPECT_EQ(img[28], 28U);
  for (int t = 0; t < 50; ++t) {
    const auto v = random_vector(30);
    BitVector w = v;
    for (int i = 0; i < 7; ++i) w = s.apply(w);
    EXPECT_EQ(w, v);
    BitVector direct(30);
    for (std::size_t i = 0; i < 30; ++i) {
      if (v.test(i)) direct.set(img[i]);
    }
    EXPECT_EQ(s.apply(v), direct);
  }
  EXPECT_THROW(SigmaPermutation(9, 1, 0), std::invalid_argument);
  EXPECT_THROW(SigmaPermutation(7, 10, 0), std::length_error);
}

TEST(FixedSubcode, Examples) {
  const SigmaPermutation one(7, 1, 0);
  const BinaryCode rep(7, {BitVector::ones(7)});
  EXPECT_EQ(fixed_subcode(rep, one), rep);
  const P7 p7;
  const auto c = p7.code();
  EXPECT_EQ(fixed_subcode(c, SigmaPermutation(7, 4, 0)).dimension(), 0U);
  EXPECT_THROW(fixed_subcode(BinaryCode(7, {BitVector::from_string("1000000")}), one), NotAnAutomorphismError);
}

TEST(FixedSubcode, OfEvenSubcodeIsCycleConstantPart) {
  for (int t = 0; t < 100; ++t) {
    const SigmaPermutation s(5, 3, 1);
    const auto c = random_invariant_code(s, 2);
    const auto e = even_subcode(c, s);
    const auto fe = fixed_subcode(e, s);
    for (const auto& g : fe.generator()) {
      EXPECT_TRUE(is_cycle_constant(g, s));
      EXPECT_TRUE(e.contains(g));
    }
    // A cycle-constant word has odd weight on each support cycle, so E holds none.
    EXPECT_EQ(fe.dimension(), 0U);
  }
}

TEST(EvenSubcode, Examples) {
  const SigmaPermutation one(7, 1, 0);
  const auto e = even_subcode(BinaryCode::full_space(7), one);
  EXPECT_EQ(e.dimension(), 6U);
  for (auto w : codeword_set(e)) EXPECT_EQ(std::popcount(w) % 2, 0);
  const P7 p7;
  EXPECT_EQ(even_subcode(p7.code(), SigmaPermutation(7, 4, 0)), p7.code());
}

TEST(PiProjection, Examples) {
  const SigmaPermutation s(7, 4, 2);
  EXPECT_EQ(pi_project(BitVector::ones(30), s), BitVector::ones(6));
  const SigmaPermutation s17(17, 2, 0);
  const BinaryCode f(34, {block_ones(34, 0, 17)});
  EXPECT_EQ(pi_project(f, s17), BinaryCode(2, {BitVector::from_string("10")}));
  EXPECT_THROW(pi_project(BitVector::from_string(std::string("1") + std::string(29, '0')), s), std::invalid_argument);
}

TEST(PiProjection, LiftRoundTripAndInnerProducts) {
  for (int t = 0; t < 200; ++t) {
    const SigmaPermutation s(5, 3, 2);
    const auto u = random_vector(5);
    const auto v = random_vector(5);
    const auto lu = pi_lift(u, s);
    const auto lv = pi_lift(v, s);
    EXPECT_TRUE(is_cycle_constant(lu, s));
    EXPECT_EQ(pi_project(lu, s), u);
    EXPECT_EQ(dot(pi_project(lu, s), pi_project(lv, s)), dot(lu, lv));
  }
}

TEST(PhiProjection, Examples) {
  const SigmaPermutation s(7, 4, 0);
  const P7 p7;
  const auto zero = phi_project(BinaryCode(28), p7.fz, 4);
  for (const auto& m : zero) EXPECT_EQ(m.dimension(), 0U);
  const auto d = decompose(p7.code(), s, p7.fz);
  EXPECT_EQ(d.module_dimensions(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(d.k_pi(), 0U);
}

TEST(PhiProjection, DimensionsMatchBinaryRank) {
  for (int p : {3, 5, 7, 11, 13, 17}) {
    const auto fz = factor_xp_minus1(p);
    for (int t = 0; t < 15; ++t) {
      const SigmaPermutation s(p, 1 + static_cast<int>(rng()() % static_cast<std::uint64_t>(std::max(1, 34 / p))),
                               static_cast<int>(rng()() % 3));
      const auto c = random_invariant_code(s, 1 + rng()() % 2);
      const auto d = decompose(c, s, fz);
      std::size_t sum = 0;
      for (const auto& m : d.modules) sum += m.dimension();
      EXPECT_EQ(sum * static_cast<std::size_t>(fz.m), d.even.dimension());
      EXPECT_EQ(c.dimension(), d.k_pi() + sum * static_cast<std::size_t>(fz.m));
    }
  }
}

TEST(Assemble, PiLiftOfFullSpace) {
  const SigmaPermutation s(5, 2, 1);
  const auto fz = factor_xp_minus1(5);
  std::vector<ModuleCode> none;
  const auto c = assemble_code(BinaryCode::full_space(3), none, fz, s);
  const BinaryCode expect(11, {block_ones(11, 0, 5), block_ones(11, 5, 10), block_ones(11, 10, 11)});
  EXPECT_EQ(c, expect);
}

TEST(Assemble, FourCycleCodeIsLcdWithDistance12) {
  const P7 p7;
  const auto c = p7.code();
  EXPECT_EQ(c.length(), 28U);
  EXPECT_EQ(c.dimension(), 6U);
  EXPECT_EQ(min_distance(c), 12);
  EXPECT_TRUE(is_lcd(c));
  EXPECT_TRUE(is_automorphism(c, SigmaPermutation(7, 4, 0)));
}

TEST(Assemble, RejectsInconsistentLengths) {
  const P7 p7;
  const std::vector<ModuleCode> m{make_module(p7.fz, p7.i1, 3, {{p7.e1, p7.e1, p7.e1}})};
  EXPECT_THROW(assemble_code(BinaryCode(4), m, p7.fz, SigmaPermutation(7, 4, 0)), std::invalid_argument);
  EXPECT_THROW(assemble_code(BinaryCode(5), {}, p7.fz, SigmaPermutation(7, 4, 0)), std::invalid_argument);
}

TEST(Assemble, RoundTrip) {
  for (int p : {3, 5, 7, 11, 13, 17}) {
    const auto fz = factor_xp_minus1(p);
    for (int t = 0; t < 20; ++t) {
      const SigmaPermutation s(p, 1 + static_cast<int>(rng()() % static_cast<std::uint64_t>(std::max(1, 34 / p))),
                               static_cast<int>(rng()() % 3));
      const auto c = random_invariant_code(s, 1 + rng()() % 3);
      const auto d = decompose(c, s, fz);
      const auto back = assemble_code(d.c_pi, d.modules, fz, s);
      EXPECT_EQ(back, c);
      const auto d2 = decompose(back, s, fz);
      EXPECT_EQ(d2.c_pi, d.c_pi);
      EXPECT_EQ(d2.modules, d.modules);
    }
  }
}

TEST(FixedEvenSplit, DirectOrthogonalSum) {
  for (int t = 0; t < 200; ++t) {
    const SigmaPermutation s(7, 1 + static_cast<int>(rng()() % 4), static_cast<int>(rng()() % 4));
    const auto c = random_invariant_code(s, 1 + rng()() % 3);
    const auto f = fixed_subcode(c, s);
    const auto e = even_subcode(c, s);
    EXPECT_EQ(code_sum(f, e), c);
    EXPECT_EQ(intersect(f, e).dimension(), 0U);
    for (const auto& a : f.generator()) {
      for (const auto& b : e.generator()) EXPECT_EQ(dot(a, b), 0);
    }
  }
}

TEST(ModuleCode, RowReductionOverTheField) {
  const P7 p7;
  // (x e1) row scaled to a leading e1, and a dependent second row dropped.
  const auto m = make_module(p7.fz, p7.i1, 2, {{p7.e1.shifted(1), p7.e1.shifted(3)}, {p7.e1, p7.e1.shifted(2)}});
  EXPECT_EQ(m.dimension(), 1U);
  EXPECT_EQ(m.rows[0][0], p7.e1);
  EXPECT_THROW(make_module(p7.fz, p7.i1, 1, {{p7.e2}}), std::invalid_argument);
}

TEST(DualityTransfer, DirectSumIncludesEveryIdeal) {
  // Hat C_phi is the sum over all ideals, index 1 included; dropping the
  // first summand loses dimension whenever M_1 is a proper subcode.
  const auto fz = factor_xp_minus1(17);
  const auto e1 = RingPoly::from_exponents(17, {1, 2, 4, 8, 9, 13, 15, 16});
  const auto delta = RingPoly::from_exponents(17, {3, 7, 8, 9, 10, 14});
  const std::size_t i1 = *fz.ideal_containing(e1);
  const SigmaPermutation s(17, 2, 0);
  const std::vector<ModuleCode> m{make_module(fz, i1, 2, {{e1, fz.ideals[i1].power(delta, 5)}})};
  const auto c = assemble_code(BinaryCode(2), m, fz, s);
  const auto d = decompose(c, s, fz);
  const auto dd = decompose(dual_code(c), s, fz);
  BinaryCode all(34);
  BinaryCode without_first(34);
  for (std::size_t j = 0; j < d.modules.size(); ++j) {
    const auto img = module_binary_image(fz, hermitian_dual(fz, d.modules[j]));
    all = code_sum(all, img);
    if (d.modules[j].ideal != 1) without_first = code_sum(without_first, img);
  }
  EXPECT_EQ(all, dd.even_star);
  EXPECT_LT(without_first.dimension(), dd.even_star.dimension());
  EXPECT_TRUE(duality_transfer(c, s, fz).direct_sum);
}
