#include <gtest/gtest.h>

#include "checks.hpp"

using namespace lcdforge;
using namespace lcdforge::testing;

TEST(StructuralProperties, RandomInvariantCodes) {
  const auto r = structural_properties(200, 7);
  EXPECT_EQ(r.codes, 1200U);
  EXPECT_EQ(r.fixed_even_split, 0U);
  EXPECT_EQ(r.pi_inner, 0U);
  EXPECT_EQ(r.pi_dual, 0U);
  EXPECT_EQ(r.phi_dual, 0U);
  EXPECT_EQ(r.module_duals, 0U);
  EXPECT_EQ(r.dimension, 0U);
  EXPECT_EQ(r.hull_extension, 0U);
  EXPECT_EQ(r.lcd_agreement, 0U);
  EXPECT_EQ(r.roundtrip, 0U);
}

TEST(StructuralProperties, IndependentSeed) {
  EXPECT_EQ(structural_properties(40, 99).violations(), 0U);
}

TEST(StructuralProperties, IdempotentStructure) {
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23}) EXPECT_TRUE(idempotent_structure(p).all()) << p;
}
