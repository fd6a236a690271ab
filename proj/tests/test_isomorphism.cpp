#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stight/constructions.hpp"
#include "stight/errors.hpp"
#include "stight/isomorphism.hpp"

using namespace stight;

namespace {

std::vector<Vertex> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Isomorphism, SpecExamples) {
  const Orientation c4 = build_family(FamilySpec::cycle(4));
  EXPECT_TRUE(is_isomorphic(c4, converse(c4)));

  const Orientation c3e2 = lex_product(build_family(FamilySpec::cycle(3)), Orientation(2));
  const Orientation c62 = build_family(FamilySpec::cycle_power(6, 2));
  EXPECT_FALSE(is_isomorphic(c3e2, c62));
  EXPECT_FALSE(oracle::isomorphic(c3e2, c62));

  std::mt19937_64 rng(21);
  const Orientation c5 = build_family(FamilySpec::cycle(5));
  EXPECT_TRUE(is_isomorphic(c5, relabel(c5, random_perm(5, rng))));
}

TEST(Isomorphism, WitnessRelabelsExactly) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Orientation d = oracle::random_orientation(1 + rng() % 8, rng);
    const Orientation e = relabel(d, random_perm(d.order(), rng));
    const auto w = find_isomorphism(d, e);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(relabel(d, *w), e);
    const auto back = find_isomorphism(e, d);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(relabel(e, *back), d);
    EXPECT_TRUE(is_isomorphic(d, d));
  }
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(23);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Orientation a = oracle::random_orientation(n, rng, 0.5);
    const Orientation b = oracle::random_orientation(n, rng, 0.5);
    const bool expected = oracle::isomorphic(a, b);
    positives += expected;
    EXPECT_EQ(is_isomorphic(a, b), expected);
    EXPECT_EQ(is_isomorphic(b, a), expected);
  }
  EXPECT_GT(positives, 10);
}

TEST(Isomorphism, RegularGraphsWithEqualProfiles) {
  // Same degrees and second-neighbourhood sizes everywhere.
  const Orientation t7 = build_family(FamilySpec::tournament(7));
  const Arc paley_arcs[] = {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {2, 3},
                            {2, 4}, {2, 6}, {3, 4}, {3, 5}, {3, 0}, {4, 5}, {4, 6},
                            {4, 1}, {5, 6}, {5, 0}, {5, 2}, {6, 0}, {6, 1}, {6, 3}};
  const Orientation paley(7, paley_arcs);
  EXPECT_EQ(is_isomorphic(t7, paley), oracle::isomorphic(t7, paley));
  EXPECT_FALSE(is_isomorphic(t7, paley));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const Orientation d = oracle::random_orientation(1 + rng() % 6, rng);
    const Orientation e = relabel(d, random_perm(d.order(), rng));
    EXPECT_EQ(canonical_form(d), canonical_form(e));
    EXPECT_EQ(invariant_hash(d), invariant_hash(e));
    EXPECT_TRUE(oracle::isomorphic(canonical_form(d), d));
  }
}

TEST(CanonicalForm, RefusesLargeOrders) {
  EXPECT_THROW(canonical_form(Orientation(kCanonicalFormMaxOrder + 1)), RefusalError);
}
