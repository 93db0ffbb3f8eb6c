#include <doctest.h>

#include "cluspat/principal_ext.hpp"
#include "cluspat/randgen.hpp"

using namespace cluspat;

namespace {
const IntMatrix kA2{{0, 1}, {-1, 0}};
const Walk kA2Walk{2, 1, 2, 1, 2};
}  // namespace

TEST_CASE("full extension block layout") {
  ExtendedMatrix ext = extend(ExchangeMatrix(kA2));
  CHECK(ext.full.matrix() ==
        IntMatrix{{0, 1, -1, 0}, {-1, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(ext.full.symmetrizer() == std::vector<BigInt>{1, 1, 1, 1});
  ExtendedMatrix tiny = extend(ExchangeMatrix(IntMatrix{{0}}));
  CHECK(tiny.full.matrix() == IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("extension determinant is 1 for skew-symmetric bases") {
  RandomSource rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.uniform_int(1, 4);
    ExchangeMatrix b = random_exchange_matrix(rng, n, 3, false, false);
    CHECK(determinant(extend(b).full.matrix()) == 1);
  }
}

TEST_CASE("extension symmetrizer doubles D") {
  ExchangeMatrix b(IntMatrix{{0, 2}, {-1, 0}});
  ExtendedMatrix ext = extend(b);
  CHECK(ext.full.symmetrizer() == std::vector<BigInt>{1, 2, 1, 2});
}

TEST_CASE("mutated extension matches the block formula") {
  SUBCASE("empty walk") {
    ExchangeMatrix b(kA2);
    CHECK(extended_exchange_at(b, Walk{}) == extend(b).full.matrix());
  }
  SUBCASE("A2 walk (2,1) carries the table C-matrix in its lower-left block") {
    ExchangeMatrix b(kA2);
    IntMatrix full = extended_exchange_at(b, Walk{2, 1});
    PatternNode node = walk_node(b, Walk{2, 1});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK(full(2 + i, j) == node.c(i, j));
        CHECK(full(2 + i, 2 + j) == 0);
        CHECK(full(i, j) == node.b.matrix()(i, j));
      }
  }
  SUBCASE("nontrivial symmetrizer keeps the conjugated block integral") {
    ExchangeMatrix b(IntMatrix{{0, 2}, {-1, 0}});
    RandomSource rng(62);
    WalkCache cache;
    for (int trial = 0; trial < 10; ++trial) {
      Walk walk = random_feasible_walk(rng, b, 6, 10000);
      IntMatrix full = extended_exchange_at(b, walk);
      PatternNode node = walk_node(b, walk, &cache);
      CHECK(full == extended_exchange_blocks(node));
    }
  }
}

TEST_CASE("conjugated transpose block integrality") {
  std::vector<BigInt> d{1, 2};
  IntMatrix c{{1, 0}, {1, 1}};
  IntMatrix e = conjugated_negative_transpose(c, d);
  CHECK(e == IntMatrix{{-1, -2}, {0, -1}});
  // d_i^{-1} c_ji d_j with d = (2, 1) and c_21 = 1 leaves a half-integer.
  CHECK_THROWS_AS(conjugated_negative_transpose(IntMatrix{{1, 0}, {1, 1}},
                                                std::vector<BigInt>{2, 1}),
                  NonIntegerBlock);
}

TEST_CASE("extended pattern block identities in type A2") {
  ExchangeMatrix b(kA2);
  WalkCache cache;
  for (std::size_t t = 0; t <= 5; ++t) {
    IdentityReport report = extended_pattern_blocks(b, kA2Walk.prefix(t), &cache);
    CHECK(report.ok);
    if (!report.ok)
      for (const auto& f : report.failures) MESSAGE(f);
  }
}

TEST_CASE("extended pattern block identities on random instances") {
  RandomSource rng(63);
  WalkCache cache;
  int zero_column_cases = 0, scaled_cases = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform_int(2, 3);
    bool zero_col = trial % 3 == 0;
    bool scaled = trial % 2 == 0;
    ExchangeMatrix b = random_exchange_matrix(rng, n, 3, zero_col, scaled);
    for (int j = 0; j < n; ++j) {
      bool all_zero = true;
      for (int i = 0; i < n; ++i) all_zero = all_zero && b.matrix()(i, j) == 0;
      if (all_zero) {
        ++zero_column_cases;
        break;
      }
    }
    for (const auto& dv : b.symmetrizer())
      if (dv != 1) {
        ++scaled_cases;
        break;
      }
    Walk walk = random_feasible_walk(rng, b, 6, 10000);
    IdentityReport report = extended_pattern_blocks(b, walk, &cache);
    CHECK(report.ok);
    if (!report.ok)
      for (const auto& f : report.failures) MESSAGE(f);
  }
  // The sample genuinely exercises both degenerate shapes.
  CHECK(zero_column_cases >= 5);
  CHECK(scaled_cases >= 5);
}

TEST_CASE("walks in extension directions are allowed on the type, not the theorems") {
  ExchangeMatrix b(kA2);
  ExtendedMatrix ext = extend(b);
  // Mutating the full matrix in direction n+1 is legal.
  ExchangeMatrix mutated = ext.full.mutated(3);
  CHECK(mutated.mutated(3) == ext.full);
  // The theorem checks reject labels beyond n.
  CHECK_THROWS_AS(extended_pattern_blocks(b, Walk{3}), IndexOutOfRange);
  CHECK_THROWS_AS(extended_exchange_at(b, Walk{4}), IndexOutOfRange);
}
