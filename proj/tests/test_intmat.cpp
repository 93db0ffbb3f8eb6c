#include <doctest.h>

#include "cluspat/intmat.hpp"
#include "cluspat/randgen.hpp"

using namespace cluspat;

namespace {

IntMatrix random_square(RandomSource& rng, int n, int bound) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.uniform_int(-bound, bound);
  return m;
}

}  // namespace

TEST_CASE("positive_part") {
  CHECK(positive_part(IntMatrix{{0, 1}, {-1, 0}}) == IntMatrix{{0, 1}, {0, 0}});
  CHECK(positive_part(IntMatrix::zero(3, 3)) == IntMatrix::zero(3, 3));
  CHECK(positive_part(IntMatrix{{-1, 0}, {-1, 1}}) == IntMatrix{{0, 0}, {0, 1}});
}

TEST_CASE("row and column restriction") {
  IntMatrix m{{1, 2}, {3, 4}};
  CHECK(row_restrict(m, 1) == IntMatrix{{1, 2}, {0, 0}});
  CHECK(col_restrict(m, 2) == IntMatrix{{0, 2}, {0, 4}});
  CHECK_THROWS_AS(row_restrict(m, 0), IndexOutOfRange);
  CHECK_THROWS_AS(col_restrict(m, 3), IndexOutOfRange);
}

TEST_CASE("restriction commutes with the positive part and with products") {
  RandomSource rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform_int(1, 4);
    IntMatrix m = random_square(rng, n, 5);
    IntMatrix a = random_square(rng, n, 5);
    int k = rng.uniform_int(1, n);
    CHECK(positive_part(col_restrict(m, k)) == col_restrict(positive_part(m), k));
    CHECK(positive_part(row_restrict(m, k)) == row_restrict(positive_part(m), k));
    CHECK(a * col_restrict(m, k) == col_restrict(a * m, k));
    CHECK(row_restrict(a, k) * m == row_restrict(a * m, k));
  }
}

TEST_CASE("b = [b]_+ - [-b]_+ entrywise") {
  RandomSource rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform_int(1, 5);
    IntMatrix m = random_square(rng, n, 7);
    CHECK(m == positive_part(m) - positive_part(-m));
  }
}

TEST_CASE("j_matrix") {
  CHECK(j_matrix(2, 2) == IntMatrix{{1, 0}, {0, -1}});
  CHECK(j_matrix(1, 1) == IntMatrix{{-1}});
  CHECK(j_matrix(3, 2) * j_matrix(3, 2) == IntMatrix::identity(3));
  CHECK_THROWS_AS(j_matrix(2, 3), IndexOutOfRange);
}

TEST_CASE("exchange-matrix mutation in type A2 negates") {
  ExchangeMatrix b(IntMatrix{{0, 1}, {-1, 0}});
  CHECK(b.mutated(2).matrix() == IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("matrix mutation matches the entrywise rule applied by hand") {
  // b'_{ij} = b_{ij} + [b_{ik}]_+ b_{kj} + b_{ik} [-b_{kj}]_+ evaluated
  // entry by entry for B = [[0,2,0],[-1,0,1],[0,-1,0]], k = 2.
  IntMatrix b{{0, 2, 0}, {-1, 0, 1}, {0, -1, 0}};
  IntMatrix expected{{0, -2, 2}, {1, 0, -1}, {-1, 1, 0}};
  CHECK(mutate_matrix(b, 2) == expected);
}

TEST_CASE("mutation is involutive and keeps the symmetrizer") {
  RandomSource rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform_int(2, 4);
    ExchangeMatrix b = random_exchange_matrix(rng, n, 3, false, trial % 2 == 0);
    int k = rng.uniform_int(1, n);
    ExchangeMatrix m = b.mutated(k);
    CHECK(m.symmetrizer() == b.symmetrizer());
    CHECK(m.mutated(k) == b);
  }
}

TEST_CASE("skew_symmetrizer") {
  SUBCASE("skew-symmetric input gets the identity") {
    IntMatrix b{{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}};
    std::vector<BigInt> d = skew_symmetrizer(b);
    CHECK(d == std::vector<BigInt>{1, 1, 1});
  }
  SUBCASE("ratio propagation clears denominators") {
    std::vector<BigInt> d = skew_symmetrizer(IntMatrix{{0, 2}, {-1, 0}});
    CHECK(d == std::vector<BigInt>{1, 2});
  }
  SUBCASE("symmetric nonzero pair is rejected") {
    CHECK_THROWS_AS(skew_symmetrizer(IntMatrix{{0, 1}, {1, 0}}), NotSkewSymmetrizable);
  }
  SUBCASE("one-sided zero is rejected") {
    CHECK_THROWS_AS(skew_symmetrizer(IntMatrix{{0, 1}, {0, 0}}), NotSkewSymmetrizable);
  }
  SUBCASE("disconnected indices get d = 1") {
    std::vector<BigInt> d = skew_symmetrizer(IntMatrix{{0, 0, 2}, {0, 0, 0}, {-1, 0, 0}});
    CHECK(d == std::vector<BigInt>{1, 1, 2});
  }
}

TEST_CASE("determinant is exact") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {-1, 0}}) == 1);
  CHECK(determinant(IntMatrix{{2, 0, 1}, {1, 3, 2}, {0, 1, -1}}) == -9);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("transposed exchange matrix is skew-symmetrizable with its own D") {
  ExchangeMatrix b(IntMatrix{{0, 2}, {-1, 0}});
  ExchangeMatrix bt = b.transposed();
  CHECK(bt.matrix() == IntMatrix{{0, -1}, {2, 0}});
  CHECK(bt.symmetrizer() == std::vector<BigInt>{2, 1});
}

TEST_CASE("exchange matrix construction validates") {
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{1, 0}, {0, 0}}), NotSkewSymmetrizable);
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}}, std::vector<BigInt>{1, -1}),
                  InvalidArgument);
}
