#include <doctest.h>

#include <thread>

#include "cluspat/pattern.hpp"
#include "cluspat/randgen.hpp"

using namespace cluspat;

namespace {

const IntMatrix kA2{{0, 1}, {-1, 0}};

struct TableRow {
  IntMatrix c, g, f;
};

// C-, G- and F-matrices along t0 -2- t1 -1- t2 -2- t3 -1- t4 -2- t5.
const std::vector<TableRow> kTable2{
    {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{0, 0}, {0, 0}}},
    {IntMatrix{{1, 0}, {0, -1}}, IntMatrix{{1, 0}, {0, -1}}, IntMatrix{{0, 0}, {0, 1}}},
    {IntMatrix{{-1, 0}, {0, -1}}, IntMatrix{{-1, 0}, {0, -1}}, IntMatrix{{1, 0}, {1, 1}}},
    {IntMatrix{{-1, 0}, {-1, 1}}, IntMatrix{{-1, -1}, {0, 1}}, IntMatrix{{1, 1}, {1, 0}}},
    {IntMatrix{{1, -1}, {1, 0}}, IntMatrix{{0, -1}, {1, 1}}, IntMatrix{{0, 1}, {0, 0}}},
    {IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{0, 0}, {0, 0}}},
};

const Walk kA2Walk{2, 1, 2, 1, 2};

}  // namespace

TEST_CASE("initial node") {
  ExchangeMatrix b(kA2);
  PatternNode node = initial_node(b);
  CHECK(node.c == IntMatrix::identity(2));
  CHECK(node.g == IntMatrix::identity(2));
  CHECK(node.f == IntMatrix::zero(2, 2));
  for (const auto& f : node.fpolys) CHECK(f.is_one());
  PatternNode four = initial_node(ExchangeMatrix(IntMatrix{{0, 1, -1, 0},
                                                           {-1, 0, 0, -1},
                                                           {1, 0, 0, 0},
                                                           {0, 1, 0, 0}}));
  CHECK(four.c == IntMatrix::identity(4));
  CHECK(four.f == IntMatrix::zero(4, 4));
}

TEST_CASE("type A2 walk reproduces the C/G/F table") {
  ExchangeMatrix b(kA2);
  for (std::size_t t = 0; t < kTable2.size(); ++t) {
    PatternNode node = walk_node(b, kA2Walk.prefix(t), nullptr, VerifyLevel::checked);
    CHECK(node.c == kTable2[t].c);
    CHECK(node.g == kTable2[t].g);
    CHECK(node.f == kTable2[t].f);
  }
}

TEST_CASE("type A2 F-polynomials along the walk") {
  ExchangeMatrix b(kA2);
  VarSet yv = y_vars(2);
  PatternNode t1 = walk_node(b, Walk{2});
  CHECK(t1.fpolys[1] == SparsePoly::parse(yv, "1 + y2"));
  PatternNode t2 = walk_node(b, Walk{2, 1});
  CHECK(t2.fpolys[0] == SparsePoly::parse(yv, "1 + y1 + y1*y2"));
  PatternNode t3 = walk_node(b, Walk{2, 1, 2});
  CHECK(t3.fpolys[1] == SparsePoly::parse(yv, "1 + y1"));
  PatternNode t5 = walk_node(b, Walk{2, 1, 2, 1, 2});
  CHECK(t5.fpolys[0].is_one());
  CHECK(t5.fpolys[1].is_one());
}

TEST_CASE("single-step values from the initial A2 node") {
  ExchangeMatrix b(kA2);
  PatternNode node = initial_node(b);
  CHECK(mutate_c(node, 2, +1) == kTable2[1].c);
  CHECK(mutate_fmat_max(node, 2) == IntMatrix{{0, 0}, {0, 1}});
  CHECK(mutate_fmat_eps(node, 2, +1, IntMatrix::identity(2)) == IntMatrix{{0, 0}, {0, 1}});
  CHECK(mutate_fmat_eps(node, 2, -1, IntMatrix::identity(2)) == IntMatrix{{0, 0}, {0, 1}});
}

TEST_CASE("tropical signs") {
  CHECK(tropical_sign_column(kTable2[3].c, 1) == -1);
  CHECK(tropical_sign_column(IntMatrix::identity(3), 2) == +1);
  CHECK_THROWS_AS(tropical_sign_column(IntMatrix{{1}, {-1}}, 1), SignIncoherent);
  CHECK_THROWS_AS(tropical_sign_column(IntMatrix::zero(2, 2), 1), SignIncoherent);
  CHECK(tropical_sign_row(kTable2[3].g, 1) == -1);
}

TEST_CASE("reduced final-seed forms reject degenerate columns") {
  ExchangeMatrix b(kA2);
  PatternNode node = initial_node(b);
  node.c = IntMatrix::zero(2, 2);  // constructed degenerate input
  CHECK_THROWS_AS(mutate_c_signed(node, 1), SignIncoherent);
}

TEST_CASE("eps-independence and reduced forms agree on random instances") {
  RandomSource rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform_int(2, 3);
    ExchangeMatrix b = random_exchange_matrix(rng, n, 3, false, trial % 3 == 0);
    Walk walk = random_feasible_walk(rng, b, 5, 20000);
    PatternNode node = walk_node(b, walk);
    PatternNode neg = walk_node(b.negated(), walk);
    int l = rng.uniform_int(1, n);
    IntMatrix c_plus = mutate_c(node, l, +1);
    CHECK(c_plus == mutate_c(node, l, -1));
    CHECK(c_plus == mutate_c_signed(node, l));
    IntMatrix g_plus = mutate_g(node, l, +1);
    CHECK(g_plus == mutate_g(node, l, -1));
    CHECK(g_plus == mutate_g_signed(node, l));
    IntMatrix f_max = mutate_fmat_max(node, l);
    CHECK(f_max == mutate_fmat_eps(node, l, +1, neg.c));
    CHECK(f_max == mutate_fmat_eps(node, l, -1, neg.c));
    CHECK(f_max == mutate_fmat_signed(node, l, neg.c));
    // The polynomial route gives the same degrees.
    std::vector<SparsePoly> fp = mutate_fpolys(node, l);
    for (int j = 0; j < n; ++j) {
      auto degrees = fp[j].max_degree_vector();
      for (int i = 0; i < n; ++i) CHECK(f_max(i, j) == degrees[i]);
    }
  }
}

TEST_CASE("walk invariants on random instances") {
  RandomSource rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform_int(2, 3);
    ExchangeMatrix b = random_exchange_matrix(rng, n, 3, trial % 5 == 0, trial % 2 == 0);
    Walk walk = random_feasible_walk(rng, b, 6, 20000);
    // The checked walker asserts GB=BC, det C, sign coherence, the F-matrix
    // degrees, the F-polynomial shape, the -B relations, and H agreement.
    PatternNode node = walk_node(b, walk, nullptr, VerifyLevel::checked);
    CHECK(node.g * node.b.matrix() == b.matrix() * node.c);
  }
}

TEST_CASE("full seed step is involutive") {
  RandomSource rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform_int(2, 3);
    ExchangeMatrix b = random_exchange_matrix(rng, n, 3, false, false);
    Walk walk = random_feasible_walk(rng, b, 4, 20000);
    int k = rng.uniform_int(1, n);
    PatternNode base = walk_node(b, walk);
    PatternNode back = walk_node(b, walk.appended(k).appended(k));
    CHECK(back.b == base.b);
    CHECK(back.c == base.c);
    CHECK(back.g == base.g);
    CHECK(back.f == base.f);
    for (int j = 0; j < n; ++j) CHECK(back.fpolys[j] == base.fpolys[j]);
  }
}

TEST_CASE("negated-pattern relations") {
  ExchangeMatrix b(kA2);
  SUBCASE("empty walk") {
    IdentityReport r = negated_pattern_relations(initial_node(b), initial_node(b.negated()));
    CHECK(r.ok);
  }
  SUBCASE("A2 walk (2,1)") {
    Walk w{2, 1};
    PatternNode node = walk_node(b, w);
    PatternNode neg = walk_node(b.negated(), w);
    IdentityReport r = negated_pattern_relations(node, neg);
    CHECK(r.ok);
    // C^{-B} computed explicitly from the relation.
    CHECK(neg.c == node.c + node.f * node.b.matrix());
  }
  SUBCASE("mismatched companion is rejected") {
    CHECK_THROWS_AS(negated_pattern_relations(initial_node(b), initial_node(b)), InvalidArgument);
  }
}

TEST_CASE("H-matrix routes agree") {
  ExchangeMatrix b(kA2);
  CHECK(h_matrix(walk_node(b, Walk{2, 1})) == IntMatrix{{-1, 0}, {0, -1}});
  CHECK(h_matrix(initial_node(b)) == IntMatrix::zero(2, 2));
  RandomSource rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform_int(2, 3);
    ExchangeMatrix rb = random_exchange_matrix(rng, n, 3, false, trial % 2 == 0);
    h_matrix(walk_node(rb, random_feasible_walk(rng, rb, 6, 20000)));  // throws HMismatch on split
  }
}

TEST_CASE("seed data equality detects periodicity but nothing less") {
  ExchangeMatrix b(kA2);
  PatternNode start = initial_node(b);
  CHECK(seed_data_equal(walk_node(b, Walk{1, 1}), start));
  // The opposite end of the A2 walk carries permuted data, not equal data.
  CHECK_FALSE(seed_data_equal(walk_node(b, kA2Walk), start));
}

TEST_CASE("companion-matrix shape is validated") {
  ExchangeMatrix b(kA2);
  PatternNode node = initial_node(b);
  CHECK_THROWS_AS(mutate_fmat_eps(node, 1, +1, IntMatrix::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(mutate_fmat_signed(node, 1, IntMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("walk parsing and flags") {
  Walk w = Walk::parse("2,1,2");
  CHECK(w == Walk{2, 1, 2});
  CHECK(Walk::parse("").length() == 0);
  CHECK(Walk{1, 1, 2}.has_immediate_repeat());
  CHECK_FALSE(kA2Walk.has_immediate_repeat());
  CHECK_THROWS_AS(Walk{3}.validate(2), IndexOutOfRange);
  CHECK_THROWS_AS(Walk::parse("a,b"), InvalidArgument);
}

TEST_CASE("walk cache returns identical results under concurrency") {
  ExchangeMatrix b(kA2);
  WalkCache cache;
  PatternNode serial = walk_node(b, kA2Walk);
  std::vector<std::thread> threads;
  std::vector<IntMatrix> results(8);
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] {
      PatternNode node = walk_node(b, kA2Walk.prefix(1 + static_cast<std::size_t>(i) % 5), &cache);
      PatternNode full = walk_node(b, kA2Walk, &cache);
      results[i] = full.c;
    });
  for (auto& t : threads) t.join();
  for (const auto& c : results) CHECK(c == serial.c);
  // Cached prefixes are reused for extensions.
  CHECK(walk_node(b, kA2Walk.appended(1), &cache).walk == kA2Walk.appended(1));
}
