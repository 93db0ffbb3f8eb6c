#include "cluspat/principal_ext.hpp"

namespace cluspat {

namespace {

IntMatrix block_2x2(const IntMatrix& tl, const IntMatrix& tr, const IntMatrix& bl,
                    const IntMatrix& br) {
  int n = tl.rows();
  IntMatrix out(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out(i, j) = tl(i, j);
      out(i, n + j) = tr(i, j);
      out(n + i, j) = bl(i, j);
      out(n + i, n + j) = br(i, j);
    }
  return out;
}

}  // namespace

ExtendedMatrix extend(const ExchangeMatrix& b) {
  int n = b.rank();
  IntMatrix full = block_2x2(b.matrix(), -IntMatrix::identity(n), IntMatrix::identity(n),
                             IntMatrix::zero(n, n));
  std::vector<BigInt> d2 = b.symmetrizer();
  d2.insert(d2.end(), b.symmetrizer().begin(), b.symmetrizer().end());
  ExtendedMatrix out{b, ExchangeMatrix(std::move(full), std::move(d2))};
  if (determinant(out.full.matrix()) == 0)
    throw Error("extend: full extension is singular");  // impossible by the block structure
  return out;
}

IntMatrix conjugated_negative_transpose(const IntMatrix& c, const std::vector<BigInt>& d) {
  int n = c.rows();
  if (c.cols() != n || static_cast<int>(d.size()) != n)
    throw DimensionMismatch("conjugated_negative_transpose: shape mismatch");
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt numerator = -c(j, i) * d[j];
      BigInt q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), d[i].get_mpz_t());
      if (r != 0)
        throw NonIntegerBlock("conjugated_negative_transpose: entry (" + std::to_string(i) +
                              ", " + std::to_string(j) + ") is not an integer");
      out(i, j) = q;
    }
  return out;
}

IntMatrix extended_exchange_blocks(const PatternNode& node) {
  int n = node.rank();
  IntMatrix tr = conjugated_negative_transpose(node.c, node.initial_b.symmetrizer());
  return block_2x2(node.b.matrix(), tr, node.c, IntMatrix::zero(n, n));
}

IntMatrix extended_exchange_at(const ExchangeMatrix& b, const Walk& walk) {
  walk.validate(b.rank());  // labels restricted to 1..n
  const std::vector<BigInt>& d = b.symmetrizer();

  IntMatrix direct = extend(b).full.matrix();
  PatternNode node = initial_node(b);
  for (int l : walk.labels) {
    // Sign-coherence collapse terms for this step must vanish; E is the
    // conjugated transpose block at the current vertex.
    IntMatrix e = conjugated_negative_transpose(node.c, d);
    IntMatrix pos_t = -e;  // D^{-1} C^T D
    IntMatrix vanish_pos =
        node.c * row_restrict(positive_part(pos_t), l) - col_restrict(positive_part(node.c), l) * pos_t;
    IntMatrix vanish_neg =
        node.c * row_restrict(positive_part(-pos_t), l) -
        col_restrict(positive_part(-node.c), l) * pos_t;
    if (!vanish_pos.is_zero() || !vanish_neg.is_zero())
      throw Error("extended_exchange_at: collapse sum did not vanish at walk (" +
                  node.walk.to_text() + ") step " + std::to_string(l));

    direct = mutate_matrix(direct, l);
    node = mutate_node(node, l);
    if (direct != extended_exchange_blocks(node))
      throw Error("extended_exchange_at: direct mutation and block assembly disagree at walk (" +
                  node.walk.to_text() + ")");
  }
  return direct;
}

IdentityReport extended_pattern_blocks(const ExchangeMatrix& b, const Walk& walk,
                                       WalkCache* cache) {
  walk.validate(b.rank());
  IdentityReport report;
  int n = b.rank();

  PatternNode small = walk_node(b, walk, cache);
  PatternNode big = walk_node(extend(b).full, walk, cache);

  IntMatrix id = IntMatrix::identity(n);
  IntMatrix zero = IntMatrix::zero(n, n);
  if (big.c != block_2x2(small.c, zero, zero, id))
    report.fail("C-matrix block identity fails at walk (" + walk.to_text() + ")");
  if (big.g != block_2x2(small.g, zero, zero, id))
    report.fail("G-matrix block identity fails at walk (" + walk.to_text() + ")");

  VarSet y2n = big.fpolys[0].vars();
  for (int j = 0; j < n; ++j)
    if (big.fpolys[j] != small.fpolys[j].reindexed(y2n))
      report.fail("F-polynomial " + std::to_string(j + 1) + " block identity fails at walk (" +
                  walk.to_text() + ")");
  for (int j = n; j < 2 * n; ++j)
    if (!big.fpolys[j].is_one())
      report.fail("F-polynomial " + std::to_string(j + 1) + " should stay 1 at walk (" +
                  walk.to_text() + ")");

  if (big.f != block_2x2(small.f, zero, zero, zero))
    report.fail("F-matrix block identity fails at walk (" + walk.to_text() + ")");
  if (h_matrix(big) != block_2x2(h_matrix(small), zero, zero, zero))
    report.fail("H-matrix block identity fails at walk (" + walk.to_text() + ")");

  // Prop 4.1 block formula for the mutated full extension, plus the stepwise
  // vanishing assertions.
  try {
    extended_exchange_at(b, walk);
  } catch (const Error& err) {
    report.fail(err.what());
  }
  return report;
}

}  // namespace cluspat
