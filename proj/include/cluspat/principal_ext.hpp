#ifndef CLUSPAT_PRINCIPAL_EXT_HPP
#define CLUSPAT_PRINCIPAL_EXT_HPP

#include "cluspat/pattern.hpp"

namespace cluspat {

// The full extension of B: the regular 2n x 2n matrix [[B, -I],[I, O]] with
// skew-symmetrizer diag(D, D).
struct ExtendedMatrix {
  ExchangeMatrix base;
  ExchangeMatrix full;
};

ExtendedMatrix extend(const ExchangeMatrix& b);

// -D^{-1} C^T D; throws NonIntegerBlock when the conjugation leaves a
// non-integer entry.
IntMatrix conjugated_negative_transpose(const IntMatrix& c, const std::vector<BigInt>& d);

// The block form [[B_t, -D^{-1} C_t^T D], [C_t, O]] assembled from a rank-n
// node.
IntMatrix extended_exchange_blocks(const PatternNode& node);

// Mutates the 2n x 2n full extension directly along the walk (labels must
// stay in 1..n), comparing it to the block assembly at every vertex and
// asserting the sign-coherence collapse terms vanish stepwise.  Returns the
// final matrix.
IntMatrix extended_exchange_at(const ExchangeMatrix& b, const Walk& walk);

// Runs the rank-2n pattern of the full extension and the rank-n pattern
// side by side and verifies the block identities: C and G extend by an
// identity block, the first n F-polynomials agree and the rest are 1, and
// the F- and H-matrices extend by zero blocks.
IdentityReport extended_pattern_blocks(const ExchangeMatrix& b, const Walk& walk,
                                       WalkCache* cache = nullptr);

}  // namespace cluspat

#endif
