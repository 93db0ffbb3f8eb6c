#ifndef CLUSPAT_SEPARATION_HPP
#define CLUSPAT_SEPARATION_HPP

#include "cluspat/pattern.hpp"
#include "cluspat/semifield.hpp"

namespace cluspat {

// A cluster variable (or coefficient) written over x1..xn, y1..yn: a
// subtraction-free fraction, Laurent in the x's for tropical coefficients.
using SeparatedVariable = SubtractionFreeRational;

// A labeled seed with coefficients in P: cluster variables as fractions
// over the initial data, coefficients as semifield elements.
struct Seed {
  std::vector<SeparatedVariable> xs;
  std::vector<SemifieldElement> ys;
  ExchangeMatrix b;
  SemifieldPtr p;

  int rank() const { return b.rank(); }
};

// The seed at the root: x_j = x_j and y_j the semifield's standard
// generators (the formal y_j for universal and tropical coefficients, the
// unit for the one-element semifield).
Seed initial_seed_over(const ExchangeMatrix& b, const SemifieldPtr& p);

// Coefficient embedded into the ambient field of fractions over x, y.
SubtractionFreeRational embed_coefficient(const SemifieldElement& y, int rank);

// One seed mutation in direction k: the exchange-matrix rule, the
// coefficient rule (computed through both displayed variants, which must
// agree), and the exchange relation on x_k.  For tropical coefficient
// semifields the new cluster variable must stay Laurent in x; NonLaurent
// otherwise.
Seed mutate_seed_direct(const Seed& seed, int k);

// yhat_i = y_i prod_j x_j^{b_ji}, over x1..xn, y1..yn.
std::vector<SubtractionFreeRational> yhat(const ExchangeMatrix& b);

// Separation formula for a cluster variable:
//   x_{j;t} = (prod_k x_k^{g_kj}) F_j(yhat) / F_j|_P(y).
// For tropical P the denominator evaluation is a monomial and the result
// must be Laurent in x.
SeparatedVariable cluster_variable_separated(const PatternNode& node, int j, const SemifieldPtr& p,
                                             const std::vector<SemifieldElement>& y_values);

// Separation formula for a coefficient:
//   y_{j;t} = prod_k y_k^{c_kj} prod_k (F_k|_P(y))^{b_kj;t}.
SemifieldElement coefficient_separated(const PatternNode& node, int j, const SemifieldPtr& p,
                                       const std::vector<SemifieldElement>& y_values);

}  // namespace cluspat

#endif
