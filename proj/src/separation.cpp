#include "cluspat/separation.hpp"

namespace cluspat {

namespace {

void check_direction(int k, int rank, const char* op) {
  if (k < 1 || k > rank)
    throw IndexOutOfRange(std::string(op) + ": direction " + std::to_string(k) + " not in 1.." +
                          std::to_string(rank));
}

// y_i as an element of P for the standard initial coefficients.
std::vector<SemifieldElement> initial_coefficients(const SemifieldPtr& p, int n) {
  if (p->kind() == SemifieldKind::one_element)
    return std::vector<SemifieldElement>(n, sf_one(p));
  if (p->generator_count() != n)
    throw DimensionMismatch("initial coefficients: semifield generator count vs rank");
  return standard_assignment(p);
}

}  // namespace

Seed initial_seed_over(const ExchangeMatrix& b, const SemifieldPtr& p) {
  int n = b.rank();
  VarSet cv = cluster_vars(n);
  Seed seed{{}, initial_coefficients(p, n), b, p};
  seed.xs.reserve(n);
  for (int j = 0; j < n; ++j) seed.xs.push_back(SubtractionFreeRational::variable(cv, j));
  return seed;
}

SubtractionFreeRational embed_coefficient(const SemifieldElement& y, int rank) {
  VarSet cv = cluster_vars(rank);
  switch (y.semifield()->kind()) {
    case SemifieldKind::one_element:
      return SubtractionFreeRational::one(cv);
    case SemifieldKind::universal:
      return SubtractionFreeRational(y.rational().numerator().reindexed(cv),
                                     y.rational().denominator().reindexed(cv));
    case SemifieldKind::tropical:
    case SemifieldKind::tropical_inverted: {
      const auto& e = y.tropical().exponents;
      if (static_cast<int>(e.size()) != rank)
        throw DimensionMismatch("embed_coefficient: tropical arity vs rank");
      SparsePoly::Exp exps(2 * rank, 0);
      for (int i = 0; i < rank; ++i) exps[rank + i] = to_int32(e[i], "tropical exponent");
      return SubtractionFreeRational::monomial(cv, exps);
    }
  }
  throw Error("embed_coefficient: unreachable");
}

Seed mutate_seed_direct(const Seed& seed, int k) {
  int n = seed.rank();
  check_direction(k, n, "mutate_seed_direct");
  const IntMatrix& b = seed.b.matrix();
  const SemifieldElement& yk = seed.ys[k - 1];
  SemifieldElement one = sf_one(seed.p);
  SemifieldElement yk_plus_1 = sf_add(yk, one);
  SemifieldElement yk_inv_plus_1 = sf_add(sf_div(one, yk), one);

  Seed out{seed.xs, {}, seed.b.mutated(k), seed.p};
  out.ys.reserve(n);
  for (int j = 0; j < n; ++j) {
    if (j == k - 1) {
      out.ys.push_back(sf_div(one, yk));
      continue;
    }
    const BigInt& b_kj = b(k - 1, j);
    // Primary rule: y_j y_k^{[b_kj]_+} (y_k + 1)^{-b_kj}; the displayed
    // alternative y_j y_k^{[-b_kj]_+} (y_k^{-1} + 1)^{-b_kj} must agree.
    SemifieldElement primary = sf_mul(sf_mul(seed.ys[j], sf_pow(yk, positive_part(b_kj))),
                                      sf_pow(yk_plus_1, -b_kj));
    SemifieldElement alternative =
        sf_mul(sf_mul(seed.ys[j], sf_pow(yk, positive_part(-b_kj))),
               sf_pow(yk_inv_plus_1, -b_kj));
    if (!sf_equal(primary, alternative))
      throw Error("mutate_seed_direct: the two coefficient-mutation forms disagree");
    out.ys.push_back(std::move(primary));
  }

  const VarSet& cv = seed.xs[k - 1].vars();
  SubtractionFreeRational plus = embed_coefficient(yk, n);
  SubtractionFreeRational minus = SubtractionFreeRational::one(cv);
  for (int i = 0; i < n; ++i) {
    long b_ik = to_int32(b(i, k - 1), "exchange entry");
    if (b_ik > 0)
      plus = plus * seed.xs[i].pow(b_ik);
    else if (b_ik < 0)
      minus = minus * seed.xs[i].pow(-b_ik);
  }
  SubtractionFreeRational new_xk =
      (plus + minus) / (embed_coefficient(yk_plus_1, n) * seed.xs[k - 1]);
  if (seed.p->is_tropical() || seed.p->kind() == SemifieldKind::one_element) {
    if (!new_xk.is_laurent())
      throw NonLaurent("mutate_seed_direct: x_" + std::to_string(k) +
                       " failed to clear its denominator: " + new_xk.to_text());
  }
  out.xs[k - 1] = std::move(new_xk);
  return out;
}

std::vector<SubtractionFreeRational> yhat(const ExchangeMatrix& b) {
  int n = b.rank();
  VarSet cv = cluster_vars(n);
  std::vector<SubtractionFreeRational> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    SparsePoly::Exp e(2 * n, 0);
    e[n + i] = 1;
    for (int j = 0; j < n; ++j) e[j] = to_int32(b.matrix()(j, i), "exchange entry");
    out.push_back(SubtractionFreeRational::monomial(cv, e));
  }
  return out;
}

SeparatedVariable cluster_variable_separated(const PatternNode& node, int j, const SemifieldPtr& p,
                                             const std::vector<SemifieldElement>& y_values) {
  int n = node.rank();
  check_direction(j, n, "cluster_variable_separated");
  if (static_cast<int>(y_values.size()) != n)
    throw DimensionMismatch("cluster_variable_separated: one y-value per index required");
  VarSet cv = cluster_vars(n);

  std::vector<SubtractionFreeRational> hats = yhat(node.initial_b);
  SubtractionFreeRational numerator = substitute_monomials(node.fpolys[j - 1], cv, hats);

  SparsePoly::Exp g_col(2 * n, 0);
  for (int i = 0; i < n; ++i) g_col[i] = to_int32(node.g(i, j - 1), "g entry");
  numerator = numerator * SubtractionFreeRational::monomial(cv, g_col);

  SemifieldElement tropical_factor = evaluate(node.fpolys[j - 1], p, y_values);
  SeparatedVariable result = numerator / embed_coefficient(tropical_factor, n);
  if (p->is_tropical() || p->kind() == SemifieldKind::one_element) {
    if (!result.is_laurent())
      throw NonLaurent("cluster_variable_separated: x_" + std::to_string(j) + " at walk (" +
                       node.walk.to_text() + ") is not Laurent in x");
  }
  return result;
}

SemifieldElement coefficient_separated(const PatternNode& node, int j, const SemifieldPtr& p,
                                       const std::vector<SemifieldElement>& y_values) {
  int n = node.rank();
  check_direction(j, n, "coefficient_separated");
  if (static_cast<int>(y_values.size()) != n)
    throw DimensionMismatch("coefficient_separated: one y-value per index required");
  SemifieldElement out = sf_one(p);
  for (int i = 0; i < n; ++i) out = sf_mul(out, sf_pow(y_values[i], node.c(i, j - 1)));
  for (int i = 0; i < n; ++i) {
    const BigInt& b_ij = node.b.matrix()(i, j - 1);
    if (b_ij == 0) continue;
    out = sf_mul(out, sf_pow(evaluate(node.fpolys[i], p, y_values), b_ij));
  }
  return out;
}

}  // namespace cluspat
