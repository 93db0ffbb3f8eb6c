#include "cluspat/initial_seed.hpp"

namespace cluspat {

namespace {

void check_eps(int eps, const char* op) {
  if (eps != 1 && eps != -1) throw InvalidArgument(std::string(op) + ": eps must be +1 or -1");
}

IntMatrix scaled(const IntMatrix& m, int s) { return s >= 0 ? m : -m; }

void check_square(const IntMatrix& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(n) + "x" +
                            std::to_string(n));
}

}  // namespace

RootSwap make_root_swap(const ExchangeMatrix& b, int k) {
  if (k < 1 || k > b.rank())
    throw IndexOutOfRange("make_root_swap: direction " + std::to_string(k) + " not in 1.." +
                          std::to_string(b.rank()));
  return RootSwap{k, b, b.mutated(k)};
}

IntMatrix initial_mutate_c(const IntMatrix& c_t, const IntMatrix& b_t, const RootSwap& swap,
                           int eps, const IntMatrix& h_plus, const IntMatrix& h_minus) {
  check_eps(eps, "initial_mutate_c");
  int n = swap.b0.rank();
  check_square(c_t, n, "initial_mutate_c: C");
  check_square(b_t, n, "initial_mutate_c: B_t");
  check_square(h_plus, n, "initial_mutate_c: H(+)");
  check_square(h_minus, n, "initial_mutate_c: H(-)");
  const IntMatrix& b = swap.b0.matrix();
  const IntMatrix& h = eps == 1 ? h_plus : h_minus;
  return (j_matrix(n, swap.k) + row_restrict(positive_part(scaled(b, -eps)), swap.k)) * c_t +
         row_restrict(h, swap.k) * b_t;
}

IntMatrix initial_mutate_g(const IntMatrix& g_t, const RootSwap& swap, int eps,
                           const IntMatrix& h_plus, const IntMatrix& h_minus) {
  check_eps(eps, "initial_mutate_g");
  int n = swap.b0.rank();
  check_square(g_t, n, "initial_mutate_g: G");
  check_square(h_plus, n, "initial_mutate_g: H(+)");
  check_square(h_minus, n, "initial_mutate_g: H(-)");
  const IntMatrix& b = swap.b0.matrix();
  const IntMatrix& h = eps == 1 ? h_plus : h_minus;
  return (j_matrix(n, swap.k) + col_restrict(positive_part(scaled(b, eps)), swap.k)) * g_t -
         b * row_restrict(h, swap.k);
}

SparsePoly initial_mutate_fpoly(const PatternNode& node, const RootSwap& swap, int j) {
  int n = node.rank();
  if (j < 1 || j > n) throw IndexOutOfRange("initial_mutate_fpoly: column out of range");
  if (swap.b0 != node.initial_b)
    throw InvalidArgument("initial_mutate_fpoly: swap is rooted at a different matrix");
  int k = swap.k;
  const IntMatrix& b = swap.b0.matrix();
  const VarSet& yv = node.fpolys[j - 1].vars();

  // Substitution images: y_k -> y_k^{-1};
  // y_i -> y_i y_k^{[-b_ki]_+} (y_k + 1)^{b_ki} for i != k.
  SparsePoly yk = SparsePoly::variable(yv, k - 1);
  SubtractionFreeRational one_plus_yk(SparsePoly::one(yv) + yk);
  std::vector<SubtractionFreeRational> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i == k - 1) {
      images.push_back(SubtractionFreeRational(SparsePoly::one(yv), yk));
      continue;
    }
    long b_ki = to_int32(b(k - 1, i), "exchange entry");
    SparsePoly::Exp e(n, 0);
    e[i] = 1;
    e[k - 1] = static_cast<std::int32_t>(b_ki < 0 ? -b_ki : 0);
    images.push_back(SubtractionFreeRational::monomial(yv, e) * one_plus_yk.pow(b_ki));
  }

  IntMatrix h = h_matrix(node);
  long g_kj = to_int32(node.g(k - 1, j - 1), "g entry");
  long h_kj = to_int32(h(k - 1, j - 1), "h entry");

  SubtractionFreeRational value = substitute_monomials(node.fpolys[j - 1], yv, images);
  value = value * one_plus_yk.pow(g_kj);
  SparsePoly::Exp shift(n, 0);
  shift[k - 1] = static_cast<std::int32_t>(-h_kj);
  value = value * SubtractionFreeRational::monomial(yv, shift);

  SparsePoly result = value.as_polynomial();  // CancellationFailure if it is not one
  return result;
}

IntMatrix initial_mutate_fmat(const IntMatrix& f_t, const RootSwap& swap, int eps,
                              const IntMatrix& g_b, const IntMatrix& g_negb,
                              const IntMatrix& h_b_eps, const IntMatrix& h_negb_eps) {
  check_eps(eps, "initial_mutate_fmat");
  int n = swap.b0.rank();
  check_square(f_t, n, "initial_mutate_fmat: F");
  check_square(g_b, n, "initial_mutate_fmat: G^B");
  check_square(g_negb, n, "initial_mutate_fmat: G^{-B}");
  check_square(h_b_eps, n, "initial_mutate_fmat: H^B(eps)");
  check_square(h_negb_eps, n, "initial_mutate_fmat: H^{-B}(eps)");
  int k = swap.k;
  const IntMatrix& b = swap.b0.matrix();
  IntMatrix h_terms = row_restrict(h_negb_eps, k) + row_restrict(h_b_eps, k);
  IntMatrix first = (j_matrix(n, k) + row_restrict(positive_part(scaled(b, eps)), k)) * f_t +
                    row_restrict(scaled(g_b, eps), k) - h_terms;
  IntMatrix second = (j_matrix(n, k) + row_restrict(positive_part(scaled(b, -eps)), k)) * f_t +
                     row_restrict(scaled(g_negb, eps), k) - h_terms;
  if (first != second)
    throw HMismatch("initial_mutate_fmat: the two displayed variants disagree (k=" +
                    std::to_string(k) + ", eps=" + std::to_string(eps) + ")");
  return first;
}

IntMatrix initial_mutate_c_via_g(const IntMatrix& c_t, const IntMatrix& g_t, const IntMatrix& b_t,
                                 const RootSwap& swap, int eps) {
  check_eps(eps, "initial_mutate_c_via_g");
  int n = swap.b0.rank();
  const IntMatrix& b = swap.b0.matrix();
  return (j_matrix(n, swap.k) + row_restrict(positive_part(scaled(b, -eps)), swap.k)) * c_t -
         row_restrict(positive_part(scaled(g_t, -eps)), swap.k) * b_t;
}

IntMatrix initial_mutate_g_via_g(const IntMatrix& g_t, const RootSwap& swap, int eps) {
  check_eps(eps, "initial_mutate_g_via_g");
  int n = swap.b0.rank();
  const IntMatrix& b = swap.b0.matrix();
  return (j_matrix(n, swap.k) + col_restrict(positive_part(scaled(b, eps)), swap.k)) * g_t +
         b * row_restrict(positive_part(scaled(g_t, -eps)), swap.k);
}

IntMatrix initial_c_signed(const IntMatrix& c_t, const IntMatrix& g_t, const RootSwap& swap) {
  int n = swap.b0.rank();
  int eps = tropical_sign_row(g_t, swap.k);
  const IntMatrix& b = swap.b0.matrix();
  return (j_matrix(n, swap.k) + row_restrict(positive_part(scaled(b, -eps)), swap.k)) * c_t;
}

IntMatrix initial_g_signed(const IntMatrix& g_t, const RootSwap& swap) {
  int n = swap.b0.rank();
  int eps = tropical_sign_row(g_t, swap.k);
  const IntMatrix& b = swap.b0.matrix();
  return (j_matrix(n, swap.k) + col_restrict(positive_part(scaled(b, eps)), swap.k)) * g_t;
}

IntMatrix initial_fmat_signed(const IntMatrix& f_t, const IntMatrix& g_b, const IntMatrix& g_negb,
                              const RootSwap& swap) {
  int n = swap.b0.rank();
  int k = swap.k;
  const IntMatrix& b = swap.b0.matrix();
  int eps_neg = tropical_sign_row(g_negb, k);
  IntMatrix first = (j_matrix(n, k) + row_restrict(positive_part(scaled(b, eps_neg)), k)) * f_t +
                    row_restrict(positive_part(scaled(g_b, eps_neg)), k);
  int eps_pos = tropical_sign_row(g_b, k);
  IntMatrix second = (j_matrix(n, k) + row_restrict(positive_part(scaled(b, -eps_pos)), k)) * f_t +
                     row_restrict(positive_part(scaled(g_negb, eps_pos)), k);
  if (first != second)
    throw HMismatch("initial_fmat_signed: the two tropical-sign forms disagree (k=" +
                    std::to_string(k) + ")");
  return first;
}

IdentityReport duality_cg(const ExchangeMatrix& b, const Walk& walk, WalkCache* cache) {
  IdentityReport report;
  PatternNode node = walk_node(b, walk, cache);
  ExchangeMatrix bt_transposed = ExchangeMatrix(node.b.matrix().transposed());
  PatternNode rerooted = walk_node(bt_transposed, walk.reversed(), cache);
  if (node.g.transposed() != rerooted.c)
    report.fail("(G^{B;t0}_t)^T = C^{B_t^T;t}_{t0} fails at walk (" + walk.to_text() + ")");
  return report;
}

IdentityReport duality_f(const ExchangeMatrix& b, const Walk& walk, WalkCache* cache) {
  IdentityReport report;
  PatternNode node = walk_node(b, walk, cache);
  ExchangeMatrix bt_transposed = ExchangeMatrix(node.b.matrix().transposed());
  PatternNode rerooted = walk_node(bt_transposed, walk.reversed(), cache);
  if (node.f.transposed() != rerooted.f)
    report.fail("(F^{B;t0}_t)^T = F^{B_t^T;t}_{t0} fails at walk (" + walk.to_text() + ")");
  return report;
}

namespace {

// Shared y-image construction for the rho_k automorphisms: index yi locates
// y_i inside the working variable set.
std::vector<SubtractionFreeRational> rho_k_images(const VarSet& vars, const ExchangeMatrix& b,
                                                  int k, int y_offset) {
  int n = b.rank();
  SparsePoly yk = SparsePoly::variable(vars, y_offset + k - 1);
  SubtractionFreeRational one_plus_yk(SparsePoly::one(vars) + yk);
  std::vector<SubtractionFreeRational> images;
  images.reserve(vars->size());
  for (std::size_t v = 0; v < vars->size(); ++v)
    images.push_back(SubtractionFreeRational::variable(vars, static_cast<int>(v)));
  for (int j = 0; j < n; ++j) {
    if (j == k - 1) {
      images[y_offset + j] = SubtractionFreeRational(SparsePoly::one(vars), yk);
      continue;
    }
    long b_kj = to_int32(b.matrix()(k - 1, j), "exchange entry");
    SparsePoly::Exp e(vars->size(), 0);
    e[y_offset + j] = 1;
    e[y_offset + k - 1] = static_cast<std::int32_t>(b_kj > 0 ? b_kj : 0);
    images[y_offset + j] =
        SubtractionFreeRational::monomial(vars, e) * one_plus_yk.pow(-b_kj);
  }
  return images;
}

SubtractionFreeRational apply_images(const SubtractionFreeRational& expr,
                                     const std::vector<SubtractionFreeRational>& images) {
  SubtractionFreeRational num = substitute_monomials(expr.numerator(), expr.vars(), images);
  SubtractionFreeRational den = substitute_monomials(expr.denominator(), expr.vars(), images);
  return num / den;
}

}  // namespace

SubtractionFreeRational rho_k_semifield(const SubtractionFreeRational& expr,
                                        const ExchangeMatrix& b, int k) {
  if (k < 1 || k > b.rank()) throw IndexOutOfRange("rho_k_semifield: direction out of range");
  if (static_cast<int>(expr.vars()->size()) != b.rank())
    throw DimensionMismatch("rho_k_semifield: expression is not over y1..yn");
  // The substitution rule reads its exponents off the matrix at the new
  // root: with mu_k(B) it sends the t0-rooted functions to the t1-rooted
  // ones (pinned by the type-A2 oracle; with B itself it is the inverse).
  return apply_images(expr, rho_k_images(expr.vars(), b.mutated(k), k, 0));
}

SubtractionFreeRational rho_k_field(const SubtractionFreeRational& expr, const ExchangeMatrix& b,
                                    int k) {
  if (k < 1 || k > b.rank()) throw IndexOutOfRange("rho_k_field: direction out of range");
  int n = b.rank();
  if (static_cast<int>(expr.vars()->size()) != 2 * n)
    throw DimensionMismatch("rho_k_field: expression is not over x1..xn, y1..yn");
  const VarSet& vars = expr.vars();
  ExchangeMatrix b1 = b.mutated(k);
  std::vector<SubtractionFreeRational> images = rho_k_images(vars, b1, k, n);

  // x_k image: the exchange relation with the new root's coefficients.
  SparsePoly yk = SparsePoly::variable(vars, n + k - 1);
  SparsePoly::Exp plus(2 * n, 0), minus(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    long b_ik = to_int32(b1.matrix()(i, k - 1), "exchange entry");
    if (b_ik > 0)
      plus[i] = static_cast<std::int32_t>(b_ik);
    else if (b_ik < 0)
      minus[i] = static_cast<std::int32_t>(-b_ik);
  }
  SparsePoly numerator = SparsePoly::monomial(vars, plus) * yk + SparsePoly::monomial(vars, minus);
  SparsePoly::Exp ek(2 * n, 0);
  ek[k - 1] = 1;
  SparsePoly denominator = (SparsePoly::one(vars) + yk) * SparsePoly::monomial(vars, ek);
  images[k - 1] = SubtractionFreeRational(numerator, denominator);

  return apply_images(expr, images);
}

}  // namespace cluspat
