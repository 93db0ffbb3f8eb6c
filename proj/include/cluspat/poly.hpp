#ifndef CLUSPAT_POLY_HPP
#define CLUSPAT_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cluspat/bigint.hpp"
#include "cluspat/intmat.hpp"

namespace cluspat {

// Ordered variable list, shared between the polynomials of one computation.
using VarSet = std::shared_ptr<const std::vector<std::string>>;

VarSet make_vars(std::vector<std::string> names);
// y1..yn
VarSet y_vars(int n);
// x1..xn, y1..yn
VarSet cluster_vars(int n);

bool same_vars(const VarSet& a, const VarSet& b);

// Polynomials abort with TermLimitExceeded once a result would carry more
// than this many terms.  F-polynomials grow fast outside finite type; the
// ceiling turns a runaway walk into a clear error.
std::size_t term_limit();
void set_term_limit(std::size_t limit);

// Sparse multivariate polynomial over the integers.  Exponents may be
// negative (Laurent monomials); the exact-division and degree operations
// that require genuine polynomials say so.
class SparsePoly {
 public:
  using Exp = std::vector<std::int32_t>;

  // Graded lexicographic: total degree first, then lex in variable order.
  struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const;
  };
  using TermMap = std::map<Exp, BigInt, GradedLexLess>;

  SparsePoly() = default;
  explicit SparsePoly(VarSet vars);

  static SparsePoly zero(VarSet vars);
  static SparsePoly one(VarSet vars);
  static SparsePoly constant(VarSet vars, BigInt value);
  static SparsePoly variable(VarSet vars, int index);  // 0-based
  static SparsePoly monomial(VarSet vars, Exp exponents, BigInt coefficient = BigInt(1));
  // "y1*y2 + 3*y1^2 - 1", whitespace-tolerant; names must occur in vars.
  static SparsePoly parse(const VarSet& vars, const std::string& text);

  const VarSet& vars() const { return vars_; }
  int arity() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  BigInt constant_term() const;
  const Exp& leading_exponent() const;  // graded-lex maximal term
  const BigInt& leading_coefficient() const;

  bool has_nonnegative_exponents() const;
  bool has_positive_coefficients() const;

  SparsePoly operator+(const SparsePoly& rhs) const;
  SparsePoly operator-(const SparsePoly& rhs) const;
  SparsePoly operator*(const SparsePoly& rhs) const;
  SparsePoly operator-() const;
  bool operator==(const SparsePoly& rhs) const;
  bool operator!=(const SparsePoly& rhs) const { return !(*this == rhs); }

  SparsePoly pow(int exponent) const;  // exponent >= 0

  // Multiply by a single monomial (exponent shift), cheap.
  SparsePoly shifted(const Exp& shift) const;

  // gcd of all coefficients (0 for the zero polynomial).
  BigInt integer_content() const;
  // Componentwise minimum exponent over the support.
  Exp exponent_floor() const;

  // Componentwise maximum exponent over the support (the f-vector for
  // F-polynomials).  Requires a nonzero polynomial.
  std::vector<std::int32_t> max_degree_vector() const;

  // True when max_degree_vector is realized by an actual monomial with
  // coefficient 1 that every other monomial divides.
  bool has_unique_maximal_monomial() const;

  // Rename/reorder variables by name into the target set; unknown names in
  // the support are an error.
  SparsePoly reindexed(const VarSet& target) const;

  std::string to_text() const;

  void add_term(const Exp& exponents, const BigInt& coefficient);

 private:
  void check_compatible(const SparsePoly& rhs, const char* op) const;
  void enforce_limit(const char* op) const;

  VarSet vars_;
  TermMap terms_;
};

// Exact quotient q with q * divisor == dividend; throws NotDivisible.
// Laurent inputs are normalized by their exponent floors first.
SparsePoly exact_div(const SparsePoly& dividend, const SparsePoly& divisor);

// H-matrix entry: minimum over monomials y^a of sum_k a_k e_k, where
// e_i = -1 and e_k = [-b_{ik}]_+ for k != i (1-based i, b from the initial
// exchange matrix).
BigInt h_entry(const SparsePoly& fpoly, int i, const ExchangeMatrix& b);

}  // namespace cluspat

#endif
