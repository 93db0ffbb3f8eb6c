#ifndef CLUSPAT_SEMIFIELD_HPP
#define CLUSPAT_SEMIFIELD_HPP

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cluspat/poly.hpp"

namespace cluspat {

// The semifields the theory runs over: Trop(u_1..u_l), Trop(u_1^-1..u_l^-1),
// the universal semifield Q_sf(u_1..u_l), and the one-element semifield {1}
// (which realizes coefficient-free patterns).
enum class SemifieldKind { tropical, tropical_inverted, universal, one_element };

class Semifield;
using SemifieldPtr = std::shared_ptr<const Semifield>;

class Semifield {
 public:
  static SemifieldPtr tropical(VarSet generators);
  static SemifieldPtr tropical_inverted(VarSet generators);
  static SemifieldPtr universal(VarSet generators);
  static SemifieldPtr one_element();

  SemifieldKind kind() const { return kind_; }
  const VarSet& generators() const { return generators_; }
  int generator_count() const { return generators_ ? static_cast<int>(generators_->size()) : 0; }
  bool is_tropical() const {
    return kind_ == SemifieldKind::tropical || kind_ == SemifieldKind::tropical_inverted;
  }

 private:
  Semifield(SemifieldKind kind, VarSet generators)
      : kind_(kind), generators_(std::move(generators)) {}

  SemifieldKind kind_;
  VarSet generators_;
};

// Element of a tropical semifield.  Exponents are stored with respect to the
// base symbols u_1..u_l in both flavors; for Trop(u^-1) the semifield
// addition becomes a componentwise max instead of a min.
struct TropicalElement {
  std::vector<BigInt> exponents;
};

// Element of the universal semifield: a fraction of polynomials with
// nonnegative integer coefficients (the subtraction-free witness).  There is
// no canonical form; equality is semantic (cross-multiplied).  Construction
// runs a light reduction pass: common integer content, common monomial
// content, and a whole-quotient attempt that clears the denominator when it
// happens to divide the numerator exactly.
class SubtractionFreeRational {
 public:
  SubtractionFreeRational(SparsePoly numerator, SparsePoly denominator);
  explicit SubtractionFreeRational(SparsePoly numerator);

  static SubtractionFreeRational one(VarSet vars);
  static SubtractionFreeRational variable(VarSet vars, int index);  // 0-based
  static SubtractionFreeRational monomial(VarSet vars, SparsePoly::Exp exponents);

  const SparsePoly& numerator() const { return num_; }
  const SparsePoly& denominator() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  // Denominator is a single monomial, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }
  // Denominator reduced to a constant 1.
  bool is_polynomial() const { return den_.is_one(); }
  SparsePoly as_polynomial() const;          // throws unless is_polynomial()
  SparsePoly as_laurent_polynomial() const;  // throws unless is_laurent()

  SubtractionFreeRational operator+(const SubtractionFreeRational& rhs) const;
  SubtractionFreeRational operator*(const SubtractionFreeRational& rhs) const;
  SubtractionFreeRational operator/(const SubtractionFreeRational& rhs) const;
  SubtractionFreeRational inverse() const;
  SubtractionFreeRational pow(long exponent) const;

  // Semantic equality: a/b == c/d iff a*d == c*b.
  bool equals(const SubtractionFreeRational& rhs) const;

  std::string to_text() const;

 private:
  void reduce();

  SparsePoly num_;
  SparsePoly den_;
};

// A value in one of the four semifields.
class SemifieldElement {
 public:
  SemifieldElement(SemifieldPtr sf, TropicalElement value);
  SemifieldElement(SemifieldPtr sf, SubtractionFreeRational value);
  explicit SemifieldElement(SemifieldPtr sf);  // the unit of sf

  const SemifieldPtr& semifield() const { return sf_; }
  bool is_unit_semifield() const { return sf_->kind() == SemifieldKind::one_element; }

  const TropicalElement& tropical() const;
  const SubtractionFreeRational& rational() const;

  std::string to_text() const;

 private:
  SemifieldPtr sf_;
  std::variant<std::monostate, TropicalElement, SubtractionFreeRational> value_;
};

SemifieldElement sf_one(const SemifieldPtr& sf);
// Monomial in the base symbols, e.g. u^e; valid for tropical and universal.
SemifieldElement sf_monomial(const SemifieldPtr& sf, std::vector<BigInt> exponents);
SemifieldElement sf_from_rational(const SemifieldPtr& sf, SubtractionFreeRational value);

SemifieldElement sf_add(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_mul(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_div(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_pow(const SemifieldElement& a, const BigInt& exponent);
bool sf_equal(const SemifieldElement& a, const SemifieldElement& b);

// Images of the generators u_i themselves, usable as an evaluation
// assignment (u_i maps to u_i).
std::vector<SemifieldElement> standard_assignment(const SemifieldPtr& sf);

// The evaluation homomorphism pi: the polynomial's i-th variable maps to
// assignment[i].  Requires nonnegative coefficients (a subtraction-free
// witness); positive integer coefficients map to 1 + ... + 1 in the target.
SemifieldElement evaluate(const SparsePoly& f, const SemifieldPtr& target,
                          std::span<const SemifieldElement> assignment);
SemifieldElement evaluate(const SubtractionFreeRational& f, const SemifieldPtr& target,
                          std::span<const SemifieldElement> assignment);

// Composition of f with per-variable substitutions inside Q_sf over
// target_vars; images[i] substitutes the i-th variable of f.
SubtractionFreeRational substitute_monomials(const SparsePoly& f, const VarSet& target_vars,
                                             std::span<const SubtractionFreeRational> images);

}  // namespace cluspat

#endif
