#include "cluspat/semifield.hpp"

#include <algorithm>
#include <sstream>

namespace cluspat {

SemifieldPtr Semifield::tropical(VarSet generators) {
  return SemifieldPtr(new Semifield(SemifieldKind::tropical, std::move(generators)));
}

SemifieldPtr Semifield::tropical_inverted(VarSet generators) {
  return SemifieldPtr(new Semifield(SemifieldKind::tropical_inverted, std::move(generators)));
}

SemifieldPtr Semifield::universal(VarSet generators) {
  return SemifieldPtr(new Semifield(SemifieldKind::universal, std::move(generators)));
}

SemifieldPtr Semifield::one_element() {
  return SemifieldPtr(new Semifield(SemifieldKind::one_element, make_vars({})));
}

// ---------------------------------------------------------------------------
// SubtractionFreeRational

SubtractionFreeRational::SubtractionFreeRational(SparsePoly numerator, SparsePoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!same_vars(num_.vars(), den_.vars()))
    throw DimensionMismatch("SubtractionFreeRational: numerator/denominator variable sets differ");
  if (den_.is_zero()) throw DivisionByZero("SubtractionFreeRational: zero denominator");
  if (!num_.has_positive_coefficients() && !num_.is_zero())
    throw InvalidArgument("SubtractionFreeRational: numerator has nonpositive coefficients");
  if (!den_.has_positive_coefficients())
    throw InvalidArgument("SubtractionFreeRational: denominator has nonpositive coefficients");
  reduce();
}

SubtractionFreeRational::SubtractionFreeRational(SparsePoly numerator)
    : num_(std::move(numerator)), den_(SparsePoly::one(num_.vars())) {
  if (!num_.has_positive_coefficients() && !num_.is_zero())
    throw InvalidArgument("SubtractionFreeRational: numerator has nonpositive coefficients");
  reduce();
}

SubtractionFreeRational SubtractionFreeRational::one(VarSet vars) {
  return SubtractionFreeRational(SparsePoly::one(vars), SparsePoly::one(vars));
}

SubtractionFreeRational SubtractionFreeRational::variable(VarSet vars, int index) {
  return SubtractionFreeRational(SparsePoly::variable(vars, index), SparsePoly::one(vars));
}

SubtractionFreeRational SubtractionFreeRational::monomial(VarSet vars, SparsePoly::Exp exponents) {
  return SubtractionFreeRational(SparsePoly::monomial(vars, std::move(exponents)),
                                 SparsePoly::one(vars));
}

void SubtractionFreeRational::reduce() {
  if (num_.is_zero()) {
    den_ = SparsePoly::one(den_.vars());
    return;
  }
  // Common monomial content.
  SparsePoly::Exp fn = num_.exponent_floor();
  SparsePoly::Exp fd = den_.exponent_floor();
  SparsePoly::Exp shift(fn.size());
  bool any = false;
  for (std::size_t i = 0; i < fn.size(); ++i) {
    shift[i] = -std::min(fn[i], fd[i]);
    any = any || shift[i] != 0;
  }
  if (any) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  // Common integer content.
  BigInt g = big_gcd(num_.integer_content(), den_.integer_content());
  if (g > 1) {
    num_ = exact_div(num_, SparsePoly::constant(num_.vars(), g));
    den_ = exact_div(den_, SparsePoly::constant(den_.vars(), g));
  }
  // Clear the denominator entirely when it divides the numerator.
  if (!den_.is_monomial()) {
    try {
      SparsePoly q = exact_div(num_, den_);
      num_ = std::move(q);
      den_ = SparsePoly::one(den_.vars());
    } catch (const NotDivisible&) {
    }
  } else if (!den_.is_one()) {
    SparsePoly::Exp neg = den_.leading_exponent();
    for (auto& v : neg) v = -v;
    if (den_.leading_coefficient() == 1) {
      num_ = num_.shifted(neg);
      den_ = SparsePoly::one(den_.vars());
    }
  }
}

SparsePoly SubtractionFreeRational::as_polynomial() const {
  if (!is_polynomial())
    throw CancellationFailure("as_polynomial: denominator did not cancel: " + den_.to_text());
  if (!num_.has_nonnegative_exponents())
    throw CancellationFailure("as_polynomial: value is Laurent, not polynomial: " +
                              num_.to_text());
  return num_;
}

SparsePoly SubtractionFreeRational::as_laurent_polynomial() const {
  if (!is_laurent())
    throw NonLaurent("as_laurent_polynomial: denominator is not a monomial: " + den_.to_text());
  SparsePoly::Exp neg = den_.leading_exponent();
  for (auto& v : neg) v = -v;
  SparsePoly shifted = num_.shifted(neg);
  const BigInt& c = den_.leading_coefficient();
  if (c != 1) return exact_div(shifted, SparsePoly::constant(shifted.vars(), c));
  return shifted;
}

SubtractionFreeRational SubtractionFreeRational::operator+(
    const SubtractionFreeRational& rhs) const {
  return SubtractionFreeRational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

SubtractionFreeRational SubtractionFreeRational::operator*(
    const SubtractionFreeRational& rhs) const {
  return SubtractionFreeRational(num_ * rhs.num_, den_ * rhs.den_);
}

SubtractionFreeRational SubtractionFreeRational::operator/(
    const SubtractionFreeRational& rhs) const {
  if (rhs.is_zero()) throw DivisionByZero("SubtractionFreeRational: division by zero");
  return SubtractionFreeRational(num_ * rhs.den_, den_ * rhs.num_);
}

SubtractionFreeRational SubtractionFreeRational::inverse() const {
  if (is_zero()) throw DivisionByZero("SubtractionFreeRational: inverse of zero");
  return SubtractionFreeRational(den_, num_);
}

SubtractionFreeRational SubtractionFreeRational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  SubtractionFreeRational result = one(vars());
  SubtractionFreeRational base = *this;
  long e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool SubtractionFreeRational::equals(const SubtractionFreeRational& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

std::string SubtractionFreeRational::to_text() const {
  if (den_.is_one()) return num_.to_text();
  return "(" + num_.to_text() + ")/(" + den_.to_text() + ")";
}

// ---------------------------------------------------------------------------
// SemifieldElement

SemifieldElement::SemifieldElement(SemifieldPtr sf, TropicalElement value)
    : sf_(std::move(sf)), value_(std::move(value)) {
  if (!sf_->is_tropical())
    throw InvalidArgument("SemifieldElement: tropical value in non-tropical semifield");
  if (static_cast<int>(std::get<TropicalElement>(value_).exponents.size()) !=
      sf_->generator_count())
    throw DimensionMismatch("SemifieldElement: tropical exponent arity mismatch");
}

SemifieldElement::SemifieldElement(SemifieldPtr sf, SubtractionFreeRational value)
    : sf_(std::move(sf)), value_(std::move(value)) {
  if (sf_->kind() != SemifieldKind::universal)
    throw InvalidArgument("SemifieldElement: rational value in non-universal semifield");
  if (!same_vars(std::get<SubtractionFreeRational>(value_).vars(), sf_->generators()))
    throw DimensionMismatch("SemifieldElement: rational value over wrong variable set");
}

SemifieldElement::SemifieldElement(SemifieldPtr sf) : sf_(std::move(sf)) {
  switch (sf_->kind()) {
    case SemifieldKind::tropical:
    case SemifieldKind::tropical_inverted:
      value_ = TropicalElement{std::vector<BigInt>(sf_->generator_count(), BigInt(0))};
      break;
    case SemifieldKind::universal:
      value_ = SubtractionFreeRational::one(sf_->generators());
      break;
    case SemifieldKind::one_element:
      value_ = std::monostate{};
      break;
  }
}

const TropicalElement& SemifieldElement::tropical() const {
  if (!std::holds_alternative<TropicalElement>(value_))
    throw InvalidArgument("SemifieldElement: not a tropical value");
  return std::get<TropicalElement>(value_);
}

const SubtractionFreeRational& SemifieldElement::rational() const {
  if (!std::holds_alternative<SubtractionFreeRational>(value_))
    throw InvalidArgument("SemifieldElement: not a universal value");
  return std::get<SubtractionFreeRational>(value_);
}

std::string SemifieldElement::to_text() const {
  switch (sf_->kind()) {
    case SemifieldKind::one_element:
      return "1";
    case SemifieldKind::universal:
      return rational().to_text();
    default: {
      const auto& gens = *sf_->generators();
      const auto& e = tropical().exponents;
      std::ostringstream os;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << " * ";
        os << gens[i] << "^" << e[i].get_str();
      }
      return gens.empty() ? "1" : os.str();
    }
  }
}

SemifieldElement sf_one(const SemifieldPtr& sf) { return SemifieldElement(sf); }

SemifieldElement sf_monomial(const SemifieldPtr& sf, std::vector<BigInt> exponents) {
  if (sf->is_tropical()) return SemifieldElement(sf, TropicalElement{std::move(exponents)});
  if (sf->kind() == SemifieldKind::universal) {
    SparsePoly::Exp e(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i)
      e[i] = to_int32(exponents[i], "sf_monomial exponent");
    return SemifieldElement(sf, SubtractionFreeRational::monomial(sf->generators(), e));
  }
  return SemifieldElement(sf);
}

SemifieldElement sf_from_rational(const SemifieldPtr& sf, SubtractionFreeRational value) {
  return SemifieldElement(sf, std::move(value));
}

namespace {

void check_same_semifield(const SemifieldElement& a, const SemifieldElement& b, const char* op) {
  const auto& sa = a.semifield();
  const auto& sb = b.semifield();
  if (sa == sb) return;
  if (sa->kind() == sb->kind() && same_vars(sa->generators(), sb->generators())) return;
  throw InvalidArgument(std::string(op) + ": elements of different semifields");
}

}  // namespace

SemifieldElement sf_add(const SemifieldElement& a, const SemifieldElement& b) {
  check_same_semifield(a, b, "sf_add");
  const auto& sf = a.semifield();
  switch (sf->kind()) {
    case SemifieldKind::one_element:
      return a;
    case SemifieldKind::universal:
      return SemifieldElement(sf, a.rational() + b.rational());
    case SemifieldKind::tropical:
    case SemifieldKind::tropical_inverted: {
      // In base-symbol exponents, Trop(u) adds by min and Trop(u^-1) by max.
      bool use_min = sf->kind() == SemifieldKind::tropical;
      const auto& ea = a.tropical().exponents;
      const auto& eb = b.tropical().exponents;
      std::vector<BigInt> out(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i)
        out[i] = use_min ? std::min(ea[i], eb[i]) : std::max(ea[i], eb[i]);
      return SemifieldElement(sf, TropicalElement{std::move(out)});
    }
  }
  throw Error("sf_add: unreachable");
}

SemifieldElement sf_mul(const SemifieldElement& a, const SemifieldElement& b) {
  check_same_semifield(a, b, "sf_mul");
  const auto& sf = a.semifield();
  switch (sf->kind()) {
    case SemifieldKind::one_element:
      return a;
    case SemifieldKind::universal:
      return SemifieldElement(sf, a.rational() * b.rational());
    default: {
      const auto& ea = a.tropical().exponents;
      const auto& eb = b.tropical().exponents;
      std::vector<BigInt> out(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) out[i] = ea[i] + eb[i];
      return SemifieldElement(sf, TropicalElement{std::move(out)});
    }
  }
}

SemifieldElement sf_div(const SemifieldElement& a, const SemifieldElement& b) {
  check_same_semifield(a, b, "sf_div");
  const auto& sf = a.semifield();
  switch (sf->kind()) {
    case SemifieldKind::one_element:
      return a;
    case SemifieldKind::universal:
      return SemifieldElement(sf, a.rational() / b.rational());
    default: {
      const auto& ea = a.tropical().exponents;
      const auto& eb = b.tropical().exponents;
      std::vector<BigInt> out(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) out[i] = ea[i] - eb[i];
      return SemifieldElement(sf, TropicalElement{std::move(out)});
    }
  }
}

SemifieldElement sf_pow(const SemifieldElement& a, const BigInt& exponent) {
  const auto& sf = a.semifield();
  switch (sf->kind()) {
    case SemifieldKind::one_element:
      return a;
    case SemifieldKind::universal:
      return SemifieldElement(sf,
                              a.rational().pow(to_int32(exponent, "sf_pow universal exponent")));
    default: {
      const auto& ea = a.tropical().exponents;
      std::vector<BigInt> out(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) out[i] = ea[i] * exponent;
      return SemifieldElement(sf, TropicalElement{std::move(out)});
    }
  }
}

bool sf_equal(const SemifieldElement& a, const SemifieldElement& b) {
  check_same_semifield(a, b, "sf_equal");
  switch (a.semifield()->kind()) {
    case SemifieldKind::one_element:
      return true;
    case SemifieldKind::universal:
      return a.rational().equals(b.rational());
    default:
      return a.tropical().exponents == b.tropical().exponents;
  }
}

std::vector<SemifieldElement> standard_assignment(const SemifieldPtr& sf) {
  std::vector<SemifieldElement> out;
  int n = sf->generator_count();
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> e(n, BigInt(0));
    e[i] = 1;
    out.push_back(sf_monomial(sf, std::move(e)));
  }
  return out;
}

SemifieldElement evaluate(const SparsePoly& f, const SemifieldPtr& target,
                          std::span<const SemifieldElement> assignment) {
  if (static_cast<int>(assignment.size()) != f.arity())
    throw InvalidArgument("evaluate: assignment does not cover all variables");
  if (f.is_zero()) throw InvalidArgument("evaluate: zero is not a semifield element");
  if (!f.has_positive_coefficients())
    throw InvalidArgument("evaluate: polynomial is not subtraction-free");
  if (target->kind() == SemifieldKind::one_element) return SemifieldElement(target);

  if (target->is_tropical()) {
    bool use_min = target->kind() == SemifieldKind::tropical;
    int gens = target->generator_count();
    std::vector<BigInt> best;
    std::vector<BigInt> cur(gens);
    for (const auto& [e, c] : f.terms()) {
      for (int g = 0; g < gens; ++g) cur[g] = 0;
      for (int i = 0; i < f.arity(); ++i) {
        if (e[i] == 0) continue;
        const auto& img = assignment[i].tropical().exponents;
        for (int g = 0; g < gens; ++g)
          if (img[g] != 0) cur[g] += img[g] * e[i];
      }
      if (best.empty()) {
        best = cur;
      } else {
        for (int g = 0; g < gens; ++g)
          best[g] = use_min ? std::min(best[g], cur[g]) : std::max(best[g], cur[g]);
      }
    }
    return SemifieldElement(target, TropicalElement{std::move(best)});
  }

  // Universal target: compose over one common denominator,
  //   common = prod_i num_i^{-lo_i} den_i^{hi_i},
  //   term   = coef prod_i num_i^{e_i - lo_i} den_i^{hi_i - e_i},
  // with lo_i/hi_i the exponent range of variable i over the support.  This
  // avoids quadratic fraction reduction during accumulation.
  const VarSet& tv = target->generators();
  int arity = f.arity();
  std::vector<std::int32_t> lo(arity, 0), hi(arity, 0);
  for (const auto& [e, c] : f.terms())
    for (int i = 0; i < arity; ++i) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }
  // Power tables: num_pows[i][p] = num_i^p for p up to hi_i - lo_i.
  std::vector<std::vector<SparsePoly>> num_pows(arity), den_pows(arity);
  for (int i = 0; i < arity; ++i) {
    int spread = hi[i] - lo[i];
    const SubtractionFreeRational& img = assignment[i].rational();
    num_pows[i].push_back(SparsePoly::one(tv));
    den_pows[i].push_back(SparsePoly::one(tv));
    for (int p = 1; p <= spread; ++p) {
      num_pows[i].push_back(num_pows[i].back() * img.numerator());
      den_pows[i].push_back(den_pows[i].back() * img.denominator());
    }
  }
  SparsePoly numerator = SparsePoly::zero(tv);
  for (const auto& [e, c] : f.terms()) {
    SparsePoly term = SparsePoly::constant(tv, c);
    for (int i = 0; i < arity; ++i) {
      if (e[i] != lo[i]) term = term * num_pows[i][e[i] - lo[i]];
      if (e[i] != hi[i]) term = term * den_pows[i][hi[i] - e[i]];
    }
    numerator = numerator + term;
  }
  SparsePoly common = SparsePoly::one(tv);
  for (int i = 0; i < arity; ++i) {
    if (lo[i] != 0) common = common * num_pows[i][-lo[i]];
    if (hi[i] != 0) common = common * den_pows[i][hi[i]];
  }
  return SemifieldElement(target, SubtractionFreeRational(std::move(numerator), std::move(common)));
}

SemifieldElement evaluate(const SubtractionFreeRational& f, const SemifieldPtr& target,
                          std::span<const SemifieldElement> assignment) {
  SemifieldElement num = evaluate(f.numerator(), target, assignment);
  SemifieldElement den = evaluate(f.denominator(), target, assignment);
  return sf_div(num, den);
}

SubtractionFreeRational substitute_monomials(const SparsePoly& f, const VarSet& target_vars,
                                             std::span<const SubtractionFreeRational> images) {
  if (static_cast<int>(images.size()) != f.arity())
    throw InvalidArgument("substitute_monomials: one image per variable required");
  SemifieldPtr target = Semifield::universal(target_vars);
  std::vector<SemifieldElement> assignment;
  assignment.reserve(images.size());
  for (const auto& img : images) assignment.push_back(sf_from_rational(target, img));
  return evaluate(f, target, assignment).rational();
}

}  // namespace cluspat
