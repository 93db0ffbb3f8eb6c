#include "cluspat/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace cluspat {

namespace {

std::atomic<std::size_t> g_term_limit{200000};

std::int64_t total_degree(const SparsePoly::Exp& e) {
  std::int64_t sum = 0;
  for (auto v : e) sum += v;
  return sum;
}

std::int32_t checked_exp_add(std::int32_t a, std::int32_t b) {
  std::int64_t s = static_cast<std::int64_t>(a) + b;
  if (s < INT32_MIN || s > INT32_MAX) throw InvalidArgument("polynomial exponent overflow");
  return static_cast<std::int32_t>(s);
}

}  // namespace

std::size_t term_limit() { return g_term_limit.load(); }
void set_term_limit(std::size_t limit) { g_term_limit.store(limit == 0 ? 1 : limit); }

VarSet make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet y_vars(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return make_vars(std::move(names));
}

VarSet cluster_vars(int n) {
  std::vector<std::string> names;
  names.reserve(2 * n);
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return make_vars(std::move(names));
}

bool same_vars(const VarSet& a, const VarSet& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool SparsePoly::GradedLexLess::operator()(const Exp& a, const Exp& b) const {
  std::int64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly::SparsePoly(VarSet vars) : vars_(std::move(vars)) {
  if (!vars_) throw InvalidArgument("SparsePoly: null variable set");
}

SparsePoly SparsePoly::zero(VarSet vars) { return SparsePoly(std::move(vars)); }

SparsePoly SparsePoly::one(VarSet vars) { return constant(std::move(vars), BigInt(1)); }

SparsePoly SparsePoly::constant(VarSet vars, BigInt value) {
  SparsePoly p(std::move(vars));
  if (value != 0) p.terms_.emplace(Exp(p.arity(), 0), std::move(value));
  return p;
}

SparsePoly SparsePoly::variable(VarSet vars, int index) {
  SparsePoly p(std::move(vars));
  if (index < 0 || index >= p.arity()) throw IndexOutOfRange("SparsePoly::variable: bad index");
  Exp e(p.arity(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), BigInt(1));
  return p;
}

SparsePoly SparsePoly::monomial(VarSet vars, Exp exponents, BigInt coefficient) {
  SparsePoly p(std::move(vars));
  if (static_cast<int>(exponents.size()) != p.arity())
    throw DimensionMismatch("SparsePoly::monomial: exponent arity mismatch");
  if (coefficient != 0) p.terms_.emplace(std::move(exponents), std::move(coefficient));
  return p;
}

bool SparsePoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         total_degree(terms_.begin()->first) == 0 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](std::int32_t v) { return v == 0; });
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exp& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int32_t v) { return v == 0; });
}

BigInt SparsePoly::constant_term() const {
  Exp zero(arity(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? BigInt(0) : it->second;
}

const SparsePoly::Exp& SparsePoly::leading_exponent() const {
  if (terms_.empty()) throw InvalidArgument("leading_exponent: zero polynomial");
  return terms_.rbegin()->first;
}

const BigInt& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("leading_coefficient: zero polynomial");
  return terms_.rbegin()->second;
}

bool SparsePoly::has_nonnegative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (auto v : e)
      if (v < 0) return false;
  return true;
}

bool SparsePoly::has_positive_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

void SparsePoly::check_compatible(const SparsePoly& rhs, const char* op) const {
  if (!same_vars(vars_, rhs.vars_))
    throw DimensionMismatch(std::string(op) + ": operands over different variable sets");
}

void SparsePoly::enforce_limit(const char* op) const {
  if (terms_.size() > g_term_limit.load())
    throw TermLimitExceeded(std::string(op) + ": result exceeds " +
                            std::to_string(g_term_limit.load()) + " terms");
}

void SparsePoly::add_term(const Exp& exponents, const BigInt& coefficient) {
  if (static_cast<int>(exponents.size()) != arity())
    throw DimensionMismatch("add_term: exponent arity mismatch");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
  check_compatible(rhs, "poly add");
  SparsePoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  out.enforce_limit("poly add");
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& rhs) const {
  check_compatible(rhs, "poly subtract");
  SparsePoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  out.enforce_limit("poly subtract");
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
  check_compatible(rhs, "poly multiply");
  const SparsePoly& small = terms_.size() <= rhs.terms_.size() ? *this : rhs;
  const SparsePoly& large = terms_.size() <= rhs.terms_.size() ? rhs : *this;
  SparsePoly out(vars_);
  Exp e(arity());
  for (const auto& [es, cs] : small.terms_) {
    for (const auto& [el, cl] : large.terms_) {
      for (int i = 0; i < arity(); ++i) e[i] = checked_exp_add(es[i], el[i]);
      out.add_term(e, cs * cl);
    }
    out.enforce_limit("poly multiply");
  }
  return out;
}

bool SparsePoly::operator==(const SparsePoly& rhs) const {
  return same_vars(vars_, rhs.vars_) && terms_ == rhs.terms_;
}

SparsePoly SparsePoly::pow(int exponent) const {
  if (exponent < 0) throw InvalidArgument("SparsePoly::pow: negative exponent");
  SparsePoly result = one(vars_);
  SparsePoly base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::shifted(const Exp& shift) const {
  if (static_cast<int>(shift.size()) != arity())
    throw DimensionMismatch("SparsePoly::shifted: arity mismatch");
  SparsePoly out(vars_);
  Exp e(arity());
  for (const auto& [et, c] : terms_) {
    for (int i = 0; i < arity(); ++i) e[i] = checked_exp_add(et[i], shift[i]);
    out.terms_.emplace(e, c);
  }
  return out;
}

BigInt SparsePoly::integer_content() const {
  BigInt g(0);
  for (const auto& [e, c] : terms_) {
    g = big_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

SparsePoly::Exp SparsePoly::exponent_floor() const {
  if (terms_.empty()) return Exp(arity(), 0);
  Exp floor = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < arity(); ++i) floor[i] = std::min(floor[i], e[i]);
  return floor;
}

std::vector<std::int32_t> SparsePoly::max_degree_vector() const {
  if (terms_.empty()) throw InvalidArgument("max_degree_vector: zero polynomial");
  if (!has_nonnegative_exponents())
    throw InvalidArgument("max_degree_vector: polynomial has negative exponents");
  Exp out(arity(), 0);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < arity(); ++i) out[i] = std::max(out[i], e[i]);
  return out;
}

bool SparsePoly::has_unique_maximal_monomial() const {
  if (terms_.empty()) return false;
  Exp top = max_degree_vector();
  auto it = terms_.find(top);
  if (it == terms_.end() || it->second != 1) return false;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < arity(); ++i)
      if (e[i] > top[i]) return false;
  return true;
}

SparsePoly SparsePoly::reindexed(const VarSet& target) const {
  SparsePoly out(target);
  std::vector<int> where(arity(), -1);
  for (int i = 0; i < arity(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it != target->end()) where[i] = static_cast<int>(it - target->begin());
  }
  for (const auto& [e, c] : terms_) {
    Exp mapped(target->size(), 0);
    for (int i = 0; i < arity(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0)
        throw InvalidArgument("reindexed: variable " + (*vars_)[i] + " missing from target set");
      mapped[where[i]] = e[i];
    }
    out.add_term(mapped, c);
  }
  return out;
}

std::string SparsePoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool constant = std::all_of(e.begin(), e.end(), [](std::int32_t v) { return v == 0; });
    bool printed_factor = false;
    if (abs_c != 1 || constant) {
      os << abs_c.get_str();
      printed_factor = true;
    }
    for (int i = 0; i < arity(); ++i) {
      if (e[i] == 0) continue;
      if (printed_factor) os << "*";
      os << (*vars_)[i];
      if (e[i] != 1) os << "^" << e[i];
      printed_factor = true;
    }
  }
  return os.str();
}

SparsePoly SparsePoly::parse(const VarSet& vars, const std::string& text) {
  SparsePoly out(vars);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw InvalidArgument("poly parse: empty input");
  bool expect_term = true;
  int term_sign = 1;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    char ch = text[pos];
    if (ch == '+' || ch == '-') {
      if (expect_term && ch == '+') throw InvalidArgument("poly parse: dangling '+'");
      term_sign = (ch == '-') ? -term_sign : term_sign;
      ++pos;
      expect_term = true;
      continue;
    }
    // One term: optional integer, then *-separated var^exp factors.
    BigInt coef(1);
    Exp exps(out.arity(), 0);
    bool any_factor = false;
    bool expect_factor = true;
    while (pos < text.size()) {
      skip_ws();
      if (pos == text.size()) break;
      char c0 = text[pos];
      if (c0 == '+' || c0 == '-') break;
      if (c0 == '*') {
        if (expect_factor) throw InvalidArgument("poly parse: dangling '*'");
        ++pos;
        expect_factor = true;
        continue;
      }
      if (!expect_factor) throw InvalidArgument("poly parse: missing '*' before factor");
      if (std::isdigit(static_cast<unsigned char>(c0))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        coef *= BigInt(text.substr(start, pos - start));
      } else if (std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_') {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        std::string name = text.substr(start, pos - start);
        auto vit = std::find(vars->begin(), vars->end(), name);
        if (vit == vars->end()) throw InvalidArgument("poly parse: unknown variable " + name);
        int vi = static_cast<int>(vit - vars->begin());
        long expn = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          bool neg = false;
          if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
          }
          std::size_t estart = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (estart == pos) throw InvalidArgument("poly parse: missing exponent after '^'");
          expn = std::stol(text.substr(estart, pos - estart));
          if (neg) expn = -expn;
        }
        exps[vi] = checked_exp_add(exps[vi], static_cast<std::int32_t>(expn));
      } else {
        throw InvalidArgument(std::string("poly parse: unexpected character '") + c0 + "'");
      }
      any_factor = true;
      expect_factor = false;
    }
    if (!any_factor) throw InvalidArgument("poly parse: empty term");
    out.add_term(exps, term_sign > 0 ? coef : BigInt(-coef));
    term_sign = 1;
    expect_term = false;
  }
  if (expect_term) throw InvalidArgument("poly parse: trailing sign");
  return out;
}

SparsePoly exact_div(const SparsePoly& dividend, const SparsePoly& divisor) {
  if (!same_vars(dividend.vars(), divisor.vars()))
    throw DimensionMismatch("exact_div: operands over different variable sets");
  if (divisor.is_zero()) throw DivisionByZero("exact_div: division by zero polynomial");
  if (dividend.is_zero()) return SparsePoly::zero(dividend.vars());

  // Normalize Laurent inputs: p = x^fp p', q = x^fq q' with p', q' genuine
  // polynomials; p/q = x^(fp - fq) (p'/q').
  SparsePoly::Exp fp = dividend.exponent_floor();
  SparsePoly::Exp fq = divisor.exponent_floor();
  SparsePoly::Exp neg_fp(fp.size()), neg_fq(fq.size()), shift(fp.size());
  for (std::size_t i = 0; i < fp.size(); ++i) {
    neg_fp[i] = -fp[i];
    neg_fq[i] = -fq[i];
    shift[i] = fp[i] - fq[i];
  }
  SparsePoly rem = dividend.shifted(neg_fp);
  SparsePoly den = divisor.shifted(neg_fq);

  SparsePoly quotient(dividend.vars());
  const SparsePoly::Exp& lead_e = den.leading_exponent();
  const BigInt& lead_c = den.leading_coefficient();
  SparsePoly::Exp qe(fp.size());
  SparsePoly::Exp se(fp.size());
  while (!rem.is_zero()) {
    const SparsePoly::Exp& re = rem.leading_exponent();
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) throw NotDivisible("exact_div: leading monomial not divisible");
    }
    BigInt qc, rr;
    mpz_tdiv_qr(qc.get_mpz_t(), rr.get_mpz_t(), rem.leading_coefficient().get_mpz_t(),
                lead_c.get_mpz_t());
    if (rr != 0) throw NotDivisible("exact_div: leading coefficient not divisible");
    quotient.add_term(qe, qc);
    for (const auto& [e, c] : den.terms()) {
      for (std::size_t i = 0; i < se.size(); ++i) se[i] = e[i] + qe[i];
      rem.add_term(se, -(qc * c));
    }
  }
  return quotient.shifted(shift);
}

BigInt h_entry(const SparsePoly& fpoly, int i, const ExchangeMatrix& b) {
  int n = b.rank();
  if (i < 1 || i > n) throw IndexOutOfRange("h_entry: row index out of range");
  if (fpoly.arity() != n) throw DimensionMismatch("h_entry: polynomial arity vs rank");
  if (fpoly.is_zero()) throw InvalidArgument("h_entry: zero polynomial is not an F-polynomial");
  std::vector<BigInt> weight(n);
  for (int k = 0; k < n; ++k)
    weight[k] = (k == i - 1) ? BigInt(-1) : positive_part(-b.matrix()(i - 1, k));
  bool first = true;
  BigInt best(0);
  for (const auto& [e, c] : fpoly.terms()) {
    BigInt v(0);
    for (int k = 0; k < n; ++k)
      if (e[k] != 0) v += weight[k] * e[k];
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

}  // namespace cluspat
