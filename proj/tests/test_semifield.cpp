#include <doctest.h>

#include "cluspat/randgen.hpp"
#include "cluspat/semifield.hpp"

using namespace cluspat;

namespace {

SparsePoly random_positive_poly(RandomSource& rng, const VarSet& vars, int max_terms,
                                int max_exp) {
  SparsePoly p(vars);
  int terms = rng.uniform_int(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    SparsePoly::Exp e(vars->size());
    for (auto& v : e) v = rng.uniform_int(0, max_exp);
    p.add_term(e, BigInt(rng.uniform_int(1, 4)));
  }
  if (p.is_zero()) p.add_term(SparsePoly::Exp(vars->size(), 0), BigInt(1));
  return p;
}

SubtractionFreeRational random_rational(RandomSource& rng, const VarSet& vars) {
  return SubtractionFreeRational(random_positive_poly(rng, vars, 4, 2),
                                 random_positive_poly(rng, vars, 3, 2));
}

}  // namespace

TEST_CASE("tropical addition is a componentwise min") {
  SemifieldPtr trop = Semifield::tropical(y_vars(2));
  SemifieldElement a = sf_monomial(trop, {1, 0});
  SemifieldElement b = sf_monomial(trop, {0, 1});
  CHECK(sf_equal(sf_add(a, b), sf_one(trop)));
  CHECK(sf_add(a, b).to_text() == "y1^0 * y2^0");
}

TEST_CASE("universal addition is polynomial addition") {
  SemifieldPtr qsf = Semifield::universal(y_vars(2));
  SemifieldElement y2 = sf_monomial(qsf, {0, 1});
  SemifieldElement sum = sf_add(y2, sf_one(qsf));
  CHECK(sum.rational().to_text() == "y2 + 1");
  CHECK(sum.rational().is_polynomial());
}

TEST_CASE("tropical evaluation of an F-polynomial is 1") {
  SemifieldPtr trop = Semifield::tropical(y_vars(2));
  SparsePoly f = SparsePoly::parse(y_vars(2), "1 + y1 + y1*y2");
  SemifieldElement v = evaluate(f, trop, standard_assignment(trop));
  CHECK(sf_equal(v, sf_one(trop)));
}

TEST_CASE("inverted-tropical evaluation picks out the maximal degrees") {
  VarSet yv = y_vars(2);
  SemifieldPtr inv = Semifield::tropical_inverted(yv);
  SUBCASE("1 + y2") {
    SemifieldElement v = evaluate(SparsePoly::parse(yv, "1 + y2"), inv, standard_assignment(inv));
    CHECK(v.tropical().exponents == std::vector<BigInt>{0, 1});
  }
  SUBCASE("matches max_degree_vector on random subtraction-free polynomials") {
    RandomSource rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      SparsePoly f = random_positive_poly(rng, yv, 6, 4);
      SemifieldElement v = evaluate(f, inv, standard_assignment(inv));
      auto degrees = f.max_degree_vector();
      for (std::size_t i = 0; i < degrees.size(); ++i)
        CHECK(v.tropical().exponents[i] == degrees[i]);
    }
  }
}

TEST_CASE("positive constants evaluate to the tropical unit") {
  SemifieldPtr trop = Semifield::tropical(y_vars(2));
  SemifieldElement v =
      evaluate(SparsePoly::constant(y_vars(2), BigInt(5)), trop, standard_assignment(trop));
  CHECK(sf_equal(v, sf_one(trop)));
}

TEST_CASE("one-element semifield collapses everything") {
  SemifieldPtr unit = Semifield::one_element();
  SemifieldElement one = sf_one(unit);
  CHECK(sf_equal(sf_add(one, one), one));
  CHECK(sf_equal(sf_mul(one, one), one));
  CHECK(one.to_text() == "1");
}

TEST_CASE("evaluation is a semifield homomorphism") {
  RandomSource rng(32);
  VarSet yv = y_vars(2);
  SemifieldPtr trop = Semifield::tropical(yv);
  for (int trial = 0; trial < 40; ++trial) {
    SubtractionFreeRational a = random_rational(rng, yv);
    SubtractionFreeRational b = random_rational(rng, yv);
    // Random tropical assignment.
    std::vector<SemifieldElement> assign;
    for (int i = 0; i < 2; ++i)
      assign.push_back(sf_monomial(trop, {BigInt(rng.uniform_int(-3, 3)),
                                          BigInt(rng.uniform_int(-3, 3))}));
    SemifieldElement lhs_mul = evaluate(a * b, trop, assign);
    SemifieldElement rhs_mul = sf_mul(evaluate(a, trop, assign), evaluate(b, trop, assign));
    CHECK(sf_equal(lhs_mul, rhs_mul));
    SemifieldElement lhs_add = evaluate(a + b, trop, assign);
    SemifieldElement rhs_add = sf_add(evaluate(a, trop, assign), evaluate(b, trop, assign));
    CHECK(sf_equal(lhs_add, rhs_add));
  }
}

TEST_CASE("evaluation into a universal target is a homomorphism") {
  RandomSource rng(34);
  VarSet yv = y_vars(2);
  VarSet target_vars = make_vars({"u1", "u2"});
  SemifieldPtr target = Semifield::universal(target_vars);
  auto small_rational = [&](RandomSource& r) {
    SparsePoly num(target_vars), den(target_vars);
    for (int t2 = 0; t2 < 2; ++t2)
      num.add_term({r.uniform_int(0, 1), r.uniform_int(0, 1)}, BigInt(r.uniform_int(1, 2)));
    den.add_term({r.uniform_int(0, 1), r.uniform_int(0, 1)}, BigInt(1));
    if (num.is_zero()) num.add_term({0, 0}, BigInt(1));
    return SubtractionFreeRational(num, den);
  };
  for (int trial = 0; trial < 20; ++trial) {
    SubtractionFreeRational a = random_rational(rng, yv);
    SubtractionFreeRational b = random_rational(rng, yv);
    std::vector<SemifieldElement> assign;
    for (int i = 0; i < 2; ++i) assign.push_back(sf_from_rational(target, small_rational(rng)));
    CHECK(sf_equal(evaluate(a * b, target, assign),
                   sf_mul(evaluate(a, target, assign), evaluate(b, target, assign))));
    CHECK(sf_equal(evaluate(a + b, target, assign),
                   sf_add(evaluate(a, target, assign), evaluate(b, target, assign))));
  }
}

TEST_CASE("universal equality is semantic and consistent with arithmetic") {
  RandomSource rng(33);
  VarSet yv = y_vars(2);
  for (int trial = 0; trial < 40; ++trial) {
    SubtractionFreeRational a = random_rational(rng, yv);
    SubtractionFreeRational b = random_rational(rng, yv);
    CHECK((a / b * (b / a)).equals(SubtractionFreeRational::one(yv)));
    CHECK((a * b).equals(b * a));
  }
}

TEST_CASE("light reduction cancels content and clears dividing denominators") {
  VarSet yv = y_vars(2);
  SubtractionFreeRational a(SparsePoly::parse(yv, "y1*y2 + y2"), SparsePoly::parse(yv, "y2"));
  CHECK(a.is_polynomial());
  CHECK(a.numerator() == SparsePoly::parse(yv, "y1 + 1"));
  SubtractionFreeRational b(SparsePoly::parse(yv, "2 + 2*y1"), SparsePoly::parse(yv, "2"));
  CHECK(b.numerator() == SparsePoly::parse(yv, "1 + y1"));
  SubtractionFreeRational c(SparsePoly::parse(yv, "1 + y1 + y2 + y1*y2"),
                            SparsePoly::parse(yv, "1 + y2"));
  CHECK(c.is_polynomial());
  CHECK(c.numerator() == SparsePoly::parse(yv, "1 + y1"));
}

TEST_CASE("substitution composes inside the universal semifield") {
  VarSet yv = y_vars(2);
  SparsePoly f = SparsePoly::parse(yv, "1 + y2");
  SUBCASE("y2 -> y2^-1") {
    std::vector<SubtractionFreeRational> images{
        SubtractionFreeRational::variable(yv, 0),
        SubtractionFreeRational(SparsePoly::one(yv), SparsePoly::parse(yv, "y2"))};
    SubtractionFreeRational out = substitute_monomials(f, yv, images);
    CHECK(out.equals(SubtractionFreeRational(SparsePoly::parse(yv, "y2 + 1"),
                                             SparsePoly::parse(yv, "y2"))));
  }
  SUBCASE("identity substitution") {
    std::vector<SubtractionFreeRational> images{SubtractionFreeRational::variable(yv, 0),
                                                SubtractionFreeRational::variable(yv, 1)};
    CHECK(substitute_monomials(f, yv, images).equals(SubtractionFreeRational(f)));
  }
}

TEST_CASE("evaluate rejects non-subtraction-free input and missing assignments") {
  VarSet yv = y_vars(2);
  SemifieldPtr trop = Semifield::tropical(yv);
  CHECK_THROWS_AS(evaluate(SparsePoly::parse(yv, "y1 - y2"), trop, standard_assignment(trop)),
                  InvalidArgument);
  std::vector<SemifieldElement> short_assign{sf_one(trop)};
  CHECK_THROWS_AS(evaluate(SparsePoly::parse(yv, "y1"), trop, short_assign), InvalidArgument);
}

TEST_CASE("value-shape extraction raises the dedicated errors") {
  VarSet yv = y_vars(1);
  SubtractionFreeRational laurent(SparsePoly::parse(yv, "y1^2 + 1"), SparsePoly::parse(yv, "y1"));
  CHECK(laurent.is_laurent());
  CHECK_THROWS_AS(laurent.as_polynomial(), CancellationFailure);
  CHECK(laurent.as_laurent_polynomial() == SparsePoly::parse(yv, "y1 + y1^-1"));
  SubtractionFreeRational stuck(SparsePoly::parse(yv, "y1"), SparsePoly::parse(yv, "y1 + 1"));
  CHECK_FALSE(stuck.is_laurent());
  CHECK_THROWS_AS(stuck.as_laurent_polynomial(), NonLaurent);
}

TEST_CASE("division by the zero rational is rejected") {
  VarSet yv = y_vars(1);
  SubtractionFreeRational one = SubtractionFreeRational::one(yv);
  SubtractionFreeRational zero(SparsePoly::zero(yv));
  CHECK_THROWS_AS(one / zero, DivisionByZero);
  CHECK_THROWS_AS(zero.inverse(), DivisionByZero);
}
