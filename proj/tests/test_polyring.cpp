#include <doctest.h>

#include "oscform/binary_forms.hpp"
#include "oscform/errors.hpp"
#include "oscform/expression.hpp"
#include "oscform/quotient_ring.hpp"
#include "oscform/rational_function.hpp"
#include "oscform/series.hpp"
#include "support.hpp"

using namespace oscform;
using namespace oscform::testing;

namespace {

const VarList& xyz() {
  static const VarList vars = make_vars({"x", "y", "z"});
  return vars;
}

Polynomial P(const std::string& text, const VarList& vars = xyz()) { return parse_polynomial(text, vars); }

}  // namespace

TEST_CASE("rationals parse reduced and print canonically") {
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(to_string(parse_rational("6/3")) == "2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(parse_point("1, 0,1/2") == Point{1, 0, Rational(1, 2)});
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(binomial(6, 2) == 15);
  CHECK(factorial(5) == 120);
}

TEST_CASE("multi-index orders") {
  const auto deg2 = multi_indices_of_degree(2, 2);
  REQUIRE(deg2.size() == 3);
  CHECK(deg2[0] == MultiIndex{2, 0});
  CHECK(deg2[1] == MultiIndex{1, 1});
  CHECK(deg2[2] == MultiIndex{0, 2});
  CHECK(multi_indices_up_to(3, 2).size() == 10);
  CHECK(binomial_product(MultiIndex{3, 2}, MultiIndex{1, 2}) == 3);
  CHECK(factorial_product(MultiIndex{3, 2}) == 12);
}

TEST_CASE("polynomials are canonical") {
  CHECK(P("x*y + y*x - 2*x*y").is_zero());
  CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("y^2 + x^2 + x*y").to_string() == "x^2 + x*y + y^2");
  CHECK(P("x^3*y + z").total_degree() == 4);
  CHECK(P("x^2 + y^2").is_homogeneous());
  CHECK_FALSE(P("x^2 + y").is_homogeneous());
  CHECK(P("3").is_constant());
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial a = random_polynomial(xyz(), 4, 5, rng);
    const Polynomial b = random_polynomial(xyz(), 4, 5, rng);
    const Polynomial c = random_polynomial(xyz(), 4, 5, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    const Point p = random_point(rng, 3);
    CHECK((a * b).evaluate(p) == naive_evaluate(a, p) * naive_evaluate(b, p));
  }
}

TEST_CASE("expression grammar") {
  const VarList xy = make_vars({"x", "y"});
  CHECK(parse_expression("2*x^2 - x*(y - 1)/3", xy) == RationalFunction(P("2*x^2 - x*y/3 + x/3", xy)));
  CHECK(parse_expression("1/2 + 1/3", xy).constant_value() == Rational(5, 6));
  CHECK(parse_expression("-x^2", xy) == RationalFunction(P("0 - x^2", xy)));
  CHECK_THROWS_AS(parse_expression("x^-1", xy), ParseError);
  CHECK_THROWS_AS(parse_expression("x + w", xy), ParseError);
  CHECK_THROWS_AS(parse_expression("(x + y", xy), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/x", xy), ParseError);
  try {
    parse_expression("x + * y", xy, SourcePos{3, 10});
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 14);
  }
}

TEST_CASE("derivatives against the term-wise oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = random_polynomial(xyz(), 6, 6, rng);
    for (std::size_t k = 0; k < 3; ++k) CHECK(p.derivative(k) == naive_partial(p, k));
  }
}

TEST_CASE("Hasse derivatives") {
  SUBCASE("monomials") {
    const Polynomial m = P("x^4*y^2");
    CHECK(m.hasse(MultiIndex{2, 1, 0}) == P("12*x^2*y"));
    CHECK(m.hasse(MultiIndex{0, 3, 0}).is_zero());
  }
  SUBCASE("coefficient extraction at the origin is the Kronecker delta") {
    for (const MultiIndex& j : multi_indices_up_to(2, 4)) {
      const Polynomial u = Polynomial::monomial(make_vars({"a", "b"}), j, 1);
      for (const MultiIndex& i : multi_indices_up_to(2, 4)) {
        CHECK(u.hasse(i).evaluate(Point{0, 0}) == (i == j ? 1 : 0));
      }
    }
  }
  SUBCASE("composition D_I D_J = C(I+J, I) D_(I+J)") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const Polynomial p = random_polynomial(xyz(), 6, 6, rng);
      const MultiIndex i{static_cast<unsigned>(random_int(rng, 0, 2)), static_cast<unsigned>(random_int(rng, 0, 2)),
                         static_cast<unsigned>(random_int(rng, 0, 1))};
      const MultiIndex j{static_cast<unsigned>(random_int(rng, 0, 2)), static_cast<unsigned>(random_int(rng, 0, 1)),
                         static_cast<unsigned>(random_int(rng, 0, 2))};
      CHECK(p.hasse(j).hasse(i) == p.hasse(i + j).scaled(Rational(binomial_product(i + j, i))));
    }
  }
  SUBCASE("I! D_I equals the iterated ordinary derivative") {
    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      const Polynomial p = random_polynomial(xyz(), 6, 6, rng);
      for (const MultiIndex& i : multi_indices_up_to(3, 3)) {
        Polynomial ordinary = p;
        for (std::size_t k = 0; k < 3; ++k) {
          for (unsigned e = 0; e < i[k]; ++e) ordinary = naive_partial(ordinary, k);
        }
        CHECK(p.hasse(i).scaled(Rational(factorial_product(i))) == ordinary);
      }
    }
  }
  SUBCASE("rational functions obey the quotient rule") {
    const VarList t = make_vars({"t"});
    const RationalFunction f = parse_expression("1/(1 - t)", t);
    // 1/(1-t) = sum t^k, so every Hasse derivative at 0 is 1.
    for (unsigned k = 0; k <= 5; ++k) CHECK(f.hasse(MultiIndex{k}).evaluate(Point{0}) == 1);
  }
}

TEST_CASE("multivariate gcd") {
  CHECK(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
  CHECK(gcd(P("2*x*z"), P("4*y*z")) == P("z"));
  CHECK(gcd(Polynomial(xyz()), P("x + 1")) == P("x + 1"));
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial a = random_polynomial(xyz(), 3, 3, rng);
    const Polynomial b = random_polynomial(xyz(), 3, 3, rng);
    Polynomial c = random_polynomial(xyz(), 2, 3, rng);
    if (c.is_zero()) c = P("x + y");
    const Polynomial g = gcd(a * c, b * c);
    if (!(a * c).is_zero() && !(b * c).is_zero()) {
      CHECK(try_divide(a * c, g).has_value());
      CHECK(try_divide(b * c, g).has_value());
      CHECK(try_divide(g, c.monic()).has_value());
    }
  }
}

TEST_CASE("rational functions are reduced") {
  const VarList xy = make_vars({"x", "y"});
  const RationalFunction f = parse_expression("(x^2 - y^2)/(2*x - 2*y)", xy);
  CHECK(f.is_polynomial());
  CHECK(f == RationalFunction(P("x/2 + y/2", xy)));
  const RationalFunction g = parse_expression("x/(y + 1)", xy);
  CHECK(g.denominator() == P("y + 1", xy));
  CHECK((g * parse_expression("(y + 1)/x", xy)) == RationalFunction(1));
  CHECK_THROWS_AS(g.evaluate(Point{1, -1}), DenominatorVanishes);
}

TEST_CASE("univariate arithmetic and quotient rings") {
  const UPoly p({-2, 0, 1});  // s^2 - 2
  const UPoly s = UPoly::monomial(1);
  const auto eg = extended_gcd(UPoly(std::vector<Rational>{1, 1}), UPoly(std::vector<Rational>{-1, 1}));
  CHECK(eg.gcd == UPoly(1));
  CHECK(eg.x * UPoly(std::vector<Rational>{1, 1}) + eg.y * UPoly(std::vector<Rational>{-1, 1}) == UPoly(1));
  CHECK(squarefree_part(UPoly(std::vector<Rational>{1, 2, 1})) == UPoly(std::vector<Rational>{1, 1}));

  const QuotientRingElement g = QuotientRingElement::generator(p);
  CHECK(g * g == g.constant(2));
  CHECK(g.inverse() == QuotientRingElement(p, UPoly(std::vector<Rational>{0, Rational(1, 2)})));
  CHECK((g * g.inverse()) == g.constant(1));
  const UPoly q({-1, 0, 1});  // s^2 - 1
  CHECK_THROWS_AS((QuotientRingElement::generator(q) - QuotientRingElement(q, UPoly(1))).inverse(), NotInvertible);
  CHECK_THROWS_AS(QuotientRingElement(UPoly(std::vector<Rational>{0, 0, 1}), s), PreconditionError);
}

TEST_CASE("binary forms") {
  const VarList v = make_vars({"v1", "v2"});
  CHECK(abs(resultant_binary(P("v1*v2", v), P("v1^3 + v2^3", v))) == 1);
  CHECK(resultant_binary(P("v1*v2", v), P("v2^3", v)) == 0);
  CHECK(binary_form_gcd(P("v1^2*v2", v), P("v1*v2^2", v)) == P("v1*v2", v));
  CHECK(resultant_binary(P("v1 - 2*v2", v), P("v1 + 3*v2", v)) == 5);

  SUBCASE("resultant vanishes exactly when the gcd is nontrivial") {
    Rng rng(7);
    int shared = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const auto form = [&](unsigned d) {
        Polynomial f(v);
        for (unsigned i = 0; i <= d; ++i) {
          f += Polynomial::monomial(v, MultiIndex{d - i, i}, random_int(rng, -2, 2));
        }
        return f;
      };
      Polynomial f = form(static_cast<unsigned>(random_int(rng, 1, 4)));
      Polynomial g = form(static_cast<unsigned>(random_int(rng, 1, 4)));
      if (trial % 3 == 0) {
        const Polynomial common = form(1);
        f *= common;
        g *= common;
      }
      if (f.is_zero() || g.is_zero()) continue;
      const bool zero = resultant_binary(f, g) == 0;
      if (zero) ++shared;
      CHECK(zero == (binary_form_gcd(f, g).total_degree() > 0));
    }
    CHECK(shared > 5);
  }

  SUBCASE("zeros") {
    const auto rational = binary_form_zeros(P("v1^2 - v2^2", v));
    CHECK(rational.size() == 2);
    const auto algebraic = binary_form_zeros(P("v1^2 - 2*v2^2", v));
    REQUIRE(algebraic.size() == 1);
    REQUIRE(algebraic[0].modulus.has_value());
    CHECK(evaluate_algebraic(P("v1^2 - 2*v2^2", v), algebraic[0].algebraic).is_zero());
  }
}

TEST_CASE("truncated series") {
  const VarList xy = make_vars({"x", "y"});
  const Polynomial a = P("1 + x - 3*x*y + y^2", xy);
  const Polynomial inv = series_reciprocal(a, 5);
  CHECK((a * inv).truncated(5) == Polynomial(xy, 1));

  SUBCASE("circle through (1, 0) solved for x in terms of y") {
    // Unknown z = x - 1, equation (1 + z)^2 + y^2 - 1 = 0.
    const VarList ring = make_vars({"y", "z"});
    const auto z = newton_series_solve({P("2*z + z^2 + y^2", ring)}, make_vars({"y"}), 4);
    REQUIRE(z.size() == 1);
    CHECK(z[0] == P("0 - y^2/2 - y^4/8", make_vars({"y"})));
  }
  SUBCASE("singular Jacobian") {
    const VarList ring = make_vars({"y", "z"});
    CHECK_THROWS_AS(newton_series_solve({P("z^2 - y^3", ring)}, make_vars({"y"}), 3), SingularPoint);
  }
}
