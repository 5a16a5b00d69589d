#include <doctest.h>

#include "oscform/errors.hpp"
#include "oscform/series.hpp"
#include "support.hpp"

using namespace oscform;
using namespace oscform::testing;

namespace {

Parameterization transformed(const Parameterization& f, const Matrix<Rational>& m) {
  std::vector<RationalFunction> coords;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    RationalFunction c(0);
    for (std::size_t i = 0; i < f.coords.size(); ++i) c += f.coords[i] * RationalFunction(m(i, j));
    coords.push_back(c);
  }
  return Parameterization::make(*f.params, coords);
}

Matrix<RationalFunction> lift(const Matrix<Rational>& m) {
  Matrix<RationalFunction> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RationalFunction(m(i, j));
  }
  return out;
}

Matrix<Rational> random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_int(rng, -3, 3);
    }
    if (inverse(m)) return m;
  }
}

ImplicitVariety implicit(const std::vector<std::string>& coords, const std::vector<std::string>& equations,
                         const Point& point) {
  ImplicitVariety iv;
  iv.coords = make_vars(coords);
  for (const std::string& e : equations) iv.equations.push_back(parse_polynomial(e, iv.coords));
  iv.point = point;
  return iv;
}

}  // namespace

TEST_CASE("Togliatti second-order jet matrix") {
  const Parameterization f = togliatti();
  const Matrix<RationalFunction> a = jet_matrix(f, 2);
  const std::vector<std::vector<std::string>> printed{
      {"1", "x", "y", "x*y^2", "x^2*y", "x^2*y^2"}, {"0", "1", "0", "y^2", "2*x*y", "2*x*y^2"},
      {"0", "0", "1", "2*x*y", "x^2", "2*x^2*y"},   {"0", "0", "0", "0", "y", "y^2"},
      {"0", "0", "0", "2*y", "2*x", "4*x*y"},       {"0", "0", "0", "x", "0", "x^2"}};
  REQUIRE(a.rows() == 6);
  REQUIRE(a.cols() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK_MESSAGE(a(i, j) == parse_expression(printed[i][j], f.params), "entry ", i, ",", j);
    }
  }
}

TEST_CASE("jet matrices at points") {
  CHECK(jet_matrix(togliatti(), 0).rows() == 1);
  const Matrix<Rational> cubic = jet_matrix(twisted_cubic(), 2, Point{0});
  CHECK(cubic == Matrix<Rational>::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Parameterization f = random_chart(rng, 2, 6, 4);
    const Point p = random_point(rng, 2);
    CHECK(rows_of(jet_matrix(f, 3, p)) == naive_jet_rows(f, 3, p));
  }
  const Parameterization g = chart({"x", "y"}, {"1", "x", "y", "1/(x - y)"});
  CHECK_THROWS_AS(jet_matrix(g, 1, Point{2, 2}), DenominatorVanishes);
}

TEST_CASE("row counts follow the jet-bundle filtration") {
  for (std::size_t r = 1; r <= 3; ++r) {
    for (unsigned m = 0; m <= 4; ++m) {
      CHECK(jet_rows(r, m).size() == binomial(static_cast<unsigned>(r) + m, m));
      if (m > 0) {
        CHECK(jet_rows(r, m).size() - jet_rows(r, m - 1).size() ==
              binomial(static_cast<unsigned>(r) + m - 1, m));
      }
    }
  }
}

TEST_CASE("osculating profiles") {
  SUBCASE("Togliatti") {
    const OsculatingProfile sampled = osculating_profile(togliatti(), 3);
    CHECK(sampled.dims == std::vector<std::size_t>{0, 2, 4, 5});
    CHECK(sampled.mode == RankMode::kSampled);
    CHECK(sampled.sampled_points.size() >= 2);
    ProfileOptions symbolic;
    symbolic.symbolic = true;
    CHECK(osculating_profile(togliatti(), 3, symbolic).dims == sampled.dims);
  }
  SUBCASE("Veronese against the naive rank oracle") {
    const Point p{Rational(3, 2), -2};
    const std::vector<std::size_t> expected{static_cast<std::size_t>(naive_s(veronese(), 0, p)),
                                            static_cast<std::size_t>(naive_s(veronese(), 1, p)),
                                            static_cast<std::size_t>(naive_s(veronese(), 2, p))};
    CHECK(expected == std::vector<std::size_t>{0, 2, 5});
    CHECK(osculating_profile(veronese(), 2).dims == expected);
  }
  SUBCASE("Shifrin") { CHECK(osculating_profile(shifrin(), 2).dims == std::vector<std::size_t>{0, 2, 4}); }
  SUBCASE("at a point") {
    ProfileOptions at;
    at.at = Point{0, 0};
    const OsculatingProfile p = osculating_profile(togliatti(), 4, at);
    CHECK(p.mode == RankMode::kPoint);
    CHECK(p.dims == std::vector<std::size_t>{0, 2, 2, 4, 5});
  }
}

TEST_CASE("profile invariants on random charts") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t r = static_cast<std::size_t>(random_int(rng, 1, 3));
    const Parameterization f = random_chart(rng, r, static_cast<std::size_t>(random_int(rng, 3, 8)), 4);
    const OsculatingProfile p = osculating_profile(f, 4);
    CHECK(p.dims[0] == 0);
    for (unsigned i = 1; i < p.dims.size(); ++i) {
      CHECK(p.dims[i] >= p.dims[i - 1]);
      CHECK(p.dims[i] <= std::min<std::size_t>(f.ambient_dim(),
                                               p.dims[i - 1] + binomial(static_cast<unsigned>(r) + i - 1, i).get_ui()));
    }
  }
}

TEST_CASE("linear coordinate changes") {
  Rng rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    const Parameterization f = random_chart(rng, 2, 5, 3);
    const Matrix<Rational> m = random_invertible(rng, 6);
    const Parameterization g = transformed(f, m);
    CHECK(jet_matrix(g, 3) == jet_matrix(f, 3) * lift(m));
    CHECK(osculating_profile(g, 3).dims == osculating_profile(f, 3).dims);
    const Point p = random_point(rng, 2);
    CHECK(jet_matrix(g, 2, p) == jet_matrix(f, 2, p) * m);
  }
}

TEST_CASE("invertible parameter substitutions keep s") {
  Rng rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    const Parameterization f = random_chart(rng, 2, 6, 3);
    // u = (a + 2b + 1, a - b)
    const VarList ab = make_vars({"a", "b"});
    const std::vector<Polynomial> sub{parse_polynomial("a + 2*b + 1", ab), parse_polynomial("a - b", ab)};
    std::vector<RationalFunction> coords;
    for (const RationalFunction& c : f.coords) coords.emplace_back(c.numerator().rebound(f.params).substitute(sub));
    const Parameterization g = Parameterization::make({"a", "b"}, coords);
    const Point q = random_point(rng, 2);
    const Point p{q[0] + 2 * q[1] + 1, q[0] - q[1]};
    for (unsigned m = 0; m <= 3; ++m) CHECK(naive_s(g, m, q) == naive_s(f, m, p));
  }
}

TEST_CASE("osculating spaces") {
  const Subspace<Rational> o0 = osculating_space(togliatti(), 0, Point{2, 3});
  CHECK(o0 == Subspace<Rational>::span({{1, 2, 3, 18, 12, 36}}, 6));
  CHECK(osculating_space(twisted_cubic(), 2, Point{0}) ==
        Subspace<Rational>::span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 4));
  const Subspace<Rational> t2 = osculating_space(togliatti(), 2, Point{1, 1});
  CHECK(t2.dim() == 5);
  CHECK(t2.dim() == naive_rank(naive_jet_rows(togliatti(), 2, Point{1, 1})));
}

TEST_CASE("kernel chains") {
  SUBCASE("Togliatti") {
    const auto chain = kernel_chain(togliatti(), 2);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].dim() == 5);
    const VarList xy = togliatti().params;
    const auto e = [&](const char* s) { return parse_expression(s, xy); };
    const Subspace<RationalFunction> k1 = Subspace<RationalFunction>::span(
        {{e("2*x*y^2"), e("-y^2"), e("-2*x*y"), 1, 0, 0},
         {e("2*x^2*y"), e("-2*x*y"), e("-x^2"), 0, 1, 0},
         {e("3*x^2*y^2"), e("-2*x*y^2"), e("-2*x^2*y"), 0, 0, 1}},
        6);
    CHECK(chain[1] == k1);
    const Subspace<RationalFunction> k2 =
        Subspace<RationalFunction>::span({{e("-x^2*y^2"), e("x*y^2"), e("x^2*y"), e("-x"), e("-y"), 1}}, 6);
    CHECK(chain[2] == k2);
  }
  SUBCASE("Shifrin: last entries of the K_2 generator") {
    const auto chain = kernel_chain(shifrin(), 2);
    REQUIRE(chain[2].dim() == 1);
    const auto g = chain[2].vector(0);
    const RationalFunction scale = g[5];
    const VarList xy = shifrin().params;
    CHECK(g[3] / scale == parse_expression("-10*x + 10*y^2", xy));
    CHECK(g[4] / scale == parse_expression("-5*y", xy));
  }
  SUBCASE("nesting on random charts") {
    Rng rng(4);
    for (int trial = 0; trial < 6; ++trial) {
      const Parameterization f = random_chart(rng, 2, 6, 3);
      const auto chain = kernel_chain(f, 3, random_point(rng, 2));
      for (std::size_t i = 1; i < chain.size(); ++i) CHECK(chain[i - 1].contains(chain[i]));
    }
  }
}

TEST_CASE("immersion at a point") {
  const Parameterization cusp = chart({"x", "y"}, {"1", "x^2", "y", "x^3"});
  JetTable table(cusp);
  CHECK_FALSE(is_immersive_at(table, Point{0, 1}));
  CHECK(is_immersive_at(table, Point{1, 1}));
}

TEST_CASE("implicit charts by Newton iteration") {
  SUBCASE("Togliatti equations give back the monomial chart") {
    const ImplicitVariety iv =
        implicit({"X0", "X1", "X2", "X3", "X4", "X5"},
                 {"X0^2*X3 - X1*X2^2", "X0^2*X4 - X1^2*X2", "X0^3*X5 - X1^2*X2^2"}, Point{1, 0, 0, 0, 0, 0});
    const Parameterization f = jet_parameterize(iv, 4);
    REQUIRE(f.dim() == 2);
    const std::vector<std::string> expected{"1", "x1", "x2", "x1*x2^2", "x1^2*x2", "x1^2*x2^2"};
    for (std::size_t j = 0; j < 6; ++j) CHECK(f.coords[j] == parse_expression(expected[j], f.params));
  }
  SUBCASE("circle through (1 : 1 : 0)") {
    const ImplicitVariety iv = implicit({"X0", "X1", "X2"}, {"X1^2 + X2^2 - X0^2"}, Point{1, 1, 0});
    JetParameterizeOptions opt;
    opt.free_coordinates = std::vector<std::size_t>{2};
    const Parameterization f = jet_parameterize(iv, 4, opt);
    CHECK(f.truncation_order == 4u);
    CHECK(f.coords[1] == parse_expression("1 - x2^2/2 - x2^4/8", f.params));
  }
  SUBCASE("linear equations are solved exactly") {
    const ImplicitVariety iv = implicit({"X0", "X1", "X2"}, {"X2 - X1"}, Point{1, 3, 3});
    const Parameterization f = jet_parameterize(iv, 3);
    std::vector<Polynomial> values;
    for (const RationalFunction& c : f.coords) values.push_back(c.numerator());
    CHECK(iv.equations[0].substitute(values).is_zero());
  }
  SUBCASE("residuals vanish through the order") {
    const ImplicitVariety iv = implicit({"X0", "X1", "X2", "X3"}, {"X0*X3 - X1*X2 + X1^2 - X3^2"}, Point{1, 0, 0, 0});
    for (unsigned order = 2; order <= 6; ++order) {
      const Parameterization f = jet_parameterize(iv, order);
      std::vector<Polynomial> values;
      for (const RationalFunction& c : f.coords) values.push_back(c.numerator());
      CHECK(substitute_truncated(iv.equations[0], values, order).is_zero());
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(jet_parameterize(implicit({"X0", "X1", "X2"}, {"X1^2 + X2^2 - X0^2"}, Point{1, 0, 0}), 3),
                    PointNotOnVariety);
    CHECK_THROWS_AS(jet_parameterize(implicit({"X0", "X1", "X2"}, {"X1^2 - X2^2"}, Point{1, 0, 0}), 3),
                    SingularPoint);
  }
}
