#include "spheroidal/poly.hpp"

#include <doctest.h>

#include <vector>

using namespace sph;

namespace {

const TriPoly x0 = TriPoly::variable(0);
const TriPoly x1 = TriPoly::variable(1);
const TriPoly x2 = TriPoly::variable(2);

}  // namespace

TEST_CASE("graded lexicographic order") {
  const TriPoly p = x2 * x2 + x0 * x1 + x0 * x0 + x1 + 3;
  std::vector<Monomial> order;
  for (const auto& [m, c] : p.terms()) order.push_back(m);
  const std::vector<Monomial> expected{
      Monomial{{0, 0, 0}}, Monomial{{0, 1, 0}}, Monomial{{2, 0, 0}}, Monomial{{1, 1, 0}}, Monomial{{0, 0, 2}}};
  CHECK(order == expected);
}

TEST_CASE("arithmetic drops cancelled terms") {
  const TriPoly p = x0 + x1;
  CHECK((p - x1) == x0);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK((p * p).coefficient(Monomial{{1, 1, 0}}) == 2);
  CHECK((p * Rational(0)).is_zero());
  CHECK(pow(p, 3).degree() == 3);
  CHECK(pow(p, 0) == TriPoly(1));
}

TEST_CASE("derivatives and laplacian") {
  const TriPoly p = x0 * x0 * x1 - make_rational(1, 3) * x1 * x1 * x1;
  CHECK(partial_derivative(p, 0) == Rational(2) * x0 * x1);
  CHECK(partial_derivative(p, 2).is_zero());
  CHECK(laplacian(p) == Rational(2) * x1 - Rational(2) * x1);
  CHECK(laplacian(x0 * x0 - x1 * x1) .is_zero());
  CHECK(laplacian(x0 * x0) == TriPoly(2));
}

TEST_CASE("evaluation") {
  const TriPoly p = x0 * x1 - make_rational(1, 2) * x2 * x2 + 1;
  CHECK(p.evaluate(std::array<Rational, 3>{2, 3, make_rational(1, 3)}) == Rational(7) - make_rational(1, 18));
  CHECK(p.evaluate(std::array<double, 3>{2.0, 3.0, 1.0}) == doctest::Approx(6.5));
}

TEST_CASE("univariate polynomials") {
  const UniPoly p(std::vector<Rational>{1, 0, 3, 0});
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == UniPoly::monomial(1, 6));
  CHECK(p.derivative(3).degree() == -1);
  CHECK(p.evaluate(Rational(2)) == 13);
  CHECK(p.integrate(Rational(-1), Rational(1)) == 4);
  CHECK((p * p).coefficient(4) == 9);
  CHECK((p - p).degree() == -1);
}
