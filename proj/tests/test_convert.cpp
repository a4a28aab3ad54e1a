#include "oracles.hpp"

#include "spheroidal/convert.hpp"
#include "spheroidal/errors.hpp"

#include <doctest.h>

using namespace sph;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

}  // namespace

TEST_CASE("family names round-trip") {
  for (CoeffFamily f : all_coeff_families()) CHECK(parse_coeff_family(coeff_family_name(f)) == f);
  CHECK(all_coeff_families().size() == 9);
  CHECK_THROWS(parse_coeff_family("nope"));
  for (Family f : {Family::U, Family::V, Family::X, Family::A, Family::Z}) CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS(parse_family(""));
}

TEST_CASE("coefficient dispatch") {
  CHECK(coefficient(CoeffFamily::UToU, 2, 0, 1) == q(-1, 3));
  CHECK(coefficient(CoeffFamily::W, 3, 1, 1, q(1, 4), q(9, 16)) == coef_w(3, 1, 1, q(1, 4), q(9, 16)));
  CHECK(coefficient(CoeffFamily::UmuFromVmu, 3, 1, 1) == q(-4, 35));
  CHECK(coefficient(CoeffFamily::UToU, 2, 3, 0) == 0);
}

TEST_CASE("identity conversion") {
  for (Family f : {Family::U, Family::V, Family::X})
    for (int n = 0; n <= 4; ++n)
      for (const auto& idx : family_indices(f, n)) {
        const auto terms = convert_basis(f, idx, q(1, 4), q(1, 4));
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].k == 0);
        CHECK(terms[0].index == idx);
        CHECK(terms[0].coefficient == 1);
      }
}

TEST_CASE("U_{2,0} from the ball") {
  const Rational t = q(1, 4);
  const auto terms = convert_basis(Family::U, {2, 0, Parity::Plus}, 0, t);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].coefficient == 1);
  CHECK(terms[0].index == HarmonicIndex{2, 0, Parity::Plus});
  CHECK(terms[1].coefficient == -t / 3);
  CHECK(terms[1].index == HarmonicIndex{0, 0, Parity::Plus});
}

TEST_CASE("conversions reproduce the target element") {
  const std::vector<std::pair<Rational, Rational>> pairs{{0, q(1, 4)}, {q(1, 4), 0}, {q(9, 16), -1}, {-3, q(1, 4)}};
  for (const auto& [ts, tt] : pairs) {
    const SpheroidParam source(ts), target(tt);
    for (Family f : {Family::U, Family::V, Family::X})
      for (int n = 0; n <= 5; ++n)
        for (const auto& idx : family_indices(f, n)) {
          const auto terms = convert_basis(f, idx, ts, tt);
          for (const auto& term : terms) CHECK(term.coefficient != 0);
          CHECK(apply_conversion(f, terms, source) == basis_element(f, idx, target));
        }
  }
}

TEST_CASE("X conversion from the ball agrees with the oracle monogenic") {
  const Rational t = q(9, 16);
  for (int n = 0; n <= 4; ++n)
    for (const auto& idx : family_indices(Family::X, n)) {
      const auto terms = convert_basis(Family::X, idx, 0, t);
      QPoly sum;
      for (const auto& term : terms)
        sum += term.coefficient *
               oracle::monogenic(term.index.n, term.index.m, term.index.parity == Parity::Plus, 0);
      CHECK(sum == oracle::monogenic(n, idx.m, idx.parity == Parity::Plus, t));
    }
}

TEST_CASE("conversion matrix") {
  const ConversionMatrix mat = conversion_matrix(Family::U, 4, 0, q(1, 4));
  CHECK(mat.at(2, 0, 1) == q(-1, 12));
  CHECK(mat.at(4, 4, 0) == 1);
  CHECK(mat.at(4, 4, 1) == 0);
  CHECK(mat.at(9, 0, 0) == 0);
}

TEST_CASE("basis enumeration") {
  CHECK(family_indices(Family::U, 2).size() == 5);
  CHECK(family_indices(Family::X, 1).size() == 5);
  CHECK(family_indices(Family::A, 1).size() == 5);
  CHECK(family_indices(Family::Z, 0).empty());
  CHECK(family_indices(Family::Z, 2).size() == 3);
  const SpheroidParam sp(q(1, 4));
  CHECK(basis_element(Family::U, {2, 0, Parity::Plus}, sp).is_reduced());
  CHECK(basis_element(Family::Z, {1, 0, Parity::Plus}, sp)[3].is_zero());
}
