#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turanpoly/family.hpp"
#include "turanpoly/polynomial.hpp"

using namespace turanpoly;

namespace {

DensePolynomial poly(std::initializer_list<Scalar> ascending) {
  return DensePolynomial(std::vector<Scalar>(ascending));
}

}  // namespace

TEST_CASE("ring operations") {
  DensePolynomial p = poly({Scalar(0), Scalar(2), Scalar(1)});  // x^2 + 2x
  CHECK(p(Scalar(1)) == Scalar(3));
  CHECK(p(Scalar(0)) == Scalar(0));

  DensePolynomial a = poly({Scalar(1), Scalar(1)});   // x + 1
  DensePolynomial b = poly({Scalar(-1), Scalar(1)});  // x - 1
  CHECK(a * b == poly({Scalar(-1), Scalar(0), Scalar(1)}));

  CHECK(a + b == poly({Scalar(0), Scalar(2)}));
  CHECK(a - a == DensePolynomial());
  CHECK((a * Scalar(3)) == poly({Scalar(3), Scalar(3)}));
  CHECK(a.times_x() == poly({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK(p.divided_by_x() == poly({Scalar(2), Scalar(1)}));
  CHECK_THROWS_AS(a.divided_by_x(), Error);
}

TEST_CASE("compose_affine") {
  // U_1 = 2x composed with x/2 + 1 gives x + 2.
  DensePolynomial u1 = poly({Scalar(0), Scalar(2)});
  CHECK(compose_affine(u1, Scalar(1, 2), Scalar(1)) == poly({Scalar(2), Scalar(1)}));
  // Identity transform.
  DensePolynomial p = poly({Scalar(3), Scalar(-1), Scalar(5)});
  CHECK(compose_affine(p, Scalar(1), Scalar(0)) == p);
  // Degree-respecting round trip: q(x) = p(2x+3), q((x-3)/2) = p(x).
  DensePolynomial q = compose_affine(p, Scalar(2), Scalar(3));
  CHECK(compose_affine(q, Scalar(1, 2), Scalar(-3, 2)) == p);
}

TEST_CASE("zero polynomial invariants") {
  DensePolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(poly({Scalar(0), Scalar(0)}).is_zero());
  CHECK(poly({Scalar(1), Scalar(0)}).degree() == 0);
  CHECK_THROWS_AS(z.leading(), Error);
}

TEST_CASE("derivative") {
  DensePolynomial p = poly({Scalar(7), Scalar(0), Scalar(3), Scalar(1)});  // x^3+3x^2+7
  CHECK(derivative(p) == poly({Scalar(0), Scalar(6), Scalar(3)}));
  CHECK(derivative(DensePolynomial::constant(Scalar(5))).is_zero());
}

TEST_CASE("json coefficient round trip") {
  DensePolynomial p = poly({Scalar(0), Scalar(1, 6), Scalar(BigFloat::from_double(0.5, 64))});
  DensePolynomial back = polynomial_from_json_strings(to_json_strings(p));
  CHECK(back == p);
  CHECK(back.coeff(1).is_rational());
  CHECK_FALSE(back.coeff(2).is_rational());
}

TEST_CASE("convolution generator: frozen low-degree values") {
  auto id = ArithmeticFunctionSpec::identity();
  auto fam = generate_convolution(id, id, 3);
  CHECK(fam.P(0) == DensePolynomial::constant(Scalar(1)));
  CHECK(fam.P(1) == DensePolynomial::x());
  // P_2 = x(x+2)/h(2)
  CHECK(fam.P(2) == poly({Scalar(0), Scalar(1), Scalar(1, 2)}));
  // Hand-unrolled: P_3 = (x/3)(P_2 + 2 P_1 + 3 P_0) = x^3/6 + x^2 + x.
  CHECK(fam.P(3) == poly({Scalar(0), Scalar(1), Scalar(1), Scalar(1, 6)}));
}

TEST_CASE("three-term generator: frozen low-degree values") {
  auto fam = generate_three_term(ArithmeticFunctionSpec::identity(), 3);
  CHECK(fam.P(3) == poly({Scalar(0), Scalar(1), Scalar(1), Scalar(1, 6)}));

  auto fam1 = generate_three_term(ArithmeticFunctionSpec::one(), 3);
  // P_3 = x((x+2)^2 - 1) = x^3 + 4x^2 + 3x.
  CHECK(fam1.P(3) == poly({Scalar(0), Scalar(3), Scalar(4), Scalar(1)}));
  CHECK(fam1.P(1) == DensePolynomial::x());
}

TEST_CASE("generator equivalence: convolution vs three-term") {
  auto id = ArithmeticFunctionSpec::identity();
  for (auto spec : {ArithmeticFunctionSpec::one(), ArithmeticFunctionSpec::identity()}) {
    auto conv = generate_convolution(id, spec, 40);
    auto three = generate_three_term(spec, 40);
    for (long n = 0; n <= 40; ++n) CHECK(conv.P(n) == three.P(n));  // exact backend
  }
  auto half = ArithmeticFunctionSpec::power(Scalar(1, 2));
  auto conv = generate_convolution(id, half, 40);
  auto three = generate_three_term(half, 40);
  Scalar tol(BigFloat::from_long(1).mul_2si(16 - static_cast<long>(default_precision())));
  for (long n = 0; n <= 40; ++n) CHECK(approx_equal(conv.P(n), three.P(n), tol));
}

TEST_CASE("family invariants: degree, x-divisibility, nonnegative coefficients, leading") {
  for (auto spec : {ArithmeticFunctionSpec::one(), ArithmeticFunctionSpec::identity(),
                    ArithmeticFunctionSpec::power(Scalar(1, 2))}) {
    auto fam = generate_three_term(spec, 25);
    Scalar prod(1);  // prod_{k=2..n} h(k)
    for (long n = 1; n <= 25; ++n) {
      const DensePolynomial& p = fam.P(n);
      CHECK(p.degree() == n);
      CHECK(p.coeff(0).is_zero());
      for (long k = 0; k <= n; ++k) CHECK(p.coeff(k).sign() >= 0);
      if (n >= 2) prod *= spec.eval(n);
      Scalar expect_lc = Scalar(1) / prod;
      Scalar diff = (p.leading() - expect_lc).abs();
      Scalar bound = expect_lc * Scalar(BigFloat::from_long(1).mul_2si(-100));
      CHECK(diff <= bound);
    }
  }
}

TEST_CASE("sigma generation demo (Nekrasov-Okounkov style)") {
  auto fam = generate_convolution(ArithmeticFunctionSpec::sigma(),
                                  ArithmeticFunctionSpec::identity(), 8);
  // P_2 = (x/2)(sigma(1) P_1 + sigma(2) P_0) = (x/2)(x + 3).
  CHECK(fam.P(2) == poly({Scalar(0), Scalar(3, 2), Scalar(1, 2)}));
  for (long n = 1; n <= 8; ++n) {
    CHECK(fam.P(n).degree() == n);
    CHECK(fam.P(n).coeff(0).is_zero());
  }
}

TEST_CASE("generators reject vanishing h and bad N") {
  CHECK_THROWS_AS(generate_three_term(ArithmeticFunctionSpec::one(), 0), Error);
  CHECK_THROWS_AS(generate_convolution(ArithmeticFunctionSpec::identity(),
                                       ArithmeticFunctionSpec::table({Rational(1)}), 2),
                  Error);
}

TEST_CASE("approx_equal tolerance semantics") {
  DensePolynomial a = poly({Scalar(0), Scalar(BigFloat::from_double(1.0, 64))});
  DensePolynomial b = poly({Scalar(0), Scalar(BigFloat::from_double(1.0 + 1e-12, 64))});
  CHECK(approx_equal(a, b, Scalar(BigFloat::from_double(1e-9, 64))));
  CHECK_FALSE(approx_equal(a, b, Scalar(BigFloat::from_double(1e-15, 64))));
  // Exact path: rational polynomials compare exactly regardless of tol.
  CHECK_FALSE(approx_equal(poly({Scalar(1)}), poly({Scalar(1), Scalar(1, 1000000)}), Scalar(1)));
}
