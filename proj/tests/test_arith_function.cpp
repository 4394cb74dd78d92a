#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "turanpoly/arith_function.hpp"

using namespace turanpoly;

namespace {

// Independent oracle: divisor sum by direct enumeration.
long sigma_oracle(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

}  // namespace

TEST_CASE("eval basics") {
  CHECK(ArithmeticFunctionSpec::identity().eval(5) == Scalar(5));
  CHECK(ArithmeticFunctionSpec::one().eval(17) == Scalar(1));
  CHECK(ArithmeticFunctionSpec::identity().eval(0) == Scalar(0));
  CHECK(ArithmeticFunctionSpec::one().eval(0) == Scalar(0));
  CHECK_THROWS_AS(ArithmeticFunctionSpec::identity().eval(-1), Error);
}

TEST_CASE("power eval: exact where rational-representable, else correctly rounded") {
  auto h = ArithmeticFunctionSpec::power(Scalar(1, 2));
  Scalar v = h.eval(4);
  REQUIRE(v.is_rational());
  CHECK(v == Scalar(2));
  CHECK(h.eval(9) == Scalar(3));
  CHECK(h.eval(1) == Scalar(1));

  Scalar irr = h.eval(2);
  REQUIRE_FALSE(irr.is_rational());
  BigFloat expect = sqrt_rational(Rational(2), default_precision());
  CHECK(irr.bigfloat() == expect);

  // s = 3/10: n^(3/10) rational iff n is a perfect 10th power.
  auto h3 = ArithmeticFunctionSpec::power(Scalar(3, 10));
  CHECK(h3.eval(1024) == Scalar(8));
  CHECK_FALSE(h3.eval(2).is_rational());

  // s beyond [0,1].
  auto h2 = ArithmeticFunctionSpec::power(Scalar(2));
  CHECK(h2.eval(7) == Scalar(49));
}

TEST_CASE("power agrees with one at s=0 and id at s=1, exactly") {
  auto p0 = ArithmeticFunctionSpec::power(Scalar(0));
  auto p1 = ArithmeticFunctionSpec::power(Scalar(1));
  for (long n = 1; n <= 50; ++n) {
    CHECK(p0.eval(n) == ArithmeticFunctionSpec::one().eval(n));
    CHECK(p1.eval(n) == ArithmeticFunctionSpec::identity().eval(n));
    CHECK(p0.eval(n).is_rational());
    CHECK(p1.eval(n).is_rational());
  }
}

TEST_CASE("power eval is monotone nondecreasing in n for s >= 0") {
  for (const char* s : {"0", "1/4", "0.37", "1", "3/2"}) {
    auto h = ArithmeticFunctionSpec::power(Scalar(parse_rational(s)));
    Scalar prev = h.eval(1);
    for (long n = 2; n <= 40; ++n) {
      Scalar cur = h.eval(n);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("sigma matches brute-force divisor enumeration") {
  auto h = ArithmeticFunctionSpec::sigma();
  CHECK(h.eval(6) == Scalar(12));  // divisors 1,2,3,6
  for (long n = 1; n <= 200; ++n) CHECK(h.eval(n) == Scalar(sigma_oracle(n)));
}

TEST_CASE("alternating sign values") {
  auto h = ArithmeticFunctionSpec::alternating_sign();
  CHECK(h.eval(1) == Scalar(1));
  CHECK(h.eval(2) == Scalar(-1));
  CHECK(h.eval(3) == Scalar(1));
  CHECK(h.is_normalized());
}

TEST_CASE("table spec: bounds, positivity, parsing") {
  CHECK_THROWS_AS(ArithmeticFunctionSpec::table({Rational(1), Rational(-2)}), Error);
  auto t = ArithmeticFunctionSpec::table({Rational(1), Rational(3), Rational(4)});
  CHECK(t.eval(2) == Scalar(3));
  CHECK(t.eval(0) == Scalar(0));
  CHECK_THROWS_AS(t.eval(4), Error);

  std::string path = "test_table_tmp.csv";
  {
    std::ofstream out(path);
    out << "1\n3/2\n# comment\n2.5\n";
  }
  auto parsed = ArithmeticFunctionSpec::parse("table:" + path);
  CHECK(parsed.eval(1) == Scalar(1));
  CHECK(parsed.eval(2) == Scalar(3, 2));
  CHECK(parsed.eval(3) == Scalar(5, 2));
  std::remove(path.c_str());
}

TEST_CASE("spec string parsing round trip") {
  for (const char* s : {"one", "id", "sigma", "altsign", "power:1/2"}) {
    auto spec = ArithmeticFunctionSpec::parse(s);
    CHECK(spec.to_string() == s);
    CHECK(spec == ArithmeticFunctionSpec::parse(spec.to_string()));
  }
  CHECK(ArithmeticFunctionSpec::parse("power:0.5") ==
        ArithmeticFunctionSpec::power(Scalar(1, 2)));
  CHECK_THROWS_AS(ArithmeticFunctionSpec::parse("nope"), Error);
}

TEST_CASE("delta_h values") {
  auto id = ArithmeticFunctionSpec::identity();
  for (long n = 1; n <= 30; ++n) CHECK(delta_h(id, n) == Scalar(1));

  auto one = ArithmeticFunctionSpec::one();
  CHECK(delta_h(one, 3) == Scalar(0));
  CHECK(delta_h(one, 1) == Scalar(1));  // h(0) = 0 extension

  // Oracle: 2 - sqrt(3) computed directly.
  auto h = ArithmeticFunctionSpec::power(Scalar(1, 2));
  Scalar d2 = delta_h(h, 2);
  BigFloat expect = BigFloat::from_long(2) - sqrt_rational(Rational(3), default_precision());
  CHECK((d2 - Scalar(expect)).abs() < Scalar(BigFloat::from_long(1).mul_2si(-100)));
  CHECK(d2.to_double() == doctest::Approx(0.26795).epsilon(1e-4));
}

TEST_CASE("x_ratio values") {
  auto id = ArithmeticFunctionSpec::identity();
  CHECK(x_ratio(id, 3) == Scalar(8, 9));  // (2*4)/3^2
  CHECK(x_ratio(id, 1) == Scalar(0));
  auto one = ArithmeticFunctionSpec::one();
  for (long n = 2; n <= 20; ++n) CHECK(x_ratio(one, n) == Scalar(1));
}

TEST_CASE("d_criterion: zero for constant h, negative for s=1/2") {
  auto one = ArithmeticFunctionSpec::one();
  for (long n = 2; n <= 20; ++n) CHECK(d_criterion(one, n) == Scalar(0));

  auto h = ArithmeticFunctionSpec::power(Scalar(1, 2));
  Scalar d = d_criterion(h, 2);
  CHECK(d.sign() < 0);
  // Direct recomputation at higher precision as oracle for the magnitude.
  CHECK(d.to_double() == doctest::Approx(-0.04876).epsilon(1e-3));
}

TEST_CASE("d_criterion for s=1 is exactly zero for n >= 2") {
  auto id = ArithmeticFunctionSpec::identity();
  for (long n = 2; n <= 20; ++n) {
    Scalar d = d_criterion(id, n);
    REQUIRE(d.is_rational());  // 1 - X(n) = 1/n^2 is a perfect square
    CHECK(d == Scalar(0));
  }
}

TEST_CASE("d_criterion rejects non-log-concave h") {
  // h = (1, 1, 10): Delta_h(2) = 1 - 10 < 0, so X(2) > 1.
  auto bad = ArithmeticFunctionSpec::table({Rational(1), Rational(1), Rational(10), Rational(10)});
  CHECK_THROWS_AS(d_criterion(bad, 1), Error);
}

TEST_CASE("X in (0,1) and Delta >= 0 for the h_s family") {
  for (const char* s : {"1/4", "1/2", "3/4", "1"}) {
    auto h = ArithmeticFunctionSpec::power(Scalar(parse_rational(s)));
    for (long n = 2; n <= 25; ++n) {
      Scalar x = x_ratio(h, n);
      CHECK(x.sign() > 0);
      CHECK(x < Scalar(1));
      CHECK(delta_h(h, n).sign() > 0);
    }
  }
  // s = 0: X = 1 and Delta = 0 from n = 2 on.
  auto h0 = ArithmeticFunctionSpec::power(Scalar(0));
  for (long n = 2; n <= 25; ++n) {
    CHECK(x_ratio(h0, n) == Scalar(1));
    CHECK(delta_h(h0, n) == Scalar(0));
  }
}

TEST_CASE("lemma side conditions") {
  // Identity: all three hold for every n (cube condition is n^2 + n >= 1).
  auto rep = lemma_side_conditions(ArithmeticFunctionSpec::identity(), 10);
  CHECK(rep.all_hold);
  REQUIRE(rep.rows.size() == 10);

  CHECK(lemma_side_conditions(ArithmeticFunctionSpec::one(), 10).all_hold);

  // Table (1,3,4): monotone holds at n=1, Delta decreasing fails
  // (Delta(1) = 1 < Delta(2) = 9 - 4 = 5), cube fails (27 - 16 > 0).
  auto t = ArithmeticFunctionSpec::table({Rational(1), Rational(3), Rational(4)});
  auto rep2 = lemma_side_conditions(t, 1);
  REQUIRE(rep2.rows.size() == 1);
  CHECK(rep2.rows[0].monotone_ge_one);
  CHECK_FALSE(rep2.rows[0].delta_decreasing_nonneg);
  CHECK_FALSE(rep2.rows[0].cube_condition);
  CHECK_FALSE(rep2.all_hold);
}

TEST_CASE("eval_range promotes to a uniform backend") {
  auto r1 = eval_range(ArithmeticFunctionSpec::identity(), 10);
  CHECK(r1.all_rational);
  CHECK(r1.at(0) == Scalar(0));
  CHECK(r1.at(7) == Scalar(7));

  auto r2 = eval_range(ArithmeticFunctionSpec::power(Scalar(1, 2)), 10);
  CHECK_FALSE(r2.all_rational);
  for (const Scalar& v : r2.v) CHECK_FALSE(v.is_rational());
  CHECK(r2.at(4) == Scalar(2));  // exact value survives promotion
}
