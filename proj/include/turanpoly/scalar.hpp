#ifndef TURANPOLY_SCALAR_HPP
#define TURANPOLY_SCALAR_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <variant>

#include "turanpoly/errors.hpp"

namespace turanpoly {

using Rational = mpq_class;

// Default precision (bits) for BigFloats created without an explicit
// precision. Minimum 53. Set once at startup by the CLI; library code only
// reads it.
mpfr_prec_t default_precision();
void set_default_precision(mpfr_prec_t bits);

// Arbitrary-precision binary float. Each value carries its own precision;
// binary operations produce results at the wider of the two operand
// precisions, rounded to nearest.
class BigFloat {
 public:
  BigFloat();  // zero at default_precision()
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_long(long v, mpfr_prec_t prec = default_precision());
  static BigFloat from_double(double v, mpfr_prec_t prec = default_precision());
  static BigFloat from_rational(const Rational& q, mpfr_prec_t prec = default_precision());
  // Accepts decimal forms ("1.5", "-3e-2", "0.25e10"); throws Errc::parse_error.
  static BigFloat parse(const std::string& s, mpfr_prec_t prec = default_precision());

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exact conversion: every finite BigFloat is mantissa * 2^exp.
  Rational to_rational() const;

  BigFloat abs() const;
  BigFloat sqrt() const;  // throws Errc::invalid_argument on negative input
  // Value scaled by 2^k (exact).
  BigFloat mul_2si(long k) const;
  BigFloat round_to(mpfr_prec_t prec) const;

  // Direct access for module internals and tests.
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Shortest decimal string that reparses (at this value's precision) to the
  // same value. Always contains '.' or 'e' so the kind survives a round trip.
  std::string to_string() const;

 private:
  mpfr_t v_;
};

// Correctly rounded sqrt(q) for nonnegative rational q (Ziv loop on MPFR).
BigFloat sqrt_rational(const Rational& q, mpfr_prec_t prec);
// Correctly rounded base^(num/den) for base >= 1, den >= 1 (Ziv loop).
BigFloat pow_rational(unsigned long base, const mpz_class& num, const mpz_class& den,
                      mpfr_prec_t prec);

// Tagged exact/approximate scalar. Arithmetic between two Rationals is
// exact; mixing promotes the rational side to the float side's precision.
class Scalar {
 public:
  enum class Kind { Rational, BigFloat };

  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(long num, long den);
  Scalar(Rational q);
  Scalar(BigFloat f) : v_(std::move(f)) {}

  Kind kind() const {
    return std::holds_alternative<Rational>(v_) ? Kind::Rational : Kind::BigFloat;
  }
  bool is_rational() const { return kind() == Kind::Rational; }
  const Rational& rational() const;  // pre: is_rational()
  const BigFloat& bigfloat() const;  // pre: !is_rational()

  BigFloat to_bigfloat(mpfr_prec_t prec = default_precision()) const;
  double to_double() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar abs() const;
  // Exact when the operand is a rational perfect square; otherwise a
  // correctly rounded BigFloat at default_precision() (or the operand's own
  // precision for BigFloat input).
  Scalar sqrt() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  // Exact cross-kind comparisons (no rounding of the rational side).
  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  static int cmp(const Scalar& a, const Scalar& b);

  // Kind-preserving serialization: rationals as "p/q" (slash always
  // present), BigFloats as decimal with '.' or 'e'.
  std::string to_json_string() const;
  // Plot-friendly decimal: exact for terminating rationals, round-trip
  // decimal of the BigFloat value otherwise.
  std::string to_csv_string() const;
  // Inverse of to_json_string plus bare integers ("5" -> rational 5).
  static Scalar parse(const std::string& s);

 private:
  std::variant<Rational, BigFloat> v_;
};

// Exact rational from "p/q", integer, or decimal/exponent literals
// ("0.5" -> 1/2, "1e-12" -> 1/10^12). Throws Errc::parse_error.
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& q);  // "p" or "p/q"

// Sign classification with the zero band |v| <= 2^(10 - prec) * scale for
// BigFloat values; exact sign for rationals.
enum class SignClass { negative = -1, zero_within_tol = 0, positive = 1 };
SignClass classify_sign(const Scalar& value, const Scalar& scale);

}  // namespace turanpoly

#endif
