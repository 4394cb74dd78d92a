#include "turanpoly/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <utility>

namespace turanpoly {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse_error: return "parse_error";
    case Errc::out_of_table: return "out_of_table";
    case Errc::not_normalized: return "not_normalized";
    case Errc::non_log_concave: return "non_log_concave";
    case Errc::negative_discriminant: return "negative_discriminant";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::unsupported_g: return "unsupported_g";
    case Errc::family_mismatch: return "family_mismatch";
    case Errc::non_squarefree: return "non_squarefree";
    case Errc::bracket_collision: return "bracket_collision";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

namespace {
std::atomic<mpfr_prec_t> g_default_prec{128};
}

mpfr_prec_t default_precision() { return g_default_prec.load(); }

void set_default_precision(mpfr_prec_t bits) {
  if (bits < 53) throw Error(Errc::invalid_argument, "precision must be at least 53 bits");
  g_default_prec.store(bits);
}

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.prec());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(const std::string& s, mpfr_prec_t prec) {
  BigFloat r(prec);
  if (s.empty() || mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw Error(Errc::parse_error, "invalid decimal literal: '" + s + "'");
  return r;
}

Rational BigFloat::to_rational() const {
  if (is_zero()) return Rational(0);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw Error(Errc::invalid_argument, "sqrt of negative value");
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::mul_2si(long k) const {
  BigFloat r(prec());
  mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::round_to(mpfr_prec_t prec) const {
  BigFloat r(prec);
  mpfr_set(r.raw(), v_, MPFR_RNDN);
  return r;
}

namespace {
using mpfr_binary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat binary(const BigFloat& a, const BigFloat& b, mpfr_binary_fn fn) {
  BigFloat r(std::max(a.prec(), b.prec()));
  fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "BigFloat division by zero");
  return binary(a, b, mpfr_div);
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// Correctly rounded composites (Ziv loop)

namespace {

// compute(value, working_prec) must fill `value` with relative error at most
// 2^(slack_bits - working_prec). Rounds the result correctly to `prec`.
template <typename Compute>
BigFloat ziv_round(mpfr_prec_t prec, int slack_bits, Compute compute) {
  mpfr_prec_t wp = prec + 32;
  BigFloat result(prec);
  for (;;) {
    mpfr_t t;
    mpfr_init2(t, wp);
    compute(t, wp);
    bool exact = mpfr_zero_p(t) != 0;
    bool ok = exact || mpfr_can_round(t, wp - slack_bits, MPFR_RNDN, MPFR_RNDN, prec) != 0;
    if (ok || wp > prec + 4096) {
      mpfr_set(result.raw(), t, MPFR_RNDN);
      mpfr_clear(t);
      return result;
    }
    mpfr_clear(t);
    wp = wp * 2;
  }
}

}  // namespace

BigFloat sqrt_rational(const Rational& q, mpfr_prec_t prec) {
  if (sgn(q) < 0) throw Error(Errc::invalid_argument, "sqrt of negative rational");
  return ziv_round(prec, 3, [&](mpfr_ptr t, mpfr_prec_t) {
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
  });
}

BigFloat pow_rational(unsigned long base, const mpz_class& num, const mpz_class& den,
                      mpfr_prec_t prec) {
  if (base == 0) throw Error(Errc::invalid_argument, "pow_rational: base must be positive");
  if (!num.fits_slong_p() || !den.fits_ulong_p())
    throw Error(Errc::invalid_argument, "pow_rational: exponent out of range");
  long p = num.get_si();
  unsigned long qden = den.get_ui();
  if (qden == 0) throw Error(Errc::invalid_argument, "pow_rational: zero denominator");
  int slack = 2;
  for (unsigned long m = std::labs(p) + 2; m > 1; m >>= 1) ++slack;
  return ziv_round(prec, slack, [&](mpfr_ptr t, mpfr_prec_t) {
    mpfr_set_ui(t, base, MPFR_RNDN);
    mpfr_rootn_ui(t, t, qden, MPFR_RNDN);
    mpfr_pow_si(t, t, p, MPFR_RNDN);
  });
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long num, long den) : v_(Rational(num, den)) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  std::get<Rational>(v_).canonicalize();
}

Scalar::Scalar(Rational q) : v_(std::move(q)) { std::get<Rational>(v_).canonicalize(); }

const Rational& Scalar::rational() const { return std::get<Rational>(v_); }
const BigFloat& Scalar::bigfloat() const { return std::get<BigFloat>(v_); }

BigFloat Scalar::to_bigfloat(mpfr_prec_t prec) const {
  if (is_rational()) return BigFloat::from_rational(rational(), prec);
  return bigfloat().round_to(prec);
}

double Scalar::to_double() const {
  return is_rational() ? rational().get_d() : bigfloat().to_double();
}

int Scalar::sign() const { return is_rational() ? sgn(rational()) : bigfloat().sign(); }

Scalar Scalar::abs() const {
  if (is_rational()) return Scalar(Rational(::abs(rational())));
  return Scalar(bigfloat().abs());
}

Scalar Scalar::sqrt() const {
  if (sign() < 0) throw Error(Errc::invalid_argument, "sqrt of negative scalar");
  if (!is_rational()) return Scalar(bigfloat().sqrt());
  const Rational& q = rational();
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Scalar(Rational(rn, rd));
  }
  return Scalar(sqrt_rational(q, default_precision()));
}

namespace {

// Promotes the rational side to the float side's precision, then applies fn.
template <typename QQ>
Scalar scalar_binary(const Scalar& a, const Scalar& b, QQ qq, mpfr_binary_fn fn) {
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(qq(a.rational(), b.rational())));
  mpfr_prec_t prec = 0;
  if (!a.is_rational()) prec = std::max(prec, a.bigfloat().prec());
  if (!b.is_rational()) prec = std::max(prec, b.bigfloat().prec());
  BigFloat fa = a.to_bigfloat(prec);
  BigFloat fb = b.to_bigfloat(prec);
  BigFloat r(prec);
  fn(r.raw(), fa.raw(), fb.raw(), MPFR_RNDN);
  return Scalar(std::move(r));
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  *this = scalar_binary(*this, o, [](const Rational& x, const Rational& y) { return x + y; },
                        mpfr_add);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  *this = scalar_binary(*this, o, [](const Rational& x, const Rational& y) { return x - y; },
                        mpfr_sub);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = scalar_binary(*this, o, [](const Rational& x, const Rational& y) { return x * y; },
                        mpfr_mul);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(Errc::division_by_zero, "scalar division by zero");
  *this = scalar_binary(*this, o, [](const Rational& x, const Rational& y) { return x / y; },
                        mpfr_div);
  return *this;
}

Scalar operator-(const Scalar& a) {
  if (a.is_rational()) return Scalar(Rational(-a.rational()));
  return Scalar(-a.bigfloat());
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return ::cmp(a.rational(), b.rational());
  if (!a.is_rational() && !b.is_rational()) return mpfr_cmp(a.bigfloat().raw(), b.bigfloat().raw());
  if (a.is_rational()) return -mpfr_cmp_q(b.bigfloat().raw(), a.rational().get_mpq_t());
  return mpfr_cmp_q(a.bigfloat().raw(), b.rational().get_mpq_t());
}

// ---------------------------------------------------------------------------
// Formatting and parsing

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

// mpfr digit string -> "d.ddd" / plain / scientific; deterministic rules.
std::string format_digits(bool negative, std::string digits, mpfr_exp_t exp10) {
  // value = +/- 0.digits * 10^exp10
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out;
  if (negative) out += '-';
  long e = static_cast<long>(exp10);
  if (e >= -2 && e <= 18) {
    if (e <= 0) {
      out += "0.";
      out.append(static_cast<size_t>(-e), '0');
      out += digits;
    } else if (static_cast<size_t>(e) >= digits.size()) {
      out += digits;
      out.append(static_cast<size_t>(e) - digits.size(), '0');
      out += ".0";
    } else {
      out += digits.substr(0, static_cast<size_t>(e));
      out += '.';
      out += digits.substr(static_cast<size_t>(e));
    }
  } else {
    out += digits.substr(0, 1);
    out += '.';
    out += digits.size() > 1 ? digits.substr(1) : "0";
    out += 'e';
    out += std::to_string(e - 1);
  }
  return out;
}

std::string bigfloat_format(const BigFloat& v, size_t ndigits) {
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, ndigits, v.raw(), MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  return format_digits(neg, digits, e);
}

}  // namespace

std::string BigFloat::to_string() const {
  if (is_zero()) return sign() < 0 ? "-0.0" : "0.0";
  size_t max_digits = mpfr_get_str_ndigits(10, prec());
  for (size_t d = 2; d < max_digits; ++d) {
    std::string s = bigfloat_format(*this, d);
    BigFloat back(prec());
    if (mpfr_set_str(back.raw(), s.c_str(), 10, MPFR_RNDN) == 0 && back == *this) return s;
  }
  return bigfloat_format(*this, max_digits);
}

std::string Scalar::to_json_string() const {
  if (is_rational()) {
    std::string s = rational().get_str();
    if (s.find('/') == std::string::npos) s += "/1";
    return s;
  }
  return bigfloat().to_string();
}

std::string Scalar::to_csv_string() const {
  if (!is_rational()) return bigfloat().to_string();
  const Rational& q = rational();
  mpz_class den = q.get_den();
  unsigned long a = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long b = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return to_bigfloat().to_string();  // non-terminating decimal
  unsigned long k = std::max(a, b);
  mpz_class scaled = q.get_num();
  mpz_class pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), 2, k - a);
  scaled *= pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), 5, k - b);
  scaled *= pow;
  bool neg = scaled < 0;
  std::string digits = mpz_class(::abs(scaled)).get_str();
  if (k == 0) return (neg ? "-" : "") + digits;
  if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (neg ? "-" : "") + digits;
}

Scalar Scalar::parse(const std::string& s) {
  if (s.find('/') != std::string::npos) return Scalar(parse_rational(s));
  if (s.find_first_of(".eE") != std::string::npos) return Scalar(BigFloat::parse(s));
  return Scalar(parse_rational(s));
}

Rational parse_rational(const std::string& input) {
  std::string s = input;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error(Errc::parse_error, "empty number");
  try {
    if (s.find('/') != std::string::npos) {
      Rational q;
      if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error(Errc::parse_error, "invalid rational: '" + input + "'");
      if (q.get_den() == 0) throw Error(Errc::division_by_zero, "zero denominator: '" + input + "'");
      q.canonicalize();
      return q;
    }
    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    long exp10 = 0;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        seen_digit = true;
        if (seen_dot) ++frac_digits;
      } else if (c == '.' && !seen_dot) {
        seen_dot = true;
      } else if ((c == 'e' || c == 'E') && seen_digit) {
        exp10 = std::stol(s.substr(i + 1));
        i = s.size() - 1;
      } else {
        throw Error(Errc::parse_error, "invalid number: '" + input + "'");
      }
    }
    if (!seen_digit) throw Error(Errc::parse_error, "invalid number: '" + input + "'");
    mpz_class num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    long e = exp10 - frac_digits;
    mpz_class pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
    Rational q = e >= 0 ? Rational(num * pow) : Rational(num, pow);
    q.canonicalize();
    return q;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "invalid number: '" + input + "'");
  }
}

SignClass classify_sign(const Scalar& value, const Scalar& scale) {
  if (value.is_rational()) {
    int s = value.sign();
    return s < 0 ? SignClass::negative : (s > 0 ? SignClass::positive : SignClass::zero_within_tol);
  }
  const BigFloat& v = value.bigfloat();
  BigFloat band = scale.abs().to_bigfloat(v.prec()).mul_2si(10 - static_cast<long>(v.prec()));
  if (v.abs() <= band) return SignClass::zero_within_tol;
  return v.sign() < 0 ? SignClass::negative : SignClass::positive;
}

}  // namespace turanpoly
