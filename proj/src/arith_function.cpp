#include "turanpoly/arith_function.hpp"

#include <fstream>
#include <sstream>

namespace turanpoly {

ArithmeticFunctionSpec ArithmeticFunctionSpec::power(Scalar exponent) {
  ArithmeticFunctionSpec s(ArithKind::PowerS);
  s.exponent_ = std::move(exponent);
  return s;
}

ArithmeticFunctionSpec ArithmeticFunctionSpec::one() {
  return ArithmeticFunctionSpec(ArithKind::ConstantOne);
}

ArithmeticFunctionSpec ArithmeticFunctionSpec::identity() {
  return ArithmeticFunctionSpec(ArithKind::Identity);
}

ArithmeticFunctionSpec ArithmeticFunctionSpec::sigma() {
  return ArithmeticFunctionSpec(ArithKind::SigmaDivisorSum);
}

ArithmeticFunctionSpec ArithmeticFunctionSpec::table(std::vector<Rational> values,
                                                     std::string origin) {
  for (const Rational& v : values)
    if (sgn(v) <= 0)
      throw Error(Errc::invalid_argument, "table values must be positive rationals");
  ArithmeticFunctionSpec s(ArithKind::Table);
  s.table_ = std::move(values);
  s.origin_ = std::move(origin);
  return s;
}

ArithmeticFunctionSpec ArithmeticFunctionSpec::alternating_sign() {
  return ArithmeticFunctionSpec(ArithKind::AlternatingSign);
}

ArithmeticFunctionSpec ArithmeticFunctionSpec::parse(const std::string& spec) {
  if (spec == "one") return one();
  if (spec == "id") return identity();
  if (spec == "sigma") return sigma();
  if (spec == "altsign") return alternating_sign();
  if (spec.rfind("power:", 0) == 0) return power(Scalar(parse_rational(spec.substr(6))));
  if (spec.rfind("table:", 0) == 0) {
    std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open table file: " + path);
    std::vector<Rational> values;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      values.push_back(parse_rational(line));
    }
    if (values.empty()) throw Error(Errc::parse_error, "empty table file: " + path);
    return table(std::move(values), path);
  }
  throw Error(Errc::parse_error, "unknown arithmetic function spec: '" + spec + "'");
}

std::string ArithmeticFunctionSpec::to_string() const {
  switch (kind_) {
    case ArithKind::PowerS:
      return "power:" + (exponent_.is_rational() ? rational_to_string(exponent_.rational())
                                                 : exponent_.bigfloat().to_string());
    case ArithKind::ConstantOne: return "one";
    case ArithKind::Identity: return "id";
    case ArithKind::SigmaDivisorSum: return "sigma";
    case ArithKind::Table: return "table:" + origin_;
    case ArithKind::AlternatingSign: return "altsign";
  }
  return "?";
}

bool ArithmeticFunctionSpec::operator==(const ArithmeticFunctionSpec& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == ArithKind::PowerS) return exponent_ == other.exponent_;
  if (kind_ == ArithKind::Table) return table_ == other.table_;
  return true;
}

namespace {

Rational sigma_divisor_sum(long n) {
  Rational total(0);
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += d;
    if (d != n / d) total += n / d;
  }
  return total;
}

Scalar power_eval(const Scalar& s, long n) {
  if (n == 1) return Scalar(1);
  if (s.is_rational()) {
    const Rational& e = s.rational();
    if (e == 0) return Scalar(1);
    if (e == 1) return Scalar(n);
    // n^(p/q) is rational iff n is a perfect q-th power.
    const mpz_class& p = e.get_num();
    const mpz_class& q = e.get_den();
    if (q.fits_ulong_p()) {
      mpz_class root;
      int exact = mpz_root(root.get_mpz_t(), mpz_class(n).get_mpz_t(), q.get_ui());
      if (exact && p.fits_slong_p()) {
        long pe = p.get_si();
        mpz_class num;
        mpz_pow_ui(num.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(std::labs(pe)));
        return pe >= 0 ? Scalar(Rational(num)) : Scalar(Rational(1, num));
      }
    }
    return Scalar(pow_rational(static_cast<unsigned long>(n), e.get_num(), e.get_den(),
                               default_precision()));
  }
  // Float exponent: mpfr_pow is correctly rounded for the given inputs.
  mpfr_prec_t prec = std::max(default_precision(), s.bigfloat().prec());
  BigFloat r(prec);
  BigFloat base = BigFloat::from_long(n, prec);
  mpfr_pow(r.raw(), base.raw(), s.bigfloat().raw(), MPFR_RNDN);
  return Scalar(std::move(r));
}

}  // namespace

Scalar ArithmeticFunctionSpec::eval(long n) const {
  if (n < 0) throw Error(Errc::invalid_argument, "arithmetic function position must be >= 0");
  if (n == 0) return Scalar(0);
  switch (kind_) {
    case ArithKind::PowerS: return power_eval(exponent_, n);
    case ArithKind::ConstantOne: return Scalar(1);
    case ArithKind::Identity: return Scalar(n);
    case ArithKind::SigmaDivisorSum: return Scalar(sigma_divisor_sum(n));
    case ArithKind::Table:
      if (static_cast<size_t>(n) > table_.size())
        throw Error(Errc::out_of_table, "table index " + std::to_string(n) + " exceeds length " +
                                            std::to_string(table_.size()));
      return Scalar(table_[static_cast<size_t>(n - 1)]);
    case ArithKind::AlternatingSign: return Scalar(n % 2 == 1 ? 1 : -1);
  }
  throw Error(Errc::invalid_argument, "unreachable");
}

bool ArithmeticFunctionSpec::is_normalized() const { return eval(1) == Scalar(1); }

void require_normalized(const ArithmeticFunctionSpec& h) {
  if (!h.is_normalized())
    throw Error(Errc::not_normalized, "h must be normalized (h(1) = 1): " + h.to_string());
}

CachedValues eval_range(const ArithmeticFunctionSpec& spec, long n_max) {
  CachedValues out;
  out.v.reserve(static_cast<size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    out.v.push_back(spec.eval(n));
    if (!out.v.back().is_rational()) out.all_rational = false;
  }
  if (!out.all_rational)
    for (Scalar& s : out.v)
      if (s.is_rational()) s = Scalar(s.to_bigfloat(default_precision()));
  return out;
}

Scalar delta_h(const ArithmeticFunctionSpec& h, long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "delta_h requires n >= 1");
  Scalar hn = h.eval(n);
  return hn * hn - h.eval(n - 1) * h.eval(n + 1);
}

Scalar x_ratio(const ArithmeticFunctionSpec& h, long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "x_ratio requires n >= 1");
  if (n == 1) return Scalar(0);  // h(0) = 0
  Scalar hn = h.eval(n);
  return h.eval(n - 1) * h.eval(n + 1) / (hn * hn);
}

namespace {

// sqrt(1 - X(n)); negative radicand beyond the zero band means h is not
// log-concave at n.
Scalar sqrt_one_minus_x(const ArithmeticFunctionSpec& h, long n) {
  Scalar radicand = Scalar(1) - x_ratio(h, n);
  SignClass sc = classify_sign(radicand, Scalar(1));
  if (sc == SignClass::negative)
    throw Error(Errc::non_log_concave,
                "1 - X(" + std::to_string(n) + ") is negative: h is not log-concave");
  if (radicand.sign() < 0) return Scalar(BigFloat(radicand.bigfloat().prec()));  // clamp band noise to 0
  return radicand.sqrt();
}

}  // namespace

Scalar d_criterion(const ArithmeticFunctionSpec& h, long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "d_criterion requires n >= 1");
  Scalar xn1 = x_ratio(h, n + 1);
  return Scalar(1) + sqrt_one_minus_x(h, n + 1) -
         xn1 * (Scalar(1) + sqrt_one_minus_x(h, n));
}

LemmaReport lemma_side_conditions(const ArithmeticFunctionSpec& h, long n_max) {
  if (n_max < 1) throw Error(Errc::invalid_argument, "lemma_side_conditions requires n_max >= 1");
  LemmaReport report;
  Scalar one(1);
  for (long n = 1; n <= n_max; ++n) {
    LemmaConditionRow row;
    row.n = n;
    Scalar hn = h.eval(n), hn1 = h.eval(n + 1), hn2 = h.eval(n + 2);
    row.monotone_ge_one = hn1 >= hn && hn >= one;
    Scalar dn = delta_h(h, n), dn1 = delta_h(h, n + 1);
    row.delta_decreasing_nonneg = dn >= dn1 && dn1.sign() >= 0;
    row.cube_condition = (hn1 * hn1 * hn1 - hn * hn2 * hn2).sign() <= 0;
    report.all_hold &= row.monotone_ge_one && row.delta_decreasing_nonneg && row.cube_condition;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace turanpoly
