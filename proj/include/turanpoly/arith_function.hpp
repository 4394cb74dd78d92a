#ifndef TURANPOLY_ARITH_FUNCTION_HPP
#define TURANPOLY_ARITH_FUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "turanpoly/scalar.hpp"

namespace turanpoly {

enum class ArithKind { PowerS, ConstantOne, Identity, SigmaDivisorSum, Table, AlternatingSign };

// A closed-form or tabulated arithmetic function. Position 0 evaluates to 0
// (the h-role extension h(0) := 0); positions n >= 1 evaluate to the
// function's value.
class ArithmeticFunctionSpec {
 public:
  static ArithmeticFunctionSpec power(Scalar exponent);
  static ArithmeticFunctionSpec one();
  static ArithmeticFunctionSpec identity();
  static ArithmeticFunctionSpec sigma();
  static ArithmeticFunctionSpec table(std::vector<Rational> values, std::string origin = "");
  static ArithmeticFunctionSpec alternating_sign();

  // Spec strings: "power:<s>", "one", "id", "sigma", "table:<path>"
  // (one positive rational per line, 1-indexed), "altsign".
  static ArithmeticFunctionSpec parse(const std::string& spec);

  ArithKind kind() const { return kind_; }
  const Scalar& exponent() const { return exponent_; }  // PowerS only
  const std::vector<Rational>& table_values() const { return table_; }
  std::string to_string() const;  // canonical spec string

  bool operator==(const ArithmeticFunctionSpec& other) const;

  // n >= 0; n == 0 returns 0. PowerS returns an exact Rational whenever n^s
  // is rational-representable, otherwise a BigFloat correctly rounded to
  // default_precision().
  Scalar eval(long n) const;

  bool is_identity() const { return kind_ == ArithKind::Identity; }
  // h-role normalization: value at 1 equals 1.
  bool is_normalized() const;

 private:
  ArithmeticFunctionSpec(ArithKind k) : kind_(k) {}
  ArithKind kind_;
  Scalar exponent_;
  std::vector<Rational> table_;
  std::string origin_;
};

void require_normalized(const ArithmeticFunctionSpec& h);

// Evaluates h(0..n_max) once; values share a backend: if any value is a
// BigFloat, every rational value is promoted to default_precision().
struct CachedValues {
  std::vector<Scalar> v;  // v[i] = h(i), i = 0..n_max
  bool all_rational = true;
  const Scalar& at(long n) const { return v[static_cast<size_t>(n)]; }
};
CachedValues eval_range(const ArithmeticFunctionSpec& spec, long n_max);

// Log-concavity defect: h(n)^2 - h(n-1) h(n+1), n >= 1.
Scalar delta_h(const ArithmeticFunctionSpec& h, long n);

// X(n) = h(n-1) h(n+1) / h(n)^2, n >= 1 (X(1) = 0 via h(0) = 0).
Scalar x_ratio(const ArithmeticFunctionSpec& h, long n);

// D(n) = 1 + sqrt(1 - X(n+1)) - X(n+1) (1 + sqrt(1 - X(n))), n >= 1.
// Throws Errc::non_log_concave if a radicand is negative beyond tolerance.
Scalar d_criterion(const ArithmeticFunctionSpec& h, long n);

struct LemmaConditionRow {
  long n;
  bool monotone_ge_one;          // h(n+1) >= h(n) >= 1
  bool delta_decreasing_nonneg;  // Delta_h(n) >= Delta_h(n+1) >= 0
  bool cube_condition;           // h(n+1)^3 - h(n) h(n+2)^2 <= 0
};

struct LemmaReport {
  std::vector<LemmaConditionRow> rows;  // n = 1..n_max
  bool all_hold = true;
};

LemmaReport lemma_side_conditions(const ArithmeticFunctionSpec& h, long n_max);

}  // namespace turanpoly

#endif
