#ifndef TURANPOLY_POLYNOMIAL_HPP
#define TURANPOLY_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "turanpoly/scalar.hpp"

namespace turanpoly {

// Dense univariate polynomial over Scalar, coefficients in ascending degree.
// The zero polynomial has an empty coefficient vector.
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Scalar> coeffs);

  static DensePolynomial constant(Scalar c);
  static DensePolynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coeff(long k) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& leading() const;
  bool all_rational() const;

  Scalar operator()(const Scalar& x) const;  // Horner

  friend DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator*(const DensePolynomial& a, const Scalar& s);
  friend DensePolynomial operator-(const DensePolynomial& a);
  DensePolynomial divided_by(const Scalar& s) const;

  // Multiplies by x (degree shift).
  DensePolynomial times_x() const;
  // Divides by x; requires an exactly-zero constant term.
  DensePolynomial divided_by_x() const;

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

// p(a x + b).
DensePolynomial compose_affine(const DensePolynomial& p, const Scalar& a, const Scalar& b);
DensePolynomial derivative(const DensePolynomial& p);

// Coefficientwise comparison; exact when both polynomials are rational,
// otherwise the absolute coefficient differences are compared against
// rel_tol times the largest coefficient magnitude of the pair.
bool approx_equal(const DensePolynomial& a, const DensePolynomial& b, const Scalar& rel_tol);

std::vector<std::string> to_json_strings(const DensePolynomial& p);
DensePolynomial polynomial_from_json_strings(const std::vector<std::string>& coeffs);

}  // namespace turanpoly

#endif
