#include "turanpoly/polynomial.hpp"

#include <algorithm>

namespace turanpoly {

DensePolynomial::DensePolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void DensePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DensePolynomial DensePolynomial::constant(Scalar c) {
  return DensePolynomial(std::vector<Scalar>{std::move(c)});
}

DensePolynomial DensePolynomial::x() {
  return DensePolynomial(std::vector<Scalar>{Scalar(0), Scalar(1)});
}

Scalar DensePolynomial::coeff(long k) const {
  if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return Scalar(0);
  return coeffs_[static_cast<size_t>(k)];
}

const Scalar& DensePolynomial::leading() const {
  if (coeffs_.empty()) throw Error(Errc::invalid_argument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool DensePolynomial::all_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Scalar& c) { return c.is_rational(); });
}

Scalar DensePolynomial::operator()(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return DensePolynomial(std::move(out));
}

DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
  return a + (-b);
}

DensePolynomial operator-(const DensePolynomial& a) {
  std::vector<Scalar> out;
  out.reserve(a.coeffs_.size());
  for (const Scalar& c : a.coeffs_) out.push_back(-c);
  return DensePolynomial(std::move(out));
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return DensePolynomial();
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return DensePolynomial(std::move(out));
}

DensePolynomial operator*(const DensePolynomial& a, const Scalar& s) {
  std::vector<Scalar> out;
  out.reserve(a.coeffs_.size());
  for (const Scalar& c : a.coeffs_) out.push_back(c * s);
  return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::divided_by(const Scalar& s) const {
  if (s.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero scalar");
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) out.push_back(c / s);
  return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::times_x() const {
  if (is_zero()) return DensePolynomial();
  std::vector<Scalar> out;
  out.reserve(coeffs_.size() + 1);
  out.push_back(Scalar(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return DensePolynomial(std::move(out));
}

DensePolynomial DensePolynomial::divided_by_x() const {
  if (is_zero()) return DensePolynomial();
  if (!coeffs_.front().is_zero())
    throw Error(Errc::invalid_argument, "polynomial is not divisible by x");
  return DensePolynomial(std::vector<Scalar>(coeffs_.begin() + 1, coeffs_.end()));
}

bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

DensePolynomial compose_affine(const DensePolynomial& p, const Scalar& a, const Scalar& b) {
  DensePolynomial linear(std::vector<Scalar>{b, a});
  DensePolynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * linear + DensePolynomial::constant(*it);
  return acc;
}

DensePolynomial derivative(const DensePolynomial& p) {
  if (p.degree() <= 0) return DensePolynomial();
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(p.degree()));
  for (long k = 1; k <= p.degree(); ++k) out.push_back(p.coeff(k) * Scalar(k));
  return DensePolynomial(std::move(out));
}

bool approx_equal(const DensePolynomial& a, const DensePolynomial& b, const Scalar& rel_tol) {
  if (a.all_rational() && b.all_rational()) return a == b;
  Scalar scale(0);
  for (const Scalar& c : a.coeffs()) scale = std::max(scale, c.abs());
  for (const Scalar& c : b.coeffs()) scale = std::max(scale, c.abs());
  Scalar bound = rel_tol * scale;
  long deg = std::max(a.degree(), b.degree());
  for (long k = 0; k <= deg; ++k)
    if ((a.coeff(k) - b.coeff(k)).abs() > bound) return false;
  return true;
}

std::vector<std::string> to_json_strings(const DensePolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const Scalar& c : p.coeffs()) out.push_back(c.to_json_string());
  return out;
}

DensePolynomial polynomial_from_json_strings(const std::vector<std::string>& coeffs) {
  std::vector<Scalar> out;
  out.reserve(coeffs.size());
  for (const std::string& s : coeffs) out.push_back(Scalar::parse(s));
  return DensePolynomial(std::move(out));
}

}  // namespace turanpoly
