#ifndef TURANPOLY_FAVARD_HPP
#define TURANPOLY_FAVARD_HPP

#include <vector>

#include "turanpoly/family.hpp"

namespace turanpoly {

// Monic three-term recurrence data: P_n = (x - c_n) P_{n-1} - lambda_n P_{n-2}.
// Entries are 1-based: c_at(n) = c_n for 1 <= n <= horizon(). lambda_1 is a
// convention slot and never used in generation.
struct ThreeTermRecurrence {
  std::vector<Scalar> c;
  std::vector<Scalar> lambda;

  long horizon() const { return static_cast<long>(c.size()); }
  const Scalar& c_at(long n) const { return c.at(static_cast<size_t>(n - 1)); }
  const Scalar& lambda_at(long n) const { return lambda.at(static_cast<size_t>(n - 1)); }
};

struct MomentSequence {
  std::vector<Scalar> mu;  // mu[n] = mu_n
  long max_order() const { return static_cast<long>(mu.size()) - 1; }
};

enum class Definiteness { PositiveDefinite, QuasiDefinite, Degenerate };
const char* definiteness_name(Definiteness d);

struct HankelReport {
  std::vector<Scalar> delta;  // Delta_0..Delta_N
  Definiteness verdict = Definiteness::Degenerate;
  bool uncertain = false;  // float backend: some determinant inside the zero band
  long horizon = 0;
};

struct ClassifyVerdict {
  Definiteness kind;
  long horizon;
  long first_offender;  // smallest n >= 2 with lambda_n <= 0 (or 0 if none)
};

// c_n = -2 h(n), lambda_n = h(n-1) h(n) for n = 1..n_max (lambda_1 = 0).
ThreeTermRecurrence q_recurrence(const ArithmeticFunctionSpec& h, long n_max);

// q_n = (prod_{k=1..n+1} h(k) / x) P_{n+1}; the family must be generated
// with g = id and the same h.
DensePolynomial q_from_family(const ArithmeticFunctionSpec& h, const GeneratedFamily& family,
                              long n);

// P_0..P_N from the recurrence (monic, deg P_n = n).
std::vector<DensePolynomial> monic_from_recurrence(const ThreeTermRecurrence& rec, long N);

// Moments of the functional annihilating P_1..P_N, normalized to mu_0.
MomentSequence moments_from_recurrence(const ThreeTermRecurrence& rec, long N,
                                       const Scalar& mu0);

// Lambda(p) = sum_k coeff_k mu_k.
Scalar apply_moments(const MomentSequence& mu, const DensePolynomial& p);

// Hankel determinants Delta_n = det(mu_{i+j})_{i,j=0..n} for n = 0..N, via
// fraction-free (Bareiss) elimination; float moments are re-rounded to
// doubled working precision first.
HankelReport hankel_determinants(const MomentSequence& mu, long N);

// Recurrence of p~_n(x) = a^{-n} p_n(a x + b): ((c_n - b)/a, lambda_n / a^2).
ThreeTermRecurrence affine_transform_rec(const ThreeTermRecurrence& rec, const Scalar& a,
                                         const Scalar& b);
// mu~_n = a^{-n} sum_k binom(n,k) (-b)^{n-k} mu_k.
MomentSequence affine_transform_moments(const MomentSequence& mu, const Scalar& a,
                                        const Scalar& b);

// From the orthonormal form x p_n = a_{n+1} p_{n+1} + b_n p_n + a_n p_{n-1}:
// c_n = b_{n-1}, lambda_n = a_{n-1}^2. Inputs are a_0..a_{N-1}, b_0..b_{N-1}.
ThreeTermRecurrence orthonormal_to_monic(const std::vector<Scalar>& a_seq,
                                         const std::vector<Scalar>& b_seq);

// Positive-definite iff lambda_n > 0 for 2 <= n <= horizon; quasi-definite
// iff all nonzero; degenerate otherwise. Finite-horizon verdict.
ClassifyVerdict classify(const ThreeTermRecurrence& rec);

}  // namespace turanpoly

#endif
