#include "turanpoly/favard.hpp"

#include <algorithm>

namespace turanpoly {

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::QuasiDefinite: return "quasi-definite";
    case Definiteness::Degenerate: return "degenerate";
  }
  return "?";
}

ThreeTermRecurrence q_recurrence(const ArithmeticFunctionSpec& h, long n_max) {
  if (n_max < 1) throw Error(Errc::invalid_argument, "q_recurrence requires n_max >= 1");
  require_normalized(h);
  CachedValues hv = eval_range(h, n_max);
  ThreeTermRecurrence rec;
  rec.c.reserve(static_cast<size_t>(n_max));
  rec.lambda.reserve(static_cast<size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    rec.c.push_back(Scalar(-2) * hv.at(n));
    rec.lambda.push_back(hv.at(n - 1) * hv.at(n));  // lambda_1 = 0 via h(0) = 0
  }
  return rec;
}

DensePolynomial q_from_family(const ArithmeticFunctionSpec& h, const GeneratedFamily& family,
                              long n) {
  if (!family.g().is_identity())
    throw Error(Errc::unsupported_g,
                "q-sequence requires g = id; family was generated with g = " +
                    family.g().to_string());
  if (!(family.h() == h))
    throw Error(Errc::family_mismatch, "family was generated with h = " + family.h().to_string() +
                                           ", not " + h.to_string());
  if (n < 0 || n + 1 > family.max_degree())
    throw Error(Errc::invalid_argument, "family too short for q_" + std::to_string(n));
  Scalar prod(1);
  for (long k = 1; k <= n + 1; ++k) prod *= h.eval(k);
  return family.P(n + 1).divided_by_x() * prod;
}

std::vector<DensePolynomial> monic_from_recurrence(const ThreeTermRecurrence& rec, long N) {
  if (N < 0) throw Error(Errc::invalid_argument, "N must be >= 0");
  if (N > rec.horizon())
    throw Error(Errc::invalid_argument, "recurrence horizon too short for N");
  std::vector<DensePolynomial> out;
  out.reserve(static_cast<size_t>(N) + 1);
  out.push_back(DensePolynomial::constant(Scalar(1)));
  DensePolynomial prev;  // P_{-1} = 0
  for (long n = 1; n <= N; ++n) {
    DensePolynomial next =
        out.back().times_x() - out.back() * rec.c_at(n) - prev * rec.lambda_at(n);
    prev = out.back();
    out.push_back(std::move(next));
  }
  return out;
}

MomentSequence moments_from_recurrence(const ThreeTermRecurrence& rec, long N,
                                       const Scalar& mu0) {
  std::vector<DensePolynomial> polys = monic_from_recurrence(rec, N);
  MomentSequence m;
  m.mu.reserve(static_cast<size_t>(N) + 1);
  m.mu.push_back(mu0);
  for (long n = 1; n <= N; ++n) {
    // Lambda(P_n) = 0 and P_n is monic: mu_n = -sum_{j<n} a_{n,j} mu_j.
    Scalar acc(0);
    for (long j = 0; j < n; ++j) acc += polys[static_cast<size_t>(n)].coeff(j) * m.mu[static_cast<size_t>(j)];
    m.mu.push_back(-acc);
  }
  return m;
}

Scalar apply_moments(const MomentSequence& mu, const DensePolynomial& p) {
  if (p.degree() > mu.max_order())
    throw Error(Errc::invalid_argument, "not enough moments for the polynomial degree");
  Scalar acc(0);
  for (long k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * mu.mu[static_cast<size_t>(k)];
  return acc;
}

namespace {

struct DeterminantResult {
  Scalar value;
  bool in_zero_band = false;
};

// Fraction-free (Bareiss) elimination with row pivoting. Exact over
// rationals; over floats it is plain fraction-structured elimination at the
// entries' working precision.
DeterminantResult bareiss_determinant(std::vector<std::vector<Scalar>> m) {
  const size_t n = m.size();
  if (n == 0) return {Scalar(1), false};
  bool exact = true;
  Scalar entry_scale(1);
  for (const auto& row : m)
    for (const Scalar& e : row) {
      if (!e.is_rational()) exact = false;
      entry_scale = std::max(entry_scale, e.abs());
    }
  int sign = 1;
  Scalar prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    if (exact) {
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {Scalar(0), false};
    } else {
      for (size_t r = k + 1; r < n; ++r)
        if (m[r][k].abs() > m[pivot][k].abs()) pivot = r;
      if (m[pivot][k].is_zero()) return {Scalar(0), false};
    }
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = Scalar(0);
    }
    prev = m[k][k];
  }
  Scalar det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  // Crude magnitude scale for the zero band: product of max entries per row.
  Scalar scale(1);
  for (size_t i = 0; i < n; ++i) scale *= entry_scale;
  bool band = !det.is_rational() &&
              classify_sign(det, scale) == SignClass::zero_within_tol && !det.is_zero();
  return {det, band};
}

}  // namespace

HankelReport hankel_determinants(const MomentSequence& mu, long N) {
  if (N < 0) throw Error(Errc::invalid_argument, "N must be >= 0");
  if (mu.max_order() < 2 * N)
    throw Error(Errc::invalid_argument, "need moments through mu_{2N}");

  bool exact = std::all_of(mu.mu.begin(), mu.mu.end(),
                           [](const Scalar& v) { return v.is_rational(); });
  std::vector<Scalar> work = mu.mu;
  if (!exact) {
    // Hankel matrices are ill-conditioned: double the working precision.
    mpfr_prec_t wp = 2 * default_precision();
    for (Scalar& v : work) v = Scalar(v.to_bigfloat(wp));
  }

  HankelReport report;
  report.horizon = N;
  for (long n = 0; n <= N; ++n) {
    std::vector<std::vector<Scalar>> m(static_cast<size_t>(n) + 1,
                                       std::vector<Scalar>(static_cast<size_t>(n) + 1));
    for (long i = 0; i <= n; ++i)
      for (long j = 0; j <= n; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = work[static_cast<size_t>(i + j)];
    DeterminantResult r = bareiss_determinant(std::move(m));
    report.uncertain |= r.in_zero_band;
    report.delta.push_back(r.in_zero_band ? Scalar(0) : r.value);
  }

  bool all_positive = true, all_nonzero = true;
  for (const Scalar& d : report.delta) {
    if (d.sign() <= 0) all_positive = false;
    if (d.is_zero()) all_nonzero = false;
  }
  report.verdict = all_positive ? Definiteness::PositiveDefinite
                                : (all_nonzero ? Definiteness::QuasiDefinite
                                               : Definiteness::Degenerate);
  return report;
}

ThreeTermRecurrence affine_transform_rec(const ThreeTermRecurrence& rec, const Scalar& a,
                                         const Scalar& b) {
  if (a.is_zero()) throw Error(Errc::invalid_argument, "affine transform requires a != 0");
  ThreeTermRecurrence out;
  out.c.reserve(rec.c.size());
  out.lambda.reserve(rec.lambda.size());
  Scalar a2 = a * a;
  for (const Scalar& cn : rec.c) out.c.push_back((cn - b) / a);
  for (const Scalar& ln : rec.lambda) out.lambda.push_back(ln / a2);
  return out;
}

MomentSequence affine_transform_moments(const MomentSequence& mu, const Scalar& a,
                                        const Scalar& b) {
  if (a.is_zero()) throw Error(Errc::invalid_argument, "affine transform requires a != 0");
  MomentSequence out;
  out.mu.reserve(mu.mu.size());
  Scalar minus_b = -b;
  for (long n = 0; n <= mu.max_order(); ++n) {
    Scalar acc(0);
    Scalar pow_b(1);  // (-b)^(n-k), built from k = n downwards
    for (long k = n; k >= 0; --k) {
      mpz_class bin;
      mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      acc += Scalar(Rational(bin)) * pow_b * mu.mu[static_cast<size_t>(k)];
      pow_b *= minus_b;
    }
    Scalar an(1);
    for (long i = 0; i < n; ++i) an *= a;
    out.mu.push_back(acc / an);
  }
  return out;
}

ThreeTermRecurrence orthonormal_to_monic(const std::vector<Scalar>& a_seq,
                                         const std::vector<Scalar>& b_seq) {
  if (a_seq.size() != b_seq.size())
    throw Error(Errc::invalid_argument, "a and b sequences must have equal length");
  ThreeTermRecurrence out;
  out.c.reserve(b_seq.size());
  out.lambda.reserve(a_seq.size());
  for (size_t i = 0; i < a_seq.size(); ++i) {
    if (a_seq[i].sign() <= 0)
      throw Error(Errc::invalid_argument, "orthonormal a_n must be positive");
    out.c.push_back(b_seq[i]);
    out.lambda.push_back(a_seq[i] * a_seq[i]);
  }
  return out;
}

ClassifyVerdict classify(const ThreeTermRecurrence& rec) {
  ClassifyVerdict v{Definiteness::PositiveDefinite, rec.horizon(), 0};
  for (long n = 2; n <= rec.horizon(); ++n) {
    SignClass sc = classify_sign(rec.lambda_at(n), Scalar(1));
    if (sc == SignClass::zero_within_tol) {
      v.kind = Definiteness::Degenerate;
      v.first_offender = n;
      return v;
    }
    if (sc == SignClass::negative && v.kind == Definiteness::PositiveDefinite) {
      v.kind = Definiteness::QuasiDefinite;
      v.first_offender = n;
    }
  }
  return v;
}

}  // namespace turanpoly
