#include "turanpoly/family.hpp"

namespace turanpoly {

const DensePolynomial& GeneratedFamily::P(long n) const {
  if (n < 0 || n > max_degree())
    throw Error(Errc::invalid_argument,
                "family holds degrees 0.." + std::to_string(max_degree()));
  return polys_[static_cast<size_t>(n)];
}

GeneratedFamily generate_convolution(const ArithmeticFunctionSpec& g,
                                     const ArithmeticFunctionSpec& h, long N) {
  if (N < 0) throw Error(Errc::invalid_argument, "N must be >= 0");
  CachedValues hv = eval_range(h, N);
  CachedValues gv = eval_range(g, N);
  for (long n = 1; n <= N; ++n)
    if (hv.at(n).is_zero())
      throw Error(Errc::division_by_zero, "h vanishes at " + std::to_string(n));

  std::vector<DensePolynomial> polys;
  polys.reserve(static_cast<size_t>(N) + 1);
  polys.push_back(DensePolynomial::constant(Scalar(1)));
  for (long n = 1; n <= N; ++n) {
    DensePolynomial sum;
    for (long k = 1; k <= n; ++k)
      sum = sum + polys[static_cast<size_t>(n - k)] * gv.at(k);
    polys.push_back(sum.times_x().divided_by(hv.at(n)));
  }
  return GeneratedFamily(g, h, GenerationMethod::Convolution, std::move(polys));
}

GeneratedFamily generate_three_term(const ArithmeticFunctionSpec& h, long N) {
  if (N < 1) throw Error(Errc::invalid_argument, "N must be >= 1");
  CachedValues hv = eval_range(h, N);
  for (long n = 1; n <= N; ++n)
    if (hv.at(n).is_zero())
      throw Error(Errc::division_by_zero, "h vanishes at " + std::to_string(n));

  std::vector<DensePolynomial> polys;
  polys.reserve(static_cast<size_t>(N) + 1);
  polys.push_back(DensePolynomial::constant(Scalar(1)));
  polys.push_back(DensePolynomial::x());
  for (long n = 1; n < N; ++n) {
    // h(n+1) P_{n+1} = (2 h(n) + x) P_n - h(n-1) P_{n-1}; h(0) = 0.
    const DensePolynomial& pn = polys[static_cast<size_t>(n)];
    const DensePolynomial& pm = polys[static_cast<size_t>(n - 1)];
    DensePolynomial num = pn.times_x() + pn * (Scalar(2) * hv.at(n)) - pm * hv.at(n - 1);
    polys.push_back(num.divided_by(hv.at(n + 1)));
  }
  return GeneratedFamily(ArithmeticFunctionSpec::identity(), h, GenerationMethod::ThreeTerm,
                         std::move(polys));
}

}  // namespace turanpoly
