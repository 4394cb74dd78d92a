#ifndef TURANPOLY_FAMILY_HPP
#define TURANPOLY_FAMILY_HPP

#include <vector>

#include "turanpoly/arith_function.hpp"
#include "turanpoly/polynomial.hpp"

namespace turanpoly {

enum class GenerationMethod { Convolution, ThreeTerm };

// P_0..P_N of the family P_n(x) = (x / h(n)) * sum_{k=1..n} g(k) P_{n-k}(x).
class GeneratedFamily {
 public:
  GeneratedFamily(ArithmeticFunctionSpec g, ArithmeticFunctionSpec h, GenerationMethod method,
                  std::vector<DensePolynomial> polys)
      : g_(std::move(g)), h_(std::move(h)), method_(method), polys_(std::move(polys)) {}

  const ArithmeticFunctionSpec& g() const { return g_; }
  const ArithmeticFunctionSpec& h() const { return h_; }
  GenerationMethod method() const { return method_; }
  long max_degree() const { return static_cast<long>(polys_.size()) - 1; }
  const DensePolynomial& P(long n) const;

 private:
  ArithmeticFunctionSpec g_, h_;
  GenerationMethod method_;
  std::vector<DensePolynomial> polys_;
};

// Defining convolution recursion; O(N^2) polynomial additions. Accepts any
// nonvanishing g (e.g. sigma for Nekrasov-Okounkov style generation).
GeneratedFamily generate_convolution(const ArithmeticFunctionSpec& g,
                                     const ArithmeticFunctionSpec& h, long N);

// Specialized three-term recurrence, g = id only:
// h(n+1) P_{n+1} = (2 h(n) + x) P_n - h(n-1) P_{n-1}, with h(0) = 0.
GeneratedFamily generate_three_term(const ArithmeticFunctionSpec& h, long N);

}  // namespace turanpoly

#endif
