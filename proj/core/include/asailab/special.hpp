#pragma once

#include <vector>

#include "asailab/coeff.hpp"

namespace asailab {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

cplx gamma(cplx z);
cplx log_gamma(cplx z);  // principal branch for Re z > 0, continued by reflection
long double exp_integral_e1(long double x);
// Upper incomplete gamma Gamma(a, x) for x > 0 and any complex a.
cplx upper_gamma(cplx a, long double x);

struct GaussLegendre {
  std::vector<long double> nodes, weights;  // on [-1, 1]
};
const GaussLegendre& gauss_legendre(int n);

// Integral of f over [a, b] with an n-point rule.
template <class F>
auto integrate_gl(F&& f, long double a, long double b, int n) {
  const auto& gl = gauss_legendre(n);
  long double h = (b - a) / 2, mid = (a + b) / 2;
  decltype(f(mid)) s{};
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += f(mid + h * gl.nodes[i]) * gl.weights[i];
  return s * h;
}

}  // namespace asailab
