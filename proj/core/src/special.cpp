#include "asailab/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace asailab {

namespace {

// Lanczos, g = 7, n = 9.
constexpr long double kLanczos[9] = {0.99999999999980993227684700473478L, 676.520368121885098567009190444019L,
                                     -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
                                     -176.61502916214059906584551354L,    12.507343278686904814458936853L,
                                     -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
                                     1.50563273514931155834e-7L};

bool near_nonpositive_integer(cplx z, long double& n) {
  n = std::round(z.real());
  return z.imag() == 0 && z.real() == n && n <= 0;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.real() < 0.5L) {
    long double n;
    if (near_nonpositive_integer(z, n)) throw std::domain_error("log_gamma at a pole");
    // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
    return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0L - z);
  }
  z -= 1.0L;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<long double>(i));
  cplx t = z + 7.5L;
  return 0.5L * std::log(2 * kPi) + (z + 0.5L) * std::log(t) - t + std::log(x);
}

cplx gamma(cplx z) {
  long double n;
  if (near_nonpositive_integer(z, n)) throw std::domain_error("gamma at a pole");
  if (z.real() < 0.5L) return kPi / (std::sin(kPi * z) * gamma(1.0L - z));
  // Small positive integers exactly.
  if (z.imag() == 0 && z.real() == std::round(z.real()) && z.real() <= 30) {
    long double f = 1;
    for (int k = 2; k < static_cast<int>(z.real()); ++k) f *= k;
    return f;
  }
  return std::exp(log_gamma(z));
}

long double exp_integral_e1(long double x) {
  if (x <= 0) throw std::domain_error("E1 needs x > 0");
  if (x < 1) {
    long double sum = 0, term = 1;
    for (int k = 1; k < 200; ++k) {
      term *= -x / k;
      long double add = -term / k;
      sum += add;
      if (std::fabs(add) < 1e-21L * std::fabs(sum)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // Modified Lentz on the continued fraction for e^x E1(x).
  const long double tiny = 1e-4000L;
  long double b = x + 1, c = 1 / tiny, d = 1 / b, h = d;
  for (int i = 1; i < 10000; ++i) {
    long double an = -static_cast<long double>(i) * i;
    b += 2;
    d = 1 / (an * d + b);
    c = b + an / c;
    long double del = c * d;
    h *= del;
    if (std::fabs(del - 1) < 1e-20L) break;
  }
  return h * std::exp(-x);
}

namespace {

cplx upper_gamma_cf(cplx a, long double x) {
  const long double tiny = 1e-4000L;
  cplx b = x + 1.0L - a, c = 1.0L / tiny, d = 1.0L / b, h = d;
  for (int i = 1; i < 100000; ++i) {
    cplx an = -static_cast<long double>(i) * (static_cast<long double>(i) - a);
    b += 2.0L;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0L / d;
    cplx del = d * c;
    h *= del;
    if (std::abs(del - 1.0L) < 1e-20L) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

cplx lower_gamma_series(cplx a, long double x) {
  cplx ap = a, del = 1.0L / a, sum = del;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0L;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-21L) break;
  }
  return sum * std::exp(-x + a * std::log(x));
}

}  // namespace

cplx upper_gamma(cplx a, long double x) {
  if (!(x > 0)) throw std::domain_error("upper_gamma needs x > 0");
  long double n;
  if (near_nonpositive_integer(a, n)) {
    // Gamma(a, x) = (Gamma(a + 1, x) - x^a e^{-x}) / a, downward from E1.
    long double g = exp_integral_e1(x);
    for (int m = -1; m >= static_cast<int>(n); --m) g = (g - std::pow(x, static_cast<long double>(m)) * std::exp(-x)) / m;
    return g;
  }
  if (x >= 1.5L && x > a.real() - 1) return upper_gamma_cf(a, x);
  return gamma(a) - lower_gamma_series(a, x);
}

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("Gauss-Legendre needs n >= 1");
  GaussLegendre gl;
  gl.nodes.resize(static_cast<std::size_t>(n));
  gl.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double z = std::cos(kPi * (i + 0.75L) / (n + 0.5L)), pp = 0;
    for (int it2 = 0; it2 < 100; ++it2) {
      long double p1 = 1, p2 = 0;
      for (int j = 1; j <= n; ++j) {
        long double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1);
      long double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) < 1e-19L) break;
    }
    auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(n - 1 - i);
    gl.nodes[ui] = -z;
    gl.nodes[uj] = z;
    gl.weights[ui] = gl.weights[uj] = 2 / ((1 - z * z) * pp * pp);
  }
  return cache.emplace(n, std::move(gl)).first->second;
}

}  // namespace asailab
