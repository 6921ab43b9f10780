#include "asailab/eisenstein.hpp"

#include <cmath>

#include "asailab/errors.hpp"
#include "asailab/special.hpp"

namespace asailab {

namespace {

constexpr long double kCut = 75;  // drop terms with incomplete-gamma argument beyond this
const cplx I1(0, 1);

void check_alpha(const Q& alpha) {
  if (alpha.get_den() == 1) throw ValidationError("alpha must be nonzero in Q/Z");
}

void check_tau(cplx tau) {
  if (!(tau.imag() > 0)) throw ValidationError("tau must lie in the upper half-plane");
}

cplx ipow_c(cplx z, int k) { return std::pow(z, k); }

// (-2 pi i)^{-k} pi^{-s} Gamma(s + k) y^s
cplx prefactor(int k, cplx s, long double y) {
  return ipow_c(cplx(0, -2 * kPi), -k) * std::exp(-s * std::log(kPi)) * gamma(s + static_cast<long double>(k)) *
         std::exp(s * std::log(y));
}

}  // namespace

cplx eisenstein_lattice_sum(int k, const Q& alpha, cplx tau, cplx s, int cutoff, bool tail_correction) {
  check_alpha(alpha);
  check_tau(tau);
  if (!(k + 2 * s.real() > 2)) throw ValidationError("lattice sum needs k + 2 Re(s) > 2");
  if (cutoff < 1) throw ValidationError("cutoff must be positive");
  const long double a = to_long_double(alpha);
  const cplx w = s + static_cast<long double>(k);
  auto g = [&](long double m, long double n) {
    cplx z = m * tau + n + a;
    return ipow_c(std::conj(z), k) * std::exp(-w * std::log(std::norm(z)));
  };
  cplx sum = 0;
  for (int m = -cutoff; m <= cutoff; ++m) {
    cplx row = 0;
    for (int n = -cutoff; n <= cutoff; ++n) row += g(m, n);
    sum += row;
  }
  if (tail_correction) {
    const long double A = cutoff + 0.5L;
    const long double beta = std::max(1.0L, 2 / (k + 2 * s.real() - 2));
    const int nq = 48, nv = 48;
    cplx tail = 0;
    for (int edge = 0; edge < 4; ++edge) {
      tail += integrate_gl(
          [&](long double q) {
            return integrate_gl(
                [&](long double v) -> cplx {
                  long double u = std::pow(v, beta);
                  long double rho = 1 / u;
                  long double m, n;
                  switch (edge) {
                    case 0: m = rho * A, n = rho * A * q; break;
                    case 1: m = -rho * A, n = rho * A * q; break;
                    case 2: m = rho * A * q, n = rho * A; break;
                    default: m = rho * A * q, n = -rho * A; break;
                  }
                  return g(m, n) * (rho * A * A / (u * u) * beta * std::pow(v, beta - 1));
                },
                0, 1, nv);
          },
          -1, 1, nq);
    }
    sum += tail;
  }
  return prefactor(k, s, tau.imag()) * sum;
}

cplx eisenstein_continued(int k, const Q& alpha, cplx tau, cplx s) {
  check_alpha(alpha);
  check_tau(tau);
  if (k < 0) throw ValidationError("continued evaluation needs k >= 0");
  if (k == 0 && s == cplx(1, 0)) throw HypothesisError("E^{(0)}(tau, s) has a pole at s = 1");
  const long double a = to_long_double(alpha);
  const long double x = tau.real(), y = tau.imag();
  const cplx w = s + static_cast<long double>(k);

  // Part I: lattice terms with Gamma(w, pi |z|^2 / y).
  cplx part1 = 0;
  {
    long double r2max = kCut * y / kPi;
    long double mmax = std::sqrt(r2max) / y;
    for (long m = -static_cast<long>(mmax) - 1; m <= static_cast<long>(mmax) + 1; ++m) {
      long double im2 = (m * y) * (m * y);
      if (im2 > r2max) continue;
      long double r = std::sqrt(r2max - im2);
      long double c = m * x + a;
      for (long n = static_cast<long>(std::floor(-c - r)); n <= static_cast<long>(std::ceil(-c + r)); ++n) {
        cplx z = cplx(c + n, m * y);
        long double nz = std::norm(z);
        long double arg = kPi * nz / y;
        if (arg > kCut) continue;
        part1 += ipow_c(std::conj(z), k) * std::exp(-w * std::log(kPi * nz)) * upper_gamma(w, arg);
      }
    }
  }

  // Part II: dual lattice mu = (b, (a' - b x) / y), character e^{2 pi i b alpha}.
  cplx part2 = 0;
  {
    long double r2max = kCut / (kPi * y);
    long double bmax = std::sqrt(r2max);
    const cplx kw = static_cast<long double>(k + 1) - w;
    for (long b = -static_cast<long>(bmax) - 1; b <= static_cast<long>(bmax) + 1; ++b) {
      long double b2 = static_cast<long double>(b) * b;
      if (b2 > r2max) continue;
      long double r = y * std::sqrt(r2max - b2);
      long double c = b * x;
      cplx phase = std::exp(cplx(0, 2 * kPi * b * a));
      for (long ap = static_cast<long>(std::floor(c - r)); ap <= static_cast<long>(std::ceil(c + r)); ++ap) {
        if (b == 0 && ap == 0) continue;
        cplx mu(static_cast<long double>(b), (ap - c) / y);
        long double nm = std::norm(mu);
        long double arg = kPi * nm * y;
        if (arg > kCut) continue;
        part2 += phase * ipow_c(std::conj(mu), k) * std::exp((w - static_cast<long double>(k + 1)) * std::log(kPi * nm)) *
                 upper_gamma(kw, arg);
      }
    }
    part2 *= ipow_c(cplx(0, -1), k) / y;
    if (k == 0) part2 += std::exp((w - 1.0L) * std::log(1 / y)) / (y * (w - 1.0L));
  }
  return ipow_c(cplx(0, 0.5L), k) * std::exp(s * std::log(y)) * (part1 + part2);
}

cplx siegel_unit(const Q& alpha, cplx tau, int terms) {
  check_alpha(alpha);
  check_tau(tau);
  if (terms < 1) throw ValidationError("terms must be >= 1");
  const long double a = to_long_double(alpha);
  cplx q = std::exp(2 * kPi * I1 * tau);
  cplx qa = std::exp(cplx(0, 2 * kPi * a));
  cplx g = std::exp(2 * kPi * I1 * tau / 12.0L) * (1.0L - qa);
  cplx qn = 1;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    g *= (1.0L - qn * qa) * (1.0L - qn / qa);
  }
  return g;
}

long double kronecker_limit_check(const Q& alpha, cplx tau) {
  cplx e = eisenstein_continued(0, alpha, tau, 0);
  return std::abs(e + 2 * std::log(std::abs(siegel_unit(alpha, tau))));
}

MellinCheck diagonal_mellin_check(const HilbertEigenform& form, cplx sp, long double y_cutoff, std::int64_t n_cutoff) {
  if (!(sp.real() > 1)) throw ValidationError("Mellin check needs Re(s') > 1");
  if (!(y_cutoff > 0) || n_cutoff < 1) throw ValidationError("cutoffs must be positive");
  const long double sqD = std::sqrt(static_cast<long double>(form.field().disc()));
  const long double c = 4 * kPi / sqD;
  std::vector<cplx> alpha(static_cast<std::size_t>(n_cutoff + 1));
  // an empty eigenvalue table is the zero form
  bool zero = true;
  for (std::int64_t n = 1; n <= n_cutoff && !form.eigenvalues().empty(); ++n) {
    alpha[static_cast<std::size_t>(n)] = alpha_coeff(form, n).value();
    if (alpha[static_cast<std::size_t>(n)] != cplx(0)) zero = false;
  }
  MellinCheck r;
  r.y_cutoff = y_cutoff;
  r.n_cutoff = n_cutoff;
  r.normalization = "lhs = int_0^Y f(y) y^{s'-1} dy, f(y) = sum_{n<=N} alpha(n) exp(-4 pi n y / sqrt(D)); "
                    "rhs = Gamma(s') (sqrt(D)/(4 pi))^{s'} sum_{n<=N} alpha(n) n^{-s'}";
  if (zero) return r;

  cplx dir = 0;
  for (std::int64_t n = n_cutoff; n >= 1; --n)
    dir += alpha[static_cast<std::size_t>(n)] * std::exp(-sp * std::log(static_cast<long double>(n)));
  r.rhs = gamma(sp) * std::exp(sp * std::log(sqD / (4 * kPi))) * dir;

  auto f = [&](long double y) {
    cplx s = 0;
    long double e1 = std::exp(-c * y), en = 1;
    for (std::int64_t n = 1; n <= n_cutoff; ++n) {
      en *= e1;
      if (en < 1e-4000L) break;
      s += alpha[static_cast<std::size_t>(n)] * en;
    }
    return s * std::exp((sp - 1.0L) * std::log(y));
  };
  long double y_lo = std::min(y_cutoff, 1e-3L / (c * n_cutoff));
  cplx lhs = 0;
  for (long double a = y_lo; a < y_cutoff;) {
    long double b = std::min(y_cutoff, a * 1.15L);
    lhs += integrate_gl(f, a, b, 16);
    a = b;
  }
  r.lhs = lhs;
  r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
  return r;
}

}  // namespace asailab
