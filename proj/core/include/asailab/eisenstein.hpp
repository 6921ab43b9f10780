#pragma once

#include <cstdint>
#include <string>

#include "asailab/arith.hpp"
#include "asailab/coeff.hpp"
#include "asailab/eigenform.hpp"

namespace asailab {

// E_alpha^{(k)}(tau, s) = (-2 pi i)^{-k} pi^{-s} Gamma(s+k)
//     * sum_{(m,n)} Im(tau)^s / ((m tau + n + alpha)^k |m tau + n + alpha|^{2s})

// Truncated sum over |m|, |n| <= cutoff. With tail_correction the sum over
// the rest of the lattice is replaced by the integral of the summand over the
// exterior of the square [-cutoff-1/2, cutoff+1/2]^2.
// Requires k + 2 Re(s) > 2.
cplx eisenstein_lattice_sum(int k, const Q& alpha, cplx tau, cplx s, int cutoff, bool tail_correction = true);

// Analytic continuation through the incomplete-gamma expansion (theta
// splitting at t = 1/Im(tau) and Poisson summation over the dual lattice).
// Requires k >= 0; (k, s) = (0, 1) is a pole.
cplx eisenstein_continued(int k, const Q& alpha, cplx tau, cplx s);

// g_{0,alpha}(tau) = q^{1/12} (1 - q_alpha) prod_{n=1}^{terms} (1 - q^n q_alpha)(1 - q^n / q_alpha)
cplx siegel_unit(const Q& alpha, cplx tau, int terms = 200);

// |E_alpha^{(0)}(tau, 0) + 2 log|g_{0,alpha}(tau)||
long double kronecker_limit_check(const Q& alpha, cplx tau);

struct MellinCheck {
  cplx lhs, rhs;
  long double residual = 0;  // |lhs - rhs| / |rhs|, 0 when both vanish
  long double y_cutoff = 0;
  std::int64_t n_cutoff = 0;
  std::string normalization;
};

// lhs = int_0^Y f(y) y^{s'-1} dy with f(y) = sum_{n <= N} alpha(n) exp(-4 pi n y / sqrt(D)),
// the x-averaged diagonal restriction; rhs = Gamma(s') (sqrt(D) / 4 pi)^{s'} sum_{n <= N} alpha(n) n^{-s'}.
MellinCheck diagonal_mellin_check(const HilbertEigenform& form, cplx s_prime, long double y_cutoff = 40,
                                  std::int64_t n_cutoff = 4000);

}  // namespace asailab
