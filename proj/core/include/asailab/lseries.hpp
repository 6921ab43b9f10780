#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asailab/coeff.hpp"
#include "asailab/eigenform.hpp"
#include "asailab/poly.hpp"

namespace asailab {

// A form with an empty eigenvalue table stands for the zero function.
bool is_zero_form(const HilbertEigenform& form);

// chi(n) = eps(n O_F) for n prime to N = level ∩ Z, else 0.
Coeff asai_chi(const HilbertEigenform& form, std::int64_t n);

// alpha(n) = n^{-(t+t')} lambda(n O_F), entries 1..n_max (entry 0 unused).
std::vector<Coeff> asai_dirichlet_coefficients(const HilbertEigenform& form, std::int64_t n_max);

struct LValue {
  cplx value;
  std::map<std::string, std::int64_t> truncation;
  std::string normalization;
};

// L^imp(s) = L_(N)(chi, 2s - k - k' - 2) * sum_n alpha(n) n^{-s}, both truncated at n_cutoff.
LValue imprimitive_L(const HilbertEigenform& form, cplx s, std::int64_t n_cutoff = 4000);

struct BadFactor {
  std::optional<Poly> C;  // error polynomial C_l
  std::optional<Poly> P;  // primitive local factor P_l
};
using BadFactorSet = std::map<std::int64_t, BadFactor>;

enum class EulerMode { Imprimitive, Primitive };

// Local factor of L^imp at ell as a power series in X = ell^{-s}, through X^r_max.
std::vector<Coeff> local_imprimitive_series(const HilbertEigenform& form, std::int64_t ell, int r_max);

// Imprimitive mode: good ell contribute 1/P_ell, ramified ell not dividing N
// (1 + bY)/(1 - (a^2 - 2b)Y + b^2 Y^2) times the chi factor, and ell | N the
// series of alpha(ell^r). Primitive mode replaces the factor at each ell in
// `bad` with P given by C_ell/P_ell and requires P at every ell | N.
LValue euler_product_L(const HilbertEigenform& form, cplx s, std::int64_t ell_cutoff = 500, const BadFactorSet& bad = {},
                       EulerMode mode = EulerMode::Imprimitive);

// Dirichlet coefficients of L^imp up to n_max, from the convolution
// c(n) = sum_{d^2 | n} chi(d) d^{k+k'+2} alpha(n/d^2), and from the product of
// local series. Entry 0 unused.
std::vector<Coeff> imprimitive_coefficients(const HilbertEigenform& form, std::int64_t n_max);
std::vector<Coeff> euler_coefficients(const HilbertEigenform& form, std::int64_t n_max);

struct CoefficientCheck {
  std::int64_t n_max = 0;
  int mismatches = 0;
  std::int64_t first_mismatch = 0;
};
CoefficientCheck check_euler_coefficients(const HilbertEigenform& form, std::int64_t n_max);

struct ClReport {
  std::int64_t ell = 0;
  bool complete = false;  // both C and P present
  bool divides = false;
  bool roots_in_strip = false;
  std::vector<long double> real_parts;  // Re(s) at the roots of C(ell^{-s})
  std::string note;
};

// Divisibility C_l | P_l, and Re(s) of the zeros of C_l(l^{-s}) within
// [(k+k')/2, (k+k'+2)/2] up to 1e-8.
std::vector<ClReport> check_Cl_divisibility(const BadFactorSet& bad, int k, int kp);

// Numerical roots of a polynomial (Durand-Kerner).
std::vector<cplx> poly_roots(const Poly& p);

struct VanishingClaim {
  bool applicable = false;
  int order = 0;
  std::string hypothesis;
};
VanishingClaim forced_vanishing_order(int k, int kp, int j);

// rational * i^{i_power} * pi^{pi_power} * sqrt(sqrt_arg), sqrt_arg squarefree.
struct ClosedForm {
  Q rational = 0;
  int i_power = 0;
  int pi_power = 0;
  std::int64_t sqrt_arg = 1;

  static ClosedForm make(Q rational, int i_power, int pi_power, std::int64_t sqrt_arg);
  cplx value() const;
  std::string str() const;
  bool operator==(const ClosedForm& o) const;
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator/(const ClosedForm& a, const ClosedForm& b);
};

// (-1)^{k'-j} D^{(j+1)/2} j! / (N^{k+k'-2j} 2^{k-k'+2j+2} (-i)^{k-k'} pi^{2j+1-k'} (k'-j)!)
ClosedForm unfolding_constant(int k, int kp, int j, std::int64_t N, std::int64_t D);
// (-1)^{k'-j} (2 pi i)^{k+k'-2j} D^{(j+1)/2} k! k'! / ((k-j)! (k'-j)!)
ClosedForm regulator_constant(int k, int kp, int j, std::int64_t D);

}  // namespace asailab
