#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asailab/asairep.hpp"
#include "asailab/coeff.hpp"
#include "asailab/eigenform.hpp"
#include "asailab/padic_num.hpp"

namespace asailab {

// Which of alpha_P beta_Q, beta_P alpha_Q cuts out the quotient M_P. Only
// matters when the two coincide; recorded in reports either way.
enum class MChoice { AlphaPBetaQ, BetaPAlphaQ };

struct OrdinaryData {
  std::int64_t p = 0;
  int k = 0, kp = 0;
  Coeff alpha_P, alpha_Q, beta_P, beta_Q, eps_P, eps_Q;
  std::int64_t coeff_e = 0;
  std::int64_t root_mod_p = -1;  // square root of coeff_e mod p fixing the embedding
  int prec = 20;

  VEmbedding embedding() const;
  // alpha_P alpha_Q, beta_P alpha_Q, alpha_P beta_Q, beta_P beta_Q
  std::vector<std::pair<std::string, Coeff>> frobenius_eigenvalues() const;
  bool exceptional() const { return alpha_P * beta_Q == beta_P * alpha_Q; }
  Coeff m_eigenvalue(MChoice choice) const;
};

// beta_P = p^{k+1} eps_P / alpha_P, beta_Q = p^{k'+1} eps_Q / alpha_Q; both alphas
// must be p-adic units. root_mod_p < 0 picks the least square root.
OrdinaryData make_ordinary_data(std::int64_t p, int k, int kp, const Coeff& alpha_P, const Coeff& alpha_Q,
                                const Coeff& eps_P = Coeff(1), const Coeff& eps_Q = Coeff(1), std::int64_t root_mod_p = -1,
                                int prec = 20);

// From a form that is p-stabilised at a split p: alpha_P = p^{-t} U(P), alpha_Q = p^{-t'} U(Q).
OrdinaryData stabilized_params(const HilbertEigenform& form, std::int64_t p, std::int64_t root_mod_p = -1, int prec = 20);

std::vector<std::int64_t> frobenius_valuations(const OrdinaryData& d);

struct NEZResult {
  bool holds = true;
  bool by_shortcut = false;
  std::string witness_name;
  std::optional<Coeff> witness;
};
NEZResult check_NEZ(const OrdinaryData& d);

// Element of Q(zeta_N) stored as a vector of length N modulo x^N - 1.
class Cyclotomic {
 public:
  explicit Cyclotomic(int N = 1);
  static Cyclotomic zeta_power(int N, std::int64_t e, const Q& c = 1);

  int order() const { return N_; }
  const std::vector<Q>& coefficients() const { return c_; }
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic scaled(const Q& q) const;
  Cyclotomic conj() const;
  // Canonical representative: remainder modulo the N-th cyclotomic polynomial.
  Cyclotomic reduced() const;
  bool is_zero() const;
  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
  std::optional<Q> as_rational() const;
  cplx value() const;
  std::string str() const;

 private:
  int N_;
  std::vector<Q> c_;
};

// G(eta^{-1}) = sum_{a in (Z/p^r)^x} eta(a)^{-1} zeta_{p^r}^a, eta a character of
// G = (Z/p^r)^x given as an exponent vector; lives in Q(zeta_N), N = lcm(p^r, exponent of G).
Cyclotomic gauss_sum(const DirichletGroup& G, const std::vector<int>& eta, std::int64_t p, int r);

struct InterpFactor {
  int j = 0, r = 0;
  Coeff scalar;                         // r = 0: the full factor
  std::optional<Cyclotomic> gauss_part;  // r >= 1: conj G(eta^{-1}), so G^{-1} = conj(G) / p^r
  cplx value;
  std::string tag;     // "log" or "exp*"
  Q tag_constant;      // (-1)^{k'-j}/(k'-j)! or (j-k'-1)!
};

// r = 0: (1 - p^j/x)(1 - x/p^{1+j})^{-1}; r >= 1: (p^{1+j}/x)^r G(eta^{-1})^{-1},
// x = alpha_P beta_Q. G is (Z/p^r)^x; for r = 0 pass DirichletGroup(1).
InterpFactor pr_interp_factor(const Coeff& x, std::int64_t p, int j, int kp, int r, const DirichletGroup& G,
                              const std::vector<int>& eta);
InterpFactor pr_interp_factor(const OrdinaryData& d, int j, int r, const DirichletGroup& G, const std::vector<int>& eta,
                              MChoice choice = MChoice::AlphaPBetaQ);

struct MotivicPrefactor {
  bool pole = false;
  cplx c_factor;
  cplx value;
  std::optional<Coeff> exact;  // when everything is exact
  InterpFactor pr;
};

// (c^2 - c^{2j-k-k'} eta(c)^2 eps(c))^{-1} times the interpolation factor.
MotivicPrefactor motivic_padic_L_prefactors(const OrdinaryData& d, std::int64_t c, int j, int r, const DirichletGroup& G,
                                            const std::vector<int>& eta, const Coeff& eps_c,
                                            MChoice choice = MChoice::AlphaPBetaQ);

}  // namespace asailab
