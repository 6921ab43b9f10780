#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asailab/coeff.hpp"
#include "asailab/padic_num.hpp"
#include "asailab/quadfield.hpp"

namespace asailab {

// Weight (k+2, k'+2) with twist (t, t').
struct Weight {
  int k = 0, kp = 0, t = 0, tp = 0;
  int w() const { return k + 2 + 2 * t; }
  void validate() const;
};

class HilbertEigenform {
 public:
  HilbertEigenform(RealQuadraticField field, Weight weight, Ideal level, std::int64_t coeff_e = 0);

  const RealQuadraticField& field() const { return field_; }
  const Weight& weight() const { return weight_; }
  const Ideal& level() const { return level_; }
  std::int64_t coeff_e() const { return coeff_e_; }
  // Positive generator of level ∩ Z.
  std::int64_t level_integer() const { return level_.n; }

  void set_eigenvalue(const Ideal& I, const Coeff& v);
  void set_nebentype(const Ideal& I, const Coeff& v);
  void erase_eigenvalue(const Ideal& I) { eigen_.erase(I); }
  const std::map<Ideal, Coeff>& eigenvalues() const { return eigen_; }
  const std::map<Ideal, Coeff>& nebentype() const { return neb_; }

  std::optional<Coeff> stored(const Ideal& I) const;
  bool divides_level(const Ideal& P) const;
  bool coprime_to_level(const Ideal& I) const;

  // Nebentype value; trivial when no table is given.
  Coeff epsilon(const Ideal& I) const;
  // Eigenvalue of T(I) (U(I) at primes dividing the level), derived by
  // multiplicativity and the prime-power recursion when not stored.
  Coeff lambda(const Ideal& I) const;
  Coeff lambda_prime_power(const Ideal& P, int r) const;
  // Eigenvalue attached to the rational integer n, i.e. to nO_F.
  Coeff lambda_rational(std::int64_t n) const;

  std::vector<std::string> notes;

 private:
  RealQuadraticField field_;
  Weight weight_;
  Ideal level_;
  std::int64_t coeff_e_;
  std::map<Ideal, Coeff> eigen_, neb_;
};

HilbertEigenform load_eigenform(const std::string& path);
HilbertEigenform eigenform_from_json(const std::string& text);
std::string eigenform_to_json(const HilbertEigenform& form);
void save_eigenform(const HilbertEigenform& form, const std::string& path);

struct HeckeViolation {
  std::string ideal;
  std::string relation;
  Coeff expected, actual;
};

struct HeckeReport {
  std::int64_t bound = 0;
  int relations_checked = 0;
  std::vector<HeckeViolation> violations;
};

HeckeReport check_hecke_relations(const HilbertEigenform& form, std::int64_t bound);

// Classical newform data over Q.
struct ClassicalData {
  int weight = 2;
  std::int64_t level = 1;
  std::map<std::int64_t, Q> ap;
  // optional a(ell^r); when present these are used instead of the Hecke recursion
  std::map<std::int64_t, Q> prime_powers;
  std::map<std::int64_t, Coeff> character;  // empty: trivial
  Coeff chi(std::int64_t ell) const;
};

// Prime powers P^r above ell <= bound are stored whenever P^r | (ell^c)
// with ell^c <= bound, so lambda_rational(n) is available for n <= bound.
HilbertEigenform base_change(const ClassicalData& cl, const RealQuadraticField& field, std::int64_t bound);

// tau(n) for 1 <= n <= n_max (entry 0 unused).
std::vector<Z> ramanujan_tau(std::int64_t n_max);
ClassicalData discriminant_form_data(std::int64_t bound);

Coeff alpha_coeff(const HilbertEigenform& form, std::int64_t n);

struct OrdinaryCheck {
  bool ordinary;
  Coeff alpha_p;
  PAdic embedded;
};

OrdinaryCheck is_ordinary(const HilbertEigenform& form, std::int64_t p, const VEmbedding& v);

// Ordinary p-stabilisation at a prime p split in F and prime to the level:
// U-eigenvalue at each prime above p is the root of
// X^2 - lambda(P) X + N(P)^{w-1} eps(P) that is a unit under v.
HilbertEigenform p_stabilize(const HilbertEigenform& form, std::int64_t p, std::int64_t root_mod_p, int prec = 20);

}  // namespace asailab
