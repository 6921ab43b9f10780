#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asailab/arith.hpp"
#include "asailab/coeff.hpp"
#include "asailab/quadfield.hpp"

namespace asailab {

enum class HKind { T, S, Diamond, R, Sigma, U };

// Argument as a product of labels with integer exponents.
using HArg = std::map<std::string, int>;

struct HeckeSymbol {
  HKind kind;
  HArg arg;
  auto operator<=>(const HeckeSymbol&) const = default;
};

struct HMonomial {
  int x = 0;  // power of the formal variable X
  std::map<HeckeSymbol, int> factors;
  auto operator<=>(const HMonomial&) const = default;
};

class HeckePolynomial {
 public:
  HeckePolynomial() = default;
  HeckePolynomial(long c);  // NOLINT(google-explicit-constructor)
  HeckePolynomial(const Q& c);  // NOLINT(google-explicit-constructor)
  static HeckePolynomial symbol(HKind kind, const HArg& arg, int exponent = 1);
  static HeckePolynomial var_x(int exponent = 1);

  const std::map<HMonomial, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const HMonomial& m, const Q& c);

  HeckePolynomial& operator+=(const HeckePolynomial& o);
  HeckePolynomial& operator-=(const HeckePolynomial& o);
  friend HeckePolynomial operator+(HeckePolynomial a, const HeckePolynomial& b) { return a += b; }
  friend HeckePolynomial operator-(HeckePolynomial a, const HeckePolynomial& b) { return a -= b; }
  friend HeckePolynomial operator*(const HeckePolynomial& a, const HeckePolynomial& b);
  HeckePolynomial operator-() const;
  bool operator==(const HeckePolynomial& o) const { return terms_ == o.terms_; }
  HeckePolynomial pow(int e) const;

  // Coefficient of X^d as a polynomial without X.
  HeckePolynomial x_coefficient(int d) const;
  int max_x_degree() const;
  // Exponents of the Sigma symbol with the given label that occur.
  std::set<int> sigma_degrees(const std::string& label) const;

 private:
  std::map<HMonomial, Q> terms_;
};

// Declared labels: primes with norms, units, and decompositions of
// rational primes into prime labels.
class HeckeContext {
 public:
  void declare_prime(const std::string& label, const Q& norm);
  void declare_unit(const std::string& label);
  void declare_rational(std::int64_t ell, const HArg& decomposition);
  // Convenience: split / inert / ramified declarations with generated
  // labels l<ell>, l<ell>b / q<ell> / r<ell>.
  void declare_from_splitting(std::int64_t ell, SplitKind kind);

  bool is_prime_label(const std::string& s) const { return primes_.count(s) > 0; }
  bool is_unit_label(const std::string& s) const { return units_.count(s) > 0; }
  const Q& norm(const std::string& label) const;
  HArg integer_arg(std::int64_t n) const;
  const std::map<std::int64_t, HArg>& rationals() const { return rationals_; }

 private:
  std::map<std::string, Q> primes_;
  std::set<std::string> units_;
  std::map<std::int64_t, HArg> rationals_;
};

std::string split_label(std::int64_t ell, int which);  // which = 0, 1
std::string inert_label(std::int64_t ell);
std::string ramified_label(std::int64_t ell);

// Builders over a context; arguments given as integers are factored.
HeckePolynomial T(const HeckeContext& c, std::int64_t n);
HeckePolynomial S(const HeckeContext& c, std::int64_t n);
HeckePolynomial Diamond(const HeckeContext& c, std::int64_t n, int e = 1);
HeckePolynomial Rop(const HeckeContext& c, std::int64_t n, int e = 1);
HeckePolynomial Sigma(std::int64_t n, int e = 1);

HeckePolynomial normalize(const HeckeContext& c, const HeckePolynomial& p);

// Drop every monomial containing a symbol of one of the given kinds.
HeckePolynomial kill_kinds(const HeckePolynomial& p, const std::set<HKind>& kinds);
// Replace X by a polynomial.
HeckePolynomial substitute_x(const HeckePolynomial& p, const HeckePolynomial& x_value);
// Evaluate a normalized polynomial in X under values for every symbol.
std::vector<Coeff> specialize(const HeckePolynomial& p, const std::map<HeckeSymbol, Coeff>& values);

std::string format(const HeckePolynomial& p);
std::string format(const HeckeSymbol& s);

HeckePolynomial asai_euler_symbolic(const HeckeContext& c, std::int64_t ell, SplitKind kind);

bool verify_split_x2_identity(const HeckeContext& c, std::int64_t ell);

struct SplitIdentityResult {
  bool holds;
  bool narrowly_principal;
  std::optional<FieldElement> gen_lambda, gen_lambda_bar;
  HeckePolynomial lhs, rhs;
};
SplitIdentityResult verify_split_x2_identity(const RealQuadraticField& F, std::int64_t ell);

HeckePolynomial norm_relation_symbolic(const HeckeContext& c, std::int64_t ell, SplitKind kind, int j, int k, int kp);

// Textual grammar, e.g. "T(l1)^2 - T(l1^2) - 11^2*S(11)".
HeckePolynomial parse_hecke(const HeckeContext& c, const std::string& text);
// Header lines: "prime <label> <norm>", "unit <label>",
// "split <ell> <label> <label>", "inert <ell> [label]", "ramified <ell> [label]".
HeckeContext parse_hecke_header(const std::string& text);

}  // namespace asailab
