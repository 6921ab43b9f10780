#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "asailab/coeff.hpp"
#include "asailab/eigenform.hpp"
#include "asailab/poly.hpp"
#include "asailab/quadfield.hpp"

namespace asailab {

// Square matrix over the coefficient field, row major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), Coeff(0)) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Coeff>>& rows);

  int size() const { return n_; }
  Coeff& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Coeff& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Coeff& c) const;
  bool operator==(const Matrix& o) const;
  Coeff trace() const;
  Coeff det() const;
  Matrix inverse() const;

 private:
  int n_ = 0;
  std::vector<Coeff> a_;
};

// det(1 - X*A), by Faddeev-LeVerrier.
Poly charpoly_reversed(const Matrix& A);

// Basis order e1⊗e1, e2⊗e1, e1⊗e2, e2⊗e2 (index i + 2j for e_i⊗e_j).
Matrix tensor_induce_split(const Matrix& M1, const Matrix& M2);
// e_i⊗e_j -> (M e_j)⊗e_i
Matrix tensor_induce_inert(const Matrix& M);

// Matrix [[0, -det], [1, trace]] with char poly 1 - trace X + det X^2.
Matrix companion(const Coeff& trace, const Coeff& det);

struct FrobData {
  std::optional<Matrix> matrix;
  Coeff trace, det;

  static FrobData from_trace_det(Coeff trace, Coeff det);
  static FrobData from_matrix(const Matrix& M);
  Matrix as_matrix() const;
};

// Frobenius data at the primes above ell, together with the Tate twist
// t + t' by which the Asai representation is normalized.
struct LocalAsaiData {
  std::int64_t ell = 0;
  SplitKind kind = SplitKind::Split;
  std::vector<FrobData> frob;  // two entries when split, one when inert
  int twist = 0;
};

LocalAsaiData local_asai_data(const HilbertEigenform& form, std::int64_t ell);

// Hecke side: the split/inert Euler factor with eigenvalues substituted,
// normalized so that T(ell) acts as ell^{-(t+t')} times its eigenvalue.
Poly asai_charpoly(const LocalAsaiData& data);
Poly asai_charpoly(const HilbertEigenform& form, std::int64_t ell);
// Galois side: the twisted tensor-induced Frobenius.
Matrix asai_frobenius(const LocalAsaiData& data);

bool verify_proj_Pl(const LocalAsaiData& data);
bool verify_proj_Pl(const HilbertEigenform& form, std::int64_t ell);

// Element of the group ring K[(Z/m)^x], keyed by residues in [0, m).
class GroupRingElement {
 public:
  explicit GroupRingElement(std::int64_t m = 1);
  static GroupRingElement scalar(std::int64_t m, const Coeff& c);
  // sigma_a^e for a unit a mod m; e may be negative.
  static GroupRingElement sigma(std::int64_t m, std::int64_t a, int e = 1);

  std::int64_t modulus() const { return m_; }
  const std::map<std::int64_t, Coeff>& terms() const { return terms_; }
  Coeff coefficient(std::int64_t a) const;
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement& y) { return x += y; }
  friend GroupRingElement operator-(GroupRingElement x, const GroupRingElement& y) { return x -= y; }
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
  GroupRingElement scaled(const Coeff& c) const;
  bool operator==(const GroupRingElement& o) const { return m_ == o.m_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  std::int64_t m_;
  std::map<std::int64_t, Coeff> terms_;
  void add(std::int64_t a, const Coeff& c);
};

// (Z/m)^x as a product of cyclic groups; characters are exponent vectors
// chi(g_i) = exp(2 pi i c_i / ord_i).
class DirichletGroup {
 public:
  explicit DirichletGroup(std::int64_t m);

  std::int64_t modulus() const { return m_; }
  const std::vector<std::int64_t>& generators() const { return gens_; }
  const std::vector<int>& orders() const { return orders_; }
  int exponent() const { return exponent_; }
  std::int64_t order() const { return static_cast<std::int64_t>(units_.size()); }
  const std::vector<std::int64_t>& units() const { return units_; }

  std::vector<int> dlog(std::int64_t a) const;
  std::vector<std::vector<int>> characters() const;
  // chi(a) = zeta_exponent^r; returns r, or -1 when gcd(a, m) > 1.
  int char_index(const std::vector<int>& chi, std::int64_t a) const;
  cplx value(const std::vector<int>& chi, std::int64_t a) const;
  int char_order(const std::vector<int>& chi) const;
  bool is_primitive(const std::vector<int>& chi) const;

 private:
  std::int64_t m_;
  std::vector<std::int64_t> gens_, units_;
  std::vector<int> orders_;
  int exponent_ = 1;
  std::map<std::int64_t, std::vector<int>> log_;
};

cplx evaluate_character(const GroupRingElement& x, const DirichletGroup& G, const std::vector<int>& chi);

// ell^j sigma [(ell-1)(1 - ell^{k+k'-2j} sigma^{-2} eps(ell)) - ell P(ell^{-1-j} sigma^{-1})]
// in K[(Z/m)^x], with sigma the class of ell.
GroupRingElement euler_system_norm_factor(const HilbertEigenform& form, std::int64_t ell, int j, std::int64_t m);
GroupRingElement norm_factor_from_poly(const Poly& P, std::int64_t ell, int j, int k, int kp, const Coeff& eps_ell,
                                       std::int64_t m);

// c^2 - c^{2j-k-k'} eps sigma_c^2. `coprime` is the caller's assertion that
// gcd(c, 6 p m N) = 1.
GroupRingElement c_factor(std::int64_t c, int j, int k, int kp, const Coeff& eps_value, std::int64_t m,
                          bool coprime = true);

}  // namespace asailab
