#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "asailab/arith.hpp"

namespace asailab {

using cplx = std::complex<long double>;

// Element a + b*sqrt(e) of Q or Q(sqrt(e)). e == 0 means the field is Q;
// e is squarefree and != 1 otherwise (negative values allowed).
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Coeff(Q a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Coeff(Q a, Q b, std::int64_t e);

  const Q& a() const { return a_; }
  const Q& b() const { return b_; }
  std::int64_t e() const { return e_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);
  friend Coeff operator+(Coeff x, const Coeff& y) { return x += y; }
  friend Coeff operator-(Coeff x, const Coeff& y) { return x -= y; }
  friend Coeff operator*(Coeff x, const Coeff& y) { return x *= y; }
  friend Coeff operator/(Coeff x, const Coeff& y) { return x /= y; }
  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  Coeff conj() const;          // a - b*sqrt(e)
  Q norm() const;              // a^2 - e*b^2
  Coeff pow(int n) const;
  cplx value() const;          // sqrt(e) > 0, or i*sqrt(|e|) when e < 0

  std::string str() const;

 private:
  Q a_, b_;
  std::int64_t e_ = 0;

  static std::int64_t join(const Coeff& x, const Coeff& y);
  void tidy();
};

// "p/q" or "a+b*sqrt(e)" textual forms accepted by parse_coeff: "p/q" only,
// or a,b pair given separately.
Coeff coeff_from_parts(const std::string& a, const std::string& b, std::int64_t e);

}  // namespace asailab
