#include "asailab/coeff.hpp"

#include <cmath>
#include <stdexcept>

namespace asailab {

Coeff::Coeff(Q a, Q b, std::int64_t e) : a_(std::move(a)), b_(std::move(b)), e_(e) {
  if (e_ != 0 && (e_ == 1 || !is_squarefree(e_)))
    throw std::invalid_argument("coefficient field needs a squarefree e != 0, 1");
  if (e_ == 0 && b_ != 0) throw std::invalid_argument("sqrt part requires e != 0");
  tidy();
}

void Coeff::tidy() {
  if (b_ == 0) e_ = 0;
}

std::int64_t Coeff::join(const Coeff& x, const Coeff& y) {
  if (x.e_ == 0) return y.e_;
  if (y.e_ == 0 || y.e_ == x.e_) return x.e_;
  throw std::invalid_argument("coefficients live in different quadratic fields");
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  e_ = join(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  tidy();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  e_ = join(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  tidy();
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  std::int64_t e = join(*this, o);
  Q a = a_ * o.a_ + b_ * o.b_ * e;
  Q b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  e_ = e;
  tidy();
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  Q n = o.norm();
  if (n == 0) throw std::domain_error("division by zero coefficient");
  Coeff c = o.conj();
  *this *= c;
  a_ /= n;
  b_ /= n;
  tidy();
  return *this;
}

bool Coeff::operator==(const Coeff& o) const {
  return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || e_ == o.e_);
}

Coeff Coeff::conj() const {
  Coeff r = *this;
  r.b_ = -r.b_;
  return r;
}

Q Coeff::norm() const { return a_ * a_ - b_ * b_ * e_; }

Coeff Coeff::pow(int n) const {
  if (n < 0) return Coeff(1) / pow(-n);
  Coeff r(1), x = *this;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}


cplx Coeff::value() const {
  long double a = to_long_double(a_);
  if (b_ == 0) return {a, 0};
  long double b = to_long_double(b_);
  if (e_ > 0) return {a + b * std::sqrt(static_cast<long double>(e_)), 0};
  return {a, b * std::sqrt(static_cast<long double>(-e_))};
}

std::string Coeff::str() const {
  if (b_ == 0) return to_string(a_);
  std::string s = a_ == 0 ? "" : to_string(a_) + (b_ > 0 ? "+" : "");
  return s + to_string(b_) + "*sqrt(" + std::to_string(e_) + ")";
}

Coeff coeff_from_parts(const std::string& a, const std::string& b, std::int64_t e) {
  Q qb = parse_rational(b);
  return Coeff(parse_rational(a), qb, qb == 0 ? 0 : e);
}

}  // namespace asailab
