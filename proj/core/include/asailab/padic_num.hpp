#pragma once

#include <cstdint>
#include <string>

#include "asailab/arith.hpp"
#include "asailab/coeff.hpp"

namespace asailab {

// p-adic number p^val * unit, unit known modulo p^prec.
struct PAdic {
  std::int64_t p = 2;
  int prec = 20;
  bool zero = true;  // zero to the working precision
  std::int64_t val = 0;
  Z unit = 0;

  std::string str() const;
};

std::int64_t valuation(const Z& z, std::int64_t p);
std::int64_t valuation(const Q& q, std::int64_t p);

// Embedding of Q(sqrt(e)) into Q_p determined by a square root of e mod p,
// Hensel-lifted to p^prec. For e == 0 this is the inclusion of Q.
class VEmbedding {
 public:
  VEmbedding(std::int64_t p, std::int64_t e, std::int64_t root_mod_p, int prec = 20);
  static VEmbedding rational(std::int64_t p, int prec = 20) { return VEmbedding(p, 0, 0, prec); }

  std::int64_t p() const { return p_; }
  std::int64_t e() const { return e_; }
  int prec() const { return prec_; }
  const Z& root() const { return root_; }

  PAdic embed(const Coeff& x) const;
  PAdic embed(const Q& x) const;

 private:
  std::int64_t p_, e_;
  int prec_;
  Z pN_, root_;
};

}  // namespace asailab
