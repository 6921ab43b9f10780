#include "asailab/padic_num.hpp"

#include <sstream>
#include <stdexcept>

#include "asailab/errors.hpp"

namespace asailab {

std::int64_t valuation(const Z& z, std::int64_t p) {
  if (z == 0) throw std::domain_error("valuation of zero");
  Z t = z;
  std::int64_t v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

std::int64_t valuation(const Q& q, std::int64_t p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

std::string PAdic::str() const {
  if (zero) return "O(" + std::to_string(p) + "^" + std::to_string(val) + ")";
  std::ostringstream os;
  os << p << "^" << val << " * " << unit.get_str() << " + O(" << p << "^" << (val + prec) << ")";
  return os.str();
}

VEmbedding::VEmbedding(std::int64_t p, std::int64_t e, std::int64_t root_mod_p, int prec)
    : p_(p), e_(e), prec_(prec) {
  if (!is_prime(p)) throw ValidationError("embedding prime " + std::to_string(p) + " is not prime");
  if (prec < 1) throw ValidationError("p-adic precision must be positive");
  mpz_ui_pow_ui(pN_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(prec));
  if (e == 0) return;
  if (p == 2 || e % p == 0)
    throw ValidationError("embedding needs p odd and prime to e");
  if (mod(root_mod_p * root_mod_p - e, p) != 0)
    throw HypothesisError("no embedding: " + std::to_string(root_mod_p) + "^2 != " + std::to_string(e) + " mod " +
                          std::to_string(p));
  // Newton iteration r <- r - (r^2 - e)/(2r)
  Z r = mod(root_mod_p, p), E = e;
  for (int k = 0; k < 64; ++k) {
    Z f = r * r - E, d = 2 * r, inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pN_.get_mpz_t());
    Z next = r - f * inv;
    mpz_mod(next.get_mpz_t(), next.get_mpz_t(), pN_.get_mpz_t());
    if (next == r) break;
    r = next;
  }
  root_ = r;
}

namespace {
// Unit part of q modulo pN together with its valuation.
std::pair<std::int64_t, Z> split(const Q& q, std::int64_t p, const Z& pN) {
  std::int64_t v = valuation(q, p);
  Q u = q;
  if (v > 0) u /= qpow(Q(p), static_cast<int>(v));
  if (v < 0) u *= qpow(Q(p), static_cast<int>(-v));
  Z inv, num = u.get_num(), den = u.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pN.get_mpz_t());
  Z r = num * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pN.get_mpz_t());
  return {v, r};
}
}  // namespace

PAdic VEmbedding::embed(const Q& x) const { return embed(Coeff(x)); }

PAdic VEmbedding::embed(const Coeff& x) const {
  PAdic out;
  out.p = p_;
  out.prec = prec_;
  if (x.is_zero()) return out;
  if (!x.is_rational() && x.e() != e_)
    throw ValidationError("coefficient field Q(sqrt(" + std::to_string(x.e()) + ")) does not match the embedding");
  std::int64_t s = INT64_MAX;
  std::pair<std::int64_t, Z> a{0, 0}, b{0, 0};
  if (x.a() != 0) {
    a = split(x.a(), p_, pN_);
    s = std::min(s, a.first);
  }
  if (x.b() != 0) {
    b = split(x.b(), p_, pN_);
    s = std::min(s, b.first);
  }
  Z total = 0, pk;
  if (x.a() != 0) {
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(a.first - s));
    total += pk * a.second;
  }
  if (x.b() != 0) {
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(b.first - s));
    total += pk * b.second * root_;
  }
  mpz_mod(total.get_mpz_t(), total.get_mpz_t(), pN_.get_mpz_t());
  if (total == 0) {
    // x != 0 but its components cancel to the working precision: lift further.
    Z r0 = root_ % p_;
    return VEmbedding(p_, e_, r0.get_si(), 2 * prec_).embed(x);
  }
  std::int64_t extra = valuation(total, p_);
  Z pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(extra));
  out.zero = false;
  out.val = s + extra;
  out.unit = total / pe;
  out.prec = prec_ - static_cast<int>(extra);
  return out;
}

}  // namespace asailab
