#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace asailab {

using Q = mpq_class;
using Z = mpz_class;

// Integer utilities over 64-bit values. Products go through __int128.
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m);
std::int64_t invmod(std::int64_t a, std::int64_t m);
std::int64_t isqrt64(std::int64_t n);
bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> primes_upto(std::int64_t n);
int legendre(std::int64_t a, std::int64_t p);
// Square root of a modulo an odd prime p; requires a to be a residue.
std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p);
std::int64_t squarefree_part(std::int64_t n);
int kronecker_symbol(std::int64_t a, std::int64_t n);
std::int64_t ipow(std::int64_t b, int e);

// Rationals
Q qpow(const Q& base, int e);
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);
std::string to_string(const Z& z);
Q factorial(int n);
long double to_long_double(const Z& z);
long double to_long_double(const Q& q);

}  // namespace asailab
