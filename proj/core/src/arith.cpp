#include "asailab/arith.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace asailab {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  __int128 r = 1, x = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::invalid_argument("invmod: not invertible");
  return mod(x, m);
}

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt64: negative");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    __int128 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (auto& [p, e] : factorize(n < 0 ? -n : n))
    if (e > 1) return false;
  return true;
}

std::int64_t squarefree_part(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: zero");
  std::int64_t r = n < 0 ? -1 : 1;
  for (auto& [p, e] : factorize(n < 0 ? -n : n))
    if (e % 2) r *= p;
  return r;
}

std::vector<std::int64_t> primes_upto(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n + 1), true);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

int legendre(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (p == 2 || a == 0) return a;
  if (legendre(a, p) != 1) throw std::invalid_argument("sqrt_mod_prime: non-residue");
  std::int64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = 2;
  while (legendre(z, p) != -1) ++z;
  std::int64_t m = s;
  __int128 c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0;
    __int128 tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    __int128 b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return static_cast<std::int64_t>(r);
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    int am8 = static_cast<int>(mod(a, 8));
    if ((v & 1) && (am8 == 3 || am8 == 5)) result = -result;
  }
  a = mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int n8 = static_cast<int>(n % 8);
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Q qpow(const Q& base, int e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("qpow: zero to negative power");
    Q inv = 1 / base;
    return qpow(inv, -e);
  }
  Q r = 1;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

namespace {
bool valid_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace

Q parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational number: '" + raw + "'");
  if (num[0] == '+') num.erase(0, 1);
  Z n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string to_string(const Z& z) { return z.get_str(); }

Q factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Z r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return Q(r);
}

long double to_long_double(const Z& z) {
  std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  long shift = bits > 64 ? static_cast<long>(bits - 64) : 0;
  Z t;
  mpz_tdiv_q_2exp(t.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  Z at = abs(t);
  auto mag = static_cast<long double>(mpz_get_ui(at.get_mpz_t()));
  return std::ldexp(sgn(t) < 0 ? -mag : mag, static_cast<int>(shift));
}

long double to_long_double(const Q& q) {
  std::size_t nb = mpz_sizeinbase(q.get_num_mpz_t(), 2), db = mpz_sizeinbase(q.get_den_mpz_t(), 2);
  if (nb < 16000 && db < 16000) return to_long_double(q.get_num()) / to_long_double(q.get_den());
  // Rescale huge operands to avoid overflow of the intermediate values.
  long sn = nb > 64 ? static_cast<long>(nb - 64) : 0, sd = db > 64 ? static_cast<long>(db - 64) : 0;
  Z n, d;
  mpz_tdiv_q_2exp(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(sn));
  mpz_tdiv_q_2exp(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(sd));
  return std::ldexp(to_long_double(n) / to_long_double(d), static_cast<int>(sn - sd));
}

}  // namespace asailab
