#include "asailab/quadfield.hpp"

#include "asailab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace asailab {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("ideal arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

// Sign of u + v*sqrt(d), exactly.
int sign_exact(const Q& u, const Q& v, std::int64_t d) {
  int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  Q lhs = u * u, rhs = v * v * d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? su : sv;
}

std::int64_t to_i64(const Q& q) {
  if (q.get_den() != 1) throw std::invalid_argument("element is not integral");
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer too large");
  return q.get_num().get_si();
}

}  // namespace

std::string to_string(SplitKind k) {
  switch (k) {
    case SplitKind::Split: return "split";
    case SplitKind::Inert: return "inert";
    case SplitKind::Ramified: return "ramified";
  }
  return "?";
}

std::int64_t discriminant(std::int64_t d) {
  if (d <= 1) throw ValidationError("d must be > 1");
  if (!is_squarefree(d)) throw ValidationError("d must be squarefree");
  return mod(d, 4) == 1 ? d : 4 * d;
}

RealQuadraticField::RealQuadraticField(std::int64_t d) : d_(d), disc_(discriminant(d)) {
  if (mod(d, 4) == 1) {
    tr_ = 1;
    nm_ = (1 - d) / 4;
  } else {
    tr_ = 0;
    nm_ = -d;
  }
  sqrtd_ = std::sqrt(static_cast<long double>(d));
  compute_unit();
}

FieldElement RealQuadraticField::mul(const FieldElement& x, const FieldElement& y) const {
  Q bb = x.b * y.b;
  return {x.a * y.a - bb * nm_, x.a * y.b + x.b * y.a + bb * tr_};
}

FieldElement RealQuadraticField::add(const FieldElement& x, const FieldElement& y) const {
  return {x.a + y.a, x.b + y.b};
}

FieldElement RealQuadraticField::sub(const FieldElement& x, const FieldElement& y) const {
  return {x.a - y.a, x.b - y.b};
}

FieldElement RealQuadraticField::conj(const FieldElement& x) const {
  return {x.a + x.b * tr_, -x.b};
}

Q RealQuadraticField::norm(const FieldElement& x) const {
  return x.a * x.a + x.a * x.b * tr_ + x.b * x.b * nm_;
}

Q RealQuadraticField::trace(const FieldElement& x) const { return 2 * x.a + x.b * tr_; }

FieldElement RealQuadraticField::inverse(const FieldElement& x) const {
  Q n = norm(x);
  if (n == 0) throw std::domain_error("inverse of zero");
  FieldElement c = conj(x);
  return {c.a / n, c.b / n};
}

long double RealQuadraticField::theta1(const FieldElement& x) const {
  long double w = tr_ == 1 ? (1 + sqrtd_) / 2 : sqrtd_;
  return x.a.get_d() + x.b.get_d() * w;
}

long double RealQuadraticField::theta2(const FieldElement& x) const {
  long double w = tr_ == 1 ? (1 - sqrtd_) / 2 : -sqrtd_;
  return x.a.get_d() + x.b.get_d() * w;
}

bool RealQuadraticField::totally_positive(const FieldElement& x) const {
  Q u = tr_ == 1 ? x.a + x.b / 2 : x.a;
  Q v = tr_ == 1 ? x.b / 2 : x.b;
  return sign_exact(u, v, d_) > 0 && sign_exact(u, -v, d_) > 0;
}

FieldElement RealQuadraticField::sqrt_disc() const {
  // sqrt(d) = 2w - 1 when d = 1 mod 4; otherwise sqrt(4d) = 2w
  return tr_ == 1 ? FieldElement{-1, 2} : FieldElement{0, 2};
}

std::string RealQuadraticField::format(const FieldElement& x) const {
  std::ostringstream os;
  os << to_string(x.a);
  if (x.b != 0) os << (x.b > 0 ? "+" : "-") << to_string(abs(x.b)) << "*w";
  return os.str();
}

void RealQuadraticField::compute_unit() {
  // Convergents of gamma = (P0 + sqrt(D))/Q0 with gamma = -theta2(omega).
  Z D = d_, P = tr_ == 1 ? -1 : 0, Qd = tr_ == 1 ? 2 : 1;
  Z sq;
  mpz_sqrt(sq.get_mpz_t(), D.get_mpz_t());
  Z A2 = 0, A1 = 1, B2 = 1, B1 = 0;
  for (int step = 0; step < 200000; ++step) {
    Z num = P + sq, a;
    if (Qd > 0) {
      mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Qd.get_mpz_t());
    } else {
      Z aq = -Qd;
      mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), aq.get_mpz_t());
      a = -(a + 1);
    }
    Z A = a * A1 + A2, B = a * B1 + B2;
    A2 = A1;
    A1 = A;
    B2 = B1;
    B1 = B;
    if (B > 0 && A >= 0) {
      FieldElement x{Q(A), Q(B)};
      Q n = norm(x);
      if ((n == 1 || n == -1) && theta1(x) > 1) {
        unit_ = x;
        unit_sign_ = n > 0 ? 1 : -1;
        return;
      }
    }
    P = a * Qd - P;
    Qd = (D - P * P) / Qd;
  }
  // Fallback: exhaustive search over the omega-coefficient.
  for (std::int64_t b = 1; b <= 1000000; ++b) {
    for (int s : {-1, 1}) {
      i128 disc = static_cast<i128>(tr_) * tr_ * b * b - 4 * (static_cast<i128>(nm_) * b * b - s);
      if (disc < 0) continue;
      auto r = isqrt64(narrow(disc));
      if (static_cast<i128>(r) * r != disc) continue;
      for (std::int64_t sgn_r : {1, -1}) {
        std::int64_t twice_a = -tr_ * b + sgn_r * r;
        if (twice_a % 2 != 0) continue;
        FieldElement x{Q(twice_a / 2), Q(b)};
        if (theta1(x) > 1) {
          unit_ = x;
          unit_sign_ = s;
          return;
        }
      }
    }
  }
  throw std::runtime_error("fundamental unit not found within search bound");
}

Ideal RealQuadraticField::ideal_from_generators(const std::vector<FieldElement>& gens) const {
  std::vector<std::pair<i128, i128>> v;
  for (const auto& x : gens) {
    if (!x.is_integral()) throw std::invalid_argument("ideal generators must be integral");
    FieldElement xw = mul(x, FieldElement{0, 1});
    v.emplace_back(to_i64(x.a), to_i64(x.b));
    v.emplace_back(to_i64(xw.a), to_i64(xw.b));
  }
  // Euclid on the omega-coordinate.
  for (;;) {
    int piv = -1;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      if (v[i].second == 0) continue;
      if (piv < 0 || abs128(v[i].second) < abs128(v[piv].second)) piv = i;
    }
    if (piv < 0) throw std::invalid_argument("generators do not span a full-rank ideal");
    bool reduced = false;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      if (i == piv || v[i].second == 0) continue;
      i128 q = v[i].second / v[piv].second;
      v[i].first -= q * v[piv].first;
      v[i].second -= q * v[piv].second;
      reduced = true;
    }
    if (!reduced) {
      i128 n = 0;
      for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (i != piv) n = gcd128(n, v[i].first);
      if (n == 0) throw std::invalid_argument("generators do not span a full-rank ideal");
      i128 m = v[piv].first, g = v[piv].second;
      if (g < 0) {
        g = -g;
        m = -m;
      }
      m %= n;
      if (m < 0) m += n;
      return Ideal{narrow(n), narrow(m), narrow(g)};
    }
  }
}

Ideal RealQuadraticField::principal(const FieldElement& x) const {
  if (x.a == 0 && x.b == 0) throw std::invalid_argument("zero ideal");
  return ideal_from_generators({x});
}

Ideal RealQuadraticField::mul(const Ideal& I, const Ideal& J) const {
  FieldElement i1{Q(I.n), 0}, i2{Q(I.m), Q(I.g)}, j1{Q(J.n), 0}, j2{Q(J.m), Q(J.g)};
  return ideal_from_generators({mul(i1, j1), mul(i1, j2), mul(i2, j1), mul(i2, j2)});
}

Ideal RealQuadraticField::pow(const Ideal& I, int e) const {
  if (e < 0) throw std::invalid_argument("negative ideal power");
  Ideal r = unit_ideal();
  for (int i = 0; i < e; ++i) r = mul(r, I);
  return r;
}

Ideal RealQuadraticField::conj(const Ideal& I) const {
  return ideal_from_generators({FieldElement{Q(I.n), 0}, conj(FieldElement{Q(I.m), Q(I.g)})});
}

Ideal RealQuadraticField::rational(std::int64_t n) const {
  if (n == 0) throw std::invalid_argument("zero ideal");
  n = n < 0 ? -n : n;
  return Ideal{n, 0, n};
}

bool RealQuadraticField::contains(const Ideal& I, const FieldElement& x) const {
  if (!x.is_integral()) return false;
  Z a = x.a.get_num(), b = x.b.get_num();
  if (b % I.g != 0) return false;
  Z r = a - (b / I.g) * I.m;
  return r % I.n == 0;
}

bool RealQuadraticField::divides(const Ideal& P, const Ideal& I) const {
  return contains(P, FieldElement{Q(I.n), 0}) && contains(P, FieldElement{Q(I.m), Q(I.g)});
}

Ideal RealQuadraticField::divide_by_prime(const Ideal& I, const Ideal& P) const {
  if (!divides(P, I)) throw std::invalid_argument("prime does not divide ideal");
  Ideal J = mul(I, conj(P));
  std::int64_t c = P.norm();
  return Ideal{J.n / c, J.m / c, J.g / c};
}

bool RealQuadraticField::is_valid_ideal(const Ideal& I) const {
  if (I.n <= 0 || I.g <= 0 || I.m < 0 || I.m >= I.n) return false;
  if (I.n % I.g != 0 || I.m % I.g != 0) return false;
  try {
    return ideal_from_generators({FieldElement{Q(I.n), 0}, FieldElement{Q(I.m), Q(I.g)}}) == I;
  } catch (const std::exception&) {
    return false;
  }
}

Ideal RealQuadraticField::different() const { return principal(sqrt_disc()); }

Splitting RealQuadraticField::splitting_type(std::int64_t ell) const {
  if (!is_prime(ell)) throw std::invalid_argument("splitting_type: " + std::to_string(ell) + " is not prime");
  std::vector<std::int64_t> roots;
  if (ell == 2) {
    for (std::int64_t r = 0; r < 2; ++r)
      if (mod(r * r - tr_ * r + nm_, 2) == 0) roots.push_back(r);
  } else {
    std::int64_t disc = mod(tr_ * tr_ - 4 * nm_, ell);
    int leg = legendre(disc, ell);
    std::int64_t inv2 = invmod(2, ell);
    if (leg == 0) {
      roots.push_back(mod(tr_ * inv2, ell));
    } else if (leg == 1) {
      std::int64_t s = sqrt_mod_prime(disc, ell);
      roots.push_back(mod(static_cast<std::int64_t>(static_cast<i128>(tr_ + s) * inv2 % ell), ell));
      roots.push_back(mod(static_cast<std::int64_t>(static_cast<i128>(tr_ - s) * inv2 % ell), ell));
    }
  }
  Splitting out;
  if (roots.empty()) {
    out.kind = SplitKind::Inert;
    out.primes.push_back(rational(ell));
    return out;
  }
  bool ramified = roots.size() == 1 || disc_ % ell == 0;
  if (ramified) {
    out.kind = SplitKind::Ramified;
    out.primes.push_back(Ideal{ell, mod(-roots[0], ell), 1});
    return out;
  }
  out.kind = SplitKind::Split;
  for (auto r : roots) out.primes.push_back(Ideal{ell, mod(-r, ell), 1});
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

std::vector<std::pair<Ideal, int>> RealQuadraticField::factor(const Ideal& I) const {
  std::vector<std::pair<Ideal, int>> out;
  Ideal J = I;
  for (auto& [ell, e] : factorize(I.norm())) {
    (void)e;
    for (const auto& P : splitting_type(ell).primes) {
      int k = 0;
      while (J.norm() > 1 && divides(P, J)) {
        J = divide_by_prime(J, P);
        ++k;
      }
      if (k > 0) out.emplace_back(P, k);
    }
  }
  if (J.norm() != 1) throw std::logic_error("ideal factorization incomplete");
  return out;
}

bool RealQuadraticField::is_prime_power(const Ideal& I) const { return factor(I).size() <= 1; }

std::int64_t RealQuadraticField::prime_below(const Ideal& P) const {
  auto f = factorize(P.norm());
  if (f.size() != 1) throw std::invalid_argument("not a prime-power ideal");
  return f[0].first;
}

std::vector<Ideal> RealQuadraticField::ideals_of_norm(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("ideals_of_norm: n must be >= 1");
  std::vector<Ideal> acc{unit_ideal()};
  for (auto& [ell, e] : factorize(n)) {
    Splitting s = splitting_type(ell);
    std::vector<Ideal> local;
    switch (s.kind) {
      case SplitKind::Split:
        for (int a = 0; a <= e; ++a) local.push_back(mul(pow(s.primes[0], a), pow(s.primes[1], e - a)));
        break;
      case SplitKind::Inert:
        if (e % 2 == 0) local.push_back(rational(ipow(ell, e / 2)));
        break;
      case SplitKind::Ramified:
        local.push_back(pow(s.primes[0], e));
        break;
    }
    std::vector<Ideal> next;
    for (const auto& A : acc)
      for (const auto& B : local) next.push_back(mul(A, B));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

std::optional<FieldElement> RealQuadraticField::generator(const Ideal& I) const {
  std::int64_t N = I.norm();
  long double eps = theta1(unit_);
  long double width = tr_ == 1 ? sqrtd_ : 2 * sqrtd_;
  auto bound = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<long double>(N)) * (eps + 1) / width)) + 1;
  if (bound > 50000000) throw std::runtime_error("generator search bound too large for this field");
  for (std::int64_t mag = 0; mag <= bound; ++mag) {
    for (std::int64_t b : {mag, -mag}) {
      if (mag == 0 && b < 0) continue;
      for (int s : {1, -1}) {
        // a^2 + tr*a*b + nm*b^2 = s*N
        i128 disc = static_cast<i128>(tr_) * tr_ * b * b - 4 * (static_cast<i128>(nm_) * b * b - static_cast<i128>(s) * N);
        if (disc < 0) continue;
        std::int64_t r = isqrt64(narrow(disc));
        if (static_cast<i128>(r) * r != disc) continue;
        for (std::int64_t sr : {1, -1}) {
          std::int64_t twice_a = -tr_ * b + sr * r;
          if (mod(twice_a, 2) != 0) continue;
          FieldElement x{Q(twice_a / 2), Q(b)};
          if (contains(I, x)) return x;
        }
      }
    }
  }
  throw std::domain_error("ideal is not principal; class number > 1 is unsupported");
}

std::optional<FieldElement> RealQuadraticField::totally_positive_generator(const Ideal& I) const {
  auto x = generator(I);
  if (!x) return std::nullopt;
  FieldElement neg{-x->a, -x->b};
  FieldElement ex = mul(unit_, *x);
  FieldElement nex{-ex.a, -ex.b};
  for (const auto& c : {*x, neg, ex, nex})
    if (totally_positive(c)) return c;
  return std::nullopt;
}

std::string RealQuadraticField::label(const Ideal& I) const {
  auto list = ideals_of_norm(I.norm());
  auto it = std::find(list.begin(), list.end(), I);
  if (it == list.end()) throw std::invalid_argument("ideal not found among ideals of its norm");
  return std::to_string(I.norm()) + "." + std::to_string(it - list.begin() + 1);
}

Ideal RealQuadraticField::parse_label(const std::string& label) const {
  auto dot = label.find('.');
  if (dot == std::string::npos) throw std::invalid_argument("bad ideal label '" + label + "'");
  std::int64_t n = 0, idx = 0;
  try {
    std::size_t p1 = 0, p2 = 0;
    n = std::stoll(label.substr(0, dot), &p1);
    idx = std::stoll(label.substr(dot + 1), &p2);
    if (p1 != dot || p2 != label.size() - dot - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad ideal label '" + label + "'");
  }
  if (n < 1 || idx < 1) throw std::invalid_argument("bad ideal label '" + label + "'");
  auto list = ideals_of_norm(n);
  if (idx > static_cast<std::int64_t>(list.size()))
    throw std::invalid_argument("label '" + label + "' names no ideal of Q(sqrt(" + std::to_string(d_) + "))");
  return list[static_cast<std::size_t>(idx - 1)];
}

}  // namespace asailab
