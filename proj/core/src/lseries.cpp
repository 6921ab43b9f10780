#include "asailab/lseries.hpp"

#include <cmath>
#include <sstream>

#include "asailab/asairep.hpp"
#include "asailab/errors.hpp"
#include "asailab/special.hpp"

namespace asailab {

namespace {

std::vector<Coeff> series_inverse(const Poly& p, int r_max) {
  std::vector<Coeff> e(static_cast<std::size_t>(r_max + 1), Coeff(0));
  if (p.empty() || p[0].is_zero()) throw std::domain_error("series inverse needs a unit constant term");
  Coeff inv0 = Coeff(1) / p[0];
  e[0] = inv0;
  for (int r = 1; r <= r_max; ++r) {
    Coeff s(0);
    for (int i = 1; i <= r && i < static_cast<int>(p.size()); ++i)
      s += p[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(r - i)];
    e[static_cast<std::size_t>(r)] = -s * inv0;
  }
  return e;
}

std::vector<Coeff> series_mul(const std::vector<Coeff>& a, const std::vector<Coeff>& b, int r_max) {
  std::vector<Coeff> c(static_cast<std::size_t>(r_max + 1), Coeff(0));
  for (int i = 0; i <= r_max && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= r_max && j < static_cast<int>(b.size()); ++j)
      c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return c;
}

int twist(const HilbertEigenform& f) { return f.weight().t + f.weight().tp; }

struct RamifiedData {
  Coeff a, b;  // twisted lambda(P) and N(P)^{w-1} eps(P), both divided by the twist
  Coeff chi_ell;
};

RamifiedData ramified_data(const HilbertEigenform& form, std::int64_t ell) {
  const auto& F = form.field();
  Ideal P = F.splitting_type(ell).primes.at(0);
  auto lam = form.stored(P);
  if (!lam) throw MissingDataError("missing eigenvalue at " + F.label(P));
  Coeff c(qpow(Q(ell), twist(form)));
  Coeff b = form.epsilon(P) * Coeff(qpow(Q(ell), form.weight().w() - 1));
  return {*lam / c, b / (c * c), form.epsilon(P).pow(2)};
}

Q chi_weight(const HilbertEigenform& f) { return Q(f.weight().k + f.weight().kp + 2); }

// (1 - chi(ell) ell^{k+k'+2} X^2)^{-1} as a polynomial to invert.
Poly chi_local_poly(const HilbertEigenform& f, std::int64_t ell) {
  Coeff c = asai_chi(f, ell) * Coeff(qpow(Q(ell), f.weight().k + f.weight().kp + 2));
  return {Coeff(1), Coeff(0), -c};
}

bool is_bad(const HilbertEigenform& f, std::int64_t ell) { return f.level_integer() % ell == 0; }

}  // namespace

bool is_zero_form(const HilbertEigenform& form) { return form.eigenvalues().empty(); }

Coeff asai_chi(const HilbertEigenform& form, std::int64_t n) {
  if (gcd64(n, form.level_integer()) != 1) return Coeff(0);
  return form.epsilon(form.field().rational(n));
}

std::vector<Coeff> asai_dirichlet_coefficients(const HilbertEigenform& form, std::int64_t n_max) {
  std::vector<Coeff> a(static_cast<std::size_t>(n_max + 1), Coeff(0));
  if (is_zero_form(form)) return a;
  for (std::int64_t n = 1; n <= n_max; ++n) a[static_cast<std::size_t>(n)] = alpha_coeff(form, n);
  return a;
}

LValue imprimitive_L(const HilbertEigenform& form, cplx s, std::int64_t n_cutoff) {
  if (n_cutoff < 1) throw ValidationError("n_cutoff must be positive");
  LValue r;
  r.truncation = {{"n_cutoff", n_cutoff}, {"dirichlet_L_terms", n_cutoff}};
  r.normalization = "L_(N)(chi, 2s-k-k'-2) * sum alpha(n) n^-s, alpha(n) = n^-(t+t') lambda(n)";
  if (is_zero_form(form)) {
    r.value = 0;
    return r;
  }
  auto alpha = asai_dirichlet_coefficients(form, n_cutoff);
  cplx series = 0;
  for (std::int64_t n = n_cutoff; n >= 1; --n)
    series += alpha[static_cast<std::size_t>(n)].value() * std::exp(-s * std::log(static_cast<long double>(n)));
  cplx s2 = 2.0L * s - static_cast<long double>(form.weight().k + form.weight().kp + 2);
  cplx lchi = 0;
  for (std::int64_t d = n_cutoff; d >= 1; --d) {
    Coeff c = asai_chi(form, d);
    if (!c.is_zero()) lchi += c.value() * std::exp(-s2 * std::log(static_cast<long double>(d)));
  }
  r.value = lchi * series;
  return r;
}

std::vector<Coeff> local_imprimitive_series(const HilbertEigenform& form, std::int64_t ell, int r_max) {
  const auto& F = form.field();
  if (is_bad(form, ell)) {
    std::vector<Coeff> e(static_cast<std::size_t>(r_max + 1));
    std::int64_t q = 1;
    for (int r = 0; r <= r_max; ++r) {
      e[static_cast<std::size_t>(r)] = form.lambda_rational(q) / Coeff(qpow(Q(ell), r * twist(form)));
      if (r < r_max) q *= ell;
    }
    return e;
  }
  auto zeta = series_inverse(chi_local_poly(form, ell), r_max);
  if (F.splitting_type(ell).kind == SplitKind::Ramified) {
    RamifiedData d = ramified_data(form, ell);
    Poly den = {Coeff(1), -(d.a * d.a - Coeff(2) * d.b), d.b * d.b};
    auto inv = series_inverse(den, r_max);
    return series_mul(series_mul(Poly{Coeff(1), d.b}, inv, r_max), zeta, r_max);
  }
  return series_inverse(asai_charpoly(form, ell), r_max);
}

LValue euler_product_L(const HilbertEigenform& form, cplx s, std::int64_t ell_cutoff, const BadFactorSet& bad,
                       EulerMode mode) {
  if (ell_cutoff < 2) throw ValidationError("ell_cutoff must be >= 2");
  LValue r;
  r.truncation = {{"ell_cutoff", ell_cutoff}};
  r.normalization = mode == EulerMode::Primitive ? "prod_l C_l(l^-s)/P_l(l^-s) (primitive factors, C_l supplied)"
                                                 : "prod_l local factors of L^imp (imprimitive)";
  if (is_zero_form(form)) {
    r.value = 0;
    return r;
  }
  const auto& F = form.field();
  cplx prod = 1;
  std::int64_t bad_terms = 0;
  for (std::int64_t ell : primes_upto(ell_cutoff)) {
    cplx X = std::exp(-s * std::log(static_cast<long double>(ell)));
    auto it = bad.find(ell);
    if (mode == EulerMode::Primitive && (it != bad.end() || is_bad(form, ell))) {
      if (it == bad.end() || !it->second.P)
        throw MissingDataError("primitive mode needs P_l at l = " + std::to_string(ell));
      cplx c = it->second.C ? poly_eval(*it->second.C, X) : cplx(1);
      prod *= c / poly_eval(*it->second.P, X);
      continue;
    }
    if (is_bad(form, ell)) {
      cplx sum = 0, term;
      Coeff c(qpow(Q(ell), twist(form)));
      std::int64_t q = 1;
      cplx Xr = 1;
      for (int rr = 0; rr < 400; ++rr) {
        term = (form.lambda_rational(q) / c.pow(rr)).value() * Xr;
        sum += term;
        ++bad_terms;
        if (rr > 0 && std::abs(term) < 1e-22L * std::abs(sum)) break;
        if (q > INT64_MAX / ell) break;
        q *= ell;
        Xr *= X;
      }
      prod *= sum;
      continue;
    }
    if (F.splitting_type(ell).kind == SplitKind::Ramified) {
      RamifiedData d = ramified_data(form, ell);
      cplx a = d.a.value(), b = d.b.value();
      cplx num = 1.0L + b * X;
      cplx den = 1.0L - (a * a - 2.0L * b) * X + b * b * X * X;
      prod *= num / den / poly_eval(chi_local_poly(form, ell), X);
      continue;
    }
    prod /= poly_eval(asai_charpoly(form, ell), X);
  }
  if (bad_terms) r.truncation["bad_series_terms"] = bad_terms;
  r.value = prod;
  return r;
}

std::vector<Coeff> imprimitive_coefficients(const HilbertEigenform& form, std::int64_t n_max) {
  auto alpha = asai_dirichlet_coefficients(form, n_max);
  std::vector<Coeff> c(static_cast<std::size_t>(n_max + 1), Coeff(0));
  Q wt = chi_weight(form);
  for (std::int64_t d = 1; d * d <= n_max; ++d) {
    Coeff x = asai_chi(form, d);
    if (x.is_zero()) continue;
    x *= Coeff(qpow(Q(d), static_cast<int>(wt.get_num().get_si())));
    for (std::int64_t m = 1; m * d * d <= n_max; ++m)
      c[static_cast<std::size_t>(m * d * d)] += x * alpha[static_cast<std::size_t>(m)];
  }
  return c;
}

std::vector<Coeff> euler_coefficients(const HilbertEigenform& form, std::int64_t n_max) {
  std::vector<Coeff> c(static_cast<std::size_t>(n_max + 1), Coeff(0));
  if (is_zero_form(form)) return c;
  c[1] = Coeff(1);
  std::vector<bool> done(static_cast<std::size_t>(n_max + 1), false);
  done[1] = true;
  // Multiply in one prime at a time: c(n * ell^r) = c(n) e_ell(r) for n prime to ell.
  for (std::int64_t ell : primes_upto(n_max)) {
    int r_max = 0;
    for (std::int64_t q = ell; q <= n_max; q *= ell) ++r_max;
    auto e = local_imprimitive_series(form, ell, r_max);
    std::vector<std::int64_t> base;
    for (std::int64_t n = 1; n <= n_max; ++n)
      if (done[static_cast<std::size_t>(n)] && n % ell != 0) base.push_back(n);
    for (std::int64_t n : base) {
      std::int64_t q = n * ell;
      for (int r = 1; r <= r_max && q <= n_max; ++r, q *= ell) {
        c[static_cast<std::size_t>(q)] = c[static_cast<std::size_t>(n)] * e[static_cast<std::size_t>(r)];
        done[static_cast<std::size_t>(q)] = true;
        if (q > n_max / ell) break;
      }
    }
  }
  return c;
}

CoefficientCheck check_euler_coefficients(const HilbertEigenform& form, std::int64_t n_max) {
  auto a = imprimitive_coefficients(form, n_max);
  auto b = euler_coefficients(form, n_max);
  CoefficientCheck r;
  r.n_max = n_max;
  for (std::int64_t n = 1; n <= n_max; ++n)
    if (a[static_cast<std::size_t>(n)] != b[static_cast<std::size_t>(n)]) {
      if (!r.mismatches) r.first_mismatch = n;
      ++r.mismatches;
    }
  return r;
}

std::vector<cplx> poly_roots(const Poly& p0) {
  Poly p = trim(p0);
  int n = static_cast<int>(p.size()) - 1;
  if (n < 1) return {};
  std::vector<cplx> a(static_cast<std::size_t>(n + 1));
  cplx lead = p.back().value();
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)].value() / lead;
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(a[static_cast<std::size_t>(i)]), 1.0L / (n - i)));
  radius = std::max(radius, 1e-30L);
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = radius * std::polar(1.0L, 2 * kPi * i / n + 0.4L);
  auto eval = [&](cplx x) {
    cplx r = 0;
    for (int i = n; i >= 0; --i) r = r * x + a[static_cast<std::size_t>(i)];
    return r;
  };
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      cplx den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      cplx d = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= d;
      change = std::max(change, std::abs(d) / std::max(std::abs(z[static_cast<std::size_t>(i)]), 1e-300L));
    }
    if (change < 1e-19L) break;
  }
  return z;
}

std::vector<ClReport> check_Cl_divisibility(const BadFactorSet& bad, int k, int kp) {
  std::vector<ClReport> out;
  const long double lo = (k + kp) / 2.0L, hi = (k + kp + 2) / 2.0L;
  for (const auto& [ell, f] : bad) {
    ClReport r;
    r.ell = ell;
    r.complete = f.C && f.P;
    if (!r.complete) {
      r.note = "C_l or P_l missing";
      out.push_back(r);
      continue;
    }
    if (trim(*f.P).empty()) {
      r.note = "P_l is zero";
      out.push_back(r);
      continue;
    }
    r.divides = poly_divmod(*f.P, *f.C).second.empty() && !trim(*f.C).empty();
    r.roots_in_strip = true;
    for (cplx x : poly_roots(*f.C)) {
      long double re = -std::log(std::abs(x)) / std::log(static_cast<long double>(ell));
      r.real_parts.push_back(re);
      if (re < lo - 1e-8L || re > hi + 1e-8L) r.roots_in_strip = false;
    }
    if (!r.divides) r.note = "C_l does not divide P_l";
    out.push_back(r);
  }
  return out;
}

VanishingClaim forced_vanishing_order(int k, int kp, int j) {
  if (k < 0 || kp < 0) throw ValidationError("weights must be nonnegative");
  if (j < 0 || j > std::min(k, kp)) throw ValidationError("j must satisfy 0 <= j <= min(k, k')");
  VanishingClaim c;
  if (std::abs(k - kp) >= 3) {
    c.applicable = true;
    c.order = 1;
    c.hypothesis = "|k - k'| >= 3 and 0 <= j <= min(k, k'): L^imp vanishes to order exactly 1 at s = 1 + j";
  } else {
    c.hypothesis = "|k - k'| < 3: no claim";
  }
  return c;
}

ClosedForm ClosedForm::make(Q rational, int i_power, int pi_power, std::int64_t sqrt_arg) {
  if (sqrt_arg <= 0) throw ValidationError("square root argument must be positive");
  ClosedForm c;
  c.pi_power = pi_power;
  std::int64_t sf = squarefree_part(sqrt_arg);
  std::int64_t sq = isqrt64(sqrt_arg / sf);
  c.rational = rational * sq;
  c.sqrt_arg = sf;
  int ip = ((i_power % 4) + 4) % 4;
  if (ip >= 2) {
    c.rational = -c.rational;
    ip -= 2;
  }
  c.i_power = ip;
  if (c.rational == 0) c = ClosedForm{};
  return c;
}

cplx ClosedForm::value() const {
  cplx v = to_long_double(rational) * std::pow(kPi, static_cast<long double>(pi_power)) *
           std::sqrt(static_cast<long double>(sqrt_arg));
  return i_power ? v * cplx(0, 1) : v;
}

std::string ClosedForm::str() const {
  std::ostringstream os;
  os << to_string(rational);
  if (i_power) os << "*i";
  if (pi_power) os << "*pi^" << pi_power;
  if (sqrt_arg != 1) os << "*sqrt(" << sqrt_arg << ")";
  return os.str();
}

bool ClosedForm::operator==(const ClosedForm& o) const {
  return rational == o.rational && i_power == o.i_power && pi_power == o.pi_power && sqrt_arg == o.sqrt_arg;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  return ClosedForm::make(a.rational * b.rational, a.i_power + b.i_power, a.pi_power + b.pi_power, a.sqrt_arg * b.sqrt_arg);
}

ClosedForm operator/(const ClosedForm& a, const ClosedForm& b) {
  if (b.rational == 0) throw std::domain_error("division by a zero closed form");
  return ClosedForm::make(a.rational / (b.rational * b.sqrt_arg), a.i_power - b.i_power, a.pi_power - b.pi_power,
                          a.sqrt_arg * b.sqrt_arg);
}

namespace {
// D^{(j+1)/2}
ClosedForm disc_power(std::int64_t D, int j) {
  if (D <= 0) throw ValidationError("discriminant must be positive");
  Q r = qpow(Q(D), (j + 1) / 2);
  return ClosedForm::make(r, 0, 0, (j + 1) % 2 ? D : 1);
}
}  // namespace

ClosedForm unfolding_constant(int k, int kp, int j, std::int64_t N, std::int64_t D) {
  if (!(0 <= j && j <= kp && kp <= k)) throw ValidationError("unfolding constant needs 0 <= j <= k' <= k");
  if (N < 1) throw ValidationError("N must be positive");
  Q r = ((kp - j) % 2 ? -1 : 1) * factorial(j) /
        (qpow(Q(N), k + kp - 2 * j) * qpow(Q(2), k - kp + 2 * j + 2) * factorial(kp - j));
  // 1 / (-i)^{k-k'} = i^{k-k'}
  return ClosedForm::make(r, k - kp, -(2 * j + 1 - kp), 1) * disc_power(D, j);
}

ClosedForm regulator_constant(int k, int kp, int j, std::int64_t D) {
  if (!(0 <= j && j <= std::min(k, kp))) throw ValidationError("regulator constant needs 0 <= j <= min(k, k')");
  int e = k + kp - 2 * j;
  Q r = ((kp - j) % 2 ? -1 : 1) * qpow(Q(2), e) * factorial(k) * factorial(kp) / (factorial(k - j) * factorial(kp - j));
  return ClosedForm::make(r, e, e, 1) * disc_power(D, j);
}

}  // namespace asailab
