#include "asailab/padic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "asailab/errors.hpp"
#include "asailab/special.hpp"

namespace asailab {

namespace {

std::int64_t least_root(std::int64_t e, std::int64_t p) {
  for (std::int64_t r = 0; r < p; ++r)
    if (mod(r * r - e, p) == 0) return r;
  throw HypothesisError("no square root of " + std::to_string(e) + " modulo " + std::to_string(p));
}

std::int64_t field_of(std::initializer_list<const Coeff*> xs) {
  std::int64_t e = 0;
  for (const Coeff* x : xs) {
    if (x->is_rational()) continue;
    if (e != 0 && e != x->e()) throw ValidationError("p-adic data spans two quadratic fields");
    e = x->e();
  }
  return e;
}

}  // namespace

VEmbedding OrdinaryData::embedding() const {
  if (coeff_e == 0) return VEmbedding::rational(p, prec);
  return VEmbedding(p, coeff_e, root_mod_p < 0 ? least_root(coeff_e, p) : root_mod_p, prec);
}

std::vector<std::pair<std::string, Coeff>> OrdinaryData::frobenius_eigenvalues() const {
  return {{"alpha_P*alpha_Q", alpha_P * alpha_Q},
          {"beta_P*alpha_Q", beta_P * alpha_Q},
          {"alpha_P*beta_Q", alpha_P * beta_Q},
          {"beta_P*beta_Q", beta_P * beta_Q}};
}

Coeff OrdinaryData::m_eigenvalue(MChoice choice) const {
  return choice == MChoice::BetaPAlphaQ ? beta_P * alpha_Q : alpha_P * beta_Q;
}

OrdinaryData make_ordinary_data(std::int64_t p, int k, int kp, const Coeff& aP, const Coeff& aQ, const Coeff& eP,
                                const Coeff& eQ, std::int64_t root_mod_p, int prec) {
  if (!is_prime(p)) throw ValidationError("p must be prime");
  if (k < 0 || kp < 0) throw ValidationError("weights must be nonnegative");
  if (aP.is_zero() || aQ.is_zero()) throw HypothesisError("U-eigenvalues must be nonzero");
  OrdinaryData d;
  d.p = p;
  d.k = k;
  d.kp = kp;
  d.alpha_P = aP;
  d.alpha_Q = aQ;
  d.eps_P = eP;
  d.eps_Q = eQ;
  d.beta_P = Coeff(qpow(Q(p), k + 1)) * eP / aP;
  d.beta_Q = Coeff(qpow(Q(p), kp + 1)) * eQ / aQ;
  d.coeff_e = field_of({&aP, &aQ, &eP, &eQ});
  d.prec = prec;
  if (d.coeff_e != 0) d.root_mod_p = root_mod_p < 0 ? least_root(d.coeff_e, p) : root_mod_p;
  VEmbedding v = d.embedding();
  for (const Coeff* a : {&aP, &aQ}) {
    PAdic x = v.embed(*a);
    if (x.zero || x.val != 0) throw HypothesisError("not ordinary: " + a->str() + " is not a p-adic unit");
  }
  return d;
}

OrdinaryData stabilized_params(const HilbertEigenform& form, std::int64_t p, std::int64_t root_mod_p, int prec) {
  const auto& F = form.field();
  Splitting s = F.splitting_type(p);
  if (s.kind != SplitKind::Split) throw HypothesisError("p must split in F");
  std::int64_t N = form.level_integer();
  if (N % p != 0 || (N / p) % p == 0) throw HypothesisError("p must divide the level exactly once");
  for (const auto& P : s.primes)
    if (!form.divides_level(P)) throw HypothesisError("both primes above p must divide the level");
  std::vector<Coeff> a;
  int tw[2] = {form.weight().t, form.weight().tp};
  for (int i = 0; i < 2; ++i) {
    auto lam = form.stored(s.primes[static_cast<std::size_t>(i)]);
    if (!lam) throw MissingDataError("missing U-eigenvalue at " + F.label(s.primes[static_cast<std::size_t>(i)]));
    a.push_back(*lam / Coeff(qpow(Q(p), tw[i])));
  }
  return make_ordinary_data(p, form.weight().k, form.weight().kp, a[0], a[1], form.epsilon(s.primes[0]),
                            form.epsilon(s.primes[1]), root_mod_p, prec);
}

std::vector<std::int64_t> frobenius_valuations(const OrdinaryData& d) {
  VEmbedding v = d.embedding();
  std::vector<std::int64_t> out;
  for (const auto& [name, x] : d.frobenius_eigenvalues()) {
    PAdic e = v.embed(x);
    if (e.zero) throw HypothesisError("Frobenius eigenvalue " + name + " vanishes");
    out.push_back(e.val);
  }
  return out;
}

NEZResult check_NEZ(const OrdinaryData& d) {
  NEZResult r;
  if (d.k != d.kp) {
    r.by_shortcut = true;
    return r;
  }
  VEmbedding v = d.embedding();
  for (const auto& [name, x] : d.frobenius_eigenvalues()) {
    PAdic e = v.embed(x);
    bool bad = e.zero;
    if (!bad) {
      // Roots of unity in a quadratic field have order dividing 4 or 6.
      Coeff u = x / Coeff(qpow(Q(d.p), static_cast<int>(e.val)));
      bad = u.pow(12) == Coeff(1);
    }
    if (bad) {
      r.holds = false;
      r.witness_name = name;
      r.witness = x;
      return r;
    }
  }
  return r;
}

// Cyclotomic fields

namespace {

std::vector<Q> cyclotomic_poly(int N) {
  static std::mutex mu;
  static std::map<int, std::vector<Q>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  // x^N - 1 divided by Phi_d for every proper divisor d.
  std::vector<Q> num(static_cast<std::size_t>(N + 1), Q(0));
  num[0] = -1;
  num[static_cast<std::size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    std::vector<Q> den = cyclotomic_poly(d);
    std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Q> q(dn - dd + 1, Q(0));
    for (std::size_t i = dn + 1; i-- > dd;) {
      Q c = num[i];
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[N] = num;
  return num;
}

}  // namespace

Cyclotomic::Cyclotomic(int N) : N_(N), c_(static_cast<std::size_t>(N), Q(0)) {
  if (N < 1) throw ValidationError("cyclotomic order must be positive");
}

Cyclotomic Cyclotomic::zeta_power(int N, std::int64_t e, const Q& c) {
  Cyclotomic z(N);
  z.c_[static_cast<std::size_t>(mod(e, N))] = c;
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.N_ != N_) throw std::invalid_argument("cyclotomic order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.N_ != N_) throw std::invalid_argument("cyclotomic order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.N_ != b.N_) throw std::invalid_argument("cyclotomic order mismatch");
  Cyclotomic r(a.N_);
  for (int i = 0; i < a.N_; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < a.N_; ++j)
      if (b.c_[static_cast<std::size_t>(j)] != 0)
        r.c_[static_cast<std::size_t>((i + j) % a.N_)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  return r;
}

Cyclotomic Cyclotomic::scaled(const Q& q) const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r(N_);
  for (int i = 0; i < N_; ++i) r.c_[static_cast<std::size_t>((N_ - i) % N_)] = c_[static_cast<std::size_t>(i)];
  return r;
}

Cyclotomic Cyclotomic::reduced() const {
  std::vector<Q> phi = cyclotomic_poly(N_);
  std::vector<Q> a = c_;
  std::size_t dphi = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > dphi;) {
    Q c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dphi; ++j) a[i - dphi + j] -= c * phi[j];
  }
  Cyclotomic r(N_);
  for (std::size_t i = 0; i < dphi && i < a.size(); ++i) r.c_[i] = a[i];
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : reduced().c_)
    if (x != 0) return false;
  return true;
}

std::optional<Q> Cyclotomic::as_rational() const {
  Cyclotomic r = reduced();
  for (std::size_t i = 1; i < r.c_.size(); ++i)
    if (r.c_[i] != 0) return std::nullopt;
  return r.c_[0];
}

cplx Cyclotomic::value() const {
  cplx s = 0;
  for (int i = 0; i < N_; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0)
      s += to_long_double(c_[static_cast<std::size_t>(i)]) * std::polar(1.0L, 2 * kPi * i / N_);
  return s;
}

std::string Cyclotomic::str() const {
  Cyclotomic r = reduced();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < N_; ++i) {
    const Q& c = r.c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Q m = abs(c);
    if (i == 0) os << to_string(m);
    else {
      if (m != 1) os << to_string(m) << "*";
      os << "z" << N_ << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

Cyclotomic gauss_sum(const DirichletGroup& G, const std::vector<int>& eta, std::int64_t p, int r) {
  if (r < 1) throw ValidationError("Gauss sum needs r >= 1");
  std::int64_t pr = ipow(p, r);
  if (G.modulus() != pr) throw ValidationError("character modulus differs from p^r");
  int E = G.exponent();
  int N = static_cast<int>(std::lcm(pr, static_cast<std::int64_t>(E)));
  Cyclotomic g(N);
  for (std::int64_t a : G.units()) {
    int idx = G.char_index(eta, a);
    g += Cyclotomic::zeta_power(N, a * (N / pr) - static_cast<std::int64_t>(idx) * (N / E));
  }
  return g;
}

InterpFactor pr_interp_factor(const Coeff& x, std::int64_t p, int j, int kp, int r, const DirichletGroup& G,
                              const std::vector<int>& eta) {
  if (r < 0) throw ValidationError("conductor exponent must be >= 0");
  InterpFactor f;
  f.j = j;
  f.r = r;
  if (j <= kp) {
    f.tag = "log";
    f.tag_constant = Q((kp - j) % 2 ? -1 : 1) / factorial(kp - j);
  } else {
    f.tag = "exp*";
    f.tag_constant = factorial(j - kp - 1);
  }
  if (x.is_zero()) throw HypothesisError("alpha_P beta_Q vanishes");
  Q pj = qpow(Q(p), j);
  if (r == 0) {
    Coeff den = Coeff(1) - x / Coeff(pj * p);
    if (den.is_zero()) throw HypothesisError("NEZ fails: alpha_P beta_Q = p^{1+j}");
    f.scalar = (Coeff(1) - Coeff(pj) / x) / den;
    f.value = f.scalar.value();
    return f;
  }
  if (G.modulus() != ipow(p, r)) throw ValidationError("eta must be a character modulo p^r");
  if (!G.is_primitive(eta)) throw ValidationError("eta must be primitive modulo p^r");
  Q pr = qpow(Q(p), r);
  f.scalar = (Coeff(pj * p) / x).pow(r) / Coeff(pr);
  f.gauss_part = gauss_sum(G, eta, p, r).conj();
  f.value = f.scalar.value() * f.gauss_part->value();
  return f;
}

InterpFactor pr_interp_factor(const OrdinaryData& d, int j, int r, const DirichletGroup& G, const std::vector<int>& eta,
                              MChoice choice) {
  return pr_interp_factor(d.m_eigenvalue(choice), d.p, j, d.kp, r, G, eta);
}

MotivicPrefactor motivic_padic_L_prefactors(const OrdinaryData& d, std::int64_t c, int j, int r, const DirichletGroup& G,
                                            const std::vector<int>& eta, const Coeff& eps_c, MChoice choice) {
  if (c <= 1) throw ValidationError("c must be > 1");
  if (gcd64(c, 6 * d.p) != 1) throw ValidationError("c must be coprime to 6p");
  MotivicPrefactor m;
  int E = G.exponent();
  int idx = r == 0 ? 0 : G.char_index(eta, c);
  int twice = static_cast<int>(mod(2 * static_cast<std::int64_t>(idx), E));
  Q cc = Q(c) * c;
  Coeff coef = Coeff(qpow(Q(c), 2 * j - d.k - d.kp)) * eps_c;
  std::optional<Coeff> exact_cf;
  if (twice == 0) exact_cf = Coeff(cc) - coef;
  else if (2 * twice == E) exact_cf = Coeff(cc) + coef;
  if (exact_cf) {
    m.c_factor = exact_cf->value();
    m.pole = exact_cf->is_zero();
  } else {
    m.c_factor = to_long_double(cc) - coef.value() * std::polar(1.0L, 2 * kPi * twice / E);
    m.pole = std::abs(m.c_factor) < 1e-15L * to_long_double(cc);
  }
  if (m.pole) return m;
  m.pr = pr_interp_factor(d, j, r, G, eta, choice);
  m.value = m.pr.value / m.c_factor;
  if (exact_cf && !m.pr.gauss_part) m.exact = m.pr.scalar / *exact_cf;
  return m;
}

}  // namespace asailab
