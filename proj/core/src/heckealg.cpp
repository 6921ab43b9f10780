#include "asailab/heckealg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "asailab/errors.hpp"

namespace asailab {

// Polynomial plumbing

HeckePolynomial::HeckePolynomial(long c) : HeckePolynomial(Q(c)) {}

HeckePolynomial::HeckePolynomial(const Q& c) {
  if (c != 0) terms_[HMonomial{}] = c;
}

HeckePolynomial HeckePolynomial::symbol(HKind kind, const HArg& arg, int exponent) {
  HeckePolynomial p;
  HMonomial m;
  if (exponent != 0) m.factors[HeckeSymbol{kind, arg}] = exponent;
  p.terms_[m] = 1;
  return p;
}

HeckePolynomial HeckePolynomial::var_x(int exponent) {
  HeckePolynomial p;
  HMonomial m;
  m.x = exponent;
  p.terms_[m] = 1;
  return p;
}

void HeckePolynomial::add_term(const HMonomial& m, const Q& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

HeckePolynomial& HeckePolynomial::operator+=(const HeckePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HeckePolynomial& HeckePolynomial::operator-=(const HeckePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HeckePolynomial HeckePolynomial::operator-() const {
  HeckePolynomial r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

namespace {
HMonomial mono_mul(const HMonomial& a, const HMonomial& b) {
  HMonomial r = a;
  r.x += b.x;
  for (const auto& [s, e] : b.factors) {
    int& v = r.factors[s];
    v += e;
    if (v == 0) r.factors.erase(s);
  }
  return r;
}
}  // namespace

HeckePolynomial operator*(const HeckePolynomial& a, const HeckePolynomial& b) {
  HeckePolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

HeckePolynomial HeckePolynomial::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw std::invalid_argument("negative power of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    HMonomial inv;
    inv.x = -m.x;
    for (const auto& [s, k] : m.factors) inv.factors[s] = -k;
    HeckePolynomial r;
    r.terms_[inv] = 1 / c;
    return r.pow(-e);
  }
  HeckePolynomial r(1), x = *this;
  while (e > 0) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

HeckePolynomial HeckePolynomial::x_coefficient(int d) const {
  HeckePolynomial r;
  for (const auto& [m, c] : terms_) {
    if (m.x != d) continue;
    HMonomial m2 = m;
    m2.x = 0;
    r.add_term(m2, c);
  }
  return r;
}

int HeckePolynomial::max_x_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

std::set<int> HeckePolynomial::sigma_degrees(const std::string& label) const {
  std::set<int> out;
  HeckeSymbol s{HKind::Sigma, HArg{{label, 1}}};
  for (const auto& [m, c] : terms_) {
    auto it = m.factors.find(s);
    out.insert(it == m.factors.end() ? 0 : it->second);
  }
  return out;
}

// Context

void HeckeContext::declare_prime(const std::string& label, const Q& norm) {
  if (units_.count(label)) throw ValidationError("label '" + label + "' already declared as a unit");
  if (norm <= 1) throw ValidationError("prime label '" + label + "' needs norm > 1");
  primes_[label] = norm;
}

void HeckeContext::declare_unit(const std::string& label) {
  if (primes_.count(label)) throw ValidationError("label '" + label + "' already declared as a prime");
  units_.insert(label);
}

void HeckeContext::declare_rational(std::int64_t ell, const HArg& dec) {
  if (!is_prime(ell)) throw ValidationError(std::to_string(ell) + " is not a rational prime");
  Q total = 1;
  for (const auto& [l, e] : dec) {
    if (!primes_.count(l)) throw ValidationError("undeclared prime label '" + l + "'");
    total *= qpow(primes_.at(l), e);
  }
  if (total != qpow(Q(ell), 2)) throw ValidationError("norms in the decomposition of " + std::to_string(ell) + " do not multiply to ell^2");
  rationals_[ell] = dec;
}

std::string split_label(std::int64_t ell, int which) { return "l" + std::to_string(ell) + (which ? "b" : ""); }
std::string inert_label(std::int64_t ell) { return "q" + std::to_string(ell); }
std::string ramified_label(std::int64_t ell) { return "r" + std::to_string(ell); }

void HeckeContext::declare_from_splitting(std::int64_t ell, SplitKind kind) {
  switch (kind) {
    case SplitKind::Split:
      declare_prime(split_label(ell, 0), Q(ell));
      declare_prime(split_label(ell, 1), Q(ell));
      declare_rational(ell, {{split_label(ell, 0), 1}, {split_label(ell, 1), 1}});
      break;
    case SplitKind::Inert:
      declare_prime(inert_label(ell), Q(ell * ell));
      declare_rational(ell, {{inert_label(ell), 1}});
      break;
    case SplitKind::Ramified:
      declare_prime(ramified_label(ell), Q(ell));
      declare_rational(ell, {{ramified_label(ell), 2}});
      break;
  }
}

const Q& HeckeContext::norm(const std::string& label) const {
  auto it = primes_.find(label);
  if (it == primes_.end()) throw ValidationError("unknown prime label '" + label + "'");
  return it->second;
}

HArg HeckeContext::integer_arg(std::int64_t n) const {
  if (n == 0) throw ValidationError("zero is not a valid Hecke argument");
  HArg out;
  if (n < 0) throw ValidationError("negative integers are not totally positive");
  if (n == 1) return out;
  for (auto& [ell, e] : factorize(n)) {
    auto it = rationals_.find(ell);
    if (it == rationals_.end())
      throw ValidationError("argument not factored into labeled primes: " + std::to_string(ell) + " is undeclared");
    for (const auto& [l, k] : it->second) out[l] += k * e;
  }
  return out;
}

HeckePolynomial T(const HeckeContext& c, std::int64_t n) { return HeckePolynomial::symbol(HKind::T, c.integer_arg(n)); }
HeckePolynomial S(const HeckeContext& c, std::int64_t n) { return HeckePolynomial::symbol(HKind::S, c.integer_arg(n)); }
HeckePolynomial Diamond(const HeckeContext& c, std::int64_t n, int e) {
  return HeckePolynomial::symbol(HKind::Diamond, c.integer_arg(n), e);
}
HeckePolynomial Rop(const HeckeContext& c, std::int64_t n, int e) {
  return HeckePolynomial::symbol(HKind::R, c.integer_arg(n), e);
}
HeckePolynomial Sigma(std::int64_t n, int e) {
  return HeckePolynomial::symbol(HKind::Sigma, HArg{{std::to_string(n), 1}}, e);
}

// Rewriting

namespace {

HeckeSymbol single(HKind k, const std::string& label) { return HeckeSymbol{k, HArg{{label, 1}}}; }

HeckePolynomial mono(HKind k, const std::string& label, int e) {
  return HeckePolynomial::symbol(k, HArg{{label, 1}}, e);
}

// T(u)^e -> T(u)^{e mod 2} (<u>R(u))^{floor(e/2)} for unit labels.
HeckePolynomial fix_units(const HeckeContext& c, const HeckePolynomial& p) {
  HeckePolynomial out;
  for (const auto& [m, coef] : p.terms()) {
    HMonomial m2;
    m2.x = m.x;
    std::vector<std::pair<std::string, int>> moved;
    for (const auto& [s, e] : m.factors) {
      if (s.kind == HKind::T && s.arg.size() == 1 && s.arg.begin()->second == 1 && c.is_unit_label(s.arg.begin()->first) &&
          (e < 0 || e > 1)) {
        int q = e >= 0 ? e / 2 : -((-e + 1) / 2);
        int r = e - 2 * q;
        if (r) m2.factors[s] += r;
        moved.emplace_back(s.arg.begin()->first, q);
      } else {
        m2.factors[s] += e;
      }
    }
    for (const auto& [u, q] : moved) {
      m2.factors[single(HKind::Diamond, u)] += q;
      m2.factors[single(HKind::R, u)] += q;
    }
    for (auto it = m2.factors.begin(); it != m2.factors.end();) {
      if (it->second == 0) it = m2.factors.erase(it);
      else ++it;
    }
    out.add_term(m2, coef);
  }
  return out;
}

HeckePolynomial mul_fix(const HeckeContext& c, const HeckePolynomial& a, const HeckePolynomial& b) {
  return fix_units(c, a * b);
}

void check_label(const HeckeContext& c, const std::string& l, const char* what) {
  if (!c.is_prime_label(l) && !c.is_unit_label(l))
    throw ValidationError(std::string("argument not factored into labeled primes/units: '") + l + "' in " + what);
}

// T(lambda^a) via T(l)T(l^n) = T(l^{n+1}) + N(l) S(l) T(l^{n-1}).
HeckePolynomial t_prime_power(const HeckeContext& c, const std::string& l, int a) {
  if (a < 0) throw ValidationError("T of a non-integral argument (negative power of " + l + ")");
  HeckePolynomial prev2(1), prev1 = mono(HKind::T, l, 1);
  if (a == 0) return prev2;
  HeckePolynomial tl = prev1;
  HeckePolynomial ns = HeckePolynomial(c.norm(l)) * mono(HKind::Diamond, l, 1) * mono(HKind::R, l, 1);
  for (int n = 1; n < a; ++n) {
    HeckePolynomial next = tl * prev1 - ns * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

HeckePolynomial rewrite_power(const HeckeContext& c, const HeckeSymbol& s, int e) {
  HeckePolynomial out(1);
  switch (s.kind) {
    case HKind::T: {
      HeckePolynomial prime_part(1);
      for (const auto& [l, a] : s.arg) {
        check_label(c, l, "T");
        if (c.is_unit_label(l)) {
          out = mul_fix(c, out, HeckePolynomial::symbol(HKind::T, HArg{{l, 1}}, a * e));
        } else {
          prime_part = prime_part * t_prime_power(c, l, a);
        }
      }
      if (e < 0 && !(prime_part == HeckePolynomial(1)))
        throw ValidationError("negative power of T at a non-unit argument");
      return mul_fix(c, out, prime_part.pow(std::max(e, 0)));
    }
    case HKind::S:
    case HKind::Diamond:
    case HKind::R:
      for (const auto& [l, a] : s.arg) {
        check_label(c, l, s.kind == HKind::S ? "S" : (s.kind == HKind::R ? "R" : "<>"));
        if (s.kind != HKind::R) out = out * mono(HKind::Diamond, l, a * e);
        if (s.kind != HKind::Diamond) out = out * mono(HKind::R, l, a * e);
      }
      return out;
    case HKind::Sigma:
      for (const auto& [l, a] : s.arg) out = out * mono(HKind::Sigma, l, a * e);
      return out;
    case HKind::U:
      for (const auto& [l, a] : s.arg) {
        if (!c.is_prime_label(l)) throw ValidationError("U needs prime-label arguments, got '" + l + "'");
        if (a * e < 0) throw ValidationError("negative power of U");
        out = out * mono(HKind::U, l, a * e);
      }
      return out;
  }
  return out;
}

}  // namespace

HeckePolynomial normalize(const HeckeContext& c, const HeckePolynomial& p) {
  HeckePolynomial result;
  for (const auto& [m, coef] : p.terms()) {
    HeckePolynomial acc = HeckePolynomial(coef) * HeckePolynomial::var_x(m.x);
    for (const auto& [s, e] : m.factors) acc = mul_fix(c, acc, rewrite_power(c, s, e));
    result += acc;
  }
  return result;
}

HeckePolynomial kill_kinds(const HeckePolynomial& p, const std::set<HKind>& kinds) {
  HeckePolynomial r;
  for (const auto& [m, c] : p.terms()) {
    bool keep = true;
    for (const auto& [s, e] : m.factors)
      if (kinds.count(s.kind)) keep = false;
    if (keep) r.add_term(m, c);
  }
  return r;
}

HeckePolynomial substitute_x(const HeckePolynomial& p, const HeckePolynomial& xv) {
  HeckePolynomial r;
  for (const auto& [m, c] : p.terms()) {
    HMonomial m2 = m;
    m2.x = 0;
    HeckePolynomial t;
    t.add_term(m2, c);
    r += t * xv.pow(m.x);
  }
  return r;
}

std::vector<Coeff> specialize(const HeckePolynomial& p, const std::map<HeckeSymbol, Coeff>& values) {
  std::vector<Coeff> out(static_cast<std::size_t>(p.max_x_degree() + 1), Coeff(0));
  for (const auto& [m, c] : p.terms()) {
    if (m.x < 0) throw std::invalid_argument("specialize: negative power of X");
    Coeff v(c);
    for (const auto& [s, e] : m.factors) {
      auto it = values.find(s);
      if (it == values.end()) throw MissingDataError("no value for symbol " + format(s));
      v *= it->second.pow(e);
    }
    out[static_cast<std::size_t>(m.x)] += v;
  }
  return out;
}

std::string format(const HeckeSymbol& s) {
  std::ostringstream os;
  std::string arg;
  for (const auto& [l, e] : s.arg) {
    if (!arg.empty()) arg += "*";
    arg += l;
    if (e != 1) arg += "^" + std::to_string(e);
  }
  if (arg.empty()) arg = "1";
  switch (s.kind) {
    case HKind::T: os << "T(" << arg << ")"; break;
    case HKind::S: os << "S(" << arg << ")"; break;
    case HKind::Diamond: os << "<" << arg << ">"; break;
    case HKind::R: os << "R(" << arg << ")"; break;
    case HKind::Sigma: os << "sigma(" << arg << ")"; break;
    case HKind::U: os << "U(" << arg << ")"; break;
  }
  return os.str();
}

std::string format(const HeckePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::string> parts;
    for (const auto& [s, e] : m.factors) parts.push_back(format(s) + (e != 1 ? "^" + std::to_string(e) : ""));
    if (m.x != 0) parts.push_back(m.x == 1 ? "X" : "X^" + std::to_string(m.x));
    Q mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == 1 && !parts.empty();
    if (!unit) os << to_string(mag);
    for (std::size_t i = 0; i < parts.size(); ++i) os << ((i == 0 && unit) ? "" : "*") << parts[i];
  }
  return os.str();
}

HeckePolynomial asai_euler_symbolic(const HeckeContext& c, std::int64_t ell, SplitKind kind) {
  HeckePolynomial X = HeckePolynomial::var_x();
  Q l2 = Q(ell) * ell;
  switch (kind) {
    case SplitKind::Ramified:
      throw ValidationError("Asai Euler factor undefined at ramified ell = " + std::to_string(ell));
    case SplitKind::Inert: {
      HeckePolynomial Sl = S(c, ell);
      HeckePolynomial a = HeckePolynomial(1) - T(c, ell) * X + HeckePolynomial(l2) * Sl * X.pow(2);
      HeckePolynomial b = HeckePolynomial(1) - HeckePolynomial(l2) * Sl * X.pow(2);
      return normalize(c, a * b);
    }
    case SplitKind::Split: {
      HeckePolynomial Tl = T(c, ell), Sl = S(c, ell), Tl2 = T(c, ell * ell);
      HeckePolynomial p = HeckePolynomial(1) - Tl * X + (Tl * Tl - Tl2 - HeckePolynomial(l2) * Sl) * X.pow(2) -
                          HeckePolynomial(l2) * Sl * Tl * X.pow(3) + HeckePolynomial(l2 * l2) * Sl * Sl * X.pow(4);
      return normalize(c, p);
    }
  }
  return {};
}

bool verify_split_x2_identity(const HeckeContext& c, std::int64_t ell) {
  auto it = c.rationals().find(ell);
  if (it == c.rationals().end() || it->second.size() != 2)
    throw ValidationError("verify_split_x2_identity: " + std::to_string(ell) + " is not declared split");
  auto li = it->second.begin();
  std::string lam = li->first, lamb = std::next(li)->first;
  Q l(ell);
  HeckePolynomial lhs = T(c, ell).pow(2) - T(c, ell * ell) - HeckePolynomial(l * l) * S(c, ell);
  auto sym = [](HKind k, const std::string& s, int e = 1) { return HeckePolynomial::symbol(k, HArg{{s, 1}}, e); };
  HeckePolynomial rhs = HeckePolynomial(l) * sym(HKind::Diamond, lam) * sym(HKind::R, lam) * sym(HKind::T, lamb, 2) +
                        HeckePolynomial(l) * sym(HKind::Diamond, lamb) * sym(HKind::R, lamb) * sym(HKind::T, lam, 2) -
                        HeckePolynomial(2 * l * l) * Diamond(c, ell) * Rop(c, ell);
  return normalize(c, lhs) == normalize(c, rhs);
}

SplitIdentityResult verify_split_x2_identity(const RealQuadraticField& F, std::int64_t ell) {
  Splitting s = F.splitting_type(ell);
  if (s.kind != SplitKind::Split)
    throw ValidationError("verify_split_x2_identity: " + std::to_string(ell) + " is " + to_string(s.kind) + ", not split");
  HeckeContext c;
  c.declare_from_splitting(ell, SplitKind::Split);
  SplitIdentityResult r;
  r.gen_lambda = F.totally_positive_generator(s.primes[0]);
  r.gen_lambda_bar = F.totally_positive_generator(s.primes[1]);
  r.narrowly_principal = r.gen_lambda.has_value() && r.gen_lambda_bar.has_value();
  Q l(ell);
  std::string lam = split_label(ell, 0), lamb = split_label(ell, 1);
  auto sym = [](HKind k, const std::string& x, int e = 1) { return HeckePolynomial::symbol(k, HArg{{x, 1}}, e); };
  r.lhs = normalize(c, T(c, ell).pow(2) - T(c, ell * ell) - HeckePolynomial(l * l) * S(c, ell));
  r.rhs = normalize(c, HeckePolynomial(l) * sym(HKind::Diamond, lam) * sym(HKind::R, lam) * sym(HKind::T, lamb, 2) +
                           HeckePolynomial(l) * sym(HKind::Diamond, lamb) * sym(HKind::R, lamb) * sym(HKind::T, lam, 2) -
                           HeckePolynomial(2 * l * l) * Diamond(c, ell) * Rop(c, ell));
  r.holds = r.lhs == r.rhs && verify_split_x2_identity(c, ell);
  return r;
}

HeckePolynomial norm_relation_symbolic(const HeckeContext& c, std::int64_t ell, SplitKind kind, int j, int k, int kp) {
  if (j < 0 || j > std::min(k, kp)) throw ValidationError("norm relation needs 0 <= j <= min(k, k')");
  if (kind == SplitKind::Ramified) throw ValidationError("norm relation needs ell unramified");
  Q l(ell);
  HeckePolynomial P = asai_euler_symbolic(c, ell, kind);
  HeckePolynomial x_value = HeckePolynomial(qpow(l, -1 - j)) * Sigma(ell, -1);
  HeckePolynomial Pv = substitute_x(P, x_value);
  HeckePolynomial inner = HeckePolynomial(l - 1) *
                          (HeckePolynomial(1) - HeckePolynomial(qpow(l, -2 * j)) * Diamond(c, ell, -1) * Rop(c, ell) * Sigma(ell, -2));
  HeckePolynomial full = HeckePolynomial(qpow(l, j)) * Sigma(ell) * (inner - HeckePolynomial(l) * Pv);
  return normalize(c, full);
}

// Parsing

namespace {

struct Parser {
  const HeckeContext& c;
  std::string s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("hecke expression: " + msg + " at position " + std::to_string(i));
  }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char ch) {
    ws();
    if (i < s.size() && s[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  std::int64_t integer() {
    ws();
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected integer");
    try {
      return std::stoll(s.substr(st, i - st));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }
  int signed_exponent() {
    bool neg = eat('-');
    auto v = integer();
    return static_cast<int>(neg ? -v : v);
  }
  std::string ident() {
    ws();
    std::size_t st = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
    return s.substr(st, i - st);
  }

  HArg arg(bool sigma) {
    HArg out;
    do {
      if (peek_digit()) {
        std::int64_t n = integer();
        int e = eat('^') ? signed_exponent() : 1;
        if (sigma) {
          out[std::to_string(n)] += e;
        } else {
          for (const auto& [l, k] : c.integer_arg(n)) out[l] += k * e;
        }
      } else {
        std::string id = ident();
        if (id.empty()) fail("expected label");
        if (!c.is_prime_label(id) && !c.is_unit_label(id)) fail("undeclared label '" + id + "'");
        int e = eat('^') ? signed_exponent() : 1;
        out[id] += e;
      }
    } while (eat('*'));
    for (auto it = out.begin(); it != out.end();) {
      if (it->second == 0) it = out.erase(it);
      else ++it;
    }
    return out;
  }

  HeckePolynomial atom() {
    ws();
    if (eat('(')) {
      HeckePolynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (eat('<')) {
      HArg a = arg(false);
      if (!eat('>')) fail("expected '>'");
      return HeckePolynomial::symbol(HKind::Diamond, a);
    }
    if (peek_digit()) return HeckePolynomial(Q(integer()));
    std::string id = ident();
    if (id == "X") return HeckePolynomial::var_x();
    HKind kind;
    if (id == "T") kind = HKind::T;
    else if (id == "S") kind = HKind::S;
    else if (id == "D") kind = HKind::Diamond;
    else if (id == "R") kind = HKind::R;
    else if (id == "U") kind = HKind::U;
    else if (id == "sigma") kind = HKind::Sigma;
    else fail("unknown symbol '" + id + "'");
    if (!eat('(')) fail("expected '('");
    HArg a = arg(kind == HKind::Sigma);
    if (!eat(')')) fail("expected ')'");
    return HeckePolynomial::symbol(kind, a);
  }

  HeckePolynomial power() {
    HeckePolynomial a = atom();
    if (eat('^')) a = a.pow(signed_exponent());
    return a;
  }

  HeckePolynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  HeckePolynomial term() {
    HeckePolynomial a = unary();
    for (;;) {
      if (eat('*')) {
        a = a * unary();
      } else if (eat('/')) {
        std::int64_t d = integer();
        if (d == 0) fail("division by zero");
        a = a * HeckePolynomial(Q(1, static_cast<unsigned long>(d)));
      } else {
        return a;
      }
    }
  }

  HeckePolynomial expr() {
    HeckePolynomial a = term();
    for (;;) {
      if (eat('+')) a += term();
      else if (eat('-')) a -= term();
      else return a;
    }
  }
};

}  // namespace

HeckePolynomial parse_hecke(const HeckeContext& c, const std::string& text) {
  Parser p{c, text};
  HeckePolynomial r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("unexpected trailing input");
  return r;
}

HeckeContext parse_hecke_header(const std::string& text) {
  HeckeContext c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    for (char& ch : line)
      if (ch == ';' || ch == ',') ch = ' ';
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "prime") {
      std::string label, norm;
      if (!(ls >> label >> norm)) throw ValidationError("header: 'prime <label> <norm>'");
      c.declare_prime(label, parse_rational(norm));
    } else if (kw == "unit") {
      std::string label;
      if (!(ls >> label)) throw ValidationError("header: 'unit <label>'");
      c.declare_unit(label);
    } else if (kw == "split") {
      std::int64_t ell;
      std::string a, b;
      if (!(ls >> ell >> a >> b)) throw ValidationError("header: 'split <ell> <label> <label>'");
      c.declare_prime(a, Q(ell));
      c.declare_prime(b, Q(ell));
      c.declare_rational(ell, {{a, 1}, {b, 1}});
    } else if (kw == "inert" || kw == "ramified") {
      std::int64_t ell;
      if (!(ls >> ell)) throw ValidationError("header: '" + kw + " <ell> [label]'");
      std::string label;
      if (!(ls >> label)) label = kw == "inert" ? inert_label(ell) : ramified_label(ell);
      if (kw == "inert") {
        c.declare_prime(label, Q(ell * ell));
        c.declare_rational(ell, {{label, 1}});
      } else {
        c.declare_prime(label, Q(ell));
        c.declare_rational(ell, {{label, 2}});
      }
    } else {
      throw ValidationError("header: unknown declaration '" + kw + "'");
    }
  }
  return c;
}

}  // namespace asailab
