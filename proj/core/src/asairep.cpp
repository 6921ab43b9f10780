#include "asailab/asairep.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "asailab/errors.hpp"

namespace asailab {

Matrix Matrix::identity(int n) {
  Matrix I(n);
  for (int i = 0; i < n; ++i) I(i, i) = Coeff(1);
  return I;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Coeff>>& rows) {
  Matrix M(static_cast<int>(rows.size()));
  for (int i = 0; i < M.n_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != M.n_)
      throw std::invalid_argument("matrix rows must form a square");
    for (int j = 0; j < M.n_; ++j) M(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return M;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Coeff& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Coeff& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool Matrix::operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

Coeff Matrix::trace() const {
  Coeff t(0);
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Coeff Matrix::det() const {
  Poly p = charpoly_reversed(*this);
  Coeff top = static_cast<int>(p.size()) > n_ ? p[static_cast<std::size_t>(n_)] : Coeff(0);
  return n_ % 2 ? -top : top;
}

Matrix Matrix::inverse() const {
  Matrix a = *this, inv = identity(n_);
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(a(c, j), a(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    Coeff s = Coeff(1) / a(c, c);
    for (int j = 0; j < n_; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Coeff f = a(r, c);
      for (int j = 0; j < n_; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Poly charpoly_reversed(const Matrix& A) {
  int n = A.size();
  std::vector<Coeff> c(static_cast<std::size_t>(n + 1), Coeff(0));
  c[static_cast<std::size_t>(n)] = Coeff(1);
  Matrix M(n);
  for (int k = 1; k <= n; ++k) {
    M = A * M + Matrix::identity(n).scaled(c[static_cast<std::size_t>(n - k + 1)]);
    c[static_cast<std::size_t>(n - k)] = -(A * M).trace() / Coeff(k);
  }
  Poly out(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(n - i)];
  return trim(std::move(out));
}

Matrix tensor_induce_split(const Matrix& M1, const Matrix& M2) {
  if (M1.size() != 2 || M2.size() != 2) throw std::invalid_argument("tensor induction needs 2x2 matrices");
  Matrix R(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int ip = 0; ip < 2; ++ip)
        for (int jp = 0; jp < 2; ++jp) R(ip + 2 * jp, i + 2 * j) = M1(ip, i) * M2(jp, j);
  return R;
}

Matrix tensor_induce_inert(const Matrix& M) {
  if (M.size() != 2) throw std::invalid_argument("tensor induction needs a 2x2 matrix");
  Matrix R(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int ip = 0; ip < 2; ++ip) R(ip + 2 * i, i + 2 * j) = M(ip, j);
  return R;
}

Matrix companion(const Coeff& trace, const Coeff& det) { return Matrix::from_rows({{0, -det}, {1, trace}}); }

FrobData FrobData::from_trace_det(Coeff trace, Coeff det) { return FrobData{std::nullopt, std::move(trace), std::move(det)}; }

FrobData FrobData::from_matrix(const Matrix& M) {
  if (M.size() != 2) throw std::invalid_argument("Frobenius matrix must be 2x2");
  return FrobData{M, M.trace(), M.det()};
}

Matrix FrobData::as_matrix() const { return matrix ? *matrix : companion(trace, det); }

LocalAsaiData local_asai_data(const HilbertEigenform& form, std::int64_t ell) {
  const auto& F = form.field();
  if (!is_prime(ell)) throw ValidationError(std::to_string(ell) + " is not prime");
  Splitting s = F.splitting_type(ell);
  if (s.kind == SplitKind::Ramified) throw ValidationError("ell = " + std::to_string(ell) + " is ramified in F");
  if (form.level().norm() % ell == 0) throw ValidationError("ell = " + std::to_string(ell) + " divides the level norm");
  LocalAsaiData d;
  d.ell = ell;
  d.kind = s.kind;
  d.twist = form.weight().t + form.weight().tp;
  int w = form.weight().w();
  for (const auto& P : s.primes) {
    auto lam = form.stored(P);
    if (!lam) throw MissingDataError("missing eigenvalue at " + F.label(P));
    d.frob.push_back(FrobData::from_trace_det(*lam, form.epsilon(P) * Coeff(qpow(Q(P.norm()), w - 1))));
  }
  return d;
}

Poly asai_charpoly(const LocalAsaiData& d) {
  Coeff c(qpow(Q(d.ell), d.twist));
  if (d.kind == SplitKind::Split) {
    if (d.frob.size() != 2) throw ValidationError("split prime needs two Frobenius data");
    const Coeff &a = d.frob[0].trace, &b = d.frob[1].trace, &d1 = d.frob[0].det, &d2 = d.frob[1].det;
    Coeff T = a * b / c;
    Coeff T2 = (a * a - d1) * (b * b - d2) / (c * c);
    Coeff L2S = d1 * d2 / (c * c);
    return trim({Coeff(1), -T, T * T - T2 - L2S, -L2S * T, L2S * L2S});
  }
  if (d.kind == SplitKind::Inert) {
    if (d.frob.size() != 1) throw ValidationError("inert prime needs one Frobenius datum");
    Coeff T = d.frob[0].trace / c;
    Coeff L2S = d.frob[0].det / (c * c);
    return poly_mul({Coeff(1), -T, L2S}, {Coeff(1), Coeff(0), -L2S});
  }
  throw ValidationError("Asai Euler factor undefined at a ramified prime");
}

Poly asai_charpoly(const HilbertEigenform& form, std::int64_t ell) { return asai_charpoly(local_asai_data(form, ell)); }

Matrix asai_frobenius(const LocalAsaiData& d) {
  Coeff inv = Coeff(1) / Coeff(qpow(Q(d.ell), d.twist));
  if (d.kind == SplitKind::Split) return tensor_induce_split(d.frob.at(0).as_matrix(), d.frob.at(1).as_matrix()).scaled(inv);
  if (d.kind == SplitKind::Inert) return tensor_induce_inert(d.frob.at(0).as_matrix()).scaled(inv);
  throw ValidationError("Asai Frobenius undefined at a ramified prime");
}

bool verify_proj_Pl(const LocalAsaiData& d) { return poly_equal(asai_charpoly(d), charpoly_reversed(asai_frobenius(d))); }

bool verify_proj_Pl(const HilbertEigenform& form, std::int64_t ell) { return verify_proj_Pl(local_asai_data(form, ell)); }

// Group ring

namespace {
std::int64_t residue(std::int64_t a, std::int64_t m) { return m == 1 ? 0 : mod(a, m); }
}  // namespace

GroupRingElement::GroupRingElement(std::int64_t m) : m_(m) {
  if (m < 1) throw ValidationError("group ring modulus must be positive");
}

GroupRingElement GroupRingElement::scalar(std::int64_t m, const Coeff& c) {
  GroupRingElement x(m);
  x.add(residue(1, m), c);
  return x;
}

GroupRingElement GroupRingElement::sigma(std::int64_t m, std::int64_t a, int e) {
  if (gcd64(a, m) != 1) throw ValidationError(std::to_string(a) + " is not a unit mod " + std::to_string(m));
  GroupRingElement x(m);
  if (m == 1) {
    x.add(0, Coeff(1));
    return x;
  }
  std::int64_t b = e >= 0 ? mod(a, m) : invmod(mod(a, m), m);
  x.add(powmod(b, e >= 0 ? e : -static_cast<std::int64_t>(e), m), Coeff(1));
  return x;
}

void GroupRingElement::add(std::int64_t a, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Coeff GroupRingElement::coefficient(std::int64_t a) const {
  auto it = terms_.find(residue(a, m_));
  return it == terms_.end() ? Coeff(0) : it->second;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (o.m_ != m_) throw std::invalid_argument("group ring modulus mismatch");
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  if (o.m_ != m_) throw std::invalid_argument("group ring modulus mismatch");
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.m_ != y.m_) throw std::invalid_argument("group ring modulus mismatch");
  GroupRingElement r(x.m_);
  for (const auto& [a, c] : x.terms_)
    for (const auto& [b, d] : y.terms_)
      r.add(residue(static_cast<std::int64_t>(static_cast<__int128>(a) * b % x.m_), x.m_), c * d);
  return r;
}

GroupRingElement GroupRingElement::scaled(const Coeff& c) const {
  GroupRingElement r(m_);
  for (const auto& [a, v] : terms_) r.add(a, v * c);
  return r;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << (c.is_rational() ? c.str() : "(" + c.str() + ")") << "*[" << a << "]";
  }
  return os.str();
}

// Dirichlet group

namespace {
std::int64_t primitive_root_prime_power(std::int64_t p, int e) {
  std::int64_t phi = p - 1;
  auto fs = factorize(phi);
  std::int64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (auto& [q, k] : fs)
      if (powmod(g, phi / q, p) == 1) ok = false;
    if (ok) break;
  }
  if (e > 1 && powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}
}  // namespace

DirichletGroup::DirichletGroup(std::int64_t m) : m_(m) {
  if (m < 1) throw ValidationError("modulus must be positive");
  if (m == 1) {
    units_ = {0};
    log_[0] = {};
    return;
  }
  for (auto& [p, e] : factorize(m)) {
    std::int64_t pe = ipow(p, e), M = m / pe;
    auto lift = [&](std::int64_t g) {
      if (M == 1) return mod(g, m);
      std::int64_t t = static_cast<std::int64_t>(static_cast<__int128>(mod(g - 1, pe)) * invmod(mod(M, pe), pe) % pe);
      return mod(1 + M * t, m);
    };
    if (p == 2) {
      if (e == 2) {
        gens_.push_back(lift(3));
        orders_.push_back(2);
      } else if (e >= 3) {
        gens_.push_back(lift(pe - 1));
        orders_.push_back(2);
        gens_.push_back(lift(5));
        orders_.push_back(static_cast<int>(pe / 4));
      }
    } else {
      gens_.push_back(lift(primitive_root_prime_power(p, e)));
      orders_.push_back(static_cast<int>(pe / p * (p - 1)));
    }
  }
  for (int o : orders_) exponent_ = std::lcm(exponent_, o);
  std::vector<int> ex(gens_.size(), 0);
  for (;;) {
    std::int64_t v = 1 % m;
    for (std::size_t i = 0; i < gens_.size(); ++i) v = static_cast<std::int64_t>(static_cast<__int128>(v) * powmod(gens_[i], ex[i], m) % m);
    log_[v] = ex;
    std::size_t i = 0;
    while (i < ex.size() && ++ex[i] == orders_[i]) ex[i++] = 0;
    if (i == ex.size()) break;
  }
  for (const auto& [u, l] : log_) units_.push_back(u);
}

std::vector<int> DirichletGroup::dlog(std::int64_t a) const {
  auto it = log_.find(m_ == 1 ? 0 : mod(a, m_));
  if (it == log_.end()) throw ValidationError(std::to_string(a) + " is not a unit mod " + std::to_string(m_));
  return it->second;
}

std::vector<std::vector<int>> DirichletGroup::characters() const {
  std::vector<std::vector<int>> out;
  std::vector<int> ex(orders_.size(), 0);
  for (;;) {
    out.push_back(ex);
    std::size_t i = 0;
    while (i < ex.size() && ++ex[i] == orders_[i]) ex[i++] = 0;
    if (i == ex.size()) break;
  }
  return out;
}

int DirichletGroup::char_index(const std::vector<int>& chi, std::int64_t a) const {
  if (chi.size() != orders_.size()) throw ValidationError("character has the wrong number of components");
  if (gcd64(a, m_) != 1) return -1;
  auto l = dlog(a);
  std::int64_t r = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    r += static_cast<std::int64_t>(chi[i]) * l[i] % orders_[i] * (exponent_ / orders_[i]);
  return static_cast<int>(r % exponent_);
}

cplx DirichletGroup::value(const std::vector<int>& chi, std::int64_t a) const {
  int r = char_index(chi, a);
  if (r < 0) return 0;
  long double th = 2 * std::acos(-1.0L) * r / exponent_;
  return {std::cos(th), std::sin(th)};
}

int DirichletGroup::char_order(const std::vector<int>& chi) const {
  int o = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int c = static_cast<int>(mod(chi[i], orders_[i]));
    o = std::lcm(o, orders_[i] / std::gcd(orders_[i], c));
  }
  return o;
}

bool DirichletGroup::is_primitive(const std::vector<int>& chi) const {
  if (m_ == 1) return true;
  for (auto& [p, e] : factorize(m_)) {
    std::int64_t q = m_ / p;
    bool trivial = true;
    for (std::int64_t u : units_)
      if (mod(u - 1, q) == 0 && char_index(chi, u) != 0) trivial = false;
    if (trivial) return false;
  }
  return true;
}

cplx evaluate_character(const GroupRingElement& x, const DirichletGroup& G, const std::vector<int>& chi) {
  if (G.modulus() != x.modulus()) throw std::invalid_argument("character modulus mismatch");
  cplx s = 0;
  for (const auto& [a, c] : x.terms()) s += c.value() * G.value(chi, a);
  return s;
}

GroupRingElement norm_factor_from_poly(const Poly& P, std::int64_t ell, int j, int k, int kp, const Coeff& eps_ell,
                                       std::int64_t m) {
  if (gcd64(ell, m) != 1) throw ValidationError("ell must be prime to m");
  Q l(ell);
  GroupRingElement first = GroupRingElement::scalar(m, Coeff(l - 1)) -
                           GroupRingElement::sigma(m, ell, -2).scaled(Coeff(l - 1) * Coeff(qpow(l, k + kp - 2 * j)) * eps_ell);
  GroupRingElement Pv(m);
  for (std::size_t i = 0; i < P.size(); ++i)
    Pv += GroupRingElement::sigma(m, ell, -static_cast<int>(i)).scaled(P[i] * Coeff(qpow(l, (-1 - j) * static_cast<int>(i))));
  return GroupRingElement::sigma(m, ell, 1).scaled(Coeff(qpow(l, j))) * (first - Pv.scaled(Coeff(l)));
}

GroupRingElement euler_system_norm_factor(const HilbertEigenform& form, std::int64_t ell, int j, std::int64_t m) {
  const Weight& wt = form.weight();
  if (j < 0 || j > std::min(wt.k, wt.kp)) throw ValidationError("j must satisfy 0 <= j <= min(k, k')");
  if (gcd64(ell, m) != 1) throw ValidationError("ell must be prime to m");
  const auto& F = form.field();
  Splitting s = F.splitting_type(ell);
  if (s.kind == SplitKind::Split) {
    for (const auto& P : s.primes) {
      std::optional<FieldElement> g;
      try {
        g = F.totally_positive_generator(P);
      } catch (const std::exception&) {
      }
      if (!g) throw HypothesisError("prime " + F.label(P) + " above " + std::to_string(ell) + " is not narrowly principal");
    }
  }
  LocalAsaiData d = local_asai_data(form, ell);
  return norm_factor_from_poly(asai_charpoly(d), ell, j, wt.k, wt.kp, form.epsilon(F.rational(ell)), m);
}

GroupRingElement c_factor(std::int64_t c, int j, int k, int kp, const Coeff& eps_value, std::int64_t m, bool coprime) {
  if (c <= 1) throw ValidationError("c must be > 1");
  if (!coprime) throw ValidationError("c must be coprime to 6pmN");
  if (gcd64(c, m) != 1) throw ValidationError("c must be prime to m");
  Q cq(c);
  return GroupRingElement::scalar(m, Coeff(cq * cq)) -
         GroupRingElement::sigma(m, c, 2).scaled(Coeff(qpow(cq, 2 * j - k - kp)) * eps_value);
}

}  // namespace asailab
