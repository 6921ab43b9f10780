#include "asailab/poly.hpp"

#include <stdexcept>

namespace asailab {

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int degree(const Poly& p) { return static_cast<int>(trim(p).size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Coeff(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Coeff(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Coeff(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trim(std::move(r));
}

Poly poly_scale(const Poly& a, const Coeff& c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return trim(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly d = trim(b), r = trim(a);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  int db = static_cast<int>(d.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return {{}, r};
  Poly q(r.size() - d.size() + 1, Coeff(0));
  Coeff lead_inv = Coeff(1) / d.back();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Coeff c = r[static_cast<std::size_t>(i)] * lead_inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * d[static_cast<std::size_t>(j)];
  }
  return {trim(std::move(q)), trim(std::move(r))};
}

bool poly_equal(const Poly& a, const Poly& b) { return poly_sub(a, b).empty(); }

Coeff poly_eval(const Poly& p, const Coeff& x) {
  Coeff r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

cplx poly_eval(const Poly& p, cplx x) {
  cplx r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + it->value();
  return r;
}

std::string poly_str(const Poly& p0, const std::string& var) {
  Poly p = trim(p0);
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Coeff& c = p[i];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string cs;
    bool neg = false;
    if (c.is_rational()) {
      neg = c.a() < 0;
      Q mag = abs(c.a());
      if (!(mag == 1 && i > 0)) cs = to_string(mag);
    } else {
      cs = "(" + c.str() + ")";
    }
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += cs;
    if (!mono.empty()) out += (cs.empty() ? "" : "*") + mono;
  }
  return out;
}

}  // namespace asailab
