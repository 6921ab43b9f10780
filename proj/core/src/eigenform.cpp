#include "asailab/eigenform.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "asailab/errors.hpp"
#include "json.hpp"

namespace asailab {

using json = nlohmann::ordered_json;

void Weight::validate() const {
  if (k < 0 || kp < 0) throw ValidationError("weights need k, k' >= 0");
  if ((k - kp) % 2 != 0) throw ValidationError("weight parity: k and k' must have the same parity");
  if (k + 2 * t != kp + 2 * tp) throw ValidationError("weight: (k+2)+2t must equal (k'+2)+2t'");
}

HilbertEigenform::HilbertEigenform(RealQuadraticField field, Weight weight, Ideal level, std::int64_t coeff_e)
    : field_(std::move(field)), weight_(weight), level_(level), coeff_e_(coeff_e) {
  weight_.validate();
  if (!field_.is_valid_ideal(level_)) throw ValidationError("level is not an ideal in Hermite normal form");
  if (coeff_e_ != 0 && (coeff_e_ == 1 || !is_squarefree(coeff_e_)))
    throw ValidationError("coefficient field Q(sqrt(e)) needs squarefree e != 0, 1");
}

void HilbertEigenform::set_eigenvalue(const Ideal& I, const Coeff& v) {
  if (!v.is_rational() && v.e() != coeff_e_) throw ValidationError("eigenvalue outside the coefficient field");
  eigen_[I] = v;
}

void HilbertEigenform::set_nebentype(const Ideal& I, const Coeff& v) {
  if (!v.is_rational() && v.e() != coeff_e_) throw ValidationError("nebentype value outside the coefficient field");
  neb_[I] = v;
}

std::optional<Coeff> HilbertEigenform::stored(const Ideal& I) const {
  auto it = eigen_.find(I);
  if (it == eigen_.end()) return std::nullopt;
  return it->second;
}

bool HilbertEigenform::divides_level(const Ideal& P) const { return field_.divides(P, level_); }

bool HilbertEigenform::coprime_to_level(const Ideal& I) const {
  for (auto& [P, e] : field_.factor(I))
    if (divides_level(P)) return false;
  return true;
}

Coeff HilbertEigenform::epsilon(const Ideal& I) const {
  if (neb_.empty()) return Coeff(1);
  if (auto it = neb_.find(I); it != neb_.end()) return it->second;
  Coeff r(1);
  for (auto& [P, e] : field_.factor(I)) {
    auto it = neb_.find(P);
    if (it == neb_.end()) throw MissingDataError("nebentype value missing at " + field_.label(P));
    r *= it->second.pow(e);
  }
  return r;
}

Coeff HilbertEigenform::lambda_prime_power(const Ideal& P, int r) const {
  if (r == 0) return Coeff(1);
  auto base = stored(P);
  if (!base) throw MissingDataError("eigenvalue missing at " + field_.label(P));
  if (r == 1) return *base;
  if (auto s = stored(field_.pow(P, r))) return *s;
  if (divides_level(P)) return base->pow(r);
  Coeff delta = Coeff(qpow(Q(P.norm()), weight_.w() - 1)) * epsilon(P);
  Coeff prev2(1), prev1 = *base;
  Ideal Pk = P;
  for (int i = 2; i <= r; ++i) {
    Pk = field_.mul(Pk, P);
    auto s = stored(Pk);
    Coeff cur = s ? *s : *base * prev1 - delta * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

Coeff HilbertEigenform::lambda(const Ideal& I) const {
  if (I == field_.unit_ideal()) return Coeff(1);
  if (auto s = stored(I)) return *s;
  Coeff r(1);
  for (auto& [P, e] : field_.factor(I)) r *= lambda_prime_power(P, e);
  return r;
}

Coeff HilbertEigenform::lambda_rational(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("lambda_rational: n must be positive");
  Coeff r(1);
  for (auto& [ell, e] : factorize(n)) {
    Splitting s = field_.splitting_type(ell);
    switch (s.kind) {
      case SplitKind::Split:
        r *= lambda_prime_power(s.primes[0], e) * lambda_prime_power(s.primes[1], e);
        break;
      case SplitKind::Inert:
        r *= lambda_prime_power(s.primes[0], e);
        break;
      case SplitKind::Ramified:
        r *= lambda_prime_power(s.primes[0], 2 * e);
        break;
    }
  }
  return r;
}

// JSON

namespace {

json exact_to_json(const Coeff& c) {
  if (c.is_rational()) return to_string(c.a());
  return json{{"a", to_string(c.a())}, {"b", to_string(c.b())}};
}

Coeff exact_from_json(const json& j, std::int64_t e, const std::string& where) {
  try {
    if (j.is_string()) return Coeff(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return Coeff(Q(j.get<long>()));
    if (j.is_object() && j.contains("a") && j.contains("b") && j.size() == 2) {
      if (e == 0) throw ValidationError(where + ": sqrt part given but the coefficient field is Q");
      return coeff_from_parts(j["a"].get<std::string>(), j["b"].get<std::string>(), e);
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ValidationError(where + ": " + ex.what());
  }
  throw ValidationError(where + ": exact value must be \"p/q\" or {\"a\":..,\"b\":..}");
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("schema: missing key '") + key + "'");
  return j.at(key);
}

std::int64_t need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) throw ValidationError(std::string("schema: '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

// Coprime multiplicativity among stored values.
void validate_multiplicativity(const HilbertEigenform& f) {
  const auto& F = f.field();
  for (const auto& [I, v] : f.eigenvalues()) {
    if (I == F.unit_ideal()) {
      if (v != Coeff(1)) throw ValidationError("lambda(O_F) must be 1");
      continue;
    }
    auto fac = F.factor(I);
    if (fac.size() < 2) continue;
    Coeff prod(1);
    bool complete = true;
    for (auto& [P, e] : fac) {
      auto s = f.stored(F.pow(P, e));
      if (!s) {
        complete = false;
        break;
      }
      prod *= *s;
    }
    if (complete && prod != v)
      throw ValidationError("multiplicativity violated at " + F.label(I) + ": stored " + v.str() +
                            ", product of coprime parts " + prod.str());
  }
}

json sorted_table(const RealQuadraticField& F, const std::map<Ideal, Coeff>& table, const char* key) {
  std::map<std::int64_t, std::vector<std::pair<Ideal, Coeff>>> by_norm;
  for (const auto& [I, v] : table) by_norm[I.norm()].emplace_back(I, v);
  json arr = json::array();
  for (auto& [n, items] : by_norm) {
    auto all = F.ideals_of_norm(n);
    std::vector<std::pair<std::size_t, const Coeff*>> idx;
    for (auto& [I, v] : items)
      idx.emplace_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), I) - all.begin()), &v);
    std::sort(idx.begin(), idx.end());
    for (auto& [i, v] : idx)
      arr.push_back(json{{"ideal", std::to_string(n) + "." + std::to_string(i + 1)}, {key, exact_to_json(*v)}});
  }
  return arr;
}

}  // namespace

HilbertEigenform eigenform_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& ex) {
    throw ValidationError(std::string("schema: invalid JSON: ") + ex.what());
  }
  std::int64_t d = need_int(j, "d");
  if (d <= 1 || !is_squarefree(d)) throw ValidationError("schema: d must be a squarefree integer > 1");
  RealQuadraticField F(d);

  const json& wj = need(j, "weight");
  if (!wj.is_array() || wj.size() != 4) throw ValidationError("schema: weight must be [k+2, k'+2, t, t']");
  for (const auto& x : wj)
    if (!x.is_number_integer()) throw ValidationError("schema: weight entries must be integers");
  Weight w{wj[0].get<int>() - 2, wj[1].get<int>() - 2, wj[2].get<int>(), wj[3].get<int>()};
  w.validate();

  const json& lj = need(j, "level");
  std::int64_t lnorm = need_int(lj, "norm");
  const json& hnf = need(lj, "hnf");
  if (!hnf.is_array() || hnf.size() != 3) throw ValidationError("schema: level.hnf must be [n, m, g]");
  Ideal level{hnf[0].get<std::int64_t>(), hnf[1].get<std::int64_t>(), hnf[2].get<std::int64_t>()};
  if (!F.is_valid_ideal(level)) throw ValidationError("level.hnf is not a normalized ideal basis");
  if (level.norm() != lnorm) throw ValidationError("level.norm does not match level.hnf");

  const json& cf = need(j, "coefficient_field");
  const json& type = need(cf, "type");
  std::int64_t e = 0;
  if (type == "Qsqrt") {
    e = need_int(cf, "e");
    if (e == 0 || e == 1 || !is_squarefree(e)) throw ValidationError("coefficient_field.e must be squarefree, != 0, 1");
  } else if (type != "Q") {
    throw ValidationError("schema: coefficient_field.type must be \"Q\" or \"Qsqrt\"");
  }

  HilbertEigenform form(F, w, level, e);

  auto read_table = [&](const char* key, const char* value_key, bool eigen) {
    if (!j.contains(key)) {
      if (eigen) throw ValidationError(std::string("schema: missing key '") + key + "'");
      return;
    }
    const json& arr = j.at(key);
    if (!arr.is_array()) throw ValidationError(std::string("schema: '") + key + "' must be an array");
    std::map<Ideal, bool> seen;
    for (const auto& item : arr) {
      const json& lab = need(item, "ideal");
      if (!lab.is_string()) throw ValidationError("schema: ideal label must be a string");
      Ideal I;
      try {
        I = F.parse_label(lab.get<std::string>());
      } catch (const std::exception& ex) {
        throw ValidationError(std::string(key) + ": " + ex.what());
      }
      if (seen[I]) throw ValidationError(std::string(key) + ": duplicate entry for " + lab.get<std::string>());
      seen[I] = true;
      Coeff v = exact_from_json(need(item, value_key), e, std::string(key) + "[" + lab.get<std::string>() + "]");
      if (eigen) form.set_eigenvalue(I, v);
      else form.set_nebentype(I, v);
    }
  };
  read_table("nebentype", "value", false);
  read_table("eigenvalues", "lambda", true);
  if (j.contains("notes"))
    for (const auto& n : j["notes"]) form.notes.push_back(n.get<std::string>());

  validate_multiplicativity(form);
  return form;
}

HilbertEigenform load_eigenform(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open eigenform file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return eigenform_from_json(ss.str());
}

std::string eigenform_to_json(const HilbertEigenform& f) {
  const auto& F = f.field();
  const auto& w = f.weight();
  json j;
  j["d"] = F.d();
  j["weight"] = {w.k + 2, w.kp + 2, w.t, w.tp};
  j["level"] = {{"norm", f.level().norm()}, {"hnf", {f.level().n, f.level().m, f.level().g}}};
  if (f.coeff_e() == 0) j["coefficient_field"] = {{"type", "Q"}};
  else j["coefficient_field"] = {{"type", "Qsqrt"}, {"e", f.coeff_e()}};
  j["nebentype"] = sorted_table(F, f.nebentype(), "value");
  j["eigenvalues"] = sorted_table(F, f.eigenvalues(), "lambda");
  if (!f.notes.empty()) j["notes"] = f.notes;
  return j.dump(1) + "\n";
}

void save_eigenform(const HilbertEigenform& form, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write eigenform file '" + path + "'");
  out << eigenform_to_json(form);
}

// Hecke relations

HeckeReport check_hecke_relations(const HilbertEigenform& f, std::int64_t bound) {
  HeckeReport rep;
  rep.bound = bound;
  const auto& F = f.field();
  const int w = f.weight().w();
  for (std::int64_t ell : primes_upto(bound)) {
    for (const Ideal& P : F.splitting_type(ell).primes) {
      std::int64_t N = P.norm();
      if (N > bound || f.divides_level(P)) continue;
      std::vector<Coeff> lam{Coeff(1)};
      std::vector<Ideal> pw{F.unit_ideal()};
      for (__int128 nr = N; nr <= bound; nr *= N) {
        Ideal Pr = F.mul(pw.back(), P);
        auto s = f.stored(Pr);
        if (!s) throw MissingDataError("eigenvalue missing at " + F.label(Pr) + " (within bound " + std::to_string(bound) + ")");
        lam.push_back(*s);
        pw.push_back(Pr);
      }
      Coeff delta = Coeff(qpow(Q(N), w - 1)) * f.epsilon(P);
      for (std::size_t r = 1; r + 1 < lam.size(); ++r) {
        Coeff expected = lam[1] * lam[r] - delta * lam[r - 1];
        ++rep.relations_checked;
        if (expected != lam[r + 1])
          rep.violations.push_back({F.label(pw[r + 1]), "prime-power recursion", expected, lam[r + 1]});
      }
    }
  }
  for (const auto& [I, v] : f.eigenvalues()) {
    if (I.norm() > bound || I == F.unit_ideal()) continue;
    auto fac = F.factor(I);
    if (fac.size() < 2) continue;
    Coeff prod(1);
    bool complete = true;
    for (auto& [P, e] : fac) {
      auto s = f.stored(F.pow(P, e));
      if (!s) {
        complete = false;
        break;
      }
      prod *= *s;
    }
    if (!complete) continue;
    ++rep.relations_checked;
    if (prod != v) rep.violations.push_back({F.label(I), "coprime multiplicativity", prod, v});
  }
  return rep;
}

// Base change

Coeff ClassicalData::chi(std::int64_t ell) const {
  if (level % ell == 0) return Coeff(0);
  if (character.empty()) return Coeff(1);
  auto it = character.find(mod(ell, level));
  if (it == character.end()) it = character.find(ell);
  if (it == character.end()) throw MissingDataError("classical character value missing at " + std::to_string(ell));
  return it->second;
}

HilbertEigenform base_change(const ClassicalData& cl, const RealQuadraticField& F, std::int64_t bound) {
  if (cl.weight < 2) throw ValidationError("base change needs classical weight >= 2");
  if (bound < 1) throw ValidationError("base change bound must be positive");
  std::int64_t e = 0;
  for (auto& [ell, v] : cl.character)
    if (!v.is_rational()) e = v.e();
  const int k = cl.weight;
  HilbertEigenform form(F, Weight{k - 2, k - 2, 0, 0}, F.rational(cl.level), e);
  bool ramified_seen = false;
  for (std::int64_t ell : primes_upto(bound)) {
    auto it = cl.ap.find(ell);
    if (it == cl.ap.end()) throw MissingDataError("a_" + std::to_string(ell) + " missing below bound " + std::to_string(bound));
    const Q& a = it->second;
    const bool bad = cl.level % ell == 0;
    Coeff chi = cl.chi(ell);
    Coeff ell_k1 = Coeff(qpow(Q(ell), k - 1));
    Splitting s = F.splitting_type(ell);
    int cmax = 0;
    for (__int128 x = ell; x <= bound; x *= ell) ++cmax;
    for (const Ideal& P : s.primes) {
      Coeff lam1, delta;
      int rmax = cmax;
      switch (s.kind) {
        case SplitKind::Split:
          lam1 = Coeff(a);
          delta = ell_k1 * chi;
          break;
        case SplitKind::Inert:
          lam1 = bad ? Coeff(a * a) : Coeff(a * a) - Coeff(2) * ell_k1 * chi;
          delta = ell_k1 * ell_k1 * chi * chi;
          break;
        case SplitKind::Ramified:
          lam1 = Coeff(a);
          delta = ell_k1 * chi;
          rmax = 2 * cmax;
          ramified_seen = true;
          break;
      }
      if (!cl.character.empty() && !bad)
        form.set_nebentype(P, s.kind == SplitKind::Inert ? chi * chi : chi);
      form.set_eigenvalue(P, lam1);
      if (bad) continue;
      auto classical = [&](__int128 n) -> std::optional<Q> {
        if (n > INT64_MAX) return std::nullopt;
        auto jt = cl.prime_powers.find(static_cast<std::int64_t>(n));
        if (jt == cl.prime_powers.end()) return std::nullopt;
        return jt->second;
      };
      // inert: lambda(q^r) = sum_i alpha^{2i} beta^{2r-2i} = a(ell^{2r}) - ell^{k-1} chi lambda(q^{r-1})
      Coeff prev2(1), prev1 = lam1;
      Ideal Pr = P;
      __int128 ellr = ell;
      for (int r = 2; r <= rmax; ++r) {
        ellr *= ell;
        Coeff cur;
        std::optional<Q> direct = s.kind == SplitKind::Inert ? classical(ellr * ellr)
                                                             : classical(ellr);
        if (direct && s.kind == SplitKind::Inert)
          cur = Coeff(*direct) - ell_k1 * chi * prev1;
        else if (direct)
          cur = Coeff(*direct);
        else
          cur = lam1 * prev1 - delta * prev2;
        Pr = F.mul(Pr, P);
        form.set_eigenvalue(Pr, cur);
        prev2 = prev1;
        prev1 = cur;
      }
    }
  }
  if (ramified_seen) form.notes.push_back("ramified primes: lambda(P) = a_ell (unverified convention)");
  return form;
}

std::vector<Z> ramanujan_tau(std::int64_t n_max) {
  if (n_max < 1) return {0};
  using i128 = __int128;
  const auto L = static_cast<std::size_t>(n_max);  // degrees 0..n_max-1
  // prod (1-q^n)^3 = sum (-1)^k (2k+1) q^{k(k+1)/2}
  std::vector<i128> a(L, 0);
  for (std::int64_t kk = 0; kk * (kk + 1) / 2 < n_max; ++kk)
    a[static_cast<std::size_t>(kk * (kk + 1) / 2)] = (kk % 2 ? -1 : 1) * (2 * kk + 1);
  auto square = [&](const std::vector<i128>& x) {
    std::vector<i128> y(L, 0);
    for (std::size_t i = 0; i < L; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; i + j < L; ++j) y[i + j] += x[i] * x[j];
    }
    return y;
  };
  auto a8 = square(square(square(a)));
  std::vector<Z> tau(L + 1, 0);
  for (std::size_t n = 1; n <= L; ++n) {
    i128 v = a8[n - 1];
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Z hi = static_cast<unsigned long>(u >> 64), lo = static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
    Z z = (hi << 64) + lo;
    tau[n] = neg ? Z(-z) : z;
  }
  return tau;
}

ClassicalData discriminant_form_data(std::int64_t bound) {
  ClassicalData cl;
  cl.weight = 12;
  auto tau = ramanujan_tau(std::max<std::int64_t>(bound, 2));
  for (std::int64_t p : primes_upto(bound)) {
    cl.ap[p] = Q(tau[static_cast<std::size_t>(p)]);
    for (std::int64_t q = p; q <= bound; q *= p) {
      cl.prime_powers[q] = Q(tau[static_cast<std::size_t>(q)]);
      if (q > bound / p) break;
    }
  }
  return cl;
}

Coeff alpha_coeff(const HilbertEigenform& f, std::int64_t n) {
  return f.lambda_rational(n) / Coeff(qpow(Q(n), f.weight().t + f.weight().tp));
}

OrdinaryCheck is_ordinary(const HilbertEigenform& f, std::int64_t p, const VEmbedding& v) {
  if (v.p() != p) throw ValidationError("embedding prime differs from p");
  if (f.level_integer() % p != 0) throw ValidationError("p does not divide the level");
  if (f.coeff_e() != 0 && v.e() != f.coeff_e())
    throw ValidationError("embedding is for a different coefficient field");
  Coeff ap = f.lambda_rational(p) / Coeff(qpow(Q(p), f.weight().t + f.weight().tp));
  PAdic x = v.embed(ap);
  return {!x.zero && x.val == 0, ap, x};
}

HilbertEigenform p_stabilize(const HilbertEigenform& f, std::int64_t p, std::int64_t root_mod_p, int prec) {
  const auto& F = f.field();
  Splitting s = F.splitting_type(p);
  if (s.kind != SplitKind::Split) throw HypothesisError("p-stabilisation needs p split in F");
  for (const auto& P : s.primes)
    if (f.divides_level(P)) throw ValidationError("p already divides the level");
  struct Root {
    Q half_trace, half_f;
    std::int64_t e0;
  };
  std::vector<Root> roots;
  std::int64_t e_new = f.coeff_e();
  for (const auto& P : s.primes) {
    Coeff lam = f.lambda(P), delta = Coeff(qpow(Q(p), f.weight().w() - 1)) * f.epsilon(P);
    if (!lam.is_rational() || !delta.is_rational())
      throw ValidationError("p-stabilisation implemented for rational Hecke data");
    Q disc = lam.a() * lam.a() - 4 * delta.a();
    if (disc == 0) throw HypothesisError("repeated Hecke root at p");
    // disc = f^2 * e0 with e0 squarefree
    Z num = disc.get_num() * disc.get_den();
    Z sq;
    std::int64_t e0 = 1;
    if (!mpz_perfect_square_p(num.get_mpz_t()) || num < 0) {
      Z absn = abs(num);
      if (!absn.fits_slong_p()) {
        // strip square factors by trial division up to a bound
        Z rest = absn, core = 1;
        for (long q = 2; q < 1000000 && rest > 1; ++q) {
          int c = 0;
          while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(q))) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(q));
            ++c;
          }
          if (c % 2) core *= q;
        }
        if (!mpz_perfect_square_p(rest.get_mpz_t())) core *= rest;
        if (!core.fits_slong_p()) throw std::runtime_error("discriminant too large to factor");
        e0 = core.get_si();
      } else {
        e0 = squarefree_part(absn.get_si());
      }
      if (num < 0) e0 = -e0;
    }
    Q fsq = disc / e0;
    Z fn, fd;
    mpz_sqrt(fn.get_mpz_t(), fsq.get_num_mpz_t());
    mpz_sqrt(fd.get_mpz_t(), fsq.get_den_mpz_t());
    Q fq(fn, fd);
    fq.canonicalize();
    if (fq * fq != fsq) throw std::logic_error("square extraction failed");
    roots.push_back({lam.a() / 2, fq / 2, e0});
    if (e0 != 1) {
      if (e_new != 0 && e_new != e0) throw ValidationError("Hecke roots above p need a different coefficient field");
      e_new = e0;
    }
  }
  HilbertEigenform out(F, f.weight(), F.mul(f.level(), F.rational(p)), e_new);
  for (const auto& [I, v] : f.nebentype()) out.set_nebentype(I, v);
  for (const auto& [I, v] : f.eigenvalues()) {
    bool above_p = false;
    for (const auto& P : s.primes)
      if (F.divides(P, I)) above_p = true;
    if (!above_p) out.set_eigenvalue(I, v);
  }
  std::int64_t rt = root_mod_p;
  if (e_new != 0 && rt < 0) {
    for (rt = 0; rt < p && mod(rt * rt - e_new, p) != 0; ++rt) {
    }
    if (rt == p) throw HypothesisError("no square root of e modulo p");
  }
  VEmbedding v = e_new == 0 ? VEmbedding::rational(p, prec) : VEmbedding(p, e_new, rt, prec);
  for (std::size_t i = 0; i < s.primes.size(); ++i) {
    const Root& r = roots[i];
    bool found = false;
    for (int sign : {1, -1}) {
      Coeff alpha = r.e0 == 1 ? Coeff(r.half_trace + sign * r.half_f) : Coeff(r.half_trace, sign * r.half_f, r.e0);
      PAdic x = v.embed(alpha);
      if (!x.zero && x.val == 0) {
        out.set_eigenvalue(s.primes[i], alpha);
        found = true;
        break;
      }
    }
    if (!found) throw HypothesisError("form is not ordinary at p: no unit root");
  }
  out.notes = f.notes;
  out.notes.push_back("ordinary p-stabilisation at p = " + std::to_string(p));
  return out;
}

}  // namespace asailab
