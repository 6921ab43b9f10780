#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "asailab/asairep.hpp"
#include "asailab/eigenform.hpp"
#include "asailab/eisenstein.hpp"
#include "asailab/errors.hpp"
#include "asailab/heckealg.hpp"
#include "asailab/lseries.hpp"
#include "asailab/padic.hpp"
#include "asailab/poly.hpp"
#include "asailab/quadfield.hpp"

namespace asailab::cli {

namespace {

// ---- shared input groups

json ideal_json(const RealQuadraticField& F, const Ideal& I) {
  return json{{"label", F.label(I)}, {"norm", I.norm()}, {"hnf", {I.n, I.m, I.g}}};
}

std::optional<FieldElement> try_tp_generator(const RealQuadraticField& F, const Ideal& I) {
  try {
    return F.totally_positive_generator(I);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void declare_form_source(Args& a) {
  a.opt("form", "eigenform JSON file")
      .opt("base-change", "use the base change of the weight-12 discriminant form to Q(sqrt d)")
      .opt("bound", "norm bound for the base change table", "4000");
}

bool has_form_source(const Args& a) { return a.given("form") || a.given("base-change"); }

HilbertEigenform form_source(const Args& a, Report& rep) {
  if (a.given("form")) return load_eigenform(a.raw("form"));
  if (a.given("base-change")) {
    std::int64_t bound = a.i64("bound");
    rep.cutoffs["base_change_bound"] = bound;
    RealQuadraticField F(a.i64("base-change"));
    return base_change(discriminant_form_data(bound), F, bound);
  }
  throw UsageError("need --form or --base-change");
}

void declare_local(Args& a) {
  declare_form_source(a);
  a.opt("d", "field Q(sqrt d), with explicit eigenvalue data")
      .opt("ell", "rational prime")
      .opt("lambda", "eigenvalue(s) at the prime(s) above ell, comma separated (split: two)")
      .opt("w", "weight parameter w = k + 2 + 2t", "2")
      .opt("t", "twist t", "0")
      .opt("tprime", "twist t'", "0", "tp")
      .opt("eps", "nebentype value(s) at the prime(s) above ell, comma separated");
}

// Either a full form, or a level-one form carrying only the data at ell.
HilbertEigenform local_form(const Args& a, Report& rep) {
  if (has_form_source(a)) return form_source(a, rep);
  RealQuadraticField F(a.i64("d"));
  std::int64_t ell = a.i64("ell");
  if (!is_prime(ell)) throw ValidationError(std::to_string(ell) + " is not prime");
  Splitting s = F.splitting_type(ell);
  if (s.kind == SplitKind::Ramified) throw ValidationError(std::to_string(ell) + " is ramified in F");
  auto lams = a.coeff_list("lambda");
  if (lams.size() != s.primes.size())
    throw ValidationError(std::to_string(ell) + " is " + to_string(s.kind) + ": expected " +
                          std::to_string(s.primes.size()) + " eigenvalue(s) in --lambda");
  std::vector<Coeff> eps;
  if (a.given("eps")) {
    eps = a.coeff_list("eps");
    if (eps.size() != s.primes.size()) throw ValidationError("--eps needs one value per prime above ell");
  }
  std::int64_t e = 0;
  for (const auto* list : {&lams, &eps})
    for (const auto& c : *list)
      if (!c.is_rational()) {
        if (e != 0 && e != c.e()) throw ValidationError("values lie in different quadratic fields");
        e = c.e();
      }
  int w = a.i32("w"), t = a.i32("t"), tp = a.i32("tprime");
  HilbertEigenform f(F, Weight{w - 2 - 2 * t, w - 2 - 2 * tp, t, tp}, F.unit_ideal(), e);
  for (std::size_t i = 0; i < s.primes.size(); ++i) {
    f.set_eigenvalue(s.primes[i], lams[i]);
    if (!eps.empty()) f.set_nebentype(s.primes[i], eps[i]);
  }
  return f;
}

std::int64_t local_ell(const Args& a) { return a.i64("ell"); }

json hecke_report_json(const HeckeReport& r) {
  json v = json::array();
  for (auto& x : r.violations)
    v.push_back({{"ideal", x.ideal}, {"relation", x.relation}, {"expected", exact(x.expected)}, {"actual", exact(x.actual)}});
  return json{{"bound", r.bound}, {"relations_checked", r.relations_checked}, {"violations", v}};
}

json lvalue_json(const LValue& v) {
  json t = json::object();
  for (auto& [k, n] : v.truncation) t[k] = n;
  return json{{"value", num(v.value)}, {"truncation", t}, {"normalization", v.normalization}};
}

json group_ring_json(const GroupRingElement& g) {
  json terms = json::object();
  for (auto& [a, c] : g.terms()) terms[std::to_string(a)] = exact(c);
  return json{{"modulus", g.modulus()}, {"element", g.str()}, {"terms", terms}};
}

std::string cyclotomic_field(int N) { return "Q(zeta_" + std::to_string(N) + ")"; }

// ---- field-info

void field_info_decl(Args& a) {
  a.opt("d", "squarefree d > 1").opt("primes", "list splitting of primes up to this bound", "30").opt("norm",
                                                                                                   "also list ideals of this norm");
}

json field_info(const Args& a, Report& rep) {
  RealQuadraticField F(a.i64("d"));
  std::int64_t pb = a.i64("primes");
  if (pb < 2 || pb > 100000) throw ValidationError("--primes must lie in [2, 100000]");
  rep.cutoffs["primes"] = pb;
  const auto& u = F.fundamental_unit();
  json res;
  res["d"] = F.d();
  res["discriminant"] = F.disc();
  res["omega"] = F.tr_omega() == 1 ? "(1+sqrt(" + std::to_string(F.d()) + "))/2" : "sqrt(" + std::to_string(F.d()) + ")";
  res["omega_minimal_polynomial"] = poly_str(Poly{Coeff(F.nm_omega()), Coeff(-F.tr_omega()), Coeff(1)}, "w");
  res["fundamental_unit"] = {{"element", F.format(u)},
                             {"norm", F.unit_norm_sign()},
                             {"theta1", num(F.theta1(u))},
                             {"theta2", num(F.theta2(u))}};
  res["narrow_class_group_trivial_on_units"] = F.unit_norm_sign() < 0;
  res["different"] = ideal_json(F, F.different());
  json sp = json::array();
  for (std::int64_t ell : primes_upto(pb)) {
    Splitting s = F.splitting_type(ell);
    json primes = json::array();
    for (auto& P : s.primes) {
      json pj = ideal_json(F, P);
      std::optional<FieldElement> g;
      try {
        g = F.generator(P);
      } catch (const std::exception&) {
      }
      auto tp = try_tp_generator(F, P);
      pj["generator"] = g ? json(F.format(*g)) : json(nullptr);
      pj["totally_positive_generator"] = tp ? json(F.format(*tp)) : json(nullptr);
      primes.push_back(pj);
    }
    sp.push_back({{"ell", ell}, {"kind", to_string(s.kind)}, {"primes", primes}});
  }
  res["splitting"] = sp;
  if (a.given("norm")) {
    std::int64_t n = a.i64("norm");
    if (n < 1) throw ValidationError("--norm must be positive");
    json ideals = json::array();
    for (auto& I : F.ideals_of_norm(n)) ideals.push_back(ideal_json(F, I));
    res["ideals_of_norm"] = ideals;
  }
  return res;
}

// ---- form-validate

void form_validate_decl(Args& a) { a.opt("form", "eigenform JSON file").opt("bound", "norm bound for the Hecke checks", "500"); }

json form_validate(const Args& a, Report& rep) {
  HilbertEigenform f = load_eigenform(a.raw("form"));
  std::int64_t bound = a.i64("bound");
  rep.cutoffs["hecke_bound"] = bound;
  HeckeReport r = check_hecke_relations(f, bound);
  const auto& w = f.weight();
  json res;
  res["d"] = f.field().d();
  res["weight"] = {w.k + 2, w.kp + 2, w.t, w.tp};
  res["level"] = ideal_json(f.field(), f.level());
  res["coefficient_field"] = f.coeff_e() == 0 ? "Q" : "Q(sqrt(" + std::to_string(f.coeff_e()) + "))";
  res["eigenvalues"] = f.eigenvalues().size();
  res["hecke"] = hecke_report_json(r);
  res["valid"] = r.violations.empty();
  res["notes"] = f.notes;
  if (!r.violations.empty()) rep.exit = kValidation;
  return res;
}

// ---- base-change

void base_change_decl(Args& a) {
  a.opt("d", "target field Q(sqrt d)")
      .opt("bound", "norm bound for the eigenvalue table", "4000")
      .opt("classical", "classical data JSON {weight, level, ap, character}; default: the discriminant form")
      .opt("check", "norm bound for the Hecke-relation check (default min(500, bound))")
      .opt("save", "write the eigenform JSON to this path")
      .flag("emit", "include the full eigenform in the report");
}

ClassicalData classical_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const std::exception& ex) {
    throw ValidationError(std::string("classical data: invalid JSON: ") + ex.what());
  }
  ClassicalData cl;
  try {
    cl.weight = j.at("weight").get<int>();
    cl.level = j.value("level", 1);
    auto entries = [&](const char* key) {
      std::vector<std::pair<std::int64_t, std::string>> out;
      if (!j.contains(key)) return out;
      for (auto& [k, v] : j.at(key).items()) out.emplace_back(std::stoll(k), v.is_string() ? v.get<std::string>() : v.dump());
      return out;
    };
    for (auto& [n, v] : entries("ap")) cl.ap[n] = parse_rational(v);
    for (auto& [n, v] : entries("prime_powers")) cl.prime_powers[n] = parse_rational(v);
    for (auto& [n, v] : entries("character")) cl.character[n] = parse_coeff(v);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ValidationError(std::string("classical data: ") + ex.what());
  }
  return cl;
}

json base_change_cmd(const Args& a, Report& rep) {
  std::int64_t bound = a.i64("bound");
  std::int64_t check = a.given("check") ? a.i64("check") : std::min<std::int64_t>(500, bound);
  if (check > bound) throw ValidationError("--check may not exceed --bound");
  rep.cutoffs["bound"] = bound;
  rep.cutoffs["hecke_bound"] = check;
  RealQuadraticField F(a.i64("d"));
  ClassicalData cl = a.given("classical") ? classical_from_file(a.raw("classical")) : discriminant_form_data(bound);
  HilbertEigenform f = base_change(cl, F, bound);
  HeckeReport hr = check_hecke_relations(f, check);
  json res;
  res["d"] = F.d();
  res["classical_weight"] = cl.weight;
  res["classical_level"] = cl.level;
  res["eigenvalues"] = f.eigenvalues().size();
  res["hecke"] = hecke_report_json(hr);
  if (cl.character.empty()) {
    // Asai of a base change contains the character chi_disc(ell) ell^{k-1}
    json fac = json::array();
    std::int64_t top = std::min<std::int64_t>(50, bound);
    for (std::int64_t ell : primes_upto(top)) {
      if (F.disc() % ell == 0 || cl.level % ell == 0) continue;
      Poly P = asai_charpoly(f, ell);
      Coeff root = Coeff(kronecker_symbol(F.disc(), ell)) * Coeff(qpow(Q(ell), cl.weight - 1));
      auto [q, r] = poly_divmod(P, Poly{Coeff(1), -root});
      fac.push_back({{"ell", ell}, {"degree1", poly_str(Poly{Coeff(1), -root})}, {"cofactor", poly_str(q)}, {"divides", r.empty()}});
      if (!r.empty()) rep.exit = kValidation;
    }
    res["asai_factorization"] = fac;
  }
  res["notes"] = f.notes;
  if (!hr.violations.empty()) rep.exit = kValidation;
  if (a.given("save")) {
    save_eigenform(f, a.raw("save"));
    res["saved"] = a.raw("save");
  }
  if (a.set("emit")) res["form"] = json::parse(eigenform_to_json(f));
  return res;
}

// ---- euler-factor / verify-pl

void euler_factor_decl(Args& a) {
  declare_local(a);
  a.flag("symbolic", "also print the Hecke-operator form of the factor");
}

json euler_factor(const Args& a, Report& rep) {
  HilbertEigenform f = local_form(a, rep);
  std::int64_t ell = local_ell(a);
  LocalAsaiData d = local_asai_data(f, ell);
  Poly P = asai_charpoly(d);
  json res;
  res["ell"] = ell;
  res["kind"] = to_string(d.kind);
  res["twist"] = d.twist;
  res["polynomial"] = poly_str(P);
  res["coefficients"] = poly_json(P);
  if (a.set("symbolic")) {
    HeckeContext c;
    c.declare_from_splitting(ell, d.kind);
    res["symbolic"] = format(asai_euler_symbolic(c, ell, d.kind));
  }
  return res;
}

void verify_pl_decl(Args& a) {
  declare_local(a);
  a.opt("ell-max", "with a form: check every good prime up to this bound");
}

json verify_one(const LocalAsaiData& d) {
  Poly hecke = asai_charpoly(d);
  Poly galois = charpoly_reversed(asai_frobenius(d));
  bool ok = verify_proj_Pl(d);
  return json{{"ell", d.ell}, {"kind", to_string(d.kind)}, {"hecke_side", poly_str(hecke)}, {"galois_side", poly_str(galois)},
              {"equal", ok}};
}

json verify_pl(const Args& a, Report& rep) {
  HilbertEigenform f = local_form(a, rep);
  json res;
  if (a.given("ell-max")) {
    if (!has_form_source(a)) throw UsageError("--ell-max needs --form or --base-change");
    std::int64_t top = a.i64("ell-max");
    rep.cutoffs["ell_max"] = top;
    json items = json::array();
    bool all = true;
    for (std::int64_t ell : primes_upto(top)) {
      if (f.field().disc() % ell == 0 || f.level().norm() % ell == 0) continue;
      json one = verify_one(local_asai_data(f, ell));
      all = all && one["equal"].get<bool>();
      items.push_back(one);
    }
    res["primes"] = items;
    res["equal"] = all;
  } else {
    res = verify_one(local_asai_data(f, local_ell(a)));
  }
  if (!res["equal"].get<bool>()) rep.exit = kValidation;
  return res;
}

// ---- hecke-identity

void hecke_identity_decl(Args& a) {
  a.opt("d", "field for the split X^2 identity or the default context")
      .opt("ell", "rational prime")
      .opt("expr", "expression to normalize, e.g. \"T(l11)^2 - T(l11^2)\"")
      .opt("against", "second expression; report whether both normalize equally")
      .opt("header", "file with context lines (prime/unit/split/inert/ramified)")
      .opt("context", "context lines separated by ';'")
      .opt("primes", "with --d and no header: declare primes up to this bound", "50")
      .opt("j", "norm relation: j", "0")
      .opt("k", "norm relation: k", "0")
      .opt("kprime", "norm relation: k'", "0", "kp")
      .flag("asai", "print the symbolic Asai Euler factor at ell")
      .flag("norm-relation", "print the symbolic norm-relation element at ell");
}

HeckeContext context_from(const Args& a, Report& rep) {
  if (a.given("header")) {
    std::ifstream in(a.raw("header"));
    if (!in) throw ValidationError("cannot open '" + a.raw("header") + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_hecke_header(ss.str());
  }
  if (a.given("context")) {
    std::string t = a.raw("context");
    std::replace(t.begin(), t.end(), ';', '\n');
    return parse_hecke_header(t);
  }
  if (a.given("d")) {
    RealQuadraticField F(a.i64("d"));
    std::int64_t pb = a.i64("primes");
    rep.cutoffs["primes"] = pb;
    HeckeContext c;
    for (std::int64_t ell : primes_upto(pb)) c.declare_from_splitting(ell, F.splitting_type(ell).kind);
    return c;
  }
  throw UsageError("need --header, --context or --d");
}

json hecke_identity(const Args& a, Report& rep) {
  json res;
  if (a.given("expr")) {
    HeckeContext c = context_from(a, rep);
    HeckePolynomial p = normalize(c, parse_hecke(c, a.raw("expr")));
    res["normalized"] = format(p);
    if (a.given("against")) {
      HeckePolynomial q = normalize(c, parse_hecke(c, a.raw("against")));
      res["against_normalized"] = format(q);
      res["equal"] = p == q;
      if (!(p == q)) rep.exit = kValidation;
    }
    return res;
  }
  RealQuadraticField F(a.i64("d"));
  std::int64_t ell = a.i64("ell");
  if (!is_prime(ell)) throw ValidationError(std::to_string(ell) + " is not prime");
  SplitKind kind = F.splitting_type(ell).kind;
  res["ell"] = ell;
  res["kind"] = to_string(kind);
  if (a.set("asai") || a.set("norm-relation")) {
    HeckeContext c;
    c.declare_from_splitting(ell, kind);
    if (a.set("asai")) res["asai_euler_factor"] = format(asai_euler_symbolic(c, ell, kind));
    if (a.set("norm-relation"))
      res["norm_relation"] = format(norm_relation_symbolic(c, ell, kind, a.i32("j"), a.i32("k"), a.i32("kprime")));
    return res;
  }
  SplitIdentityResult r = verify_split_x2_identity(F, ell);
  res["identity"] = "T(l)^2 - T(l^2) - l^2 S(l) = l<L>R(L)T(Lb)^2 + l<Lb>R(Lb)T(L)^2 - 2l^2<l>R(l)";
  res["lhs"] = format(r.lhs);
  res["rhs"] = format(r.rhs);
  res["holds"] = r.holds;
  res["narrowly_principal"] = r.narrowly_principal;
  res["generators"] = {r.gen_lambda ? json(F.format(*r.gen_lambda)) : json(nullptr),
                       r.gen_lambda_bar ? json(F.format(*r.gen_lambda_bar)) : json(nullptr)};
  if (!r.holds) rep.exit = kValidation;
  return res;
}

// ---- norm-factor

void norm_factor_decl(Args& a) {
  declare_local(a);
  a.opt("m", "modulus of the group ring").opt("j", "twist j", "0").flag("characters", "evaluate at every character mod m");
}

json norm_factor(const Args& a, Report& rep) {
  HilbertEigenform f = local_form(a, rep);
  std::int64_t ell = local_ell(a), m = a.i64("m");
  if (m < 1) throw ValidationError("--m must be positive");
  int j = a.i32("j");
  GroupRingElement g = euler_system_norm_factor(f, ell, j, m);
  json res = group_ring_json(g);
  res["ell"] = ell;
  res["j"] = j;
  res["zero"] = g.is_zero();
  if (a.set("characters")) {
    DirichletGroup G(m);
    json ch = json::array();
    for (auto& chi : G.characters()) ch.push_back({{"character", chi}, {"value", num(evaluate_character(g, G, chi))}});
    res["characters"] = ch;
  }
  return res;
}

// ---- lfun

void lfun_decl(Args& a) {
  declare_form_source(a);
  a.opt("s", "complex argument", "14")
      .opt("method", "imprimitive | euler | both", "imprimitive")
      .opt("n-cutoff", "Dirichlet series truncation", "4000")
      .opt("ell-cutoff", "Euler product truncation", "500");
}

json lfun(const Args& a, Report& rep) {
  HilbertEigenform f = form_source(a, rep);
  cplx s = a.complex("s");
  std::string method = a.raw("method");
  if (method != "imprimitive" && method != "euler" && method != "both") throw UsageError("--method must be imprimitive, euler or both");
  std::int64_t nc = a.i64("n-cutoff"), lc = a.i64("ell-cutoff");
  json res;
  if (method == "imprimitive") {
    rep.cutoffs["n_cutoff"] = nc;
    return lvalue_json(imprimitive_L(f, s, nc));
  }
  if (method == "euler") {
    rep.cutoffs["ell_cutoff"] = lc;
    return lvalue_json(euler_product_L(f, s, lc));
  }
  rep.cutoffs["n_cutoff"] = nc;
  rep.cutoffs["ell_cutoff"] = lc;
  LValue x = imprimitive_L(f, s, nc), y = euler_product_L(f, s, lc);
  res["imprimitive"] = lvalue_json(x);
  res["euler"] = lvalue_json(y);
  long double scale = std::max(std::abs(x.value), std::abs(y.value));
  res["relative_difference"] = num(scale == 0 ? 0.0L : std::abs(x.value - y.value) / scale);
  return res;
}

// ---- eisenstein / kronecker-check / mellin-check

void eisenstein_decl(Args& a) {
  a.opt("k", "weight k >= 0")
      .opt("alpha", "rational shift alpha")
      .opt("tau", "point of the upper half plane, e.g. 1/2+3/2i")
      .opt("s", "complex s")
      .opt("method", "continued | lattice | both", "continued")
      .opt("cutoff", "lattice truncation |m|,|n| <= cutoff", "200");
}

json eisenstein_cmd(const Args& a, Report& rep) {
  int k = a.i32("k");
  Q alpha = a.rat("alpha");
  cplx tau = a.complex("tau"), s = a.complex("s");
  if (tau.imag() <= 0) throw ValidationError("tau must lie in the upper half plane");
  std::string method = a.raw("method");
  if (method != "continued" && method != "lattice" && method != "both") throw UsageError("--method must be continued, lattice or both");
  json res;
  res["normalization"] = "(-2 pi i)^{-k} pi^{-s} Gamma(s+k) sum Im(tau)^s (m tau + n + alpha)^{-k} |m tau + n + alpha|^{-2s}";
  std::optional<cplx> cont, lat;
  if (method != "lattice") res["continued"] = num(*(cont = eisenstein_continued(k, alpha, tau, s)));
  if (method != "continued") {
    int cutoff = a.i32("cutoff");
    rep.cutoffs["lattice"] = cutoff;
    res["lattice"] = num(*(lat = eisenstein_lattice_sum(k, alpha, tau, s, cutoff)));
  }
  if (cont && lat) res["difference"] = num(std::abs(*cont - *lat));
  return res;
}

void kronecker_decl(Args& a) {
  a.opt("alpha", "rational alpha, not an integer").opt("tau", "point of the upper half plane").opt("tol", "residual tolerance", "1e-8");
}

json kronecker(const Args& a, Report& rep) {
  Q alpha = a.rat("alpha");
  cplx tau = a.complex("tau");
  if (tau.imag() <= 0) throw ValidationError("tau must lie in the upper half plane");
  long double tol = a.real("tol");
  rep.cutoffs["siegel_terms"] = 200;
  cplx E = eisenstein_continued(0, alpha, tau, 0);
  cplx g = siegel_unit(alpha, tau);
  long double r = kronecker_limit_check(alpha, tau);
  json res;
  res["identity"] = "E_alpha^(0)(tau, 0) = -2 log|g_{0,alpha}(tau)|";
  res["eisenstein"] = num(E);
  res["minus_two_log_abs_g"] = num(-2 * std::log(std::abs(g)));
  res["residual"] = num(r);
  res["tolerance"] = num(tol);
  res["pass"] = r < tol;
  if (!(r < tol)) rep.exit = kValidation;
  return res;
}

void mellin_decl(Args& a) {
  declare_form_source(a);
  a.opt("s", "complex s'", "14").opt("y-cutoff", "upper end of the y integral", "40").opt("n-cutoff", "coefficient cutoff", "4000");
}

json mellin(const Args& a, Report& rep) {
  HilbertEigenform f = form_source(a, rep);
  MellinCheck m = diagonal_mellin_check(f, a.complex("s"), a.real("y-cutoff"), a.i64("n-cutoff"));
  rep.cutoffs["y_cutoff"] = num(m.y_cutoff);
  rep.cutoffs["n_cutoff"] = m.n_cutoff;
  return json{{"lhs", num(m.lhs)}, {"rhs", num(m.rhs)}, {"residual", num(m.residual)}, {"normalization", m.normalization}};
}

// ---- constants

void constants_decl(Args& a) {
  a.opt("k", "k").opt("kprime", "k'", nullptr, "kp").opt("j", "j", "0").opt("N", "level N", "1").opt("D", "discriminant D");
}

json closed_json(const ClosedForm& c) { return json{{"exact", c.str()}, {"value", num(c.value())}}; }

json constants(const Args& a, Report&) {
  int k = a.i32("k"), kp = a.i32("kprime"), j = a.i32("j");
  std::int64_t N = a.i64("N"), D = a.i64("D");
  ClosedForm u = unfolding_constant(k, kp, j, N, D), r = regulator_constant(k, kp, j, D);
  VanishingClaim v = forced_vanishing_order(k, kp, j);
  json res;
  res["unfolding"] = closed_json(u);
  res["regulator"] = closed_json(r);
  res["regulator_over_unfolding"] = closed_json(r / u);
  res["forced_vanishing"] = {{"applicable", v.applicable}, {"order", v.order}, {"hypothesis", v.hypothesis}};
  return res;
}

// ---- p-adic

void padic_decl(Args& a) {
  declare_form_source(a);
  a.opt("p", "prime p")
      .opt("root", "square root of the coefficient-field generator mod p fixing the embedding")
      .opt("k", "k (explicit data)")
      .opt("kprime", "k' (explicit data)", nullptr, "kp")
      .opt("alpha-p", "unit root alpha_P (explicit data)")
      .opt("alpha-q", "unit root alpha_Q (explicit data)")
      .opt("eps-p", "eps(P)", "1")
      .opt("eps-q", "eps(Q)", "1");
}

OrdinaryData padic_data(const Args& a, Report& rep, json& notes) {
  std::int64_t p = a.i64("p");
  std::int64_t root = a.given("root") ? a.i64("root") : -1;
  rep.cutoffs["padic_precision"] = rep.precision;
  if (has_form_source(a)) {
    HilbertEigenform f = form_source(a, rep);
    if (f.level_integer() % p != 0) {
      f = p_stabilize(f, p, root, rep.precision);
      notes.push_back("form p-stabilised at " + std::to_string(p));
    }
    return stabilized_params(f, p, root, rep.precision);
  }
  return make_ordinary_data(p, a.i32("k"), a.i32("kprime"), a.coeff("alpha-p"), a.coeff("alpha-q"), a.coeff("eps-p"),
                            a.coeff("eps-q"), root, rep.precision);
}

json ordinary_json(const OrdinaryData& d) {
  json res;
  res["p"] = d.p;
  res["k"] = d.k;
  res["kprime"] = d.kp;
  res["coefficient_field"] = d.coeff_e == 0 ? "Q" : "Q(sqrt(" + std::to_string(d.coeff_e) + "))";
  if (d.coeff_e != 0) res["embedding_root_mod_p"] = d.embedding().root().get_str();
  res["alpha_P"] = exact(d.alpha_P);
  res["alpha_Q"] = exact(d.alpha_Q);
  res["beta_P"] = exact(d.beta_P);
  res["beta_Q"] = exact(d.beta_Q);
  res["eps_P"] = exact(d.eps_P);
  res["eps_Q"] = exact(d.eps_Q);
  auto ev = d.frobenius_eigenvalues();
  auto val = frobenius_valuations(d);
  json fe = json::array();
  for (std::size_t i = 0; i < ev.size(); ++i)
    fe.push_back({{"name", ev[i].first}, {"value", exact(ev[i].second)}, {"valuation", val[i]}});
  res["frobenius_eigenvalues"] = fe;
  std::vector<std::int64_t> sorted = val;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> expect{0, d.k + 1, d.kp + 1, d.k + d.kp + 2};
  std::sort(expect.begin(), expect.end());
  res["valuations"] = sorted;
  res["valuations_expected"] = expect;
  res["exceptional"] = d.exceptional();
  res["convention"] = "beta_P = p^{k+1} eps(P) / alpha_P, eps without t-twists";
  return res;
}

json padic_params(const Args& a, Report& rep) {
  json notes = json::array();
  OrdinaryData d = padic_data(a, rep, notes);
  json res = ordinary_json(d);
  res["notes"] = notes;
  return res;
}

void nez_decl(Args& a) {
  padic_decl(a);
  a.flag("require", "exit 2 when NEZ fails");
}

json nez(const Args& a, Report& rep) {
  json notes = json::array();
  OrdinaryData d = padic_data(a, rep, notes);
  NEZResult r = check_NEZ(d);
  json res;
  res["holds"] = r.holds;
  res["by_shortcut"] = r.by_shortcut;
  res["witness_name"] = r.witness_name.empty() ? json(nullptr) : json(r.witness_name);
  res["witness"] = r.witness ? exact(*r.witness) : json(nullptr);
  res["data"] = ordinary_json(d);
  res["notes"] = notes;
  if (!r.holds && a.set("require")) rep.exit = kHypothesis;
  return res;
}

void pr_factor_decl(Args& a) {
  padic_decl(a);
  a.opt("x", "alpha_P beta_Q directly (with --p, --kprime)")
      .opt("j", "j", "0")
      .opt("r", "conductor exponent r of eta", "0")
      .opt("eta", "character of (Z/p^r)^x as an exponent vector on the generators")
      .opt("choice", "alphaP-betaQ | betaP-alphaQ", "alphaP-betaQ")
      .opt("c", "auxiliary c for the motivic prefactor")
      .opt("eps-c", "eps(c)", "1");
}

json interp_json(const InterpFactor& f) {
  json res;
  res["j"] = f.j;
  res["r"] = f.r;
  res["scalar"] = exact(f.scalar);
  res["gauss_inverse_numerator"] = f.gauss_part ? json(f.gauss_part->str()) : json(nullptr);
  res["value"] = num(f.value);
  res["tag"] = f.tag;
  res["tag_constant"] = to_string(f.tag_constant);
  return res;
}

json pr_factor(const Args& a, Report& rep) {
  std::int64_t p = a.i64("p");
  int j = a.i32("j"), r = a.i32("r");
  if (r < 0) throw ValidationError("--r must be >= 0");
  DirichletGroup G(r == 0 ? 1 : ipow(p, r));
  std::vector<int> eta;
  if (a.given("eta")) eta = a.int_list("eta");
  else if (r == 0) eta.assign(G.generators().size(), 0);
  else throw ValidationError("r >= 1 needs a primitive character --eta");
  std::string ch = a.raw("choice");
  if (ch != "alphaP-betaQ" && ch != "betaP-alphaQ") throw UsageError("--choice must be alphaP-betaQ or betaP-alphaQ");
  MChoice choice = ch == "alphaP-betaQ" ? MChoice::AlphaPBetaQ : MChoice::BetaPAlphaQ;
  json res;
  res["m_choice"] = ch;
  if (a.given("x")) {
    if (a.given("c")) throw UsageError("--c needs the full ordinary data, not --x");
    res["factor"] = interp_json(pr_interp_factor(a.coeff("x"), p, j, a.i32("kprime"), r, G, eta));
    return res;
  }
  json notes = json::array();
  OrdinaryData d = padic_data(a, rep, notes);
  res["factor"] = interp_json(pr_interp_factor(d, j, r, G, eta, choice));
  if (a.given("c")) {
    MotivicPrefactor m = motivic_padic_L_prefactors(d, a.i64("c"), j, r, G, eta, a.coeff("eps-c"), choice);
    json mj;
    mj["pole"] = m.pole;
    mj["c_factor"] = num(m.c_factor);
    mj["value"] = m.pole ? json(nullptr) : num(m.value);
    mj["exact"] = m.exact ? exact(*m.exact) : json(nullptr);
    res["motivic"] = mj;
    if (m.pole) rep.exit = kHypothesis;
  }
  res["notes"] = notes;
  return res;
}

void gauss_decl(Args& a) {
  a.opt("p", "prime p").opt("r", "exponent r >= 1", "1").opt("eta", "exponent vector of eta on the generators; default trivial");
}

json gauss(const Args& a, Report&) {
  std::int64_t p = a.i64("p");
  int r = a.i32("r");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (r < 1) throw ValidationError("gauss sum needs r >= 1");
  DirichletGroup G(ipow(p, r));
  std::vector<int> eta = a.given("eta") ? a.int_list("eta") : std::vector<int>(G.generators().size(), 0);
  if (eta.size() != G.generators().size()) throw ValidationError("--eta needs one exponent per generator");
  Cyclotomic g = gauss_sum(G, eta, p, r);
  Cyclotomic n = (g * g.conj()).reduced();
  json res;
  res["modulus"] = G.modulus();
  res["generators"] = G.generators();
  res["orders"] = G.orders();
  res["eta"] = eta;
  res["eta_order"] = G.char_order(eta);
  res["primitive"] = G.is_primitive(eta);
  res["field"] = cyclotomic_field(g.order());
  res["exact"] = g.reduced().str();
  res["value"] = num(g.value());
  auto q = n.as_rational();
  res["abs_squared"] = q ? json(to_string(*q)) : json(n.str());
  return res;
}

// ---- acceptance

void acceptance_decl(Args&) {}

json acceptance(const Args&, Report& rep) {
  auto results = run_acceptance();
  json items = json::array();
  int passed = 0;
  for (auto& c : results) {
    items.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    passed += c.pass;
  }
  if (passed != static_cast<int>(results.size())) rep.exit = kValidation;
  return json{{"criteria", items}, {"passed", passed}, {"total", results.size()}};
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"field-info", "arithmetic of Q(sqrt d): unit, different, splitting", field_info_decl, field_info},
      {"form-validate", "load an eigenform and check its Hecke relations", form_validate_decl, form_validate},
      {"base-change", "base change of classical data to a real quadratic field", base_change_decl, base_change_cmd},
      {"euler-factor", "Asai Euler factor at an unramified prime", euler_factor_decl, euler_factor},
      {"verify-pl", "compare the Euler factor with the tensor-induced Frobenius", verify_pl_decl, verify_pl},
      {"hecke-identity", "normalize Hecke expressions, check the split X^2 identity", hecke_identity_decl, hecke_identity},
      {"norm-factor", "Euler-system norm-relation element in the group ring mod m", norm_factor_decl, norm_factor},
      {"lfun", "imprimitive Asai L-value", lfun_decl, lfun},
      {"eisenstein", "real-analytic Eisenstein series E_alpha^(k)(tau, s)", eisenstein_decl, eisenstein_cmd},
      {"kronecker-check", "Kronecker limit identity at (alpha, tau)", kronecker_decl, kronecker},
      {"mellin-check", "diagonal Mellin transform against the Dirichlet series", mellin_decl, mellin},
      {"constants", "unfolding and regulator constants", constants_decl, constants},
      {"padic-params", "ordinary p-adic data and Frobenius valuations", padic_decl, padic_params},
      {"nez", "no-exceptional-zero condition", nez_decl, nez},
      {"pr-factor", "Perrin-Riou interpolation factor, optionally with the c-factor", pr_factor_decl, pr_factor},
      {"gauss-sum", "Gauss sum of a character mod p^r", gauss_decl, gauss},
      {"acceptance", "run the acceptance suite", acceptance_decl, acceptance},
  };
  return list;
}

}  // namespace asailab::cli
