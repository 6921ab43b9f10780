#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "asailab/asairep.hpp"
#include "asailab/cli.hpp"
#include "asailab/eigenform.hpp"
#include "asailab/eisenstein.hpp"
#include "asailab/heckealg.hpp"
#include "asailab/lseries.hpp"
#include "asailab/padic.hpp"
#include "asailab/poly.hpp"

namespace asailab::cli {

namespace {

// Tolerances and budgets.
constexpr int kRandomPerKind = 200;
constexpr double kTensorBudget = 10;
constexpr double kSplitIdentityBudget = 5;
constexpr int kConfluenceExprs = 500;
constexpr long double kKroneckerTol = 1e-8L;
constexpr double kKroneckerBudget = 30;
constexpr long double kDualTol = 1e-8L;
constexpr long double kInvarianceTol = 1e-8L;
constexpr std::int64_t kBaseChangeBound = 4000;
constexpr std::int64_t kHeckeNorm = 500;
constexpr std::int64_t kFactorEll = 50;
constexpr long double kLRelTol = 1e-6L;
constexpr std::int64_t kCoefficientN = 500;
constexpr long double kMellinTol = 1e-4L;
constexpr long double kMellinStability = 1e-6L;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... xs) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

// tau(n), n <= n_max, from the product q prod (1 - q^n)^24 by plain series multiplication.
std::vector<Z> tau_by_product(std::int64_t n_max) {
  using i128 = __int128;
  const std::size_t L = static_cast<std::size_t>(n_max);
  std::vector<i128> eta(L, 0);
  eta[0] = 1;
  for (std::size_t n = 1; n < L; ++n)
    for (std::size_t i = L - 1; i >= n; --i) eta[i] -= eta[i - n];
  auto mul = [&](const std::vector<i128>& a, const std::vector<i128>& b) {
    std::vector<i128> c(L, 0);
    for (std::size_t i = 0; i < L; ++i)
      if (a[i] != 0)
        for (std::size_t j = 0; i + j < L; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  auto e2 = mul(eta, eta), e4 = mul(e2, e2), e8 = mul(e4, e4), e16 = mul(e8, e8), e24 = mul(e16, e8);
  std::vector<Z> tau(L + 1, 0);
  for (std::size_t n = 1; n <= L; ++n) {
    i128 v = e24[n - 1];
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Z z = (Z(static_cast<unsigned long>(u >> 64)) << 64) + Z(static_cast<unsigned long>(u & ~0UL));
    tau[n] = neg ? Z(-z) : z;
  }
  return tau;
}

// Base change of Delta to Q(sqrt 5) built from the product oracle; shared by 6-8.
const HilbertEigenform& delta_over_q5() {
  static const HilbertEigenform form = [] {
    auto tau = tau_by_product(kBaseChangeBound);
    ClassicalData cl;
    cl.weight = 12;
    for (std::int64_t p : primes_upto(kBaseChangeBound)) {
      cl.ap[p] = Q(tau[static_cast<std::size_t>(p)]);
      for (std::int64_t q = p; q <= kBaseChangeBound; q *= p) {
        cl.prime_powers[q] = Q(tau[static_cast<std::size_t>(q)]);
        if (q > kBaseChangeBound / p) break;
      }
    }
    return base_change(cl, RealQuadraticField(5), kBaseChangeBound);
  }();
  return form;
}

Criterion guarded(int id, const std::string& name, const std::function<Criterion()>& body) {
  auto t0 = Clock::now();
  Criterion c;
  try {
    c = body();
  } catch (const std::exception& ex) {
    c.pass = false;
    c.detail = std::string("exception: ") + ex.what();
  }
  c.id = id;
  c.name = name;
  c.seconds = since(t0);
  return c;
}

// 1. Tensor induction against the Hecke-side Euler factor.
Criterion tensor_induction() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(0x5eed0001);
  auto primes = primes_upto(99);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto rational = [&] { return Q(pick(-30, 30), pick(1, 4)); };
  auto conjugated = [&](const Coeff& tr, const Coeff& det) {
    Matrix A;
    do {
      A = Matrix::from_rows({{Coeff(rational()), Coeff(rational())}, {Coeff(rational()), Coeff(rational())}});
    } while (A.det().is_zero());
    return A * companion(tr, det) * A.inverse();
  };
  int checked = 0, failed = 0;
  for (SplitKind kind : {SplitKind::Split, SplitKind::Inert}) {
    for (int n = 0; n < kRandomPerKind; ++n) {
      LocalAsaiData d;
      d.ell = primes[static_cast<std::size_t>(pick(0, static_cast<int>(primes.size()) - 1))];
      d.kind = kind;
      int w = pick(0, 1) ? 4 : 2;
      d.twist = w == 4 && pick(0, 1) ? 2 : 0;
      Q N = kind == SplitKind::Split ? Q(d.ell) : Q(d.ell * d.ell);
      for (std::size_t i = 0; i < (kind == SplitKind::Split ? 2u : 1u); ++i) {
        Coeff det = Coeff(qpow(N, w - 1)) * Coeff(pick(0, 1) ? 1 : -1);
        d.frob.push_back(FrobData::from_matrix(conjugated(Coeff(rational()), det)));
      }
      ++checked;
      if (!verify_proj_Pl(d)) ++failed;
    }
  }
  LocalAsaiData split{5, SplitKind::Split, {FrobData::from_trace_det(3, 5), FrobData::from_trace_det(2, 5)}, 0};
  LocalAsaiData inert{3, SplitKind::Inert, {FrobData::from_trace_det(5, 9)}, 0};
  Poly want_split{1, -6, 15, -150, 625};
  Poly want_inert = poly_mul(Poly{1, -5, 9}, Poly{1, 0, -9});
  bool fixed = poly_equal(asai_charpoly(split), want_split) && verify_proj_Pl(split) &&
               poly_equal(asai_charpoly(inert), want_inert) && verify_proj_Pl(inert);
  double secs = since(t0);
  Criterion c;
  c.pass = failed == 0 && fixed && secs < kTensorBudget;
  c.detail = fmt("%d random instances, %d mismatches; fixed instances %s; %.2f s", checked, failed, fixed ? "ok" : "FAIL", secs);
  return c;
}

// 2. Split X^2 identity.
Criterion split_identity() {
  auto t0 = Clock::now();
  int checked = 0, failed = 0, principal = 0;
  for (std::int64_t d : {2, 3, 5, 13}) {
    RealQuadraticField F(d);
    for (std::int64_t ell : primes_upto(199)) {
      if (F.splitting_type(ell).kind != SplitKind::Split) continue;
      auto r = verify_split_x2_identity(F, ell);
      ++checked;
      principal += r.narrowly_principal;
      if (!r.holds) ++failed;
    }
  }
  double secs = since(t0);
  Criterion c;
  c.pass = failed == 0 && checked > 0 && secs < kSplitIdentityBudget;
  c.detail = fmt("%d split primes, %d failures (%d narrowly principal); %.2f s", checked, failed, principal, secs);
  return c;
}

// 3. Normalization is compatible with multiplication.
Criterion confluence() {
  HeckeContext ctx = parse_hecke_header("split 7 l7 l7b\ninert 3 q3\nramified 5 r5\nunit u\n");
  const std::vector<std::string> atoms = {
      "T(l7)", "T(l7b)", "T(l7^2)", "T(7)", "T(l7*l7b^2)", "T(q3)", "T(q3^2*l7)", "T(21)", "T(r5^3)", "T(u*l7)",
      "T(1)",  "S(7)",   "S(l7)",   "S(q3)", "<l7>",       "<3>",   "<u>",        "R(l7b)", "R(21)",   "U(l7)",
      "U(q3)", "sigma(7)", "sigma(3^-1)", "X"};
  std::mt19937_64 rng(0x5eed0003);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_expr = [&] {
    std::ostringstream os;
    int terms = pick(1, 3);
    for (int t = 0; t < terms; ++t) {
      int c = pick(-9, 9);
      os << (t == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) << (c == 0 ? 1 : std::abs(c));
      int factors = pick(1, 3);
      for (int f = 0; f < factors; ++f) {
        os << "*" << atoms[static_cast<std::size_t>(pick(0, static_cast<int>(atoms.size()) - 1))];
        if (pick(0, 3) == 0) os << "^2";
      }
      if (pick(0, 4) == 0) os << "/" << pick(2, 5);
    }
    return os.str();
  };
  int failed = 0;
  std::string first;
  for (int n = 0; n < kConfluenceExprs; ++n) {
    std::string sa = random_expr(), sb = random_expr();
    HeckePolynomial a = parse_hecke(ctx, sa), b = parse_hecke(ctx, sb);
    HeckePolynomial lhs = normalize(ctx, a * b);
    HeckePolynomial na = normalize(ctx, a), nb = normalize(ctx, b);
    HeckePolynomial rhs = normalize(ctx, na * nb);
    bool ok = lhs == rhs && normalize(ctx, na) == na;
    if (!ok && failed++ == 0) first = "(" + sa + ")*(" + sb + ")";
  }
  Criterion c;
  c.pass = failed == 0;
  c.detail = fmt("%d random products, %d failures", kConfluenceExprs, failed) + (first.empty() ? "" : "; first " + first);
  return c;
}

// 4. Kronecker limit identity.
Criterion kronecker_grid() {
  auto t0 = Clock::now();
  long double worst = 0;
  for (Q a : {Q(1, 4), Q(1, 5), Q(1, 7)})
    for (cplx tau : {cplx(0, 1), cplx(0, 2), cplx(0.5L, 1.5L)}) worst = std::max(worst, kronecker_limit_check(a, tau));
  double secs = since(t0);
  Criterion c;
  c.pass = worst < kKroneckerTol && secs < kKroneckerBudget;
  c.detail = fmt("9 points, max residual %.3Le; %.2f s", worst, secs);
  return c;
}

// 5. Lattice sum against the continued expansion, and Gamma_1(5) invariance.
Criterion eisenstein_dual() {
  struct Pt {
    int k;
    cplx s;
    Q alpha;
    cplx tau;
  };
  const cplx i1(0, 1), i2(0, 2), t3(0.5L, 1.5L), t4(0.3L, 1.1L);
  const std::vector<Pt> grid = {
      {0, 2, Q(1, 4), i1},           {0, 2.5L, Q(1, 5), i2},          {0, cplx(2, 0.5L), Q(1, 3), t3}, {0, 3, Q(1, 7), t4},
      {1, 1.5L, Q(1, 5), i1},        {1, 2, Q(1, 4), i2},             {1, cplx(1.5L, 0.5L), Q(1, 7), t3}, {1, 2.5L, Q(1, 3), t4},
      {2, 1, Q(1, 5), i2},           {2, 1.5L, Q(1, 4), i1},          {2, cplx(1, -0.5L), Q(1, 7), t3}, {2, 2, Q(1, 3), t4},
      {3, 0.5L, Q(1, 7), i1},        {3, 1, Q(1, 5), i2},             {3, cplx(0.5L, 1), Q(1, 4), t3},  {3, 1.5L, Q(1, 3), t4},
      {4, 0, Q(1, 5), i1},           {4, 0.5L, Q(1, 4), i2},          {4, 1, Q(1, 7), t3},              {4, cplx(0, 0.5L), Q(1, 3), t4},
  };
  long double worst = 0;
  for (const auto& p : grid) {
    cplx a = eisenstein_lattice_sum(p.k, p.alpha, p.tau, p.s, 200);
    cplx b = eisenstein_continued(p.k, p.alpha, p.tau, p.s);
    worst = std::max(worst, std::abs(a - b) / std::max<long double>(1, std::abs(b)));
  }
  // E(g tau, s) = (c tau + d)^k E(tau, s) for g in Gamma_1(5), alpha = a/5
  struct Gamma {
    long a, b, c, d;
  };
  long double inv = 0;
  const cplx tau(-0.2L, 0.2L);
  for (Gamma g : {Gamma{1, 1, 0, 1}, Gamma{1, 0, 5, 1}})
    for (int k : {2, 3}) {
      cplx s(0.75L, 0.25L);
      cplx gt = (cplx(g.a) * tau + cplx(g.b)) / (cplx(g.c) * tau + cplx(g.d));
      cplx lhs = eisenstein_continued(k, Q(2, 5), gt, s);
      cplx rhs = std::pow(cplx(g.c) * tau + cplx(g.d), k) * eisenstein_continued(k, Q(2, 5), tau, s);
      inv = std::max(inv, std::abs(lhs - rhs) / std::max<long double>(1, std::abs(rhs)));
    }
  Criterion c;
  c.pass = worst < kDualTol && inv < kInvarianceTol;
  c.detail = fmt("20 points, max difference %.3Le; Gamma_1(5) residual %.3Le", worst, inv);
  return c;
}

// 6. Base change: Hecke relations and the degree-one Asai factor.
Criterion base_change_pipeline() {
  auto oracle = tau_by_product(100);
  auto core_tau = ramanujan_tau(100);
  int tau_mismatch = 0;
  for (std::size_t n = 1; n <= 100; ++n) tau_mismatch += oracle[n] != core_tau[n];
  const HilbertEigenform& f = delta_over_q5();
  HeckeReport hr = check_hecke_relations(f, kHeckeNorm);
  int checked = 0, bad = 0;
  for (std::int64_t ell : primes_upto(kFactorEll)) {
    if (ell == 5) continue;
    Poly P = asai_charpoly(f, ell);
    Coeff root = Coeff(kronecker_symbol(5, ell)) * Coeff(qpow(Q(ell), 11));
    auto [q, r] = poly_divmod(P, Poly{Coeff(1), -root});
    ++checked;
    if (!r.empty() || degree(q) != 3) ++bad;
  }
  Criterion c;
  c.pass = tau_mismatch == 0 && hr.violations.empty() && hr.relations_checked > 0 && bad == 0;
  c.detail = fmt("tau oracle mismatches %d; %d Hecke relations to norm %lld, %zu violations; %d factorizations, %d bad",
                 tau_mismatch, hr.relations_checked, static_cast<long long>(kHeckeNorm), hr.violations.size(), checked, bad);
  return c;
}

// 7. Dirichlet series against Euler product.
Criterion dirichlet_vs_euler() {
  const HilbertEigenform& f = delta_over_q5();
  LValue a = imprimitive_L(f, 14, kBaseChangeBound);
  LValue b = euler_product_L(f, 14, 500);
  long double rel = std::abs(a.value - b.value) / std::abs(b.value);
  CoefficientCheck cc = check_euler_coefficients(f, kCoefficientN);
  Criterion c;
  c.pass = rel < kLRelTol && cc.mismatches == 0;
  c.detail = fmt("L(14) = %.12Lf vs %.12Lf, relative %.3Le; coefficient mismatches to %lld: %d", a.value.real(),
                 b.value.real(), rel, static_cast<long long>(kCoefficientN), cc.mismatches);
  return c;
}

// 8. Diagonal Mellin transform.
Criterion mellin() {
  const HilbertEigenform& f = delta_over_q5();
  MellinCheck m = diagonal_mellin_check(f, 14, 40);
  MellinCheck h = diagonal_mellin_check(f, 14, 20);
  long double moved = std::abs(m.lhs - h.lhs);
  Criterion c;
  c.pass = m.residual < kMellinTol && moved < kMellinStability;
  c.detail = fmt("residual %.3Le; halving the cutoff moves lhs by %.3Le", m.residual, moved);
  return c;
}

// 9. Norm relation fixtures.
Criterion norm_relation() {
  RealQuadraticField F(2);
  HilbertEigenform f(F, Weight{0, 0, 0, 0}, F.unit_ideal());
  f.set_eigenvalue(F.splitting_type(3).primes[0], Coeff(5));
  GroupRingElement got5 = euler_system_norm_factor(f, 3, 0, 5);
  auto g = [](int e) { return GroupRingElement::sigma(5, 3, e); };
  GroupRingElement want5 = g(0).scaled(5) + g(1).scaled(2) - g(2).scaled(5) - g(3).scaled(2);
  GroupRingElement got4 = euler_system_norm_factor(f, 3, 0, 4);
  Criterion c;
  c.pass = got5 == want5 && got4.is_zero();
  c.detail = "m=5: " + got5.str() + "; m=4: " + (got4.is_zero() ? std::string("0") : got4.str());
  return c;
}

// 10. p-adic bookkeeping.
Criterion padic() {
  struct Datum {
    std::int64_t p;
    int k, kp;
    Coeff aP, aQ;
    std::int64_t root;
  };
  const std::vector<Datum> data = {
      {5, 0, 0, 2, 3, -1},  {7, 1, 1, 3, -2, -1}, {11, 2, 0, 2, 5, -1}, {3, 3, 1, 2, 4, -1},
      {13, 4, 2, 6, Q(1, 2), -1}, {5, 1, 3, Coeff(1, 1, -1), 3, 2}, {7, 2, 2, Coeff(2, 1, 2), Coeff(1, -1, 2), 3},
  };
  int bad_val = 0, bad_short = 0, shortcut_cases = 0;
  auto expect = [](int k, int kp) {
    std::vector<std::int64_t> e{0, k + 1, kp + 1, k + kp + 2};
    std::sort(e.begin(), e.end());
    return e;
  };
  auto check_vals = [&](const OrdinaryData& d) {
    auto v = frobenius_valuations(d);
    std::sort(v.begin(), v.end());
    if (v != expect(d.k, d.kp)) ++bad_val;
  };
  for (const auto& x : data) {
    OrdinaryData d = make_ordinary_data(x.p, x.k, x.kp, x.aP, x.aQ, 1, 1, x.root);
    check_vals(d);
    if (x.k != x.kp) {
      ++shortcut_cases;
      NEZResult r = check_NEZ(d);
      if (!r.holds || !r.by_shortcut) ++bad_short;
    }
  }
  // the base change of Delta, stabilised at 11
  OrdinaryData bc = stabilized_params(p_stabilize(delta_over_q5(), 11, -1), 11);
  check_vals(bc);

  InterpFactor pr = pr_interp_factor(Coeff(2), 5, 0, 0, 0, DirichletGroup(1), {});
  bool pr_ok = pr.scalar == Coeff(Q(5, 6)) && pr.tag == "log" && pr.tag_constant == 1;

  int gauss_checked = 0, gauss_bad = 0;
  for (std::int64_t p : {3, 5, 7})
    for (int r : {1, 2}) {
      std::int64_t m = ipow(p, r);
      DirichletGroup G(m);
      for (const auto& eta : G.characters()) {
        if (!G.is_primitive(eta)) continue;
        Cyclotomic g = gauss_sum(G, eta, p, r);
        auto n = (g * g.conj()).as_rational();
        long double mod2 = std::norm(g.value());
        ++gauss_checked;
        if (!n || *n != Q(m) || std::abs(mod2 - static_cast<long double>(m)) > 1e-9L * m) ++gauss_bad;
      }
    }
  Criterion c;
  c.pass = bad_val == 0 && bad_short == 0 && shortcut_cases > 0 && pr_ok && gauss_bad == 0 && gauss_checked > 0;
  c.detail = fmt("%zu data, %d valuation mismatches; NEZ shortcut %d/%d; r=0 factor %s (%s); %d Gauss sums, %d bad",
                 data.size() + 1, bad_val, shortcut_cases - bad_short, shortcut_cases, pr.scalar.str().c_str(),
                 pr.tag.c_str(), gauss_checked, gauss_bad);
  return c;
}

}  // namespace

std::vector<Criterion> run_acceptance() {
  std::vector<Criterion> out;
  out.push_back(guarded(1, "tensor induction matches the Asai Euler factor", tensor_induction));
  out.push_back(guarded(2, "split X^2 coefficient identity", split_identity));
  out.push_back(guarded(3, "Hecke normalization confluence", confluence));
  out.push_back(guarded(4, "Kronecker limit identity", kronecker_grid));
  out.push_back(guarded(5, "Eisenstein dual-method agreement and invariance", eisenstein_dual));
  out.push_back(guarded(6, "base-change pipeline", base_change_pipeline));
  out.push_back(guarded(7, "Dirichlet series vs Euler product", dirichlet_vs_euler));
  out.push_back(guarded(8, "diagonal Mellin kernel", mellin));
  out.push_back(guarded(9, "norm-relation scalar fixtures", norm_relation));
  out.push_back(guarded(10, "p-adic bookkeeping", padic));
  return out;
}

std::string format_criterion(const Criterion& c) {
  return fmt("%s %2d  %-48s %7.2fs  ", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.seconds) + c.detail;
}

}  // namespace asailab::cli
