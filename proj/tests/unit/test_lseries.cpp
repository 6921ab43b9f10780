#include <doctest.h>

#include <cmath>

#include "asailab/asairep.hpp"
#include "asailab/errors.hpp"
#include "asailab/lseries.hpp"

using namespace asailab;

namespace {

constexpr long double pi = 3.141592653589793238462643383279502884L;

const HilbertEigenform& delta_bc() {
  static const HilbertEigenform f = base_change(discriminant_form_data(500), RealQuadraticField(5), 500);
  return f;
}

int chi5(std::int64_t n) {
  switch (n % 5) {
    case 1:
    case 4:
      return 1;
    case 2:
    case 3:
      return -1;
    default:
      return 0;
  }
}

Z zpow(std::int64_t b, unsigned long e) {
  Z r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

// For the base change of Delta to Q(sqrt5) the Asai L-function is
// L(Sym^2 Delta, s) L(chi_5, s - 11). Sym^2 from sum tau(n^2) n^-s = L(Sym^2, s) / zeta(2s - 22).
std::vector<Z> bc_delta_oracle(std::int64_t n_max) {
  auto tau = ramanujan_tau(n_max * n_max);
  std::vector<Z> sym(static_cast<std::size_t>(n_max + 1), 0), out(static_cast<std::size_t>(n_max + 1), 0);
  for (std::int64_t d = 1; d * d <= n_max; ++d)
    for (std::int64_t m = 1; m * d * d <= n_max; ++m)
      sym[static_cast<std::size_t>(m * d * d)] += zpow(d, 22) * tau[static_cast<std::size_t>(m * m)];
  for (std::int64_t a = 1; a <= n_max; ++a)
    for (std::int64_t b = 1; a * b <= n_max; ++b)
      out[static_cast<std::size_t>(a * b)] += chi5(a) * zpow(a, 11) * sym[static_cast<std::size_t>(b)];
  return out;
}

long double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

Poly P(std::initializer_list<long> c) {
  Poly p;
  for (long v : c) p.push_back(Coeff(v));
  return p;
}

}  // namespace

TEST_CASE("zero form") {
  HilbertEigenform z(RealQuadraticField(5), Weight{0, 0, 0, 0}, Ideal{1, 0, 1});
  CHECK(is_zero_form(z));
  CHECK_FALSE(is_zero_form(delta_bc()));
  CHECK(imprimitive_L(z, 3, 100).value == cplx(0));
  CHECK(euler_product_L(z, 3, 100).value == cplx(0));
  for (const auto& c : imprimitive_coefficients(z, 30)) CHECK(c.is_zero());
  for (const auto& c : euler_coefficients(z, 30)) CHECK(c.is_zero());
  CHECK(check_euler_coefficients(z, 30).mismatches == 0);
}

TEST_CASE("chi and alpha for the base change") {
  const auto& f = delta_bc();
  for (std::int64_t n = 1; n <= 30; ++n) CHECK(asai_chi(f, n) == Coeff(1));
  auto a = asai_dirichlet_coefficients(f, 50);
  auto tau = ramanujan_tau(50);
  // alpha(ell) at split ell is tau(ell)^2, at inert ell it is tau(ell)^2 - 2 ell^11
  CHECK(a[11] == Coeff(Q(tau[11] * tau[11])));
  CHECK(a[3] == Coeff(Q(tau[3] * tau[3] - 2 * zpow(3, 11))));
  // 5 O = P^2 with P ramified
  CHECK(a[5] == Coeff(Q(tau[25])));
  CHECK(a[1] == Coeff(1));
}

TEST_CASE("Dirichlet coefficients against Sym^2 times chi_5") {
  const std::int64_t n_max = 60;
  auto want = bc_delta_oracle(n_max);
  auto imp = imprimitive_coefficients(delta_bc(), n_max);
  auto eul = euler_coefficients(delta_bc(), n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    CHECK_MESSAGE(imp[static_cast<std::size_t>(n)] == Coeff(Q(want[static_cast<std::size_t>(n)])), "n=" << n);
    CHECK_MESSAGE(eul[static_cast<std::size_t>(n)] == Coeff(Q(want[static_cast<std::size_t>(n)])), "n=" << n);
  }
  auto rep = check_euler_coefficients(delta_bc(), 500);
  CHECK(rep.mismatches == 0);
  CHECK(rep.n_max == 500);
}

TEST_CASE("a broken Hecke relation shows up in the coefficients") {
  HilbertEigenform f = delta_bc();
  Ideal q2 = f.field().pow(f.field().rational(3), 2);
  f.set_eigenvalue(q2, *f.stored(q2) + Coeff(1));
  auto rep = check_euler_coefficients(f, 100);
  CHECK(rep.mismatches > 0);
  CHECK(rep.first_mismatch == 9);
}

TEST_CASE("Dirichlet series against the Euler product") {
  // eigenvalues are stored up to norm 500, so cutoffs stay at 22; far to the
  // right both truncations are below 1e-25
  const auto& f = delta_bc();
  for (cplx s : {cplx(40, 0), cplx(36, 5)}) {
    auto d = imprimitive_L(f, s, 22);
    auto e = euler_product_L(f, s, 22);
    CHECK(rel(d.value, e.value) < 1e-16);
    CHECK(d.truncation.at("n_cutoff") == 22);
    CHECK(e.truncation.at("ell_cutoff") == 22);
  }
  // primitive mode with C = 1 and P the Asai factor reproduces the imprimitive value
  cplx s(36, 1);
  BadFactorSet bad{{2, BadFactor{P({1}), asai_charpoly(f, 2)}}, {3, BadFactor{std::nullopt, asai_charpoly(f, 3)}}};
  CHECK(rel(euler_product_L(f, s, 22, bad, EulerMode::Primitive).value, euler_product_L(f, s, 22).value) < 1e-15);
  // C = 1 - 2^11 X removes that factor from P
  bad[2].C = P({1, -2048});
  auto ratio = euler_product_L(f, s, 22, bad, EulerMode::Primitive).value / euler_product_L(f, s, 22).value;
  CHECK(rel(ratio, 1.0L - 2048.0L * std::exp(-s * std::log(2.0L))) < 1e-15);
  BadFactorSet no_p{{7, BadFactor{P({1}), std::nullopt}}};
  CHECK_THROWS_AS(euler_product_L(f, s, 22, no_p, EulerMode::Primitive), MissingDataError);
  CHECK_THROWS_AS(euler_product_L(f, s, 1), ValidationError);
  CHECK_THROWS_AS(imprimitive_L(f, s, 0), ValidationError);
}

TEST_CASE("local series") {
  const auto& f = delta_bc();
  auto want = bc_delta_oracle(121);
  for (std::int64_t ell : {2, 3, 5, 7, 11}) {
    auto e = local_imprimitive_series(f, ell, 6);
    CHECK(e[0] == Coeff(1));
    CHECK(e[1] == Coeff(Q(want[static_cast<std::size_t>(ell)])));
    CHECK(e[2] == Coeff(Q(want[static_cast<std::size_t>(ell * ell)])));
  }
}

TEST_CASE("C_l divisibility") {
  // k = k' = 0: the strip is 0 <= Re s <= 1
  Poly Pl = poly_mul(P({1, -7}), P({1, -3}));
  BadFactorSet bad{{7, BadFactor{P({1, -7}), Pl}},
                   {3, BadFactor{Pl, Pl}},
                   {5, BadFactor{poly_add(Pl, P({0, 1})), Pl}},
                   {11, BadFactor{P({1}), std::nullopt}},
                   {13, BadFactor{P({1, -2197}), poly_mul(P({1, -2197}), P({1, 1}))}}};
  auto reps = check_Cl_divisibility(bad, 0, 0);
  REQUIRE(reps.size() == 5);
  std::map<std::int64_t, ClReport> by;
  for (auto& r : reps) by[r.ell] = r;

  CHECK(by[7].complete);
  CHECK(by[7].divides);
  CHECK(by[7].roots_in_strip);
  REQUIRE(by[7].real_parts.size() == 1);
  CHECK(by[7].real_parts[0] == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(by[3].divides);
  REQUIRE(by[3].real_parts.size() == 2);
  // roots 1/7 and 1/3 in X = 3^-s: Re s = log 7 / log 3 lies outside, 1 on the edge
  CHECK_FALSE(by[3].roots_in_strip);

  CHECK_FALSE(by[5].divides);
  CHECK_FALSE(by[5].note.empty());

  CHECK_FALSE(by[11].complete);
  CHECK_FALSE(by[11].divides);

  CHECK(by[13].divides);
  CHECK_FALSE(by[13].roots_in_strip);
  CHECK(by[13].real_parts[0] == doctest::Approx(3.0).epsilon(1e-12));
  // the same factor is inside the strip for k + k' = 4
  CHECK(check_Cl_divisibility({{13, bad[13]}}, 2, 2)[0].roots_in_strip);
}

TEST_CASE("polynomial roots") {
  // (X - 1)(X + 2)(X - 3i)(X + 3i) = (X^2 + X - 2)(X^2 + 9)
  Poly p = poly_mul(P({-2, 1, 1}), P({9, 0, 1}));
  auto r = poly_roots(p);
  REQUIRE(r.size() == 4);
  for (cplx want : {cplx(1, 0), cplx(-2, 0), cplx(0, 3), cplx(0, -3)}) {
    long double best = 1;
    for (cplx x : r) best = std::min(best, std::abs(x - want));
    CHECK(best < 1e-15);
  }
  for (cplx x : r) CHECK(std::abs(poly_eval(p, x)) < 1e-13);
  CHECK(poly_roots(P({5})).empty());
  // Coeff in Q(sqrt5): X - sqrt5
  Poly q = {Coeff(Q(0), Q(-1), 5), Coeff(1)};
  auto rq = poly_roots(q);
  REQUIRE(rq.size() == 1);
  CHECK(std::abs(rq[0] - std::sqrt(5.0L)) < 1e-17);
}

TEST_CASE("forced vanishing order") {
  auto c = forced_vanishing_order(5, 0, 0);
  CHECK(c.applicable);
  CHECK(c.order == 1);
  for (int j = 0; j <= 1; ++j) CHECK(forced_vanishing_order(7, 1, j).applicable);
  CHECK_FALSE(forced_vanishing_order(2, 2, 1).applicable);
  CHECK_FALSE(forced_vanishing_order(4, 2, 0).applicable);
  CHECK_FALSE(forced_vanishing_order(2, 2, 1).hypothesis.empty());
  CHECK_THROWS_AS(forced_vanishing_order(5, 0, 1), ValidationError);
  CHECK_THROWS_AS(forced_vanishing_order(2, 2, -1), ValidationError);
  CHECK_THROWS_AS(forced_vanishing_order(-1, 2, 0), ValidationError);
}

TEST_CASE("closed forms") {
  auto a = ClosedForm::make(Q(3, 2), 1, 2, 12);
  CHECK(a.rational == 3);
  CHECK(a.sqrt_arg == 3);
  CHECK(a.i_power == 1);
  CHECK(std::abs(a.value() - cplx(0, 3 * pi * pi * std::sqrt(3.0L))) < 1e-15);
  CHECK(ClosedForm::make(1, 2, 0, 1) == ClosedForm::make(-1, 0, 0, 1));
  CHECK(ClosedForm::make(0, 1, 3, 7) == ClosedForm{});
  auto b = ClosedForm::make(Q(5, 7), 3, -1, 15);
  CHECK(std::abs((a * b).value() - a.value() * b.value()) < 1e-14);
  CHECK(std::abs((a / b).value() - a.value() / b.value()) < 1e-14);
  CHECK((a / a) == ClosedForm::make(1, 0, 0, 1));
  CHECK(a.str() == "3*i*pi^2*sqrt(3)");
  CHECK_THROWS(ClosedForm::make(1, 0, 0, 0));
}

TEST_CASE("unfolding and regulator constants") {
  auto u = unfolding_constant(0, 0, 0, 5, 5);
  CHECK(u == ClosedForm::make(Q(1, 4), 0, -1, 5));
  CHECK(std::abs(u.value() - std::sqrt(5.0L) / (4 * pi)) < 1e-18);
  CHECK(regulator_constant(0, 0, 0, 5) == ClosedForm::make(1, 0, 0, 5));
  CHECK(regulator_constant(2, 2, 1, 8) == ClosedForm::make(128, 0, 2, 1));
  CHECK(std::abs(regulator_constant(2, 2, 1, 8).value() - 128 * pi * pi) < 1e-14);

  // reg / unf = (-1)^{k'+j} 4^{k+1} pi^{k+1} N^{k+k'-2j} binom(k, j) k'!
  for (int k = 0; k <= 6; ++k)
    for (int kp = 0; kp <= k; ++kp)
      for (int j = 0; j <= kp; ++j)
        for (std::int64_t N : {1, 2, 3})
          for (std::int64_t D : {5, 8, 12}) {
            auto ratio = regulator_constant(k, kp, j, D) / unfolding_constant(k, kp, j, N, D);
            Q r = ((kp + j) % 2 ? -1 : 1) * qpow(Q(4), k + 1) * qpow(Q(N), k + kp - 2 * j) * factorial(k) /
                  (factorial(j) * factorial(k - j)) * factorial(kp);
            CHECK_MESSAGE(ratio == ClosedForm::make(r, 0, k + 1, 1), "k=" << k << " k'=" << kp << " j=" << j);
          }
  CHECK_THROWS_AS(unfolding_constant(1, 2, 0, 1, 5), ValidationError);
  CHECK_THROWS_AS(unfolding_constant(2, 1, 0, 0, 5), ValidationError);
  CHECK_THROWS_AS(regulator_constant(2, 1, 2, 5), ValidationError);
  CHECK_THROWS_AS(regulator_constant(2, 1, 0, -5), ValidationError);
}
