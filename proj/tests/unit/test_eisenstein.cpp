#include <doctest.h>

#include <cmath>

#include "asailab/eisenstein.hpp"
#include "asailab/errors.hpp"
#include "asailab/special.hpp"

using namespace asailab;

namespace {

constexpr long double pi = 3.141592653589793238462643383279502884L;
constexpr long double zeta3 = 1.202056903159594285399738161511449990L;
const cplx I(0, 1);

long double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300L); }

// sum_{(m,n)} |m i + n + alpha|^{-4}: closed-form rows from the cotangent
// partial fractions, the far rows by their pi/(2|m|^3) asymptotics.
long double epstein_rows(long double alpha) {
  long double csc2 = 1 / std::pow(std::sin(pi * alpha), 2);
  long double total = pi * pi * pi * pi / 3 * csc2 * (3 * csc2 - 2);
  long double c = std::cos(2 * pi * alpha);
  const int M = 30;
  long double partial_zeta3 = 0;
  for (int m = 1; m <= M; ++m) {
    long double a = m;
    long double ch = std::cosh(2 * pi * a), sh = std::sinh(2 * pi * a);
    long double S = sh / (ch - c);
    long double dS = 2 * pi * (1 - c * ch) / ((ch - c) * (ch - c));
    long double dg = -pi / (a * a) * S + pi / a * dS;
    total += 2 * (-dg / (2 * a));
    partial_zeta3 += 1 / (a * a * a);
  }
  total += 2 * (pi / 2) * (zeta3 - partial_zeta3);
  return total;
}

// sum_n (z + n)^{-3} for Im z != 0 through the Lipschitz formula, and for real
// z via pi^3 cot csc^2.
cplx lipschitz3(cplx z) {
  if (z.imag() == 0) {
    long double x = z.real();
    long double s = std::sin(pi * x);
    return pi * pi * pi * std::cos(pi * x) / (s * s * s);
  }
  if (z.imag() < 0) return -lipschitz3(-z);
  cplx pref = std::pow(-2 * pi * I, 3) / 2.0L;
  cplx sum = 0;
  for (int r = 1; r < 400; ++r) sum += static_cast<long double>(r * r) * std::exp(2 * pi * I * static_cast<long double>(r) * z);
  return pref * sum;
}

cplx e3_oracle(long double alpha, cplx tau) {
  cplx sum = 0;
  for (int m = -40; m <= 40; ++m) sum += lipschitz3(static_cast<long double>(m) * tau + alpha);
  return std::pow(-2 * pi * I, -3) * 2.0L * sum;  // Gamma(3) = 2, pi^0, y^0
}

long double log_abs_siegel(long double alpha, cplx tau) {
  long double y = tau.imag();
  long double out = -pi * y / 6 + std::log(2 * std::sin(pi * alpha));
  cplx q = std::exp(2 * pi * I * tau), qa = std::exp(2 * pi * I * alpha);
  cplx qn = 1;
  for (int n = 1; n < 300; ++n) {
    qn *= q;
    out += std::log(std::abs(1.0L - qn * qa)) + std::log(std::abs(1.0L - qn / qa));
  }
  return out;
}

template <class F>
cplx simpson(F f, long double a, long double b, int n) {
  long double h = (b - a) / n;
  cplx s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
  return s * h / 3.0L;
}

}  // namespace

TEST_CASE("gamma functions") {
  auto G = [](cplx z) { return asailab::gamma(z); };
  CHECK(std::abs(G(5) - cplx(24)) < 1e-15);
  CHECK(std::abs(G(0.5L) - std::sqrt(pi)) < 1e-15);
  cplx z(0.3L, 0.7L);
  CHECK(rel(G(z) * G(1.0L - z), pi / std::sin(pi * z)) < 1e-15);
  CHECK(std::abs(std::norm(G(cplx(1, 1))) - pi / std::sinh(pi)) < 1e-15);
  CHECK(rel(std::exp(log_gamma(cplx(7.5L, 2))), G(cplx(7.5L, 2))) < 1e-15);
  CHECK_THROWS(G(-2));
}

TEST_CASE("incomplete gamma") {
  for (long double x : {0.1L, 0.5L, 2.0L, 10.0L}) {
    CHECK(std::abs(upper_gamma(1, x) - std::exp(-x)) < 1e-17);
    // E1 series
    long double series = -kEulerGamma - std::log(x), term = 1;
    for (int k = 1; k < 200; ++k) {
      term *= -x / k;
      series -= term / k;
    }
    if (x < 5) CHECK(std::abs(exp_integral_e1(x) - series) < 1e-15);
    CHECK(std::abs(upper_gamma(0, x) - exp_integral_e1(x)) < 1e-15);
  }
  for (cplx a : {cplx(0.3L, 0), cplx(0.5L, 2), cplx(-1.5L, 0.25L), cplx(4, -1)})
    for (long double x : {0.5L, 2.0L, 7.0L}) {
      auto f = [&](long double t) { return std::exp((a - 1.0L) * std::log(t) - t); };
      cplx want = simpson(f, x, x + 80, 200000);
      CHECK_MESSAGE(rel(upper_gamma(a, x), want) < 1e-11, "a=" << a.real() << "+" << a.imag() << "i x=" << x);
    }
  CHECK_THROWS(upper_gamma(1, 0));
}

TEST_CASE("Gauss-Legendre") {
  for (int n : {5, 10, 40}) {
    auto f = [](long double x) { return std::pow(x, 2 * 5 - 2); };
    CHECK(integrate_gl(f, -1, 1, n) == doctest::Approx(2.0 / 9));
  }
  CHECK(integrate_gl([](long double x) { return std::pow(x, 18); }, 0, 2, 10) ==
        doctest::Approx(std::pow(2.0, 19) / 19).epsilon(1e-14));
}

TEST_CASE("Epstein sum at k = 0, s = 2") {
  for (long double a : {0.25L, 1.0L / 3, 0.4L}) {
    Q alpha = a == 0.25L ? Q(1, 4) : (a == 0.4L ? Q(2, 5) : Q(1, 3));
    long double want = epstein_rows(a) / (pi * pi);
    cplx cont = eisenstein_continued(0, alpha, I, 2);
    CHECK(rel(cont, want) < 1e-12);
    cplx lat = eisenstein_lattice_sum(0, alpha, I, 2, 200);
    CHECK(rel(lat, want) < 1e-8);
  }
}

TEST_CASE("weight 3 at s = 0 against the Lipschitz q-series") {
  for (cplx tau : {cplx(0.3L, 1.1L), cplx(-0.45L, 0.6L), cplx(0, 2)})
    for (Q alpha : {Q(1, 4), Q(2, 5), Q(5, 6)}) {
      cplx want = e3_oracle(to_long_double(alpha), tau);
      CHECK(rel(eisenstein_continued(3, alpha, tau, 0), want) < 1e-11);
    }
  // the lattice sum converges (slowly) at k + 2s = 3
  cplx tau(0.3L, 1.1L);
  CHECK(rel(eisenstein_lattice_sum(3, Q(1, 4), tau, 0, 300), e3_oracle(0.25L, tau)) < 1e-5);
}

TEST_CASE("Kronecker limit formula") {
  for (Q alpha : {Q(1, 2), Q(1, 3), Q(3, 7)})
    for (cplx tau : {cplx(0, 1), cplx(0.2L, 0.5L), cplx(-0.4L, 1.7L)}) {
      long double want = -2 * log_abs_siegel(to_long_double(alpha), tau);
      cplx e = eisenstein_continued(0, alpha, tau, 0);
      CHECK(std::abs(e - want) < 1e-12);
      CHECK(kronecker_limit_check(alpha, tau) < 1e-12);
      CHECK(std::abs(std::log(std::abs(siegel_unit(alpha, tau))) - log_abs_siegel(to_long_double(alpha), tau)) < 1e-13);
    }
  CHECK(std::abs(std::abs(siegel_unit(Q(1, 3), cplx(0.25L, 0.9L), 50)) - std::abs(siegel_unit(Q(1, 3), cplx(1.25L, 0.9L), 200))) <
        1e-15);
}

TEST_CASE("symmetries") {
  cplx tau(0.15L, 0.85L);
  for (int k = 0; k <= 3; ++k)
    for (cplx s : {cplx(0.3L, 0.2L), cplx(1.7L, -0.4L), cplx(-0.6L, 0)}) {
      cplx e = eisenstein_continued(k, Q(1, 5), tau, s);
      // E_{-alpha} = (-1)^k E_alpha
      CHECK(rel(eisenstein_continued(k, Q(-1, 5), tau, s), (k % 2 ? -1.0L : 1.0L) * e) < 1e-12);
      // alpha is taken mod 1
      CHECK(rel(eisenstein_continued(k, Q(6, 5), tau, s), e) < 1e-12);
      // E(-conj tau, conj s) = (-1)^k conj E(tau, s)
      CHECK(rel(eisenstein_continued(k, Q(1, 5), -std::conj(tau), std::conj(s)), (k % 2 ? -1.0L : 1.0L) * std::conj(e)) <
            1e-12);
    }
}

TEST_CASE("Gamma_1(5) invariance") {
  cplx tau(0.1L, 0.8L);
  struct G {
    long a, b, c, d;
  };
  for (G g : {G{1, 1, 0, 1}, G{1, 0, 5, 1}, G{11, 2, 5, 1}})
    for (int k : {0, 1, 2, 3}) {
      cplx s(0.7L, 0.3L);
      cplx cz = static_cast<long double>(g.c) * tau + static_cast<long double>(g.d);
      cplx gt = (static_cast<long double>(g.a) * tau + static_cast<long double>(g.b)) / cz;
      cplx lhs = eisenstein_continued(k, Q(2, 5), gt, s);
      cplx rhs = std::pow(cz, k) * eisenstein_continued(k, Q(2, 5), tau, s);
      CHECK(rel(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("lattice sum converges to the continuation") {
  cplx tau(-0.2L, 1.3L);
  for (int k : {1, 2}) {
    cplx s(1.4L, 0.5L);
    cplx want = eisenstein_continued(k, Q(1, 3), tau, s);
    CHECK(rel(eisenstein_lattice_sum(k, Q(1, 3), tau, s, 150), want) < 1e-7);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(eisenstein_continued(0, Q(1, 3), I, 1), HypothesisError);
  CHECK_THROWS_AS(eisenstein_continued(0, Q(1), I, 2), ValidationError);
  CHECK_THROWS_AS(eisenstein_continued(0, Q(1, 3), cplx(0, -1), 2), ValidationError);
  CHECK_THROWS_AS(eisenstein_lattice_sum(0, Q(1, 3), I, 1, 10), ValidationError);
  CHECK_THROWS_AS(eisenstein_lattice_sum(2, Q(1, 3), I, 1, 0), ValidationError);
  CHECK_THROWS_AS(siegel_unit(Q(1, 3), I, 0), ValidationError);
}

TEST_CASE("diagonal Mellin transform") {
  HilbertEigenform zero(RealQuadraticField(5), Weight{0, 0, 0, 0}, Ideal{1, 0, 1});
  auto z = diagonal_mellin_check(zero, 3, 40, 100);
  CHECK(z.residual == 0);
  CHECK(std::abs(z.lhs) == 0);

  auto f = base_change(discriminant_form_data(500), RealQuadraticField(5), 500);
  auto m = diagonal_mellin_check(f, 30, 40, 500);
  CHECK(m.residual < 1e-10);
  auto m2 = diagonal_mellin_check(f, cplx(30, 3), 20, 500);
  CHECK(m2.residual < 1e-10);
  CHECK_THROWS_AS(diagonal_mellin_check(f, 0.5L, 40, 100), ValidationError);
}
