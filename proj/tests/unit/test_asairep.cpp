#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "asailab/asairep.hpp"
#include "asailab/errors.hpp"
#include "asailab/heckealg.hpp"

using namespace asailab;

namespace {

Q frac(long a, long b) {
  Q q(a, b);
  q.canonicalize();
  return q;
}

Matrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-6, 6), den(1, 3);
  Matrix M(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = Coeff(frac(v(rng), den(rng)));
  return M;
}

Matrix random_invertible(int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix M = random_matrix(n, rng);
    if (!M.det().is_zero()) return M;
  }
}

// Leibniz expansion, independent of the library's elimination.
Coeff leibniz_det(const Matrix& A) {
  int n = A.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Coeff total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Coeff term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= A(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Poly P(std::initializer_list<long> c) {
  Poly p;
  for (long x : c) p.push_back(Coeff(x));
  return trim(p);
}

LocalAsaiData split_data(std::int64_t ell, Coeff a, Coeff b, Coeff det1, Coeff det2, int twist = 0) {
  LocalAsaiData d;
  d.ell = ell;
  d.kind = SplitKind::Split;
  d.frob = {FrobData::from_trace_det(a, det1), FrobData::from_trace_det(b, det2)};
  d.twist = twist;
  return d;
}

LocalAsaiData inert_data(std::int64_t ell, Coeff a, Coeff det, int twist = 0) {
  LocalAsaiData d;
  d.ell = ell;
  d.kind = SplitKind::Inert;
  d.frob = {FrobData::from_trace_det(a, det)};
  d.twist = twist;
  return d;
}

const HilbertEigenform& delta_bc() {
  static const HilbertEigenform f = base_change(discriminant_form_data(200), RealQuadraticField(5), 200);
  return f;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    Matrix A = random_invertible(4, rng), B = random_matrix(4, rng);
    CHECK(A * A.inverse() == Matrix::identity(4));
    CHECK((A * B).det() == A.det() * B.det());
    CHECK(A.det() == leibniz_det(A));
    CHECK((A + B).trace() == A.trace() + B.trace());
  }
  CHECK_THROWS(Matrix(2).inverse());
}

TEST_CASE("reversed characteristic polynomial") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    Matrix A = random_matrix(4, rng);
    Poly cp = charpoly_reversed(A);
    CHECK(degree(cp) <= 4);
    for (long x = -3; x <= 3; ++x) {
      Matrix M = Matrix::identity(4) + A.scaled(Coeff(-x));
      CHECK(poly_eval(cp, Coeff(x)) == leibniz_det(M));
    }
  }
}

TEST_CASE("split tensor induction") {
  CHECK(tensor_induce_split(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
  Matrix D1 = Matrix::from_rows({{2, 0}, {0, 3}}), D2 = Matrix::from_rows({{5, 0}, {0, 7}});
  Matrix K = tensor_induce_split(D1, D2);
  // basis e1⊗e1, e2⊗e1, e1⊗e2, e2⊗e2
  Matrix want(4);
  want(0, 0) = 10;
  want(1, 1) = 15;
  want(2, 2) = 14;
  want(3, 3) = 21;
  CHECK(K == want);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Matrix M1 = random_matrix(2, rng), M2 = random_matrix(2, rng);
    Matrix A = random_invertible(2, rng), B = random_invertible(2, rng);
    Poly p = charpoly_reversed(tensor_induce_split(M1, M2));
    Poly q = charpoly_reversed(tensor_induce_split(A * M1 * A.inverse(), B * M2 * B.inverse()));
    REQUIRE(poly_equal(p, q));
  }
}

TEST_CASE("inert tensor induction") {
  // identity: swap of the mixed vectors
  Matrix S = tensor_induce_inert(Matrix::identity(2));
  Poly want = poly_mul(poly_mul(P({1, -1}), P({1, -1})), poly_mul(P({1, -1}), P({1, 1})));
  CHECK(poly_equal(charpoly_reversed(S), want));
  CHECK(S(1, 2) == Coeff(1));
  CHECK(S(2, 1) == Coeff(1));

  // eigenvalues a, b, +-sqrt(ab)
  Matrix D = Matrix::from_rows({{3, 0}, {0, 5}});
  CHECK(poly_equal(charpoly_reversed(tensor_induce_inert(D)), poly_mul(poly_mul(P({1, -3}), P({1, -5})), P({1, 0, -15}))));

  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    Matrix M = random_matrix(2, rng);
    Matrix R = tensor_induce_inert(M);
    REQUIRE(R * R == tensor_induce_split(M, M));
  }
}

TEST_CASE("Asai characteristic polynomials") {
  // split 5, traces 2 and 3, w = 2
  Poly split = asai_charpoly(split_data(5, 2, 3, 5, 5));
  CHECK(poly_equal(split, P({1, -6, 15, -150, 625})));
  // Satake oracle: product over the Kronecker eigenvalues
  {
    auto roots = [](long double t, long double d) {
      cplx disc = std::sqrt(cplx(t * t - 4 * d, 0));
      return std::pair<cplx, cplx>{(cplx(t) + disc) / 2.0L, (cplx(t) - disc) / 2.0L};
    };
    auto [a1, a2] = roots(2, 5);
    auto [b1, b2] = roots(3, 5);
    std::vector<cplx> poly{1};
    for (cplx e : {a1 * b1, a1 * b2, a2 * b1, a2 * b2}) {
      std::vector<cplx> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] -= poly[i] * e;
      }
      poly = next;
    }
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(poly[i].real() == doctest::Approx(static_cast<double>(to_long_double(split[i].a()))));
      CHECK(std::abs(poly[i].imag()) < 1e-9);
    }
  }

  Poly inert = asai_charpoly(inert_data(3, 5, 9));
  CHECK(poly_equal(inert, poly_mul(P({1, -5, 9}), P({1, 0, -9}))));
  Poly zero = asai_charpoly(inert_data(3, 0, 9));
  CHECK(poly_equal(zero, poly_mul(P({1, 0, 9}), P({1, 0, -9}))));

  CHECK(verify_proj_Pl(split_data(5, 2, 3, 5, 5)));
  CHECK(verify_proj_Pl(inert_data(3, 5, 9)));

  // perturbed matrix on the Galois side
  LocalAsaiData bad = split_data(5, 2, 3, 5, 5);
  bad.frob[0].matrix = companion(Coeff(3), Coeff(5));
  CHECK_FALSE(verify_proj_Pl(bad));
  LocalAsaiData bad_inert = inert_data(3, 5, 9);
  bad_inert.frob[0].matrix = companion(Coeff(6), Coeff(9));
  CHECK_FALSE(verify_proj_Pl(bad_inert));
}

TEST_CASE("dual path on random data") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> v(-50, 50), tw(0, 2);
  const std::vector<std::int64_t> ells{3, 5, 7, 11, 13};
  for (int i = 0; i < 100; ++i) {
    std::int64_t ell = ells[static_cast<std::size_t>(i) % ells.size()];
    int twist = tw(rng);
    Coeff eps1(v(rng) % 2 ? 1 : -1), eps2(v(rng) % 2 ? 1 : -1);
    auto sd = split_data(ell, Coeff(frac(v(rng), 1 + std::abs(v(rng)) % 3)), Coeff(v(rng)), eps1 * Coeff(ell),
                         eps2 * Coeff(ell), twist);
    REQUIRE(verify_proj_Pl(sd));
    Poly sp = asai_charpoly(sd);
    CHECK(sp[0] == Coeff(1));
    auto id = inert_data(ell, Coeff(v(rng)), eps1 * Coeff(ell * ell), twist);
    REQUIRE(verify_proj_Pl(id));
    // random explicit matrices
    LocalAsaiData m;
    m.ell = ell;
    m.kind = SplitKind::Split;
    Matrix M1 = random_invertible(2, rng), M2 = random_invertible(2, rng);
    m.frob = {FrobData::from_matrix(M1), FrobData::from_matrix(M2)};
    REQUIRE(verify_proj_Pl(m));
    m.kind = SplitKind::Inert;
    m.frob = {FrobData::from_matrix(M1)};
    REQUIRE(verify_proj_Pl(m));
  }
}

TEST_CASE("base change forms") {
  const auto& f = delta_bc();
  const auto& F = f.field();
  for (auto ell : primes_upto(100)) {
    if (ell == 5) {
      CHECK_THROWS_AS(asai_charpoly(f, ell), ValidationError);
      continue;
    }
    Poly p = asai_charpoly(f, ell);
    REQUIRE(degree(p) == 4);
    CHECK(p[0] == Coeff(1));
    CHECK(verify_proj_Pl(f, ell));
    // degree-1 factor 1 - chi_D(ell) ell^11 X
    Poly lin{Coeff(1), Coeff(-kronecker_symbol(5, ell)) * Coeff(qpow(Q(ell), 11))};
    auto [quo, rem] = poly_divmod(p, lin);
    CHECK(rem.empty());
    CHECK(degree(quo) == 3);
    // X^4 coefficient is +-(ell^2 S)^2, ell^2 S = N^{w-1} per prime (w = 12)
    Coeff l2s = Coeff(qpow(Q(ell), 22));
    bool split = F.splitting_type(ell).kind == SplitKind::Split;
    CHECK(p[4] == (split ? l2s * l2s : -(l2s * l2s)));

    // specialize the symbolic Euler factor
    HeckeContext c;
    auto s = F.splitting_type(ell);
    c.declare_from_splitting(ell, s.kind);
    auto sym = asai_euler_symbolic(c, ell, s.kind);
    std::map<HeckeSymbol, Coeff> vals;
    auto put = [&](HKind k, const std::string& l, const Coeff& v) { vals[HeckeSymbol{k, HArg{{l, 1}}}] = v; };
    if (s.kind == SplitKind::Split) {
      for (int i = 0; i < 2; ++i) {
        std::string l = split_label(ell, i);
        put(HKind::T, l, f.lambda(s.primes[static_cast<std::size_t>(i)]));
        put(HKind::Diamond, l, Coeff(qpow(Q(ell), 10)));  // N^{w-2} eps
        put(HKind::R, l, Coeff(1));
      }
    } else {
      std::string l = inert_label(ell);
      put(HKind::T, l, f.lambda(s.primes[0]));
      put(HKind::Diamond, l, Coeff(qpow(Q(ell * ell), 10)));
      put(HKind::R, l, Coeff(1));
    }
    CHECK(poly_equal(trim(specialize(sym, vals)), p));
  }
  CHECK_THROWS_AS(local_asai_data(f, 4), ValidationError);

  HilbertEigenform sparse(RealQuadraticField(5), Weight{0, 0, 0, 0}, Ideal{1, 0, 1});
  CHECK_THROWS_AS(local_asai_data(sparse, 3), MissingDataError);
}

TEST_CASE("group ring and characters") {
  auto g = GroupRingElement::sigma(10, 3);
  CHECK(g * GroupRingElement::sigma(10, 7) == GroupRingElement::sigma(10, 1));
  CHECK(g * GroupRingElement::sigma(10, 3, -1) == GroupRingElement::scalar(10, Coeff(1)));
  CHECK(GroupRingElement::sigma(10, 3, 4) == GroupRingElement::scalar(10, Coeff(1)));
  CHECK_THROWS_AS(GroupRingElement::sigma(10, 5), ValidationError);

  for (std::int64_t m = 1; m <= 40; ++m) {
    DirichletGroup G(m);
    std::int64_t phi = 0;
    for (std::int64_t a = 1; a <= m; ++a)
      if (gcd64(a, m) == 1) ++phi;
    REQUIRE(G.order() == phi);
    auto chars = G.characters();
    REQUIRE(static_cast<std::int64_t>(chars.size()) == phi);
    for (const auto& chi : chars) {
      cplx sum = 0;
      for (auto a : G.units()) sum += G.value(chi, a);
      bool trivial = std::all_of(chi.begin(), chi.end(), [](int x) { return x == 0; });
      CHECK(std::abs(sum - cplx(trivial ? static_cast<long double>(phi) : 0.0L)) < 1e-12);
      for (auto a : G.units())
        for (auto b : G.units())
          CHECK(std::abs(G.value(chi, a * b % m) - G.value(chi, a) * G.value(chi, b)) < 1e-12);
    }
  }
}

TEST_CASE("norm factors") {
  RealQuadraticField F(5);
  HilbertEigenform f(F, Weight{0, 0, 0, 0}, F.unit_ideal());
  f.set_eigenvalue(F.rational(3), Coeff(5));

  auto x5 = euler_system_norm_factor(f, 3, 0, 5);
  // 5 + 2g - 5g^2 - 2g^3 with g = sigma_3: g = 3, g^2 = 4, g^3 = 2
  GroupRingElement want = GroupRingElement::scalar(5, Coeff(5)) + GroupRingElement::sigma(5, 3).scaled(Coeff(2)) -
                          GroupRingElement::sigma(5, 3, 2).scaled(Coeff(5)) -
                          GroupRingElement::sigma(5, 3, 3).scaled(Coeff(2));
  CHECK(x5 == want);
  CHECK(x5.coefficient(1) == Coeff(5));
  CHECK(x5.coefficient(3) == Coeff(2));
  CHECK(x5.coefficient(4) == Coeff(-5));
  CHECK(x5.coefficient(2) == Coeff(-2));

  CHECK(euler_system_norm_factor(f, 3, 0, 4).is_zero());

  Poly Pl = asai_charpoly(f, 3);
  auto x1 = euler_system_norm_factor(f, 3, 0, 1);
  Coeff scalar = Coeff(2) * (Coeff(1) - Coeff(1)) - Coeff(3) * poly_eval(Pl, Coeff(Q(1, 3)));
  CHECK(x1 == GroupRingElement::scalar(1, scalar));

  CHECK_THROWS_AS(euler_system_norm_factor(f, 3, 0, 6), ValidationError);
  CHECK_THROWS_AS(euler_system_norm_factor(f, 3, 1, 5), ValidationError);

  // agreement with the symbolic relation under a character with chi(3) = i
  HeckeContext c;
  c.declare_from_splitting(3, SplitKind::Inert);
  auto sym = norm_relation_symbolic(c, 3, SplitKind::Inert, 0, 0, 0);
  std::map<HeckeSymbol, Coeff> vals;
  vals[HeckeSymbol{HKind::T, HArg{{"q3", 1}}}] = Coeff(5);
  vals[HeckeSymbol{HKind::Diamond, HArg{{"q3", 1}}}] = Coeff(1);
  vals[HeckeSymbol{HKind::R, HArg{{"q3", 1}}}] = Coeff(1);
  vals[HeckeSymbol{HKind::Sigma, HArg{{"3", 1}}}] = Coeff(Q(0), Q(1), -1);
  Coeff symbolic = specialize(sym, vals)[0];
  DirichletGroup G(5);
  std::vector<int> chi;
  for (const auto& x : G.characters())
    if (std::abs(G.value(x, 3) - cplx(0, 1)) < 1e-12) chi = x;
  REQUIRE(!chi.empty());
  cplx numeric = evaluate_character(x5, G, chi);
  CHECK(std::abs(numeric - symbolic.value()) < 1e-12);

  // split but not narrowly principal
  RealQuadraticField F3(3);
  HilbertEigenform g(F3, Weight{0, 0, 0, 0}, F3.unit_ideal());
  CHECK_THROWS_AS(euler_system_norm_factor(g, 11, 0, 5), HypothesisError);
}

TEST_CASE("c factor") {
  CHECK(c_factor(7, 0, 0, 0, Coeff(1), 1) == GroupRingElement::scalar(1, Coeff(48)));
  CHECK_THROWS_AS(c_factor(2, 0, 0, 0, Coeff(1), 1, false), ValidationError);
  CHECK_THROWS_AS(c_factor(1, 0, 0, 0, Coeff(1), 1), ValidationError);
  CHECK_THROWS_AS(c_factor(7, 0, 0, 0, Coeff(1), 14), ValidationError);

  // never annihilated by a character when k + k' - 2j > 0
  for (std::int64_t m = 1; m <= 20; ++m) {
    if (gcd64(7, m) != 1) continue;
    DirichletGroup G(m);
    for (const auto& eps : {Coeff(1), Coeff(-1)})
      for (const auto& chi : G.characters()) {
        auto x = c_factor(7, 0, 1, 1, eps, m);
        CHECK(std::abs(evaluate_character(x, G, chi)) > 1.0);
      }
  }
}
