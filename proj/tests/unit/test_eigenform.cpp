#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "asailab/eigenform.hpp"
#include "asailab/errors.hpp"

using namespace asailab;

namespace {

// Independent q-expansion of q * prod (1 - q^n)^24 by repeated multiplication.
std::vector<Z> tau_oracle(int N) {
  std::vector<Z> c(static_cast<std::size_t>(N + 1), 0);
  c[0] = 1;
  for (int n = 1; n <= N; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = N; i >= n; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - n)];
  std::vector<Z> tau(static_cast<std::size_t>(N + 1), 0);
  for (int n = 1; n <= N; ++n) tau[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)];
  return tau;
}

const HilbertEigenform& delta_bc() {
  static const HilbertEigenform f = base_change(discriminant_form_data(500), RealQuadraticField(5), 500);
  return f;
}

std::string small_form(const std::string& eigen) {
  return R"({"d": 5, "weight": [2, 2, 0, 0], "level": {"norm": 1, "hnf": [1, 0, 1]},
             "coefficient_field": {"type": "Q"}, "nebentype": [], "eigenvalues": [)" +
         eigen + "]}";
}

}  // namespace

TEST_CASE("weight validation") {
  CHECK_NOTHROW(Weight{2, 2, 0, 0}.validate());
  CHECK_NOTHROW(Weight{2, 0, 0, 1}.validate());
  CHECK_THROWS_AS((Weight{1, 2, 0, 0}.validate()), ValidationError);
  CHECK_THROWS_AS((Weight{2, 0, 0, 0}.validate()), ValidationError);
  CHECK(Weight{2, 0, 0, 1}.w() == 4);
}

TEST_CASE("tau values") {
  auto want = tau_oracle(200);
  auto got = ramanujan_tau(200);
  for (int n = 1; n <= 200; ++n) REQUIRE(got[static_cast<std::size_t>(n)] == want[static_cast<std::size_t>(n)]);
  CHECK(got[2] == -24);
  CHECK(got[11] == 534612);
}

TEST_CASE("loading forms") {
  auto f = load_eigenform(std::string(ASAILAB_TEST_DATA) + "/d5_weight2.json");
  CHECK(f.field().d() == 5);
  CHECK(f.weight().k == 0);
  CHECK(f.lambda(f.field().parse_label("4.1")) == Coeff(-3));
  CHECK(f.lambda(f.field().parse_label("36.1")) == Coeff(-6));

  SUBCASE("parity") {
    CHECK_THROWS_AS(load_eigenform(std::string(ASAILAB_TEST_DATA) + "/bad_parity.json"), ValidationError);
  }
  SUBCASE("multiplicativity") {
    CHECK_THROWS_AS(eigenform_from_json(small_form(R"({"ideal": "4.1", "lambda": "-3"},
                                                      {"ideal": "9.1", "lambda": "2"},
                                                      {"ideal": "36.1", "lambda": "5"})")),
                    ValidationError);
  }
  SUBCASE("ideal outside the field") {
    // 3 is inert in Q(sqrt5): no ideal of norm 3
    CHECK_THROWS_AS(eigenform_from_json(small_form(R"({"ideal": "3.1", "lambda": "1"})")), ValidationError);
  }
  SUBCASE("schema") {
    CHECK_THROWS_AS(eigenform_from_json("{"), ValidationError);
    CHECK_THROWS_AS(eigenform_from_json(R"({"weight": [2, 2, 0, 0]})"), ValidationError);
    CHECK_THROWS_AS(eigenform_from_json(small_form(R"({"ideal": "4.1", "lambda": {"a": "1", "b": "1"}})")),
                    ValidationError);
    CHECK_THROWS_AS(eigenform_from_json(small_form(R"({"ideal": "4.1", "lambda": "1/0"})")), ValidationError);
    CHECK_THROWS_AS(eigenform_from_json(small_form(R"({"ideal": "4.1", "lambda": "1"}, {"ideal": "4.1", "lambda": "1"})")),
                    ValidationError);
    CHECK_THROWS_AS(load_eigenform("/nonexistent/form.json"), ValidationError);
  }
}

TEST_CASE("serialization round trip") {
  std::string text = eigenform_to_json(delta_bc());
  auto g = eigenform_from_json(text);
  CHECK(eigenform_to_json(g) == text);
  CHECK(g.eigenvalues() == delta_bc().eigenvalues());

  HilbertEigenform q(RealQuadraticField(5), Weight{0, 0, 0, 0}, Ideal{1, 0, 1}, 2);
  q.set_eigenvalue(q.field().parse_label("4.1"), Coeff(Q(1, 3), Q(-2), 2));
  std::string qt = eigenform_to_json(q);
  CHECK(eigenform_to_json(eigenform_from_json(qt)) == qt);

  std::string path = "asailab_roundtrip_test.json";
  save_eigenform(delta_bc(), path);
  CHECK(eigenform_to_json(load_eigenform(path)) == text);
  std::remove(path.c_str());
}

TEST_CASE("base change of the discriminant form") {
  const auto& f = delta_bc();
  const auto& F = f.field();
  auto tau = tau_oracle(500);
  // inert 2: tau(2)^2 - 2 * 2^11
  CHECK(f.lambda(F.rational(2)) == Coeff(-3520));
  auto s11 = F.splitting_type(11);
  CHECK(f.lambda(s11.primes[0]) == Coeff(Q(tau[11])));
  CHECK(f.lambda(s11.primes[1]) == Coeff(Q(tau[11])));

  for (std::int64_t ell : primes_upto(22)) {
    auto s = F.splitting_type(ell);
    Q a = tau[static_cast<std::size_t>(ell)];
    if (s.kind == SplitKind::Inert) CHECK(f.lambda(s.primes[0]) == Coeff(a * a - 2 * qpow(Q(ell), 11)));
    if (s.kind == SplitKind::Ramified) CHECK(f.lambda(s.primes[0]) == Coeff(a));
  }
  // Galois symmetry
  for (const auto& [I, v] : f.eigenvalues()) CHECK(f.lambda(F.conj(I)) == v);

  auto rep = check_hecke_relations(f, 500);
  CHECK(rep.violations.empty());
  CHECK(rep.relations_checked > 0);
  CHECK(check_hecke_relations(f, 1).violations.empty());
  CHECK(check_hecke_relations(f, 1).relations_checked == 0);

  // split prime powers agree with tau at prime powers
  CHECK(f.lambda(F.pow(s11.primes[0], 2)) == Coeff(Q(tau[121])));
}

TEST_CASE("base change of zero data") {
  ClassicalData cl;
  cl.weight = 2;
  for (auto ell : primes_upto(100)) cl.ap[ell] = 0;
  auto f = base_change(cl, RealQuadraticField(5), 100);
  CHECK(f.lambda(f.field().rational(3)) == Coeff(-6));
  CHECK(check_hecke_relations(f, 100).violations.empty());

  ClassicalData missing;
  missing.weight = 2;
  missing.ap[2] = 1;
  CHECK_THROWS_AS(base_change(missing, RealQuadraticField(5), 10), MissingDataError);
  cl.weight = 1;
  CHECK_THROWS_AS(base_change(cl, RealQuadraticField(5), 10), ValidationError);
}

TEST_CASE("perturbed eigenvalue gives one violation") {
  ClassicalData cl;
  cl.weight = 2;
  for (auto ell : primes_upto(100)) cl.ap[ell] = static_cast<long>(ell % 7) - 3;
  auto f = base_change(cl, RealQuadraticField(5), 100);
  REQUIRE(check_hecke_relations(f, 100).violations.empty());
  Ideal q2 = f.field().pow(f.field().rational(3), 2);
  f.set_eigenvalue(q2, *f.stored(q2) + Coeff(1));
  auto rep = check_hecke_relations(f, 100);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].ideal == "81.1");
  CHECK(rep.violations[0].actual - rep.violations[0].expected == Coeff(1));

  f.erase_eigenvalue(q2);
  CHECK_THROWS_AS(check_hecke_relations(f, 100), MissingDataError);
}

TEST_CASE("alpha coefficients") {
  const auto& f = delta_bc();
  for (std::int64_t n = 1; n <= 60; ++n) CHECK(alpha_coeff(f, n) == f.lambda_rational(n));
  CHECK(alpha_coeff(f, 1) == Coeff(1));
  for (std::int64_t m = 1; m <= 20; ++m)
    for (std::int64_t n = 1; n <= 20; ++n)
      if (gcd64(m, n) == 1) CHECK(alpha_coeff(f, m * n) == alpha_coeff(f, m) * alpha_coeff(f, n));

  HilbertEigenform g(RealQuadraticField(5), Weight{2, 0, 0, 1}, Ideal{1, 0, 1});
  g.set_eigenvalue(g.field().rational(2), Coeff(10));
  CHECK(alpha_coeff(g, 2) == Coeff(5));
}

TEST_CASE("ordinarity") {
  RealQuadraticField F(5);
  auto s = F.splitting_type(11);
  HilbertEigenform f(F, Weight{0, 0, 0, 0}, F.rational(11));
  f.set_eigenvalue(s.primes[0], Coeff(11));
  f.set_eigenvalue(s.primes[1], Coeff(1));
  auto v = VEmbedding::rational(11);
  CHECK_FALSE(is_ordinary(f, 11, v).ordinary);
  f.set_eigenvalue(s.primes[0], Coeff(12));
  auto r = is_ordinary(f, 11, v);
  CHECK(r.ordinary);
  CHECK(r.alpha_p == Coeff(12));

  HilbertEigenform level_one(F, Weight{0, 0, 0, 0}, F.unit_ideal());
  CHECK_THROWS_AS(is_ordinary(level_one, 11, v), ValidationError);

  // p-stabilised base change at 11: the U-eigenvalue is the unit root of
  // X^2 - tau(11) X + 11^11. Oracle: Newton iteration mod 11^12 from tau(11).
  const int prec = 12;
  auto stab = p_stabilize(delta_bc(), 11, -1, prec);
  REQUIRE(stab.coeff_e() != 0);
  std::int64_t rt = 0;
  while (mod(rt * rt - stab.coeff_e(), 11) != 0) ++rt;
  VEmbedding v11(11, stab.coeff_e(), rt, prec);
  auto ord = is_ordinary(stab, 11, v11);
  CHECK(ord.ordinary);

  Z pN, t = 534612, c;
  mpz_ui_pow_ui(pN.get_mpz_t(), 11, prec);
  mpz_ui_pow_ui(c.get_mpz_t(), 11, 11);
  Z x = t % 11;
  for (int it = 0; it < 10; ++it) {
    Z fx = x * x - t * x + c, dfx = 2 * x - t, inv;
    mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), pN.get_mpz_t());
    Z nx = x - fx * inv;
    mpz_mod(nx.get_mpz_t(), nx.get_mpz_t(), pN.get_mpz_t());
    x = nx;
  }
  Z want = x * x;
  mpz_mod(want.get_mpz_t(), want.get_mpz_t(), pN.get_mpz_t());
  CHECK(ord.embedded.val == 0);
  CHECK(ord.embedded.unit == want);
}
