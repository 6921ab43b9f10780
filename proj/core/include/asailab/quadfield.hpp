#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asailab/arith.hpp"

namespace asailab {

// a + b*omega
struct FieldElement {
  Q a, b;
  FieldElement() = default;
  FieldElement(Q a_, Q b_) : a(std::move(a_)), b(std::move(b_)) {}
  bool operator==(const FieldElement& o) const { return a == o.a && b == o.b; }
  bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }
};

// Z-basis {n, m + g*omega}; n > 0, 0 <= m < n, g > 0, g | n, g | m.
struct Ideal {
  std::int64_t n = 1, m = 0, g = 1;
  std::int64_t norm() const { return n * g; }
  auto operator<=>(const Ideal&) const = default;
};

enum class SplitKind { Split, Inert, Ramified };

struct Splitting {
  SplitKind kind;
  std::vector<Ideal> primes;  // two primes when split, in HNF order
};

std::string to_string(SplitKind k);

std::int64_t discriminant(std::int64_t d);

class RealQuadraticField {
 public:
  explicit RealQuadraticField(std::int64_t d);

  std::int64_t d() const { return d_; }
  std::int64_t disc() const { return disc_; }
  // omega^2 = tr_omega * omega - nm_omega
  std::int64_t tr_omega() const { return tr_; }
  std::int64_t nm_omega() const { return nm_; }

  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement conj(const FieldElement& x) const;
  FieldElement inverse(const FieldElement& x) const;
  Q norm(const FieldElement& x) const;
  Q trace(const FieldElement& x) const;
  long double theta1(const FieldElement& x) const;
  long double theta2(const FieldElement& x) const;
  bool totally_positive(const FieldElement& x) const;
  FieldElement sqrt_disc() const;
  std::string format(const FieldElement& x) const;

  // Fundamental unit eps > 1 under theta1, with the sign of its norm.
  const FieldElement& fundamental_unit() const { return unit_; }
  int unit_norm_sign() const { return unit_sign_; }

  // Ideals
  Ideal ideal_from_generators(const std::vector<FieldElement>& gens) const;
  Ideal principal(const FieldElement& x) const;
  Ideal unit_ideal() const { return Ideal{1, 0, 1}; }
  Ideal mul(const Ideal& I, const Ideal& J) const;
  Ideal pow(const Ideal& I, int e) const;
  Ideal conj(const Ideal& I) const;
  Ideal rational(std::int64_t n) const;
  bool contains(const Ideal& I, const FieldElement& x) const;
  bool divides(const Ideal& P, const Ideal& I) const;  // I subset of P
  Ideal divide_by_prime(const Ideal& I, const Ideal& P) const;
  bool is_valid_ideal(const Ideal& I) const;
  Ideal different() const;

  Splitting splitting_type(std::int64_t ell) const;
  std::vector<std::pair<Ideal, int>> factor(const Ideal& I) const;
  bool is_prime_power(const Ideal& I) const;
  std::int64_t prime_below(const Ideal& P) const;
  std::vector<Ideal> ideals_of_norm(std::int64_t n) const;

  // Generators. Absent when no generator exists (raises if the ideal is
  // not principal: class number > 1 is unsupported).
  std::optional<FieldElement> generator(const Ideal& I) const;
  std::optional<FieldElement> totally_positive_generator(const Ideal& I) const;

  // "norm.index" labels, index counted from 1 within ideals_of_norm.
  std::string label(const Ideal& I) const;
  Ideal parse_label(const std::string& label) const;

 private:
  std::int64_t d_, disc_, tr_, nm_;
  long double sqrtd_;
  FieldElement unit_;
  int unit_sign_ = 0;

  void compute_unit();
};

}  // namespace asailab
