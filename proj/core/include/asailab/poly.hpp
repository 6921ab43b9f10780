#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asailab/coeff.hpp"

namespace asailab {

// Dense univariate polynomial, entry i is the coefficient of X^i.
// Canonical form has no trailing zeros; the zero polynomial is empty.
using Poly = std::vector<Coeff>;

Poly trim(Poly p);
int degree(const Poly& p);  // -1 for zero
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Coeff& c);
// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
bool poly_equal(const Poly& a, const Poly& b);
Coeff poly_eval(const Poly& p, const Coeff& x);
cplx poly_eval(const Poly& p, cplx x);
// Formatted as "1 - 6*X + 15*X^2".
std::string poly_str(const Poly& p, const std::string& var = "X");

}  // namespace asailab
