#pragma once

// Dense univariate polynomials over Q. Coefficients are stored low degree
// first; the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace folichar {

using Integer = mpz_class;
using Rational = mpq_class;

namespace qpoly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& s);
Poly derivative(const Poly& p);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
Poly gcd(const Poly& a, const Poly& b);
// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct Bezout {
  Poly g, s, t;
};
Bezout xgcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& p);
Rational evaluate(const Poly& p, const Rational& x);

// Distinct rational roots, ascending. Exact: Sturm-sequence isolation on the
// integral monic transform, then integer candidates are tested directly.
std::vector<Rational> rational_roots(const Poly& p);

// Multiply through by the lcm of denominators and divide by the content.
std::vector<Integer> primitive_integer(const Poly& p);

std::string to_string(const Poly& p, const std::string& var);

}  // namespace qpoly
}  // namespace folichar
