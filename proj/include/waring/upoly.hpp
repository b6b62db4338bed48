#ifndef WARING_UPOLY_HPP
#define WARING_UPOLY_HPP

#include <utility>
#include <vector>

#include "waring/field.hpp"

namespace waring::upoly {

// Dense univariate polynomials as coefficient vectors in ascending power
// order. The zero polynomial is the empty vector. These back the squarefree
// machinery, rational root search and the exact interpolation used by the
// degree checks.

using Poly = std::vector<Scalar>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
bool is_zero(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Scalar& c);
Poly derivative(const Poly& p);
Scalar eval(const Poly& p, const Scalar& x);

// Euclidean division; both quotient and remainder.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

// Exact division, throws on nonzero remainder.
Poly div_exact(const Poly& num, const Poly& den);

// Monic gcd (leading coefficient 1); gcd(0, 0) is an error upstream.
Poly gcd(Poly a, Poly b);

Poly make_monic(Poly p);

// Lagrange interpolation through distinct nodes; exact over the field.
Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

}  // namespace waring::upoly

#endif
