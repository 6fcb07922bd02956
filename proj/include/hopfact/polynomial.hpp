#pragma once

// Univariate polynomials over a Field (coefficients low degree first) and the
// factoring needed to split commutative semisimple algebras over Q.

#include "hopfact/algebra.hpp"

namespace hopfact {

using Poly = Vec;

void poly_trim(Poly &a);
/// Degree, or -1 for the zero polynomial.
long poly_degree(const Poly &a);
Poly poly_add(const Field &f, const Poly &a, const Poly &b);
Poly poly_sub(const Field &f, const Poly &a, const Poly &b);
Poly poly_mul(const Field &f, const Poly &a, const Poly &b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field &f, const Poly &a, const Poly &b);
Poly poly_mod(const Field &f, const Poly &a, const Poly &b);
Poly poly_monic(const Field &f, const Poly &a);
/// Monic gcd.
Poly poly_gcd(const Field &f, const Poly &a, const Poly &b);
struct ExtGcd {
	Poly g, s, t; // s a + t b = g, g monic
};
ExtGcd poly_ext_gcd(const Field &f, const Poly &a, const Poly &b);
Poly poly_derivative(const Field &f, const Poly &a);
Scalar poly_eval(const Field &f, const Poly &a, const Scalar &x);
std::string poly_format(const Field &f, const Poly &a, const std::string &var = "x");

/// p(z) computed inside the algebra.
Vec poly_eval_element(const FiniteAlgebra &alg, const Poly &p, const Vec &z);
/// Monic polynomial of least degree killing z.
Poly minimal_polynomial(const FiniteAlgebra &alg, const Vec &z);

/// Monic irreducible factors of a squarefree monic polynomial over F_p.
std::vector<Poly> berlekamp(const Field &f, const Poly &a);
/// Distinct monic irreducible factors over Q (multiplicities dropped).
std::vector<Poly> factor_rational(const Poly &a);

} // namespace hopfact
