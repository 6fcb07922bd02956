#include "hopfact/polynomial.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace hopfact;

namespace {

Poly P(const Field &f, std::vector<long> c)
{
	Poly p;
	for (long x : c)
		p.push_back(f.from_int(x));
	poly_trim(p);
	return p;
}

Poly product(const Field &f, const std::vector<Poly> &fs)
{
	Poly out = P(f, {1});
	for (const auto &g : fs)
		out = poly_mul(f, out, g);
	return out;
}

// Irreducibility over F_p by brute force: no monic factor of degree <= deg/2.
bool irreducible_mod_p(const Field &f, const Poly &a)
{
	long d = poly_degree(a);
	long p = f.p();
	for (long k = 1; 2 * k <= d; ++k) {
		long count = 1;
		for (long i = 0; i < k; ++i)
			count *= p;
		for (long code = 0; code < count; ++code) {
			Poly g(k + 1);
			long c = code;
			for (long i = 0; i < k; ++i, c /= p)
				g[i] = f.from_int(c % p);
			g[k] = 1;
			if (poly_degree(poly_mod(f, a, g)) < 0)
				return false;
		}
	}
	return true;
}

} // namespace

TEST(Poly, DivisionIdentity)
{
	std::mt19937_64 rng(21);
	std::uniform_int_distribution<int> d(-5, 5);
	Field q = Field::rationals();
	for (int t = 0; t < 30; ++t) {
		Poly a, b;
		for (int i = 0; i < 5; ++i)
			a.push_back(d(rng));
		for (int i = 0; i < 3; ++i)
			b.push_back(d(rng));
		b.push_back(1);
		poly_trim(a);
		auto [quo, rem] = poly_divmod(q, a, b);
		EXPECT_EQ(poly_add(q, poly_mul(q, quo, b), rem), a);
		EXPECT_LT(poly_degree(rem), poly_degree(b));
	}
}

TEST(Poly, ExtendedGcd)
{
	Field f5 = Field::prime(5);
	Poly a = P(f5, {-1, 0, 1}); // x^2 - 1
	Poly b = P(f5, {1, 1});     // x + 1
	ExtGcd e = poly_ext_gcd(f5, a, b);
	EXPECT_EQ(e.g, P(f5, {1, 1}));
	EXPECT_EQ(poly_add(f5, poly_mul(f5, e.s, a), poly_mul(f5, e.t, b)), e.g);
}

TEST(Poly, DerivativeAndEval)
{
	Field q = Field::rationals();
	Poly a = P(q, {1, 2, 3}); // 1 + 2x + 3x^2
	EXPECT_EQ(poly_derivative(q, a), P(q, {2, 6}));
	EXPECT_EQ(poly_eval(q, a, 2), Scalar(17));
	EXPECT_EQ(poly_format(q, P(q, {-1, 0, 1})), "x^2 - 1");
}

TEST(Poly, BerlekampFactorsAreIrreducibleAndMultiply)
{
	Field f2 = Field::prime(2), f3 = Field::prime(3);
	// x^4 - x over F_2 = x (x + 1)(x^2 + x + 1)
	auto fs = berlekamp(f2, P(f2, {0, 1, 0, 0, 1}));
	EXPECT_EQ(fs.size(), 3u);
	EXPECT_EQ(product(f2, fs), P(f2, {0, 1, 0, 0, 1}));
	for (const auto &g : fs)
		EXPECT_TRUE(irreducible_mod_p(f2, g));
	// x^9 - x over F_3 splits into all monic irreducibles of degree 1 and 2
	Poly a = P(f3, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1});
	auto gs = berlekamp(f3, a);
	EXPECT_EQ(product(f3, gs), a);
	std::size_t linear = 0, quadratic = 0;
	for (const auto &g : gs) {
		EXPECT_TRUE(irreducible_mod_p(f3, g));
		linear += poly_degree(g) == 1;
		quadratic += poly_degree(g) == 2;
	}
	EXPECT_EQ(linear, 3u);
	EXPECT_EQ(quadratic, 3u); // (9 - 3) / 2
}

TEST(Poly, RationalFactoring)
{
	Field q = Field::rationals();
	// (x^2 + 1)(x - 2)(2x + 1), made monic by factor_rational
	Poly a = product(q, {P(q, {1, 0, 1}), P(q, {-2, 1}), P(q, {1, 2})});
	auto fs = factor_rational(a);
	ASSERT_EQ(fs.size(), 3u);
	EXPECT_EQ(product(q, fs), poly_monic(q, a));
	std::vector<long> degs;
	for (const auto &g : fs)
		degs.push_back(poly_degree(g));
	std::sort(degs.begin(), degs.end());
	EXPECT_EQ(degs, (std::vector<long>{1, 1, 2}));
	// x^4 + 1 is irreducible over Q
	EXPECT_EQ(factor_rational(P(q, {1, 0, 0, 0, 1})).size(), 1u);
	// repeated factors are dropped
	EXPECT_EQ(factor_rational(product(q, {P(q, {-1, 1}), P(q, {-1, 1})})).size(), 1u);
}

TEST(Poly, MinimalPolynomialInsideAnAlgebra)
{
	Field q = Field::rationals();
	FiniteAlgebra a = truncated_polynomial(q, 3);
	Vec x = unit_vec(3, 1);
	EXPECT_EQ(minimal_polynomial(a, x), P(q, {0, 0, 0, 1}));
	FiniteAlgebra d = diagonal_algebra(q, 3);
	Vec z = {Scalar(1), Scalar(2), Scalar(2)};
	Poly m = minimal_polynomial(d, z);
	EXPECT_EQ(m, poly_mul(q, P(q, {-1, 1}), P(q, {-2, 1})));
	EXPECT_TRUE(is_zero(poly_eval_element(d, m, z)));
}
