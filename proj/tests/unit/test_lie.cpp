#include "hopfact/fixtures.hpp"

#include <gtest/gtest.h>

using namespace hopfact;

namespace {

const Workspace &ws() { return builtin_workspace(); }

Matrix rows(const Field &f, std::vector<std::vector<long>> r)
{
	Matrix m(f, r.size(), r[0].size());
	for (std::size_t i = 0; i < r.size(); ++i)
		for (std::size_t j = 0; j < r[i].size(); ++j)
			m(i, j) = f.from_int(r[i][j]);
	return m;
}

bool all_pass(const std::vector<CheckResult> &cs)
{
	for (const auto &c : cs)
		if (!c.passed)
			return false;
	return true;
}

Scalar factorial(unsigned k)
{
	Scalar r = 1;
	for (unsigned i = 2; i <= k; ++i)
		r *= i;
	return r;
}

// Largest ideal inside I stable under every derivation, by brute force.
Subspace largest_stable_ideal_inside(const LieAction &act, const Subspace &ideal)
{
	Subspace best(act.field(), act.algebra.dim());
	for (const auto &s : enumerate_subspaces(act.field(), act.algebra.dim())) {
		if (!ideal.contains(s) || !is_two_sided_ideal(act.algebra, s))
			continue;
		bool stable = true;
		for (const auto &d : act.derivations)
			stable = stable && s.contains(image(d, s));
		if (stable && s.dim() > best.dim())
			best = s;
	}
	return best;
}

} // namespace

TEST(Lie, BundledActionsVerify)
{
	for (const auto &[name, act] : ws().lies)
		EXPECT_TRUE(all_pass(verify_lie_action(act))) << name;
}

TEST(Lie, NaiveDerivativeFailsLeibniz)
{
	Field q = Field::rationals();
	// d/dx on Q[x]/(x^3): x -> 1, x^2 -> 2x, but d(x * x^2) = 0 != 3x^2
	LieAction d{ws().algebra("Qx3"), {rows(q, {{0, 1, 0}, {0, 0, 2}, {0, 0, 0}})}, abelian_brackets(1), "ddx"};
	EXPECT_FALSE(all_pass(verify_lie_action(d)));
	LieAction zero{ws().algebra("Qx3"), {Matrix(q, 3, 3), Matrix(q, 3, 3)}, abelian_brackets(2), "zero"};
	EXPECT_TRUE(all_pass(verify_lie_action(zero)));
}

TEST(Lie, WrongBracketIsCaught)
{
	LieAction sl2 = ws().lie("sl2ad");
	sl2.brackets[0][1] = zero_vec(3); // claims [e, f] = 0
	sl2.brackets[1][0] = zero_vec(3);
	EXPECT_FALSE(all_pass(verify_lie_action(sl2)));
}

TEST(Lie, CoreExamples)
{
	Field q = Field::rationals();
	Subspace x = ws().ideal("Qx3", "x");
	LieAction zero{ws().algebra("Qx3"), {Matrix(q, 3, 3)}, abelian_brackets(1), "zero"};
	EXPECT_EQ(lie_core(zero, x), x);
	EXPECT_EQ(lie_core(ws().lie("euler"), x), x);
	EXPECT_TRUE(lie_core(ws().lie("shift"), ws().ideal("Qxy", "x")).is_zero());
	EXPECT_EQ(lie_core(ws().lie("shift"), ws().ideal("Qxy", "m")), ws().ideal("Qxy", "m"));
	// the step refines toward the core
	Subspace step = lie_core_step(ws().lie("shift"), ws().ideal("Qxy", "x"));
	EXPECT_TRUE(ws().ideal("Qxy", "x").contains(step));
}

TEST(Lie, CoreIsMaximalOverFiniteFields)
{
	for (const char *name : {"eulerF2", "shiftF2", "eulerF3"}) {
		const LieAction &act = ws().lie(name);
		ASSERT_LE(act.algebra.dim(), 6u);
		for (const auto &ideal : enumerate_ideals(act.algebra))
			EXPECT_EQ(lie_core(act, ideal), largest_stable_ideal_inside(act, ideal)) << name;
	}
}

TEST(Lie, PropertiesTransferInCharacteristicZero)
{
	LieTransfer e = lie_semiprime_transfer_check(ws().lie("euler"), ws().ideal("Qx3", "x"));
	EXPECT_TRUE(e.prime && e.core_prime);
	EXPECT_TRUE(e.completely_prime && e.core_completely_prime);
	EXPECT_TRUE(e.passed());
	LieTransfer s = lie_semiprime_transfer_check(ws().lie("shift"), ws().ideal("Qxy", "m"));
	EXPECT_TRUE(s.semiprime && s.core_semiprime);
	EXPECT_TRUE(s.passed());
	for (const auto &[name, act] : ws().lies) {
		if (act.field().characteristic() != 0)
			continue;
		for (const auto &e : spectrum(act.algebra))
			EXPECT_TRUE(lie_semiprime_transfer_check(act, e.prime).passed()) << name;
	}
	EXPECT_THROW(lie_semiprime_transfer_check(ws().lie("eulerF2"), ws().ideal("F2x3", "x")), Error);
}

TEST(Lie, CompositeCores)
{
	const auto &shift = ws().lie("shift");
	const auto &neg = ws().action("neg-Qxy");
	EXPECT_TRUE(composite_core(shift, neg, ws().ideal("Qxy", "x")).is_zero());
	EXPECT_EQ(composite_core(shift, neg, ws().ideal("Qxy", "m")), ws().ideal("Qxy", "m"));
	for (const char *i : {"x", "m"})
		EXPECT_EQ(composite_core(shift, neg, ws().ideal("Qxy", i)), joint_stable_core(shift, neg, ws().ideal("Qxy", i)));
}

TEST(Pbw, MonomialOrder)
{
	EXPECT_LT(monomial_cmp({0, 0}, {0, 1}), 0);
	EXPECT_LT(monomial_cmp({0, 1}, {1, 0}), 0); // X2 < X1
	EXPECT_LT(monomial_cmp({3, 0}, {2, 2}), 0); // degree first
	EXPECT_EQ(monomial_cmp({1, 1}, {1, 1}), 0);
	auto idx = pbw_indices(2, 2);
	EXPECT_EQ(idx.size(), 6u);
	for (std::size_t i = 1; i < idx.size(); ++i)
		EXPECT_LT(monomial_cmp(idx[i - 1], idx[i]), 0);
	EXPECT_EQ(total_degree({2, 3}), 5u);
}

TEST(Pbw, Coproduct)
{
	EXPECT_EQ(pbw_comul({0}).size(), 1u);
	auto two = pbw_comul({2});
	ASSERT_EQ(two.size(), 3u);
	for (const auto &[r, s] : two)
		EXPECT_EQ(r[0] + s[0], 2u);
	EXPECT_EQ(pbw_comul({1, 1}).size(), 4u);
	// one term per componentwise split, each summing back to n
	for (const auto &n : pbw_indices(3, 6)) {
		std::size_t expect = 1;
		for (unsigned k : n)
			expect *= k + 1;
		auto terms = pbw_comul(n);
		EXPECT_EQ(terms.size(), expect);
		for (const auto &[r, s] : terms)
			for (std::size_t i = 0; i < n.size(); ++i)
				EXPECT_EQ(r[i] + s[i], n[i]);
	}
}

TEST(Series, ExponentialOfAnAlgebraMap)
{
	Field q = Field::rationals();
	FiniteAlgebra k = ground_field_algebra(q);
	const unsigned n = 6;
	Functional f = algebra_map_functional(k, {Scalar(1)}, n);
	TruncatedSeries e = series_iso_phi(k, 1, n, f);
	for (unsigned d = 0; d <= n; ++d)
		EXPECT_EQ(e.coeff({d}), (Vec{Scalar(1) / factorial(d)})) << d;
	Functional ff = conv_mult_functionals(k, 1, n, f, f);
	TruncatedSeries e2 = series_iso_phi(k, 1, n, ff);
	for (unsigned d = 0; d <= n; ++d) {
		Scalar two_d = 1;
		for (unsigned i = 0; i < d; ++i)
			two_d *= 2;
		EXPECT_EQ(e2.coeff({d}), (Vec{two_d / factorial(d)})) << d;
	}
	EXPECT_EQ(e2, e * e);
	EXPECT_EQ(series_iso_phi(k, 1, n, counit_functional(k, 1)), TruncatedSeries::one(k, 1, n));
}

TEST(Series, FifthPowerIsTrivialOverF5)
{
	Field f5 = Field::prime(5);
	FiniteAlgebra k = ground_field_algebra(f5);
	Functional f = algebra_map_functional(k, {Scalar(1)}, 4);
	Functional p = f;
	for (int i = 1; i < 5; ++i)
		p = conv_mult_functionals(k, 1, 4, p, f);
	EXPECT_EQ(series_iso_phi(k, 1, 4, p), TruncatedSeries::one(k, 1, 4));
	EXPECT_THROW(require_divided_powers(f5, 5), Error);
	EXPECT_NO_THROW(require_divided_powers(f5, 4));
	EXPECT_NO_THROW(require_divided_powers(Field::rationals(), 50));
}

TEST(Series, ArithmeticAndFormat)
{
	Field q = Field::rationals();
	FiniteAlgebra k = ground_field_algebra(q);
	TruncatedSeries s(k, 1, 3);
	s.set({1}, Vec{1});
	s.set({2}, Vec{1});
	s.set({4}, Vec{7}); // beyond the truncation
	EXPECT_EQ(s.terms().size(), 2u);
	EXPECT_EQ(s.format(), "X1 + X1^2");
	TruncatedSeries sq = s * s; // X^2 + 2X^3
	EXPECT_EQ(sq.coeff({2}), (Vec{1}));
	EXPECT_EQ(sq.coeff({3}), (Vec{2}));
	EXPECT_TRUE((s - s).is_zero());
	EXPECT_THROW(s * TruncatedSeries(k, 2, 3), Error);
}

TEST(Series, LowestCoefficient)
{
	Field q = Field::rationals();
	FiniteAlgebra k = ground_field_algebra(q);
	TruncatedSeries s(k, 1, 4);
	s.set({1}, Vec{1});
	s.set({2}, Vec{1});
	auto [n, c] = lowest_coefficient(s);
	EXPECT_EQ(n, (PBWIndex{1}));
	EXPECT_EQ(c, (Vec{1}));
	EXPECT_THROW(lowest_coefficient(TruncatedSeries(k, 1, 4)), Error);
	// X2 comes before X1 in degree 1
	TruncatedSeries t(k, 2, 2);
	t.set({1, 0}, Vec{3});
	t.set({0, 1}, Vec{5});
	EXPECT_EQ(lowest_coefficient(t).first, (PBWIndex{0, 1}));
}

TEST(Series, Batteries)
{
	std::mt19937_64 rng(7);
	EXPECT_TRUE(check_phi_multiplicative(ground_field_algebra(Field::rationals()), 2, 4, 10, rng).passed);
	EXPECT_TRUE(check_phi_multiplicative(diagonal_algebra(Field::rationals(), 2), 1, 4, 10, rng).passed);
	EXPECT_TRUE(check_sut_min(10, 2, 4, rng).passed);
}

TEST(Series, CharacteristicPDemo)
{
	for (long p : {2, 3, 5, 7}) {
		CharpDemo d = charp_grouplike_demo(p);
		EXPECT_TRUE(d.passed()) << p;
	}
	EXPECT_TRUE(charp_grouplike_demo(3, true).passed());
}
