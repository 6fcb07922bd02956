#include "hopfact/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hopfact;

namespace {

Matrix ints(const Field &f, std::vector<std::vector<long>> rows)
{
	Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
	for (std::size_t r = 0; r < rows.size(); ++r)
		for (std::size_t c = 0; c < rows[r].size(); ++c)
			m(r, c) = f.from_int(rows[r][c]);
	return m;
}

Vec vec(const Field &f, std::vector<long> xs)
{
	Vec v;
	for (long x : xs)
		v.push_back(f.from_int(x));
	return v;
}

Matrix random_matrix(const Field &f, std::size_t r, std::size_t c, std::mt19937_64 &rng, int lo = -3, int hi = 3)
{
	std::uniform_int_distribution<int> d(lo, hi);
	Matrix m(f, r, c);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = f.from_int(d(rng));
	return m;
}

// Leibniz expansion, independent of elimination.
Scalar leibniz_det(const Matrix &m)
{
	const Field &f = m.field();
	std::vector<std::size_t> perm(m.rows());
	std::iota(perm.begin(), perm.end(), 0);
	Scalar total = 0;
	do {
		int inversions = 0;
		for (std::size_t i = 0; i < perm.size(); ++i)
			for (std::size_t j = i + 1; j < perm.size(); ++j)
				inversions += perm[i] > perm[j];
		Scalar term = 1;
		for (std::size_t i = 0; i < perm.size(); ++i)
			term = f.mul(term, m(i, perm[i]));
		total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
	} while (std::next_permutation(perm.begin(), perm.end()));
	return total;
}

} // namespace

TEST(Field, RationalFormatAndParse)
{
	Field q = Field::rationals();
	EXPECT_EQ(q.format(Scalar(6, 8)), "3/4");
	EXPECT_EQ(q.format(Scalar(-4, 2)), "-2");
	EXPECT_EQ(q.parse("-10/4"), Scalar(-5, 2));
	EXPECT_THROW(q.parse("1/0"), Error);
	EXPECT_THROW(q.parse("abc"), Error);
}

TEST(Field, PrimeResiduesAreReduced)
{
	Field f = Field::prime(7);
	EXPECT_EQ(f.characteristic(), 7);
	EXPECT_EQ(f.from_int(-1), Scalar(6));
	EXPECT_EQ(f.format(f.from_int(15)), "1");
	for (long a = 1; a < 7; ++a)
		EXPECT_EQ(f.mul(f.from_int(a), f.inv(f.from_int(a))), Scalar(1)) << a;
	EXPECT_THROW(f.inv(Scalar(0)), Error);
	EXPECT_THROW(Field::prime(9), Error);
}

TEST(Rref, Examples)
{
	Field q = Field::rationals(), f2 = Field::prime(2);
	EXPECT_EQ(rref(Matrix::identity(q, 2)), Matrix::identity(q, 2));
	EXPECT_EQ(rref(ints(q, {{2, 4}, {1, 2}})), ints(q, {{1, 2}, {0, 0}}));
	EXPECT_EQ(rref(ints(f2, {{1, 1}, {1, 1}})), ints(f2, {{1, 1}, {0, 0}}));
}

TEST(Rref, IdempotentAndRowSpacePreserved)
{
	std::mt19937_64 rng(1);
	for (const Field &f : {Field::rationals(), Field::prime(2), Field::prime(5)})
		for (int t = 0; t < 40; ++t) {
			Matrix m = random_matrix(f, 1 + t % 4, 1 + (t / 4) % 5, rng);
			Matrix r = rref(m);
			EXPECT_EQ(rref(r), r);
			EXPECT_EQ(Subspace::row_space(m), Subspace::row_space(r));
		}
}

TEST(Kernel, Examples)
{
	Field q = Field::rationals();
	EXPECT_TRUE(kernel(Matrix(q, 3, 3)).is_full());
	EXPECT_TRUE(kernel(Matrix::identity(q, 3)).is_zero());
	EXPECT_EQ(kernel(ints(q, {{1, 1}})), Subspace::span(q, 2, {vec(q, {1, -1})}));
}

TEST(Kernel, RankNullityAndAnnihilation)
{
	std::mt19937_64 rng(2);
	for (const Field &f : {Field::rationals(), Field::prime(3)})
		for (int t = 0; t < 40; ++t) {
			Matrix m = random_matrix(f, 1 + t % 5, 1 + (t / 5) % 6, rng, -1, 1);
			Subspace k = kernel(m);
			EXPECT_EQ(k.dim() + rank(m), m.cols());
			for (const auto &v : k.vectors())
				EXPECT_TRUE(is_zero(m.apply(v)));
		}
}

TEST(Solve, Examples)
{
	Field q = Field::rationals();
	Vec b = vec(q, {3, -2});
	EXPECT_EQ(solve(Matrix::identity(q, 2), b), b);
	EXPECT_EQ(solve(ints(q, {{1, 1}}), vec(q, {0})), vec(q, {0, 0}));
	EXPECT_FALSE(solve(ints(q, {{0}}), vec(q, {1})).has_value());
}

TEST(Solve, SolutionsSatisfyTheSystem)
{
	std::mt19937_64 rng(3);
	Field q = Field::rationals();
	for (int t = 0; t < 30; ++t) {
		Matrix m = random_matrix(q, 3, 4, rng);
		Vec x = random_matrix(q, 4, 1, rng).column(0);
		Vec b = m.apply(x);
		auto s = solve(m, b);
		ASSERT_TRUE(s.has_value());
		EXPECT_EQ(m.apply(*s), b);
	}
}

TEST(Determinant, MatchesLeibnizAndInverse)
{
	std::mt19937_64 rng(4);
	for (const Field &f : {Field::rationals(), Field::prime(5)})
		for (int t = 0; t < 20; ++t) {
			Matrix m = random_matrix(f, 1 + t % 4, 1 + t % 4, rng);
			Scalar d = determinant(m);
			EXPECT_EQ(d, leibniz_det(m));
			auto inv = inverse(m);
			EXPECT_EQ(inv.has_value(), d != 0);
			if (inv)
				EXPECT_EQ(m * *inv, Matrix::identity(f, m.rows()));
		}
}

TEST(Subspace, SumIntersectExamples)
{
	Field f2 = Field::prime(2);
	Subspace u = Subspace::span(f2, 3, {vec(f2, {1, 0, 0}), vec(f2, {0, 1, 0})});
	Subspace v = Subspace::span(f2, 3, {vec(f2, {0, 1, 0}), vec(f2, {0, 0, 1})});
	Subspace zero(f2, 3);
	EXPECT_EQ(subspace_intersect(u, v), Subspace::span(f2, 3, {vec(f2, {0, 1, 0})}));
	EXPECT_EQ(subspace_sum(u, zero), u);
	EXPECT_EQ(subspace_intersect(u, u), u);
	EXPECT_TRUE(subspace_sum(u, v).is_full());
	EXPECT_THROW(subspace_sum(u, Subspace(f2, 2)), Error);
}

TEST(Subspace, DimensionFormulaAndModularLaw)
{
	std::mt19937_64 rng(5);
	Field f2 = Field::prime(2);
	for (int t = 0; t < 60; ++t) {
		auto rnd = [&] { return Subspace::row_space(random_matrix(f2, 1 + t % 3, 5, rng, 0, 1)); };
		Subspace u = rnd(), v = rnd(), w = rnd();
		Subspace s = subspace_sum(u, v), i = subspace_intersect(u, v);
		EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
		EXPECT_TRUE(u.contains(i) && v.contains(i));
		Subspace lhs = subspace_sum(subspace_intersect(u, w), subspace_intersect(v, w));
		EXPECT_TRUE(subspace_intersect(s, w).contains(lhs));
		EXPECT_EQ(annihilator(u).dim(), 5 - u.dim());
	}
}

TEST(Subspace, ImageAndPreimage)
{
	std::mt19937_64 rng(6);
	Field q = Field::rationals();
	for (int t = 0; t < 20; ++t) {
		Matrix m = random_matrix(q, 3, 4, rng, -1, 1);
		Subspace w = Subspace::row_space(random_matrix(q, 2, 3, rng));
		Subspace pre = preimage(m, w);
		for (const auto &x : pre.vectors())
			EXPECT_TRUE(w.contains(m.apply(x)));
		EXPECT_TRUE(pre.contains(kernel(m)));
		Subspace img = image(m, Subspace::full(q, 4));
		EXPECT_EQ(img.dim(), rank(m));
	}
}

TEST(Subspace, CanonicalEquality)
{
	Field q = Field::rationals();
	Subspace a = Subspace::span(q, 3, {vec(q, {1, 2, 3}), vec(q, {0, 1, 1})});
	Subspace b = Subspace::span(q, 3, {vec(q, {1, 3, 4}), vec(q, {2, 4, 6})});
	EXPECT_EQ(a, b);
	EXPECT_EQ(subspace_key(a), subspace_key(b));
	Vec c = a.coordinates(vec(q, {1, 3, 4}));
	Vec back = zero_vec(3);
	auto basis = a.vectors();
	for (std::size_t i = 0; i < basis.size(); ++i)
		axpy(q, back, c[i], basis[i]);
	EXPECT_EQ(back, vec(q, {1, 3, 4}));
}
