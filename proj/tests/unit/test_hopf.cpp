#include "hopfact/hopf.hpp"

#include <gtest/gtest.h>

using namespace hopfact;

namespace {

std::vector<HopfAlgebra> basic_hopfs(const Field &f)
{
	HopfAlgebra c2 = group_algebra(f, cyclic_group_table(2));
	HopfAlgebra s3 = group_algebra(f, symmetric3_table());
	return {c2, s3, dual_hopf(c2), dual_hopf(s3), sweedler(f)};
}

// m (S (x) id) Delta and m (id (x) S) Delta applied to e_j, written out by hand.
std::pair<Vec, Vec> antipode_sides(const HopfAlgebra &h, std::size_t j)
{
	const Field &f = h.field();
	const std::size_t n = h.dim();
	Vec left = zero_vec(n), right = zero_vec(n);
	for (const auto &t : h.coproduct(j)) {
		std::size_t a = t.index / n, b = t.index % n;
		axpy(f, left, t.coeff, h.algebra().multiply(h.antipode().column(a), unit_vec(n, b)));
		axpy(f, right, t.coeff, h.algebra().multiply(unit_vec(n, a), h.antipode().column(b)));
	}
	return {left, right};
}

} // namespace

TEST(Hopf, AxiomsHoldOnConstructorOutputs)
{
	for (const Field &f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
		auto hs = basic_hopfs(f);
		for (const auto &h : hs)
			EXPECT_TRUE(hopf_violations(h).empty()) << f.name() << " dim " << h.dim();
		EXPECT_TRUE(hopf_violations(tensor_hopf(hs[0], hs[4])).empty());
		EXPECT_TRUE(hopf_violations(tensor_hopf(hs[2], hs[0])).empty());
	}
}

TEST(Hopf, SweedlerAntipodeByHand)
{
	HopfAlgebra h = sweedler(Field::rationals());
	for (std::size_t j = 0; j < 4; ++j) {
		auto [l, r] = antipode_sides(h, j);
		Vec expect = scale(h.field(), h.counit()[j], h.algebra().unit());
		EXPECT_EQ(l, expect) << j;
		EXPECT_EQ(r, expect) << j;
	}
	// S(x) = -gx
	EXPECT_EQ(h.antipode().column(2), (Vec{0, 0, 0, -1}));
	EXPECT_FALSE(is_cocommutative(h));
}

TEST(Hopf, Cocommutativity)
{
	Field q = Field::rationals();
	EXPECT_TRUE(is_cocommutative(group_algebra(q, cyclic_group_table(2))));
	EXPECT_TRUE(is_cocommutative(group_algebra(q, symmetric3_table())));
	EXPECT_FALSE(is_cocommutative(dual_hopf(group_algebra(q, symmetric3_table()))));
	EXPECT_TRUE(is_cocommutative(dual_hopf(group_algebra(q, cyclic_group_table(3)))));
}

TEST(Hopf, DualityExchangesCommutativity)
{
	for (const Field &f : {Field::rationals(), Field::prime(2)})
		for (const auto &h : basic_hopfs(f)) {
			HopfAlgebra d = dual_hopf(h);
			if (is_cocommutative(h))
				EXPECT_TRUE(d.algebra().is_commutative());
			if (h.algebra().is_commutative())
				EXPECT_TRUE(is_cocommutative(d));
			EXPECT_TRUE(dual_hopf(d).same_structure(h));
		}
}

TEST(Hopf, DualOfC2)
{
	Field q = Field::rationals();
	HopfAlgebra d = dual_hopf(group_algebra(q, cyclic_group_table(2)));
	const FiniteAlgebra &a = d.algebra();
	for (std::size_t i = 0; i < 2; ++i)
		for (std::size_t j = 0; j < 2; ++j)
			EXPECT_EQ(a.multiply(a.basis(i), a.basis(j)), i == j ? a.basis(i) : a.zero());
	// Delta p1 = p1 (x) p1 + p2 (x) p2
	EXPECT_EQ(d.comultiply(a.basis(0)), (Vec{1, 0, 0, 1}));
	EXPECT_EQ(a.unit(), (Vec{1, 1}));
}

TEST(Hopf, GroupAlgebraBasics)
{
	Field q = Field::rationals();
	HopfAlgebra c2 = group_algebra(q, cyclic_group_table(2));
	EXPECT_EQ(c2.antipode(), Matrix::identity(q, 2));
	HopfAlgebra s3 = group_algebra(q, symmetric3_table());
	EXPECT_EQ(s3.dim(), 6u);
	for (std::size_t g = 0; g < 6; ++g)
		EXPECT_TRUE(is_grouplike(s3, unit_vec(6, g)));
	EXPECT_THROW(group_algebra(q, {{0, 1}, {0, 1}}), Error);
	EXPECT_THROW(group_algebra(q, {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}), Error);
}

TEST(Hopf, TensorOfC2WithItselfIsKlein)
{
	Field q = Field::rationals();
	HopfAlgebra c2 = group_algebra(q, cyclic_group_table(2));
	std::vector<std::vector<std::size_t>> klein(4, std::vector<std::size_t>(4));
	for (std::size_t a = 0; a < 4; ++a)
		for (std::size_t b = 0; b < 4; ++b)
			klein[a][b] = (((a >> 1) ^ (b >> 1)) << 1) | ((a & 1) ^ (b & 1));
	EXPECT_TRUE(tensor_hopf(c2, c2).same_structure(group_algebra(q, klein)));
	EXPECT_EQ(tensor_hopf(c2, trivial_hopf(q)).dim(), 2u);
}

TEST(Hopf, AntipodeIsAnAntiHomomorphism)
{
	for (const auto &h : basic_hopfs(Field::prime(3))) {
		const FiniteAlgebra &a = h.algebra();
		const Matrix &s = h.antipode();
		for (std::size_t i = 0; i < h.dim(); ++i)
			for (std::size_t j = 0; j < h.dim(); ++j)
				EXPECT_EQ(s.apply(a.multiply(a.basis(i), a.basis(j))),
				          a.multiply(s.column(j), s.column(i)));
		if (is_cocommutative(h))
			EXPECT_EQ(s * s, Matrix::identity(h.field(), h.dim()));
	}
}

TEST(Hopf, BrokenCoproductFailsCounit)
{
	Field q = Field::rationals();
	HopfAlgebra c2 = group_algebra(q, cyclic_group_table(2));
	std::vector<SparseVec> comul{c2.coproduct(0), sparsify(Vec{0, 0, 1, 0})}; // Delta g = g (x) 1
	HopfAlgebra bad(c2.algebra(), comul, c2.counit(), c2.antipode());
	auto v = hopf_violations(bad);
	ASSERT_FALSE(v.empty());
	bool counit = false;
	for (const auto &x : v)
		counit = counit || x.rule.find("counit") != std::string::npos;
	EXPECT_TRUE(counit);
}

TEST(Hopf, Grouplikes)
{
	Field f2 = Field::prime(2), q = Field::rationals();
	HopfAlgebra c2 = group_algebra(f2, cyclic_group_table(2));
	EXPECT_TRUE(is_grouplike(c2, Vec{0, 1}));
	EXPECT_FALSE(is_grouplike(c2, Vec{1, 1}));
	auto g = enumerate_grouplikes(dual_hopf(c2));
	ASSERT_EQ(g.size(), 1u);
	EXPECT_EQ(g[0], (Vec{1, 1})); // eps = p1 + p2
	HopfAlgebra dq = dual_hopf(group_algebra(q, cyclic_group_table(2)));
	EXPECT_TRUE(is_grouplike(dq, Vec{1, 1}));  // eps
	EXPECT_TRUE(is_grouplike(dq, Vec{1, -1})); // sign character
	EXPECT_FALSE(is_grouplike(dq, Vec{1, 0}));
	EXPECT_EQ(enumerate_grouplikes(group_algebra(f2, symmetric3_table())).size(), 6u);
	EXPECT_THROW(enumerate_grouplikes(dq), Error);
}

TEST(Hopf, Primitives)
{
	Field q = Field::rationals(), f2 = Field::prime(2);
	EXPECT_TRUE(primitives(group_algebra(q, cyclic_group_table(2))).is_zero());
	// Delta(1 + g) = 1 (x) 1 + g (x) g is not (1 + g) (x) 1 + 1 (x) (1 + g), even in characteristic 2
	EXPECT_TRUE(primitives(group_algebra(f2, cyclic_group_table(2))).is_zero());
	HopfAlgebra t = truncated_primitive(f2);
	EXPECT_TRUE(hopf_violations(t).empty());
	EXPECT_EQ(primitives(t), Subspace::span(f2, 2, {Vec{0, 1}}));
	HopfAlgebra t3 = truncated_primitive(Field::prime(3));
	EXPECT_EQ(primitives(t3), Subspace::span(t3.field(), 3, {Vec{0, 1, 0}}));
	EXPECT_TRUE(primitives(sweedler(q)).is_zero());
}

TEST(Hopf, PrimitivesByExhaustionOverF2)
{
	Field f2 = Field::prime(2);
	for (const HopfAlgebra &h : {group_algebra(f2, cyclic_group_table(2)), truncated_primitive(f2), sweedler(f2)}) {
		const std::size_t n = h.dim();
		const Vec &one = h.algebra().unit();
		std::vector<Vec> found;
		for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
			Vec x(n);
			for (std::size_t i = 0; i < n; ++i)
				x[i] = (bits >> i) & 1;
			Vec target(n * n);
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					target[i * n + j] = f2.add(f2.mul(x[i], one[j]), f2.mul(one[i], x[j]));
			if (h.comultiply(x) == target)
				found.push_back(x);
		}
		EXPECT_EQ(Subspace::span(f2, n, found), primitives(h)) << h.name();
		EXPECT_EQ(found.size(), std::size_t{1} << primitives(h).dim()) << h.name();
	}
}
