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

} // namespace

TEST(Action, BundledActionsSatisfyTheAxioms)
{
	for (const auto &[name, act] : ws().actions)
		EXPECT_TRUE(action_violations(act).empty()) << name;
}

TEST(Action, UnitNotFixedIsReported)
{
	Field q = Field::rationals();
	const HopfAlgebra &c2 = ws().hopf("QC2");
	// g.(1,1) = (1,0)
	ModuleAlgebraAction bad(c2, ws().algebra("Q2"), {Matrix::identity(q, 2), rows(q, {{1, 0}, {0, 0}})});
	auto v = action_violations(bad);
	bool unit = false;
	for (const auto &x : v)
		unit = unit || x.rule == "h.1 = eps(h) 1";
	EXPECT_TRUE(unit);
}

TEST(Action, TensorRoundTrip)
{
	const auto &act = ws().action("sweedler-act");
	auto t = act.tensor();
	auto back = ModuleAlgebraAction::from_tensor(act.hopf(), act.algebra(), t);
	for (std::size_t i = 0; i < act.hopf().dim(); ++i)
		EXPECT_EQ(back.op(i), act.op(i));
	// g.t = -t, read off the tensor directly: t[1][1][1]
	const std::size_t n = act.algebra().dim();
	EXPECT_EQ(t[(1 * n + 1) * n + 1], Scalar(-1));
}

TEST(Action, Invariants)
{
	Field q = Field::rationals();
	EXPECT_EQ(invariants(ws().action("swap")), Subspace::span(q, 2, {Vec{1, 1}}));
	EXPECT_TRUE(invariants(ws().action("trivial-Q2")).is_full());
	EXPECT_EQ(invariants(ws().action("gradingQ")), Subspace::span(q, 2, {Vec{1, 0}}));
	EXPECT_EQ(invariants(ws().action("grading2")), Subspace::span(Field::prime(2), 2, {Vec{1, 0}}));
	// t -> -t kills t
	EXPECT_EQ(invariants(ws().action("sweedler-act")), Subspace::span(q, 2, {Vec{1, 0}}));
}

TEST(Action, InvariantsAreFixedByEveryBasisElement)
{
	for (const auto &[name, act] : ws().actions) {
		const auto &h = act.hopf();
		for (const auto &a : invariants(act).vectors())
			for (std::size_t i = 0; i < h.dim(); ++i)
				EXPECT_EQ(act.op(i).apply(a), scale(act.field(), h.counit()[i], a)) << name;
	}
}

TEST(Action, ComoduleMapReconstructsTheAction)
{
	for (const auto &[name, act] : ws().actions) {
		Matrix rho = comodule_map(act);
		EXPECT_EQ(rho.rows(), act.algebra().dim() * act.hopf().dim());
		for (std::size_t i = 0; i < act.hopf().dim(); ++i)
			for (std::size_t j = 0; j < act.algebra().dim(); ++j)
				EXPECT_EQ(reconstruct_action(act, rho, i, j), act.op(i).column(j)) << name;
	}
}

TEST(Action, SwapComoduleValue)
{
	// rho(1,0) evaluated at g is g.(1,0) = (0,1)
	const auto &act = ws().action("swap");
	Matrix rho = comodule_map(act);
	Vec a{1, 0};
	Vec col = rho.apply(a);
	const std::size_t dh = 2;
	EXPECT_EQ(col[0 * dh + 1], Scalar(0));
	EXPECT_EQ(col[1 * dh + 1], Scalar(1));
}

TEST(Action, MatrixCoefficients)
{
	Field q = Field::rationals();
	auto sign = matrix_coefficients(ws().representation("sign"));
	ASSERT_EQ(sign.size(), 1u);
	EXPECT_EQ(sign[0], (Vec{1, -1}));
	// diag(1, -1): rho_11 = eps, rho_22 = sign, off-diagonal zero
	Representation d{ws().hopf("QC2"), 2, {Matrix::identity(q, 2), rows(q, {{1, 0}, {0, -1}})}, "diag"};
	EXPECT_TRUE(representation_violations(d).empty());
	auto c = matrix_coefficients(d);
	EXPECT_EQ(c[0], (Vec{1, 1}));
	EXPECT_TRUE(is_zero(c[1]));
	EXPECT_TRUE(is_zero(c[2]));
	EXPECT_EQ(c[3], (Vec{1, -1}));
	auto reg = matrix_coefficients(ws().representation("regC2"));
	EXPECT_TRUE(Subspace::span(q, 2, reg).is_full());
}

TEST(Action, CoefficientCoproduct)
{
	for (const auto &[name, rep] : ws().representations) {
		EXPECT_TRUE(representation_violations(rep).empty()) << name;
		EXPECT_TRUE(coefficient_coproduct_violations(rep).empty()) << name;
	}
}

TEST(Action, CoefficientSubalgebras)
{
	auto dim_of = [](const std::string &r) {
		const auto &rep = ws().representation(r);
		return coefficient_subalgebra(rep.hopf, matrix_coefficients(rep)).dim();
	};
	EXPECT_EQ(dim_of("sign"), 2u);
	EXPECT_EQ(dim_of("trivC2"), 1u);
	EXPECT_EQ(dim_of("regC2"), 2u);
	// trivial + standard; products of standard coefficients reach the sign
	// character, so the whole dual comes out
	EXPECT_EQ(dim_of("permS3"), 6u);
}

TEST(Action, CoefficientSubalgebraIsClosed)
{
	const auto &rep = ws().representation("permS3");
	HopfAlgebra d = dual_hopf(rep.hopf);
	Subspace s = coefficient_subalgebra(rep.hopf, matrix_coefficients(rep));
	EXPECT_TRUE(s.contains(d.algebra().unit()));
	for (const auto &x : s.vectors()) {
		EXPECT_TRUE(s.contains(d.antipode().apply(x)));
		for (const auto &y : s.vectors())
			EXPECT_TRUE(s.contains(d.algebra().multiply(x, y)));
	}
}

TEST(Action, HitAction)
{
	const auto &hit = ws().action("hitC2");
	EXPECT_TRUE(action_violations(hit).empty());
	// g hits p1 to p2
	EXPECT_EQ(hit.op(1).apply(Vec{1, 0}), (Vec{0, 1}));
	EXPECT_EQ(hit.op(0), Matrix::identity(hit.field(), 2));
	// <h hit f, 1> = <f, h>: f evaluated at 1 is the counit of the dual
	for (const auto &[name, act] : ws().actions) {
		if (name.rfind("hit", 0) != 0)
			continue;
		const HopfAlgebra &h = act.hopf();
		HopfAlgebra d = dual_hopf(h);
		for (std::size_t i = 0; i < h.dim(); ++i)
			for (std::size_t f = 0; f < h.dim(); ++f)
				EXPECT_EQ(dot(act.field(), act.op(i).column(f), d.counit()), f == i ? Scalar(1) : Scalar(0)) << name;
	}
}

TEST(Action, GroupCoefficientAntipode)
{
	EXPECT_TRUE(group_coeff_antipode_violations(ws().representation("sign")).empty());
	EXPECT_TRUE(group_coeff_antipode_violations(ws().representation("rotC3")).empty());
	EXPECT_TRUE(group_coeff_antipode_violations(ws().representation("permS3")).empty());
	Field q = Field::rationals();
	// diag(1, 2) is not a representation of C2; the inverse no longer matches S
	Representation bad{ws().hopf("QC2"), 2, {Matrix::identity(q, 2), rows(q, {{1, 0}, {0, 2}})}, "bad"};
	EXPECT_FALSE(group_coeff_antipode_violations(bad).empty());
	Representation sw{ws().hopf("H4"), 1, {rows(q, {{1}}), rows(q, {{1}}), rows(q, {{0}}), rows(q, {{0}})}, "eps"};
	EXPECT_TRUE(representation_violations(sw).empty());
	EXPECT_THROW(group_coeff_antipode_violations(sw), Error);
}

TEST(Action, GroupAlgebraDetection)
{
	EXPECT_TRUE(is_group_algebra(ws().hopf("QS3")));
	EXPECT_FALSE(is_group_algebra(ws().hopf("QC2*")));
	EXPECT_FALSE(is_group_algebra(ws().hopf("H4")));
}
