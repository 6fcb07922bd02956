#include "hopfact/fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hopfact;

namespace {

const Workspace &ws() { return builtin_workspace(); }

// Phi b (h_k) = sum h_k1 . b(h_k2), computed on value tables.
Vec phi_by_definition(const ConvolutionAlgebra &b, const Vec &x)
{
	const Field &f = b.field();
	const HopfAlgebra &h = b.hopf();
	const std::size_t n = h.dim();
	Matrix v = b.values(x);
	Matrix out(f, b.base().dim(), n);
	for (std::size_t k = 0; k < n; ++k)
		for (const auto &t : h.coproduct(k)) {
			Vec hv = b.action().op(t.index / n).apply(v.column(t.index % n));
			for (std::size_t q = 0; q < hv.size(); ++q)
				out(q, k) = f.add(out(q, k), f.mul(t.coeff, hv[q]));
		}
	return b.from_values(out);
}

// (f * g)(h_k) = sum f(h_k1) g(h_k2), multiplied in A.
Vec convolve_by_definition(const ConvolutionAlgebra &b, const Vec &x, const Vec &y)
{
	const Field &f = b.field();
	const HopfAlgebra &h = b.hopf();
	const std::size_t n = h.dim();
	Matrix vx = b.values(x), vy = b.values(y);
	Matrix out(f, b.base().dim(), n);
	for (std::size_t k = 0; k < n; ++k)
		for (const auto &t : h.coproduct(k)) {
			Vec m = b.base().multiply(vx.column(t.index / n), vy.column(t.index % n));
			for (std::size_t q = 0; q < m.size(); ++q)
				out(q, k) = f.add(out(q, k), f.mul(t.coeff, m[q]));
		}
	return b.from_values(out);
}

Vec random_vec(const Field &f, std::size_t n, std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> d(-2, 2);
	Vec v(n);
	for (auto &x : v)
		x = f.from_int(d(rng));
	return v;
}

} // namespace

TEST(Convolution, Dimensions)
{
	ConvolutionAlgebra swap(ws().action("swap"));
	EXPECT_EQ(swap.dim(), 4u);
	EXPECT_TRUE(algebra_violations(swap.algebra()).empty());
	// A = k gives H*, H = k gives A
	Field q = Field::rationals();
	ConvolutionAlgebra over_k(ModuleAlgebraAction::trivial(ws().hopf("QS3"), ground_field_algebra(q)));
	EXPECT_TRUE(over_k.algebra().same_structure(dual_hopf(ws().hopf("QS3")).algebra()));
	ConvolutionAlgebra by_k(ws().action("trivial-Qx3"));
	EXPECT_TRUE(by_k.algebra().same_structure(ws().algebra("Qx3")));
}

TEST(Convolution, ProductMatchesTheDefinition)
{
	std::mt19937_64 rng(31);
	for (const auto &[name, act] : ws().actions) {
		ConvolutionAlgebra b(act);
		for (int t = 0; t < 5; ++t) {
			Vec x = random_vec(b.field(), b.dim(), rng), y = random_vec(b.field(), b.dim(), rng);
			EXPECT_EQ(b.algebra().multiply(x, y), convolve_by_definition(b, x, y)) << name;
			EXPECT_EQ(b.convolve(x, y), convolve_by_definition(b, x, y)) << name;
		}
	}
}

TEST(Convolution, PhiMatchesTheDefinition)
{
	for (const auto &[name, act] : ws().actions) {
		ConvolutionAlgebra b(act);
		for (std::size_t j = 0; j < b.dim(); ++j)
			EXPECT_EQ(b.phi(b.algebra().basis(j)), phi_by_definition(b, b.algebra().basis(j))) << name;
	}
}

TEST(Convolution, UnitMaps)
{
	ConvolutionAlgebra b(ws().action("swap"));
	EXPECT_EQ(b.iota(b.base().unit()), b.algebra().unit());
	EXPECT_EQ(b.ustar(b.dual().algebra().unit()), b.algebra().unit()); // u*(eps) = 1
	EXPECT_EQ(b.phi(b.algebra().unit()), b.algebra().unit());
}

TEST(Convolution, SwapDelta)
{
	ConvolutionAlgebra b(ws().action("swap"));
	Matrix v = b.values(b.del(Vec{1, 0}));
	EXPECT_EQ(v.column(0), (Vec{1, 0}));
	EXPECT_EQ(v.column(1), (Vec{0, 1}));
	EXPECT_EQ(b.phi(b.iota(Vec{1, 0})), b.del(Vec{1, 0}));
	// invariant a: del a = a (x) eps
	Vec inv{1, 1};
	EXPECT_EQ(b.del(inv), b.iota(inv));
}

TEST(Convolution, PhiPsiInverse)
{
	for (const auto &[name, act] : ws().actions) {
		ConvolutionAlgebra b(act);
		Matrix id = Matrix::identity(b.field(), b.dim());
		EXPECT_EQ(b.phi_matrix() * b.psi_matrix(), id) << name;
		EXPECT_EQ(b.psi_matrix() * b.phi_matrix(), id) << name;
	}
	// trivial action: Phi is the identity
	ConvolutionAlgebra t(ws().action("trivial-Q2"));
	EXPECT_EQ(t.phi_matrix(), Matrix::identity(t.field(), t.dim()));
}

TEST(Convolution, DotAndHitOnSwap)
{
	ConvolutionAlgebra b(ws().action("swap"));
	Vec eps = b.dual().algebra().unit();
	EXPECT_EQ(b.dot_act(1, b.pure_tensor(Vec{1, 0}, eps)), b.pure_tensor(Vec{0, 1}, eps));
	EXPECT_EQ(b.dot_act(0, b.pure_tensor(Vec{1, 0}, eps)), b.pure_tensor(Vec{1, 0}, eps));
	// g hits a (x) p1 to a (x) p2
	Vec a{2, 3};
	EXPECT_EQ(b.rh_act(1, b.pure_tensor(a, Vec{1, 0})), b.pure_tensor(a, Vec{0, 1}));
}

TEST(Convolution, IdentitiesHoldEverywhere)
{
	for (const auto &[name, act] : ws().actions) {
		ConvolutionAlgebra b(act);
		for (const auto &c : check_identities(b))
			EXPECT_TRUE(c.passed) << name << ": " << c.check;
	}
}

TEST(Convolution, DotinvOnCocommutativeFixtures)
{
	for (const auto &[name, act] : ws().actions) {
		ConvolutionAlgebra b(act);
		DotInvResult r = check_dotinv(b);
		EXPECT_EQ(r.cocommutative, is_cocommutative(act.hopf()));
		EXPECT_TRUE(r.hit_invariants.passed) << name;
		if (r.cocommutative) {
			EXPECT_TRUE(r.multiplicative.passed) << name;
			EXPECT_TRUE(r.dot_invariants.passed) << name;
			EXPECT_TRUE(r.dot_measuring.passed) << name;
		}
	}
}

TEST(Convolution, SweedlerBreaksMultiplicativity)
{
	ConvolutionAlgebra b(ws().action("sweedler-act"));
	DotInvResult r = check_dotinv(b);
	EXPECT_FALSE(r.cocommutative);
	EXPECT_FALSE(r.multiplicative.passed);
	ASSERT_FALSE(r.multiplicative.witnesses.empty());
	// the intertwining identities do not need cocommutativity
	for (const auto &c : check_intertwining(b))
		EXPECT_TRUE(c.passed) << c.check;
	// an explicit pair of basis elements with phi(xy) != phi(x) phi(y)
	bool found = false;
	const FiniteAlgebra &B = b.algebra();
	for (std::size_t i = 0; i < b.dim() && !found; ++i)
		for (std::size_t j = 0; j < b.dim() && !found; ++j)
			found = b.phi(B.multiply(B.basis(i), B.basis(j))) != B.multiply(b.phi(B.basis(i)), b.phi(B.basis(j)));
	EXPECT_TRUE(found);
}

TEST(Convolution, TransportExamples)
{
	ConvolutionAlgebra b(ws().action("swap"));
	Subspace zero(b.field(), 2), all = Subspace::full(b.field(), 2);
	EXPECT_TRUE(ideal_transport(b, zero).is_zero());
	EXPECT_TRUE(ideal_transport(b, all).is_full());
	EXPECT_EQ(ideal_restrict(b, ideal_transport(b, all)), all);
}

TEST(Convolution, CorrespondenceOverF2)
{
	for (const char *name : {"grading2", "swap2", "trivial-F2C2", "hit2", "conj2"}) {
		ConvolutionAlgebra b(ws().action(name));
		if (b.dim() > 8)
			continue;
		DotInvCorrespondence c = check_dotinv_correspondence(b);
		EXPECT_TRUE(c.passed()) << name;
		EXPECT_EQ(c.ideals_of_a, c.h_ideals_of_b) << name;
		EXPECT_EQ(c.ideals_of_a, c.ideals_of_invariants) << name;
	}
	// 0, (1 + g) and the whole algebra
	ConvolutionAlgebra g(ws().action("grading2"));
	EXPECT_EQ(check_dotinv_correspondence(g).ideals_of_a, 3u);
}

TEST(Convolution, TransportLandsOnDotStableIdeals)
{
	// independent of the library's correspondence check: enumerate B by hand
	ConvolutionAlgebra b(ws().action("grading2"));
	std::size_t stable = 0;
	for (const auto &s : enumerate_subspaces(b.field(), b.dim())) {
		bool ok = is_two_sided_ideal(b.algebra(), s);
		for (const auto &op : b.dot_ops())
			ok = ok && s.contains(image(op, s));
		stable += ok;
	}
	std::size_t ideals = 0;
	for (const auto &i : enumerate_subspaces(b.field(), 2))
		if (is_two_sided_ideal(b.base(), i)) {
			++ideals;
			Subspace j = ideal_transport(b, i);
			EXPECT_TRUE(is_two_sided_ideal(b.algebra(), j));
			for (const auto &op : b.dot_ops())
				EXPECT_TRUE(j.contains(image(op, j)));
		}
	EXPECT_EQ(stable, ideals);
}

TEST(Convolution, StabilityScan)
{
	for (const char *name : {"grading2", "trivial-F2C2", "swap2", "frob2", "prim2"}) {
		ConvolutionAlgebra b(ws().action(name));
		StabilityScan s = stability_scan(b);
		EXPECT_TRUE(s.result.passed) << name;
		EXPECT_TRUE(s.phi_psi.passed) << name;
		EXPECT_EQ(s.stable_found, s.expected) << name;
		EXPECT_EQ(s.expected, subspace_count(b.field().p(), b.base().dim())) << name;
	}
	EXPECT_EQ(stability_scan(ConvolutionAlgebra(ws().action("grading2"))).stable_found, 5u);
	// A = F_2: only 0 and H*
	ModuleAlgebraAction k(ws().hopf("F2C2"), ground_field_algebra(Field::prime(2)),
	                      {Matrix::identity(Field::prime(2), 1), Matrix::identity(Field::prime(2), 1)});
	EXPECT_EQ(stability_scan(ConvolutionAlgebra(k)).stable_found, 2u);
}

TEST(Convolution, GaussianSubspaceCount)
{
	EXPECT_EQ(subspace_count(2, 2), 5u);
	EXPECT_EQ(subspace_count(2, 3), 16u);
	EXPECT_EQ(subspace_count(3, 2), 6u);
	EXPECT_EQ(subspace_count(2, 0), 1u);
}
