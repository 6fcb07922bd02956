#include "hopfact/suites.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hopfact;

namespace {

const Workspace &ws() { return builtin_workspace(); }

Subspace named(const std::string &alg, const std::string &name) { return ws().ideal(alg, name); }

Subspace zero_of(const FiniteAlgebra &a) { return Subspace(a.field(), a.dim()); }

// Largest H-ideal inside I, by brute force over every subspace.
Subspace largest_h_ideal_inside(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	Subspace best = zero_of(act.algebra());
	for (const auto &s : enumerate_subspaces(act.field(), act.algebra().dim())) {
		if (!ideal.contains(s) || !is_two_sided_ideal(act.algebra(), s))
			continue;
		bool stable = true;
		for (const auto &op : act.ops())
			stable = stable && s.contains(image(op, s));
		if (stable && s.dim() > best.dim())
			best = s;
	}
	return best;
}

} // namespace

TEST(Ideal, Generation)
{
	const FiniteAlgebra &f2c2 = ws().algebra("F2C2");
	EXPECT_TRUE(ideal_generate(f2c2, {}).is_zero());
	Subspace aug = ideal_generate(f2c2, {Vec{1, 1}});
	EXPECT_EQ(aug.dim(), 1u);
	EXPECT_TRUE(ideal_product(f2c2, aug, aug).is_zero()); // (1 + g)^2 = 0
	const FiniteAlgebra &q2 = ws().algebra("Q2");
	EXPECT_TRUE(ideal_sum(ideal_generate(q2, {Vec{1, 0}}), ideal_generate(q2, {Vec{0, 1}})).is_full());
	// one matrix unit generates M_2
	const FiniteAlgebra &m2 = ws().algebra("M2Q");
	EXPECT_TRUE(ideal_generate(m2, {unit_vec(4, 1)}).is_full());
	EXPECT_THROW(require_ideal(m2, Subspace::span(m2.field(), 4, {unit_vec(4, 0)})), Error);
}

TEST(Ideal, CoreExamples)
{
	// trivial action leaves I alone
	Subspace e1 = named("Q2", "e1");
	EXPECT_EQ(core(ws().action("trivial-Q2"), e1), e1);
	// swap: I cap g.I = 0
	EXPECT_TRUE(core(ws().action("swap"), e1).is_zero());
	// grading on F2C2: only 0 and A are graded
	EXPECT_TRUE(core(ws().action("grading2"), named("F2C2", "aug")).is_zero());
	// neg-Qxy fixes <x>
	EXPECT_EQ(core(ws().action("neg-Qxy"), named("Qxy", "x")), named("Qxy", "x"));
}

TEST(Ideal, CoreRoutesAgreeOnTheCorpus)
{
	for (const auto &[name, act] : ws().actions) {
		std::string alg = ws().algebra_name(act.algebra());
		for (const auto &[iname, ideal] : test_ideals(ws(), alg)) {
			Subspace c = core(act, ideal);
			EXPECT_EQ(c, core_via_psi(act, ideal)) << name << " " << iname;
			EXPECT_TRUE(ideal.contains(c));
			EXPECT_TRUE(is_h_stable(act, c));
			EXPECT_TRUE(is_two_sided_ideal(act.algebra(), c));
			if (is_group_algebra(act.hopf()))
				EXPECT_EQ(c, group_core(act, ideal)) << name << " " << iname;
		}
	}
}

TEST(Ideal, CoreIsTheLargestHIdealInsideOverFiniteFields)
{
	for (const auto &[name, act] : ws().actions) {
		if (act.field().characteristic() == 0 || act.algebra().dim() > 4)
			continue;
		std::string alg = ws().algebra_name(act.algebra());
		for (const auto &[iname, ideal] : test_ideals(ws(), alg))
			EXPECT_EQ(core(act, ideal), largest_h_ideal_inside(act, ideal)) << name << " " << iname;
	}
}

TEST(Ideal, HIdealEnumeration)
{
	auto h = enumerate_h_ideals(ws().action("grading2"));
	EXPECT_EQ(h.size(), 2u); // 0 and A
	EXPECT_EQ(enumerate_ideals(ws().algebra("F2C2")).size(), 3u);
	EXPECT_EQ(enumerate_h_ideals(ws().action("trivial-F2C2")).size(), 3u);
	EXPECT_THROW(enumerate_h_ideals(ws().action("swap")), Error);
	Subspace gen = h_ideal_generate(ws().action("grading2"), {Vec{1, 1}});
	EXPECT_TRUE(gen.is_full());
}

TEST(Ideal, Radicals)
{
	EXPECT_TRUE(radical(ws().algebra("QC2")).is_zero());
	EXPECT_EQ(radical(ws().algebra("F2C2")), named("F2C2", "aug"));
	EXPECT_EQ(radical(ws().algebra("T2Q")), named("T2Q", "upper"));
	EXPECT_EQ(radical(ws().algebra("Qx3")), named("Qx3", "x"));
	EXPECT_TRUE(radical(ws().algebra("M2Q")).is_zero());
	EXPECT_TRUE(radical(ws().algebra("M2F2")).is_zero());
	EXPECT_EQ(radical(ws().algebra("F2xy")), named("F2xy", "m"));
	EXPECT_EQ(radical(ws().algebra("H4")).dim(), 2u); // x and gx
}

TEST(Ideal, RadicalIsNilpotentAndQuotientSemisimple)
{
	for (const auto &[name, a] : ws().algebras) {
		Subspace r = radical(a);
		// nilpotent: powers reach 0 within dim + 1 steps
		Subspace p = r;
		for (std::size_t k = 0; k <= a.dim() && !p.is_zero(); ++k)
			p = ideal_product(a, p, r);
		EXPECT_TRUE(p.is_zero()) << name;
		if (r.dim() < a.dim())
			EXPECT_TRUE(radical(quotient(a, r).algebra).is_zero()) << name;
	}
}

TEST(Ideal, PrimeAndSemiprime)
{
	const FiniteAlgebra &m2 = ws().algebra("M2Q"), &q2 = ws().algebra("Q2"), &f2c2 = ws().algebra("F2C2");
	EXPECT_TRUE(is_prime(m2, zero_of(m2)));
	EXPECT_TRUE(is_semiprime(q2, zero_of(q2)));
	EXPECT_FALSE(is_prime(q2, zero_of(q2)));
	EXPECT_TRUE(is_prime(f2c2, named("F2C2", "aug")));
	EXPECT_TRUE(is_completely_prime(f2c2, named("F2C2", "aug")));
	EXPECT_FALSE(is_semiprime(f2c2, zero_of(f2c2)));
	EXPECT_FALSE(is_completely_prime(m2, zero_of(m2)));
	EXPECT_EQ(radical_of(f2c2, zero_of(f2c2)), named("F2C2", "aug"));
}

TEST(Ideal, PrimeByDefinitionOverF2)
{
	// P prime iff aAb in P forces a or b in P; checked over all pairs
	for (const char *alg : {"F2C2", "F2x3", "F2xy", "F2_2", "M2F2"}) {
		const FiniteAlgebra &a = ws().algebra(alg);
		for (const auto &p : enumerate_ideals(a)) {
			if (p.is_full())
				continue;
			bool prime = true;
			for_each_vector(a.field(), a.dim(), [&](const Vec &x) {
				if (p.contains(x))
					return;
				for_each_vector(a.field(), a.dim(), [&](const Vec &y) {
					if (p.contains(y) || !prime)
						return;
					bool inside = true;
					for (std::size_t k = 0; k < a.dim(); ++k)
						inside = inside && p.contains(a.multiply(a.multiply(x, a.basis(k)), y));
					prime = !inside;
				});
			});
			EXPECT_EQ(is_prime(a, p), prime) << alg;
		}
	}
}

TEST(Ideal, Spectrum)
{
	EXPECT_EQ(spectrum(ws().algebra("Q2")).size(), 2u);
	auto m2 = spectrum(ws().algebra("M2Q"));
	ASSERT_EQ(m2.size(), 1u);
	EXPECT_TRUE(m2[0].prime.is_zero());
	EXPECT_EQ(m2[0].heart_dim, 1u);
	EXPECT_EQ(m2[0].simple_quotient_dim, 4u);
	auto x3 = spectrum(ws().algebra("Qx3"));
	ASSERT_EQ(x3.size(), 1u);
	EXPECT_EQ(x3[0].prime, named("Qx3", "x"));
	EXPECT_EQ(x3[0].heart_dim, 1u);
	for (const auto &e : spectrum(ws().algebra("QC2")))
		EXPECT_EQ(e.heart_dim, 1u);
	// Q C3 = Q x Q(w): the second block is a quadratic field
	FiniteAlgebra c3 = ws().hopf("QC3").algebra();
	auto s = spectrum(c3);
	ASSERT_EQ(s.size(), 2u);
	std::multiset<std::size_t> hearts{s[0].heart_dim, s[1].heart_dim};
	EXPECT_EQ(hearts, (std::multiset<std::size_t>{1, 2}));
}

TEST(Ideal, SpectrumEntriesArePrime)
{
	for (const auto &[name, a] : ws().algebras)
		for (const auto &e : spectrum(a)) {
			EXPECT_TRUE(is_prime(a, e.prime)) << name;
			EXPECT_EQ(heart(a, e.prime).dim, e.heart_dim) << name;
			EXPECT_TRUE(e.prime.contains(radical(a))) << name;
		}
}

TEST(Ideal, PrimitiveIdempotents)
{
	auto e = primitive_idempotents(ws().algebra("Q3"));
	ASSERT_EQ(e.size(), 3u);
	const FiniteAlgebra &a = ws().algebra("Q3");
	Vec sum = zero_vec(3);
	for (std::size_t i = 0; i < e.size(); ++i) {
		sum = add(a.field(), sum, e[i]);
		for (std::size_t j = 0; j < e.size(); ++j)
			EXPECT_EQ(a.multiply(e[i], e[j]), i == j ? e[i] : zero_vec(3));
	}
	EXPECT_EQ(sum, a.unit());
}

TEST(Ideal, SemiprimeIdealsAreIntersectionsOfPrimes)
{
	EXPECT_EQ(semiprime_ideals(ws().algebra("Q2")).size(), 4u); // 0, e1, e2, A
	EXPECT_EQ(semiprime_ideals(ws().algebra("M2Q")).size(), 2u);
	for (const auto &s : semiprime_ideals(ws().algebra("Q3")))
		if (!s.is_full())
			EXPECT_TRUE(is_semiprime(ws().algebra("Q3"), s));
}

TEST(Ideal, Strata)
{
	Strata swap = strata(ws().action("swap"));
	ASSERT_EQ(swap.strata.size(), 1u);
	EXPECT_TRUE(swap.strata[0].core.is_zero());
	EXPECT_EQ(swap.strata[0].primes.size(), 2u);
	Strata triv = strata(ws().action("trivial-Q2"));
	EXPECT_EQ(triv.strata.size(), 2u);
	for (const auto &s : triv.strata)
		EXPECT_EQ(s.primes.size(), 1u);
	Strata grad = strata(ws().action("gradingQ"));
	ASSERT_EQ(grad.strata.size(), 1u);
	EXPECT_TRUE(grad.strata[0].core.is_zero());
}

TEST(Ideal, StrataPartitionTheSpectrum)
{
	for (const auto &[name, act] : ws().actions) {
		Strata s = strata(act);
		std::vector<int> seen(s.spectrum.size(), 0);
		for (const auto &st : s.strata)
			for (std::size_t p : st.primes) {
				++seen[p];
				EXPECT_EQ(core(act, s.spectrum[p].prime), st.core) << name;
			}
		for (int c : seen)
			EXPECT_EQ(c, 1) << name;
	}
}

TEST(Ideal, StratBijection)
{
	const auto &conj = ws().action("conj");
	StratBijection b = verify_strat_bijection(conj, zero_of(conj.algebra()));
	EXPECT_EQ(b.status, "bijection verified");
	EXPECT_EQ(b.stratum_size, 1u);
	EXPECT_EQ(b.h_prime_count, 1u);
	EXPECT_EQ(b.heart_dims, b.target_dims);
	EXPECT_TRUE(b.passed());
	StratumAlgebra c0 = stratum_algebra(conj, zero_of(conj.algebra()));
	EXPECT_EQ(c0.algebra.dim(), 2u); // Q (x) (kC2)*
	EXPECT_EQ(c0.h_primes.size(), 1u);
	// Q C2 graded: both primes have core 0 and land injectively
	const auto &grad = ws().action("gradingQ");
	StratBijection g = verify_strat_bijection(grad, zero_of(grad.algebra()));
	EXPECT_TRUE(g.passed());
	EXPECT_EQ(g.stratum_size, 2u);
	EXPECT_EQ(g.heart_dims, g.target_dims);
	EXPECT_EQ(g.status, "bijection verified");
	const auto &triv = ws().action("trivial-M2");
	EXPECT_EQ(verify_strat_bijection(triv, zero_of(triv.algebra())).status, "bijection verified");
}

TEST(Ideal, StratumAlgebraHypotheses)
{
	const auto &swap = ws().action("swap");
	EXPECT_THROW(stratum_algebra(swap, Subspace::full(swap.field(), 2)), Undefined);
	// A/0 = F2C2 is not semiprime
	const auto &g2 = ws().action("grading2");
	EXPECT_THROW(stratum_algebra(g2, zero_of(g2.algebra())), Undefined);
	EXPECT_THROW(stratum_algebra(swap, named("Q2", "e1")), Error); // not H-stable
}

TEST(Ideal, Reformulation)
{
	for (const char *name : {"swap", "gradingQ", "trivial-Q2", "conj", "s3perm"}) {
		const auto &act = ws().action(name);
		EXPECT_TRUE(reformulation_check(act, zero_of(act.algebra())).passed) << name;
		EXPECT_TRUE(reformulation_check(act, Subspace::full(act.field(), act.algebra().dim())).passed) << name;
	}
	const auto &g2 = ws().action("grading2");
	EXPECT_FALSE(reformulation_check(g2, zero_of(g2.algebra())).passed);
	EXPECT_TRUE(reformulation_check(g2, Subspace::full(g2.field(), 2)).passed);
}

TEST(Ideal, SemiprimeCore)
{
	auto s = semiprime_core_check(ws().action("swap"), named("Q2", "e1"));
	EXPECT_TRUE(s.core.is_zero());
	EXPECT_TRUE(s.core_semiprime);
	EXPECT_EQ(s.status, "pass");
	auto g = semiprime_core_check(ws().action("grading2"), named("F2C2", "aug"));
	EXPECT_TRUE(g.core.is_zero());
	EXPECT_FALSE(g.core_semiprime);
	EXPECT_FALSE(g.characteristic_zero);
	EXPECT_EQ(g.status, "counterexample");
	auto t = semiprime_core_check(ws().action("trivial-Q2"), named("Q2", "e2"));
	EXPECT_EQ(t.core, named("Q2", "e2"));
	EXPECT_EQ(t.status, "pass");
	EXPECT_THROW(semiprime_core_check(ws().action("grading2"), zero_of(ws().algebra("F2C2"))), Error);
}

TEST(Ideal, SemiprimeCoresInCharacteristicZero)
{
	for (const auto &[name, act] : ws().actions) {
		if (act.field().characteristic() != 0 || !is_cocommutative(act.hopf()))
			continue;
		for (const auto &s : semiprime_ideals(act.algebra())) {
			if (s.is_full())
				continue;
			EXPECT_TRUE(is_semiprime(act.algebra(), core(act, s))) << name;
		}
	}
}

TEST(Ideal, QuotientAction)
{
	const auto &act = ws().action("neg-Qxy");
	Quotient q = quotient(act.algebra(), named("Qxy", "x"));
	ModuleAlgebraAction qa = quotient_action(act, q);
	EXPECT_TRUE(action_violations(qa).empty());
	EXPECT_EQ(qa.algebra().dim(), 2u);
	EXPECT_THROW(quotient_action(ws().action("swap"), quotient(ws().algebra("Q2"), named("Q2", "e1"))), Error);
}
