#pragma once

// Lie algebras acting by derivations, derivation cores, and the truncated
// PBW power-series picture of Hom(U(g), R).

#include "hopfact/ideal.hpp"

#include <map>
#include <random>

namespace hopfact {

/// g acting on A through derivations D_1..D_m with
/// [D_a, D_b] = sum_c brackets[a][b][c] D_c.
struct LieAction {
	FiniteAlgebra algebra;
	std::vector<Matrix> derivations;
	std::vector<std::vector<Vec>> brackets;
	std::string name;

	const Field &field() const { return algebra.field(); }
	std::size_t rank() const { return derivations.size(); }
};

/// Abelian brackets for m derivations.
std::vector<std::vector<Vec>> abelian_brackets(std::size_t m);

/// Leibniz rule, bracket compatibility, antisymmetry and Jacobi on basis elements.
std::vector<CheckResult> verify_lie_action(const LieAction &act);

/// Largest two-sided ideal inside I stable under every derivation.
Subspace lie_core(const LieAction &act, const Subspace &ideal);
/// One refinement step {x in J : D_j x in J for all j}.
Subspace lie_core_step(const LieAction &act, const Subspace &j);

struct LieTransfer {
	bool prime = false, semiprime = false, completely_prime = false;
	Subspace core;
	bool core_prime = false, core_semiprime = false, core_completely_prime = false;
	/// True when every property of I is inherited by the core.
	bool passed() const;
};
/// Needs characteristic zero.
LieTransfer lie_semiprime_transfer_check(const LieAction &act, const Subspace &ideal);

/// (I:U):V, the derivation core followed by the core under a second action.
Subspace composite_core(const LieAction &lie, const ModuleAlgebraAction &grp, const Subspace &ideal);
/// Largest subspace of I stable under all derivations and all operators of grp.
Subspace joint_stable_core(const LieAction &lie, const ModuleAlgebraAction &grp, const Subspace &ideal);

// ---- PBW indices and truncated series --------------------------------------

using PBWIndex = std::vector<unsigned>;

unsigned total_degree(const PBWIndex &n);
/// Graded lexicographic: total degree first, then the exponent vectors
/// lexicographically (so X2 < X1).  Returns -1, 0 or 1.
int monomial_cmp(const PBWIndex &a, const PBWIndex &b);
struct MonomialLess {
	bool operator()(const PBWIndex &a, const PBWIndex &b) const { return monomial_cmp(a, b) < 0; }
};
/// All indices in m variables of degree <= n, in increasing monomial order.
std::vector<PBWIndex> pbw_indices(std::size_t vars, unsigned max_degree);
/// Delta e_n = sum over r + s = n of e_r (x) e_s.
std::vector<std::pair<PBWIndex, PBWIndex>> pbw_comul(const PBWIndex &n);

/// Truncation is rejected in characteristic p unless N < p.
void require_divided_powers(const Field &f, unsigned truncation);

/// Values f(e_n) of a functional on U(g) with coefficients in R.
using Functional = std::map<PBWIndex, Vec, MonomialLess>;

class TruncatedSeries {
  public:
	TruncatedSeries(FiniteAlgebra coeffs, std::size_t vars, unsigned truncation);

	const FiniteAlgebra &coefficients() const { return r_; }
	std::size_t vars() const { return vars_; }
	unsigned truncation() const { return n_; }
	const std::map<PBWIndex, Vec, MonomialLess> &terms() const { return terms_; }

	Vec coeff(const PBWIndex &n) const;
	/// Drops the term when c is zero or deg n exceeds the truncation.
	void set(const PBWIndex &n, Vec c);
	bool is_zero() const { return terms_.empty(); }

	TruncatedSeries operator+(const TruncatedSeries &o) const;
	TruncatedSeries operator-(const TruncatedSeries &o) const;
	TruncatedSeries operator*(const TruncatedSeries &o) const;
	bool operator==(const TruncatedSeries &o) const;
	bool operator!=(const TruncatedSeries &o) const { return !(*this == o); }

	static TruncatedSeries one(FiniteAlgebra coeffs, std::size_t vars, unsigned truncation);
	/// "c * X1^a X2^b + ..." in increasing monomial order; coefficient
	/// vectors of a non-scalar R are printed as (c0, c1, ...).
	std::string format() const;

  private:
	void check_compatible(const TruncatedSeries &o) const;
	FiniteAlgebra r_;
	std::size_t vars_;
	unsigned n_;
	std::map<PBWIndex, Vec, MonomialLess> terms_;
};

/// phi(f) = sum f(e_n) X^n.
TruncatedSeries series_iso_phi(const FiniteAlgebra &coeffs, std::size_t vars, unsigned truncation,
                               const Functional &f);
/// (f * g)(e_n) = sum over Delta e_n of f(e_r) g(e_s).
Functional conv_mult_functionals(const FiniteAlgebra &coeffs, std::size_t vars, unsigned truncation,
                                 const Functional &f, const Functional &g);
/// eps(e_n) = delta_{n,0}.
Functional counit_functional(const FiniteAlgebra &coeffs, std::size_t vars);
/// The algebra map of the abelian Lie algebra with f(e_i) = values[i]:
/// f(e_n) = prod values[i]^{n_i} / n_i!.
Functional algebra_map_functional(const FiniteAlgebra &coeffs, const std::vector<Scalar> &values,
                                  unsigned truncation);

/// Lowest nonzero term; throws on the zero series.
std::pair<PBWIndex, Vec> lowest_coefficient(const TruncatedSeries &s);

struct CharpDemo {
	long p = 0;
	CheckResult power{"f^p = eps"};
	CheckResult nilpotent{"(f - eps)^p = 0"};
	bool passed() const { return power.passed && nilpotent.passed; }
};
/// One abelian variable over F_p, f(e) = 1, truncation p - 1.
CharpDemo charp_grouplike_demo(long p, bool trivial_functional = false);

/// phi(f * g) = phi(f) phi(g) for every pair of basis functionals supported
/// in degree <= 2 and for random pairs, all over R.
CheckResult check_phi_multiplicative(const FiniteAlgebra &coeffs, std::size_t vars, unsigned truncation,
                                     std::size_t random_pairs, std::mt19937_64 &rng);
/// (s u t)_min = s_min r t_min over R = Q x Q for random s, t and u = r + higher.
CheckResult check_sut_min(std::size_t instances, std::size_t vars, unsigned truncation, std::mt19937_64 &rng);

} // namespace hopfact
