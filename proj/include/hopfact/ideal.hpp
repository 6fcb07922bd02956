#pragma once

// Ideals, H-cores, radicals, spectra and strata of finite-dimensional algebras.

#include "hopfact/convolution.hpp"

namespace hopfact {

/// The construction asked for is outside its hypotheses on this input.
class Undefined : public Error {
  public:
	using Error::Error;
};

/// Two-sided ideal generated by gens: span{e_i x e_j}.
Subspace ideal_generate(const FiniteAlgebra &a, const std::vector<Vec> &gens);
Subspace ideal_product(const FiniteAlgebra &a, const Subspace &i, const Subspace &j);
inline Subspace ideal_sum(const Subspace &i, const Subspace &j) { return subspace_sum(i, j); }
inline Subspace ideal_intersect(const Subspace &i, const Subspace &j) { return subspace_intersect(i, j); }
/// Throws unless s is a two-sided ideal of a.
void require_ideal(const FiniteAlgebra &a, const Subspace &s, const std::string &what = "ideal");

bool is_h_stable(const ModuleAlgebraAction &act, const Subspace &s);
/// Smallest H-stable two-sided ideal containing gens.
Subspace h_ideal_generate(const ModuleAlgebraAction &act, const std::vector<Vec> &gens);
/// Every H-ideal, by exhaustive enumeration over F_p.
std::vector<Subspace> enumerate_h_ideals(const ModuleAlgebraAction &act,
                                         std::uint64_t bound = default_enumeration_bound());
std::vector<Subspace> enumerate_ideals(const FiniteAlgebra &a, std::uint64_t bound = default_enumeration_bound());

/// I:H = {a : h_i.a in I for every basis element h_i}.
Subspace core(const ModuleAlgebraAction &act, const Subspace &ideal);
/// iota^{-1}(Psi(I (x) H*) cap iota A), an independent route to the core.
Subspace core_via_psi(const ModuleAlgebraAction &act, const Subspace &ideal);
/// Intersection of the translates g.I; needs a group algebra.
Subspace group_core(const ModuleAlgebraAction &act, const Subspace &ideal);

enum class RadicalMethod { trace_form, frobenius };
RadicalMethod radical_method(const FiniteAlgebra &a);
/// Largest nilpotent ideal.  Throws Unsupported for noncommutative algebras
/// in characteristic p <= dim.
Subspace radical(const FiniteAlgebra &a);
/// sqrt(I): the preimage of the radical of A/I.
Subspace radical_of(const FiniteAlgebra &a, const Subspace &ideal);
bool is_semiprime(const FiniteAlgebra &a, const Subspace &ideal);
bool is_prime(const FiniteAlgebra &a, const Subspace &ideal);
/// A/I has no zero divisors.
bool is_completely_prime(const FiniteAlgebra &a, const Subspace &ideal);

struct SpectrumEntry {
	Subspace prime;
	std::size_t simple_quotient_dim = 0;
	/// Dimension of the center of the simple quotient over the base field.
	std::size_t heart_dim = 0;
	/// The central block is a proper field extension that is not split.
	bool inert = false;
};
/// The prime (= maximal) ideals with their quotient and heart dimensions.
std::vector<SpectrumEntry> spectrum(const FiniteAlgebra &a);
/// Orthogonal primitive idempotents of a commutative semisimple algebra.
std::vector<Vec> primitive_idempotents(const FiniteAlgebra &z);

struct Heart {
	Field field;
	std::size_t dim = 0;
};
/// Center of A/P for a prime P.
Heart heart(const FiniteAlgebra &a, const Subspace &prime);

/// Every intersection of primes, i.e. every semiprime ideal (A included).
std::vector<Subspace> semiprime_ideals(const FiniteAlgebra &a);

struct Stratum {
	Subspace core;
	std::vector<std::size_t> primes; // indices into the spectrum
	bool core_is_prime = false;
};
struct Strata {
	std::vector<SpectrumEntry> spectrum;
	std::vector<Stratum> strata;
};
Strata strata(const ModuleAlgebraAction &act);

/// The action induced on A/I by an H-ideal I.
ModuleAlgebraAction quotient_action(const ModuleAlgebraAction &act, const Quotient &q);

struct StratumAlgebra {
	Quotient quotient;          // A -> A/I
	Subalgebra center;          // Z(A/I) inside A/I
	ModuleAlgebraAction center_action;
	ConvolutionAlgebra algebra; // C_I = Z(A/I) (x) H* with the dot action
	/// H-primes of C_I: the distinct dot-cores of the primes of C_I.
	std::vector<Subspace> h_primes;
};
/// Needs I to be an H-ideal with A/I semiprime and an H-stable center;
/// throws Undefined otherwise.
StratumAlgebra stratum_algebra(const ModuleAlgebraAction &act, const Subspace &ideal);

struct StratBijection {
	std::string status; // "bijection verified", "injective only" or "failed"
	std::size_t stratum_size = 0;
	std::size_t h_prime_count = 0;
	std::vector<CheckResult> checks;
	std::vector<std::size_t> heart_dims;   // dim C_I / c(P)
	std::vector<std::size_t> target_dims;  // dim Z((A/P) (x) H*)
	bool passed() const;
};
StratBijection verify_strat_bijection(const ModuleAlgebraAction &act, const Subspace &ideal);

CheckResult reformulation_check(const ModuleAlgebraAction &act, const Subspace &ideal);

struct SemiprimeCoreResult {
	Subspace core;
	bool core_semiprime = false;
	bool characteristic_zero = false;
	bool cocommutative = false;
	/// "pass", "counterexample" (hypotheses not met) or "fail".
	std::string status;
};
/// Throws if the ideal is not semiprime.
SemiprimeCoreResult semiprime_core_check(const ModuleAlgebraAction &act, const Subspace &ideal);

} // namespace hopfact
