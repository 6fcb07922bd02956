#pragma once

#include "hopfact/hopf.hpp"

namespace hopfact {

/// H acting on A.  op(i) is the matrix of a -> h_i.a, so the action tensor
/// t[i][j][k] (h_i.a_j = sum_k t[i][j][k] a_k) is op(i)(k, j).
class ModuleAlgebraAction {
  public:
	ModuleAlgebraAction() = default;
	ModuleAlgebraAction(HopfAlgebra h, FiniteAlgebra a, std::vector<Matrix> ops, std::string name = {});
	/// Flattened tensor t[(i * dimA + j) * dimA + k].
	static ModuleAlgebraAction from_tensor(HopfAlgebra h, FiniteAlgebra a, const std::vector<Scalar> &t,
	                                       std::string name = {});
	/// h.a = eps(h) a.
	static ModuleAlgebraAction trivial(HopfAlgebra h, FiniteAlgebra a, std::string name = {});

	const HopfAlgebra &hopf() const { return hopf_; }
	const FiniteAlgebra &algebra() const { return alg_; }
	const Field &field() const { return alg_.field(); }
	const std::string &name() const { return name_; }
	ModuleAlgebraAction renamed(std::string name) const;

	const Matrix &op(std::size_t i) const { return ops_[i]; }
	const std::vector<Matrix> &ops() const { return ops_; }
	/// Matrix of a -> h.a for an arbitrary h.
	Matrix op_of(const Vec &h) const;
	Vec act(const Vec &h, const Vec &a) const { return op_of(h).apply(a); }
	std::vector<Scalar> tensor() const;

  private:
	HopfAlgebra hopf_;
	FiniteAlgebra alg_;
	std::vector<Matrix> ops_;
	std::string name_;
};

/// Module axioms and measuring on basis elements.
std::vector<Violation> action_violations(const ModuleAlgebraAction &act);
/// Module axioms only (used for actions that need not measure).
std::vector<Violation> module_violations(const HopfAlgebra &h, const std::vector<Matrix> &ops);
/// A^H = {a : h.a = eps(h) a}.
Subspace invariants(const ModuleAlgebraAction &act);
/// Every element of a finite-dimensional module is locally finite.
inline bool is_locally_finite(const ModuleAlgebraAction &, const Vec &) { return true; }

/// The comodule map A -> A (x) H*, as a (dimA * dimH) x dimA matrix whose
/// column j has entry (h_p.a_j)_q at index q * dimH + p.
Matrix comodule_map(const ModuleAlgebraAction &act);
/// Recovers h_i.a_j from the comodule map; must reproduce the action tensor.
Vec reconstruct_action(const ModuleAlgebraAction &act, const Matrix &comodule, std::size_t i, std::size_t j);

/// Hit action h -> (f -> f(_ h)) of H on the algebra H*.
ModuleAlgebraAction hit_action(const HopfAlgebra &h);

struct Representation {
	HopfAlgebra hopf;
	std::size_t dim = 0;
	std::vector<Matrix> rho; // rho[i] = rho(h_i)
	std::string name;
};
std::vector<Violation> representation_violations(const Representation &rep);
/// Functionals rho_{i,j} in H*, listed at index i * dimV + j.
std::vector<Vec> matrix_coefficients(const Representation &rep);
/// Delta rho_{i,j} = sum_k rho_{i,k} (x) rho_{k,j} inside the dual Hopf algebra.
std::vector<Violation> coefficient_coproduct_violations(const Representation &rep);
/// Smallest subalgebra of H* containing eps and the given functionals, closed
/// under S*.
Subspace coefficient_subalgebra(const HopfAlgebra &h, const std::vector<Vec> &coeffs);

/// True when every basis element is grouplike.
bool is_group_algebra(const HopfAlgebra &h);
/// Checks <S* rho_{i,j}, g> = cofactor_{j,i}(rho g) / det(rho g) for every
/// group element.  Throws if h is not a group algebra or some rho g is singular.
std::vector<Violation> group_coeff_antipode_violations(const Representation &rep);

} // namespace hopfact
