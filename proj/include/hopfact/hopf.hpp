#pragma once

#include "hopfact/algebra.hpp"
#include "hopfact/enumerate.hpp"

namespace hopfact {

using Violation = AlgebraViolation;

/// Finite-dimensional Hopf algebra.  The coproduct of e_j is stored sparsely
/// over the tensor basis e_i (x) e_k at index i * n + k.
class HopfAlgebra {
  public:
	HopfAlgebra() = default;
	HopfAlgebra(FiniteAlgebra alg, std::vector<SparseVec> coproducts, Vec counit, Matrix antipode,
	            std::string name = {});
	/// Coproduct given as the n^2 x n matrix with column j = Delta e_j.
	HopfAlgebra(FiniteAlgebra alg, const Matrix &comul, Vec counit, Matrix antipode, std::string name = {});

	const FiniteAlgebra &algebra() const { return alg_; }
	const Field &field() const { return alg_.field(); }
	std::size_t dim() const { return alg_.dim(); }
	const std::string &name() const { return name_; }
	HopfAlgebra renamed(std::string name) const;

	const SparseVec &coproduct(std::size_t j) const { return comul_[j]; }
	/// Coefficient of e_i (x) e_k in Delta e_j.
	Scalar comul_coeff(std::size_t i, std::size_t k, std::size_t j) const;
	Matrix comul_matrix() const;
	const Vec &counit() const { return counit_; }
	const Matrix &antipode() const { return antipode_; }

	Vec comultiply(const Vec &x) const;
	Scalar apply_counit(const Vec &x) const { return dot(field(), counit_, x); }
	Vec apply_antipode(const Vec &x) const { return antipode_.apply(x); }
	/// Product in H (x) H.
	Vec tensor_multiply(const Vec &x, const Vec &y) const;

	bool same_structure(const HopfAlgebra &o) const;

  private:
	FiniteAlgebra alg_;
	std::vector<SparseVec> comul_;
	Vec counit_;
	Matrix antipode_;
	std::string name_;
};

/// Every failed axiom with a basis witness; empty means a valid Hopf algebra.
std::vector<Violation> hopf_violations(const HopfAlgebra &h);
bool is_cocommutative(const HopfAlgebra &h);

/// Group algebra from a Cayley table (table[a][b] = index of a*b).
HopfAlgebra group_algebra(Field f, const std::vector<std::vector<std::size_t>> &table, std::string name = {});
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n);
/// S3 with elements e, (12), (23), (13), (123), (132).
std::vector<std::vector<std::size_t>> symmetric3_table();

/// Dual Hopf algebra on the dual basis p_i of e_i.
HopfAlgebra dual_hopf(const HopfAlgebra &h);
HopfAlgebra tensor_hopf(const HopfAlgebra &a, const HopfAlgebra &b);
/// Sweedler's four-dimensional algebra, basis 1, g, x, gx.
HopfAlgebra sweedler(Field f);
/// k[x]/(x^p) with x primitive; only a Hopf algebra in characteristic p.
HopfAlgebra truncated_primitive(Field f);
/// The ground field as a Hopf algebra.
HopfAlgebra trivial_hopf(Field f);

bool is_grouplike(const HopfAlgebra &h, const Vec &x);
/// Exhaustive over F_p^n, subject to the enumeration bound.
std::vector<Vec> enumerate_grouplikes(const HopfAlgebra &h, std::uint64_t bound = default_enumeration_bound());
Subspace primitives(const HopfAlgebra &h);

} // namespace hopfact
