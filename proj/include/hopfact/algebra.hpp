#pragma once

#include "hopfact/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hopfact {

/// One nonzero coefficient of a sparse coordinate vector.
struct Term {
	std::size_t index;
	Scalar coeff;
};
using SparseVec = std::vector<Term>;

SparseVec sparsify(const Vec &v);
Vec densify(const SparseVec &v, std::size_t n);

/// Accumulates sparse coordinates; take() reduces and drops zeros.
class SparseAcc {
  public:
	void add(std::size_t i, const Scalar &c) { m_[i] += c; }
	std::map<std::size_t, Scalar> take(const Field &f);

  private:
	std::map<std::size_t, Scalar> m_;
};

/// Finite-dimensional associative algebra given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k.  Copies share the immutable tables.
class FiniteAlgebra {
  public:
	FiniteAlgebra() = default;
	/// Dense constants c[(i * n + j) * n + k].
	FiniteAlgebra(Field f, std::size_t dim, const std::vector<Scalar> &constants, Vec unit,
	              std::string name = {});
	/// Sparse products: products[i * n + j] lists the nonzero coordinates of e_i e_j.
	FiniteAlgebra(Field f, std::size_t dim, std::vector<SparseVec> products, Vec unit, std::string name = {});

	const Field &field() const { return data_->field; }
	std::size_t dim() const { return data_ ? data_->dim : 0; }
	const Vec &unit() const { return data_->unit; }
	const std::string &name() const { return data_->name; }
	FiniteAlgebra renamed(std::string name) const;

	const SparseVec &product(std::size_t i, std::size_t j) const { return data_->products[i * dim() + j]; }
	Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
	std::vector<Scalar> dense_constants() const;

	Vec multiply(const Vec &x, const Vec &y) const;
	Vec multiply(const SparseVec &x, const SparseVec &y) const;
	/// Matrix of y -> x y.
	Matrix left_mult(const Vec &x) const;
	/// Matrix of y -> y x.
	Matrix right_mult(const Vec &x) const;
	Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
	Vec zero() const { return zero_vec(dim()); }
	bool is_commutative() const;

	bool same_structure(const FiniteAlgebra &o) const;

  private:
	struct Data {
		Field field;
		std::size_t dim = 0;
		std::vector<SparseVec> products;
		Vec unit;
		std::string name;
	};
	std::shared_ptr<const Data> data_;
};

/// Report of violated basis triples; empty means the algebra is valid.
struct AlgebraViolation {
	std::string rule;
	std::vector<std::size_t> witness;
};
std::vector<AlgebraViolation> algebra_violations(const FiniteAlgebra &a);

/// Tensor product with basis e_i (x) f_j at index i * dim2 + j.
FiniteAlgebra tensor_algebra_prod(const FiniteAlgebra &a, const FiniteAlgebra &b);

/// A/I together with the projection A -> A/I and a section A/I -> A.  The
/// quotient basis is the image of the non-pivot standard basis vectors.
struct Quotient {
	FiniteAlgebra algebra;
	Subspace kernel;
	Matrix projection; // dim(A/I) x dim A
	Matrix section;    // dim A x dim(A/I)
	Vec project(const Vec &a) const { return projection.apply(a); }
	Vec lift(const Vec &q) const { return section.apply(q); }
	Subspace pull_back(const Subspace &s) const;
	Subspace push_forward(const Subspace &s) const;
};
Quotient quotient(const FiniteAlgebra &a, const Subspace &ideal);

/// Subalgebra carried by an RREF basis; inclusion maps its coordinates into A.
struct Subalgebra {
	FiniteAlgebra algebra;
	Subspace space;
	Matrix inclusion; // dim A x dim S
	Vec include(const Vec &s) const { return inclusion.apply(s); }
	Vec coordinates(const Vec &a) const { return space.coordinates(a); }
};
Subalgebra subalgebra(const FiniteAlgebra &a, const Subspace &s);

Subspace center(const FiniteAlgebra &a);
/// Subalgebra generated by the given elements (and the unit).
Subspace generated_subalgebra(const FiniteAlgebra &a, const std::vector<Vec> &gens);

// ---- standard algebras -----------------------------------------------------

FiniteAlgebra ground_field_algebra(Field f);
/// k x k x ... (n copies), basis of orthogonal idempotents.
FiniteAlgebra diagonal_algebra(Field f, std::size_t n);
/// M_n(k) by matrix units E_ij at index i * n + j.
FiniteAlgebra matrix_algebra(Field f, std::size_t n);
/// Upper-triangular 2x2 matrices, basis E11, E12, E22.
FiniteAlgebra upper_triangular2(Field f);
/// k[x]/(x^n), basis 1, x, ..., x^{n-1}.
FiniteAlgebra truncated_polynomial(Field f, std::size_t n);
/// k[x, y]/(x, y)^2, basis 1, x, y.
FiniteAlgebra square_zero_plane(Field f);
/// k[x_1..x_m]/(x_1..x_m)^d with monomials in graded-lex order.
FiniteAlgebra truncated_polynomial_ring(Field f, std::size_t vars, std::size_t degree);
/// k[x, y]/(x^2, y^2), basis 1, x, y, xy.
FiniteAlgebra exterior_like_square(Field f);

} // namespace hopfact
