#pragma once

// Exact scalars over Q and prime fields, dense matrices, and canonical
// row-echelon linear algebra.  Everything above this layer compares
// subspaces by their reduced row echelon basis.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfact {

class Error : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

/// Raised when an algorithm is asked to work outside the cases it handles
/// exactly (e.g. a noncommutative radical in small characteristic).
class Unsupported : public Error {
  public:
	using Error::Error;
};

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

class Field {
  public:
	enum class Kind { rationals, prime };

	Field() = default;
	static Field rationals() { return Field(); }
	static Field prime(long p);

	Kind kind() const { return kind_; }
	bool is_rationals() const { return kind_ == Kind::rationals; }
	bool is_prime_field() const { return kind_ == Kind::prime; }
	long characteristic() const { return kind_ == Kind::prime ? p_ : 0; }
	long p() const { return p_; }
	std::string name() const;

	Scalar reduce(const Scalar &a) const;
	Scalar from_int(long v) const { return reduce(Scalar(v)); }
	Scalar zero() const { return Scalar(0); }
	Scalar one() const { return Scalar(1); }

	Scalar add(const Scalar &a, const Scalar &b) const;
	Scalar sub(const Scalar &a, const Scalar &b) const;
	Scalar mul(const Scalar &a, const Scalar &b) const;
	Scalar neg(const Scalar &a) const;
	Scalar inv(const Scalar &a) const;
	Scalar div(const Scalar &a, const Scalar &b) const { return mul(a, inv(b)); }
	Scalar pow(const Scalar &a, unsigned long e) const;

	/// "a/b" over Q (lowest terms, "a" when b = 1), decimal residue over F_p.
	std::string format(const Scalar &a) const;
	Scalar parse(std::string_view text) const;

	bool operator==(const Field &o) const { return kind_ == o.kind_ && p_ == o.p_; }
	bool operator!=(const Field &o) const { return !(*this == o); }

  private:
	Field(Kind k, long p) : kind_(k), p_(p) {}
	Kind kind_ = Kind::rationals;
	long p_ = 0;
};

bool is_prime_number(long n);

// ---- vector helpers --------------------------------------------------------

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec &v);
Vec add(const Field &f, const Vec &a, const Vec &b);
Vec sub(const Field &f, const Vec &a, const Vec &b);
Vec scale(const Field &f, const Scalar &c, const Vec &a);
/// a += c * b
void axpy(const Field &f, Vec &a, const Scalar &c, const Vec &b);
Scalar dot(const Field &f, const Vec &a, const Vec &b);
/// Kronecker product with the row-major convention (i, j) -> i * |b| + j.
Vec kron(const Field &f, const Vec &a, const Vec &b);

// ---- matrices --------------------------------------------------------------

/// Dense matrix.  Linear maps act on column vectors: column j holds the image
/// of basis vector j.
class Matrix {
  public:
	Matrix() = default;
	Matrix(Field f, std::size_t rows, std::size_t cols)
	    : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

	static Matrix identity(Field f, std::size_t n);
	static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec> &rows);
	static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec> &cols);

	const Field &field() const { return field_; }
	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	Vec row(std::size_t r) const;
	Vec column(std::size_t c) const;
	std::vector<Vec> row_vectors() const;
	void set_row(std::size_t r, const Vec &v);
	void set_column(std::size_t c, const Vec &v);

	Vec apply(const Vec &v) const;
	Matrix transpose() const;
	bool is_zero() const;

	Matrix operator*(const Matrix &o) const;
	Matrix operator+(const Matrix &o) const;
	Matrix operator-(const Matrix &o) const;
	Matrix scaled(const Scalar &c) const;

	bool operator==(const Matrix &o) const;
	bool operator!=(const Matrix &o) const { return !(*this == o); }

  private:
	Field field_;
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

struct RrefResult {
	Matrix matrix;
	std::vector<std::size_t> pivots;
};

RrefResult rref_with_pivots(const Matrix &m);
Matrix rref(const Matrix &m);
std::size_t rank(const Matrix &m);
Scalar determinant(const Matrix &m);
std::optional<Matrix> inverse(const Matrix &m);
std::optional<Vec> solve(const Matrix &m, const Vec &b);

class Subspace;
Subspace kernel(const Matrix &m);

// ---- subspaces -------------------------------------------------------------

/// A subspace of F^n stored by its RREF basis with zero rows removed; two
/// subspaces are equal iff the basis matrices are identical.
class Subspace {
  public:
	Subspace() = default;
	Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}

	static Subspace span(Field f, std::size_t ambient, const std::vector<Vec> &vectors);
	static Subspace full(Field f, std::size_t ambient);
	/// Takes the row space of an arbitrary matrix.
	static Subspace row_space(const Matrix &m);

	const Field &field() const { return basis_.field(); }
	std::size_t ambient() const { return basis_.cols(); }
	std::size_t dim() const { return basis_.rows(); }
	const Matrix &basis() const { return basis_; }
	const std::vector<std::size_t> &pivots() const { return pivots_; }
	std::vector<Vec> vectors() const { return basis_.row_vectors(); }
	bool is_zero() const { return dim() == 0; }
	bool is_full() const { return dim() == ambient(); }

	/// Eliminates the pivot coordinates of v; zero iff v lies in the span.
	Vec reduce(const Vec &v) const;
	bool contains(const Vec &v) const;
	bool contains(const Subspace &o) const;
	/// Coordinates of v (assumed in the span) in the RREF basis.
	Vec coordinates(const Vec &v) const;

	bool operator==(const Subspace &o) const { return basis_ == o.basis_; }
	bool operator!=(const Subspace &o) const { return !(*this == o); }

  private:
	Matrix basis_;
	std::vector<std::size_t> pivots_;
};

void require_same_ambient(const Subspace &u, const Subspace &v);
Subspace subspace_sum(const Subspace &u, const Subspace &v);
Subspace subspace_intersect(const Subspace &u, const Subspace &v);
bool contains(const Subspace &u, const Vec &w);
/// {y : <x, y> = 0 for all x in u} for the standard pairing.
Subspace annihilator(const Subspace &u);
Subspace image(const Matrix &map, const Subspace &u);
/// {x : map * x in w}.
Subspace preimage(const Matrix &map, const Subspace &w);
/// Printable canonical form, usable as a map key.
std::string subspace_key(const Subspace &u);

} // namespace hopfact
