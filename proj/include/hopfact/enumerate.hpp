#pragma once

// Exhaustive enumeration of the subspace lattice of F_p^n.  This is the
// oracle engine behind the brute-force lattice checks, so it works on small
// integer residues instead of the general Scalar type.

#include "hopfact/linalg.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace hopfact {

/// Largest p^n accepted by the enumerator, read from HOPFACT_ENUM_BOUND
/// when set.  The default admits F_2^9 and F_3^6.
std::uint64_t default_enumeration_bound();

/// Square matrix over a small prime field, column convention.
class ModpMap {
  public:
	ModpMap() = default;
	explicit ModpMap(const Matrix &m);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	void apply(const std::uint8_t *v, std::uint8_t *out) const;

  private:
	unsigned p_ = 2;
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<std::uint8_t> data_;
};

/// Subspace of F_p^n in RREF, small-integer storage.
class ModpSubspace {
  public:
	ModpSubspace(unsigned p, std::size_t n) : p_(p), n_(n) {}

	unsigned p() const { return p_; }
	std::size_t ambient() const { return n_; }
	std::size_t dim() const { return pivots_.size(); }
	const std::vector<std::size_t> &pivots() const { return pivots_; }
	const std::uint8_t *row(std::size_t k) const { return &rows_[k * n_]; }

	bool contains(const std::uint8_t *v) const;
	/// True iff every map sends the subspace into itself.
	bool stable_under(const std::vector<ModpMap> &maps) const;
	Subspace to_subspace(const Field &f) const;

  private:
	friend class SubspaceWalker;
	unsigned p_;
	std::size_t n_;
	std::vector<std::size_t> pivots_;
	std::vector<std::uint8_t> rows_;
	mutable std::vector<std::uint8_t> scratch_;
	mutable std::vector<std::uint8_t> image_;
};

/// Visits every subspace of F_p^n exactly once, ordered by dimension, then by
/// pivot set (lexicographic), then by free entries.  Throws if p^n exceeds
/// the bound or the field is not a prime field.
void for_each_subspace(const Field &f, std::size_t n,
                       const std::function<void(const ModpSubspace &)> &visit,
                       std::uint64_t bound = default_enumeration_bound());

std::vector<Subspace> enumerate_subspaces(const Field &f, std::size_t n,
                                          std::uint64_t bound = default_enumeration_bound());

/// Subspaces stable under all given maps, in enumeration order.
std::vector<Subspace> enumerate_stable_subspaces(const Field &f, std::size_t n,
                                                 const std::vector<Matrix> &maps,
                                                 std::uint64_t bound = default_enumeration_bound());

/// Enumerates every vector of F_p^n (for grouplike searches).
void for_each_vector(const Field &f, std::size_t n, const std::function<void(const Vec &)> &visit,
                     std::uint64_t bound = default_enumeration_bound());

} // namespace hopfact
