#include "hopfact/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hopfact {

SparseVec sparsify(const Vec &v)
{
	SparseVec out;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (v[i] != 0)
			out.push_back({i, v[i]});
	return out;
}

Vec densify(const SparseVec &v, std::size_t n)
{
	Vec out(n);
	for (const auto &t : v)
		out.at(t.index) = t.coeff;
	return out;
}

FiniteAlgebra::FiniteAlgebra(Field f, std::size_t dim, const std::vector<Scalar> &constants, Vec unit,
                             std::string name)
{
	if (constants.size() != dim * dim * dim)
		throw Error("structure constant tensor must have dim^3 entries");
	std::vector<SparseVec> products(dim * dim);
	for (std::size_t ij = 0; ij < dim * dim; ++ij)
		for (std::size_t k = 0; k < dim; ++k) {
			Scalar c = f.reduce(constants[ij * dim + k]);
			if (c != 0)
				products[ij].push_back({k, c});
		}
	*this = FiniteAlgebra(f, dim, std::move(products), std::move(unit), std::move(name));
}

FiniteAlgebra::FiniteAlgebra(Field f, std::size_t dim, std::vector<SparseVec> products, Vec unit,
                             std::string name)
{
	if (products.size() != dim * dim)
		throw Error("product table must have dim^2 entries");
	if (unit.size() != dim)
		throw Error("unit vector has wrong length");
	auto d = std::make_shared<Data>();
	d->field = f;
	d->dim = dim;
	for (auto &p : products) {
		SparseVec clean;
		std::sort(p.begin(), p.end(), [](const Term &a, const Term &b) { return a.index < b.index; });
		for (auto &t : p) {
			if (t.index >= dim)
				throw Error("structure constant index out of range");
			Scalar c = f.reduce(t.coeff);
			if (!clean.empty() && clean.back().index == t.index)
				clean.back().coeff = f.add(clean.back().coeff, c);
			else
				clean.push_back({t.index, c});
		}
		std::erase_if(clean, [](const Term &t) { return t.coeff == 0; });
		d->products.push_back(std::move(clean));
	}
	for (auto &u : unit)
		u = f.reduce(u);
	d->unit = std::move(unit);
	d->name = std::move(name);
	data_ = std::move(d);
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const
{
	auto d = std::make_shared<Data>(*data_);
	d->name = std::move(name);
	FiniteAlgebra out;
	out.data_ = std::move(d);
	return out;
}

Scalar FiniteAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const
{
	for (const auto &t : product(i, j))
		if (t.index == k)
			return t.coeff;
	return 0;
}

std::vector<Scalar> FiniteAlgebra::dense_constants() const
{
	const std::size_t n = dim();
	std::vector<Scalar> c(n * n * n);
	for (std::size_t ij = 0; ij < n * n; ++ij)
		for (const auto &t : data_->products[ij])
			c[ij * n + t.index] = t.coeff;
	return c;
}

Vec FiniteAlgebra::multiply(const Vec &x, const Vec &y) const
{
	const std::size_t n = dim();
	if (x.size() != n || y.size() != n)
		throw Error("multiply: vector length mismatch");
	return multiply(sparsify(x), sparsify(y));
}

Vec FiniteAlgebra::multiply(const SparseVec &x, const SparseVec &y) const
{
	Vec acc(dim());
	for (const auto &s : x)
		for (const auto &t : y) {
			Scalar c = s.coeff * t.coeff;
			for (const auto &u : product(s.index, t.index))
				acc[u.index] += c * u.coeff;
		}
	for (auto &a : acc)
		a = field().reduce(a);
	return acc;
}

Matrix FiniteAlgebra::left_mult(const Vec &x) const
{
	std::vector<Vec> cols;
	for (std::size_t j = 0; j < dim(); ++j)
		cols.push_back(multiply(x, basis(j)));
	return Matrix::from_columns(field(), dim(), cols);
}

Matrix FiniteAlgebra::right_mult(const Vec &x) const
{
	std::vector<Vec> cols;
	for (std::size_t j = 0; j < dim(); ++j)
		cols.push_back(multiply(basis(j), x));
	return Matrix::from_columns(field(), dim(), cols);
}

bool FiniteAlgebra::is_commutative() const
{
	for (std::size_t i = 0; i < dim(); ++i)
		for (std::size_t j = i + 1; j < dim(); ++j) {
			const auto &a = product(i, j);
			const auto &b = product(j, i);
			if (a.size() != b.size())
				return false;
			for (std::size_t t = 0; t < a.size(); ++t)
				if (a[t].index != b[t].index || a[t].coeff != b[t].coeff)
					return false;
		}
	return true;
}

bool FiniteAlgebra::same_structure(const FiniteAlgebra &o) const
{
	return field() == o.field() && dim() == o.dim() && unit() == o.unit() &&
	       dense_constants() == o.dense_constants();
}

std::map<std::size_t, Scalar> SparseAcc::take(const Field &f)
{
	std::map<std::size_t, Scalar> out;
	for (auto &[i, c] : m_) {
		Scalar r = f.reduce(c);
		if (r != 0)
			out.emplace(i, std::move(r));
	}
	m_.clear();
	return out;
}

std::vector<AlgebraViolation> algebra_violations(const FiniteAlgebra &a)
{
	std::vector<AlgebraViolation> out;
	const Field &f = a.field();
	const std::size_t n = a.dim();
	SparseAcc lhs, rhs;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const SparseVec &ij = a.product(i, j);
			for (std::size_t k = 0; k < n; ++k) {
				for (const auto &t : ij)
					for (const auto &u : a.product(t.index, k))
						lhs.add(u.index, t.coeff * u.coeff);
				for (const auto &t : a.product(j, k))
					for (const auto &u : a.product(i, t.index))
						rhs.add(u.index, t.coeff * u.coeff);
				if (lhs.take(f) != rhs.take(f))
					out.push_back({"associativity", {i, j, k}});
			}
		}
	for (std::size_t i = 0; i < n; ++i) {
		if (a.multiply(a.unit(), a.basis(i)) != a.basis(i))
			out.push_back({"left unit", {i}});
		if (a.multiply(a.basis(i), a.unit()) != a.basis(i))
			out.push_back({"right unit", {i}});
	}
	return out;
}

FiniteAlgebra tensor_algebra_prod(const FiniteAlgebra &a, const FiniteAlgebra &b)
{
	if (a.field() != b.field())
		throw Error("tensor product of algebras over different fields");
	const Field &f = a.field();
	const std::size_t n = a.dim(), m = b.dim(), d = n * m;
	std::vector<SparseVec> products(d * d);
	for (std::size_t i1 = 0; i1 < n; ++i1)
		for (std::size_t j1 = 0; j1 < m; ++j1)
			for (std::size_t i2 = 0; i2 < n; ++i2)
				for (std::size_t j2 = 0; j2 < m; ++j2) {
					auto &slot = products[(i1 * m + j1) * d + (i2 * m + j2)];
					for (const auto &s : a.product(i1, i2))
						for (const auto &t : b.product(j1, j2))
							slot.push_back({s.index * m + t.index, f.mul(s.coeff, t.coeff)});
				}
	std::string name;
	if (!a.name().empty() && !b.name().empty())
		name = a.name() + "(x)" + b.name();
	return FiniteAlgebra(f, d, std::move(products), kron(f, a.unit(), b.unit()), name);
}

Subspace Quotient::pull_back(const Subspace &s) const { return preimage(projection, s); }

Subspace Quotient::push_forward(const Subspace &s) const { return image(projection, s); }

Quotient quotient(const FiniteAlgebra &a, const Subspace &ideal)
{
	const Field &f = a.field();
	const std::size_t n = a.dim();
	if (ideal.ambient() != n)
		throw Error("quotient: ideal lives in the wrong ambient space");
	std::vector<bool> is_pivot(n, false);
	for (auto p : ideal.pivots())
		is_pivot[p] = true;
	std::vector<std::size_t> keep;
	for (std::size_t j = 0; j < n; ++j)
		if (!is_pivot[j])
			keep.push_back(j);
	const std::size_t q = keep.size();
	Matrix proj(f, q, n), sec(f, n, q);
	for (std::size_t j = 0; j < n; ++j) {
		Vec r = ideal.reduce(a.basis(j));
		for (std::size_t t = 0; t < q; ++t)
			proj(t, j) = r[keep[t]];
	}
	for (std::size_t t = 0; t < q; ++t)
		sec(keep[t], t) = 1;
	std::vector<SparseVec> products(q * q);
	for (std::size_t s = 0; s < q; ++s)
		for (std::size_t t = 0; t < q; ++t)
			products[s * q + t] = sparsify(proj.apply(densify(a.product(keep[s], keep[t]), n)));
	FiniteAlgebra qa(f, q, std::move(products), proj.apply(a.unit()),
	                 a.name().empty() ? std::string() : a.name() + "/I");
	return {std::move(qa), ideal, std::move(proj), std::move(sec)};
}

Subalgebra subalgebra(const FiniteAlgebra &a, const Subspace &s)
{
	const Field &f = a.field();
	if (!s.contains(a.unit()))
		throw Error("subalgebra: subspace does not contain the unit");
	auto basis = s.vectors();
	const std::size_t d = basis.size();
	std::vector<SparseVec> products(d * d);
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j) {
			Vec p = a.multiply(basis[i], basis[j]);
			if (!s.contains(p))
				throw Error("subalgebra: subspace is not closed under multiplication");
			products[i * d + j] = sparsify(s.coordinates(p));
		}
	Matrix incl = Matrix::from_columns(f, a.dim(), basis);
	FiniteAlgebra sub(f, d, std::move(products), s.coordinates(a.unit()));
	return {std::move(sub), s, std::move(incl)};
}

Subspace center(const FiniteAlgebra &a)
{
	const Field &f = a.field();
	const std::size_t n = a.dim();
	Matrix eqs(f, n * n, n);
	for (std::size_t j = 0; j < n; ++j) {
		Matrix d = a.right_mult(a.basis(j)) - a.left_mult(a.basis(j));
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				eqs(j * n + r, c) = d(r, c);
	}
	return kernel(eqs);
}

Subspace generated_subalgebra(const FiniteAlgebra &a, const std::vector<Vec> &gens)
{
	std::vector<Vec> init = gens;
	init.push_back(a.unit());
	Subspace s = Subspace::span(a.field(), a.dim(), init);
	for (;;) {
		auto basis = s.vectors();
		std::vector<Vec> next = basis;
		for (const auto &x : basis)
			for (const auto &y : basis)
				next.push_back(a.multiply(x, y));
		Subspace t = Subspace::span(a.field(), a.dim(), next);
		if (t.dim() == s.dim())
			return t;
		s = std::move(t);
	}
}

// ---- standard algebras -----------------------------------------------------

FiniteAlgebra ground_field_algebra(Field f)
{
	return FiniteAlgebra(f, 1, std::vector<SparseVec>{{{0, Scalar(1)}}}, Vec{1}, "k");
}

FiniteAlgebra diagonal_algebra(Field f, std::size_t n)
{
	std::vector<SparseVec> products(n * n);
	for (std::size_t i = 0; i < n; ++i)
		products[i * n + i] = {{i, Scalar(1)}};
	return FiniteAlgebra(f, n, std::move(products), Vec(n, Scalar(1)), "k^" + std::to_string(n));
}

FiniteAlgebra matrix_algebra(Field f, std::size_t n)
{
	const std::size_t d = n * n;
	std::vector<SparseVec> products(d * d);
	Vec unit(d);
	for (std::size_t i = 0; i < n; ++i) {
		unit[i * n + i] = 1;
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t l = 0; l < n; ++l)
				products[(i * n + j) * d + (j * n + l)] = {{i * n + l, Scalar(1)}};
	}
	return FiniteAlgebra(f, d, std::move(products), unit, "M" + std::to_string(n));
}

FiniteAlgebra upper_triangular2(Field f)
{
	// E11 = 0, E12 = 1, E22 = 2
	std::vector<SparseVec> products(9);
	products[0 * 3 + 0] = {{0, Scalar(1)}};
	products[0 * 3 + 1] = {{1, Scalar(1)}};
	products[1 * 3 + 2] = {{1, Scalar(1)}};
	products[2 * 3 + 2] = {{2, Scalar(1)}};
	return FiniteAlgebra(f, 3, std::move(products), Vec{1, 0, 1}, "T2");
}

FiniteAlgebra truncated_polynomial(Field f, std::size_t n)
{
	std::vector<SparseVec> products(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; i + j < n; ++j)
			products[i * n + j] = {{i + j, Scalar(1)}};
	return FiniteAlgebra(f, n, std::move(products), unit_vec(n, 0), "k[x]/(x^" + std::to_string(n) + ")");
}

FiniteAlgebra square_zero_plane(Field f)
{
	std::vector<SparseVec> products(9);
	products[0] = {{0, Scalar(1)}};
	products[1] = {{1, Scalar(1)}};
	products[2] = {{2, Scalar(1)}};
	products[3] = {{1, Scalar(1)}};
	products[6] = {{2, Scalar(1)}};
	return FiniteAlgebra(f, 3, std::move(products), unit_vec(3, 0), "k[x,y]/(x,y)^2");
}

namespace {

void monomials(std::size_t vars, std::size_t degree, std::vector<std::vector<std::size_t>> &out)
{
	// all exponent vectors of total degree == degree, lexicographically descending
	std::vector<std::size_t> cur(vars, 0);
	std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left) {
		if (v + 1 == vars) {
			cur[v] = left;
			out.push_back(cur);
			return;
		}
		for (std::size_t e = left + 1; e-- > 0;) {
			cur[v] = e;
			rec(v + 1, left - e);
		}
	};
	if (vars == 0) {
		if (degree == 0)
			out.push_back({});
		return;
	}
	rec(0, degree);
}

} // namespace

FiniteAlgebra truncated_polynomial_ring(Field f, std::size_t vars, std::size_t degree)
{
	std::vector<std::vector<std::size_t>> basis;
	for (std::size_t d = 0; d < degree; ++d)
		monomials(vars, d, basis);
	std::map<std::vector<std::size_t>, std::size_t> index;
	for (std::size_t i = 0; i < basis.size(); ++i)
		index[basis[i]] = i;
	const std::size_t n = basis.size();
	std::vector<SparseVec> products(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			std::vector<std::size_t> e(vars);
			for (std::size_t v = 0; v < vars; ++v)
				e[v] = basis[i][v] + basis[j][v];
			auto it = index.find(e);
			if (it != index.end())
				products[i * n + j] = {{it->second, Scalar(1)}};
		}
	return FiniteAlgebra(f, n, std::move(products), unit_vec(n, 0),
	                     "k[x1..x" + std::to_string(vars) + "]/m^" + std::to_string(degree));
}

FiniteAlgebra exterior_like_square(Field f)
{
	// basis 1, x, y, xy with x^2 = y^2 = 0, commutative
	std::vector<SparseVec> products(16);
	auto set = [&](std::size_t i, std::size_t j, std::size_t k) { products[i * 4 + j] = {{k, Scalar(1)}}; };
	for (std::size_t i = 0; i < 4; ++i) {
		set(0, i, i);
		set(i, 0, i);
	}
	set(1, 2, 3);
	set(2, 1, 3);
	return FiniteAlgebra(f, 4, std::move(products), unit_vec(4, 0), "k[x,y]/(x^2,y^2)");
}

} // namespace hopfact
