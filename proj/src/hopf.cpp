#include "hopfact/hopf.hpp"

#include <algorithm>
#include <array>

namespace hopfact {

namespace {

SparseVec clean_sparse(const Field &f, SparseVec v, std::size_t bound)
{
	std::sort(v.begin(), v.end(), [](const Term &a, const Term &b) { return a.index < b.index; });
	SparseVec out;
	for (auto &t : v) {
		if (t.index >= bound)
			throw Error("coproduct index out of range");
		Scalar c = f.reduce(t.coeff);
		if (!out.empty() && out.back().index == t.index)
			out.back().coeff = f.add(out.back().coeff, c);
		else
			out.push_back({t.index, c});
	}
	std::erase_if(out, [](const Term &t) { return t.coeff == 0; });
	return out;
}

} // namespace

HopfAlgebra::HopfAlgebra(FiniteAlgebra alg, std::vector<SparseVec> coproducts, Vec counit, Matrix antipode,
                         std::string name)
    : alg_(std::move(alg)), counit_(std::move(counit)), antipode_(std::move(antipode)), name_(std::move(name))
{
	const std::size_t n = alg_.dim();
	if (coproducts.size() != n)
		throw Error("coproduct table must list one entry per basis element");
	if (counit_.size() != n)
		throw Error("counit has wrong length");
	if (antipode_.rows() != n || antipode_.cols() != n)
		throw Error("antipode must be a dim x dim matrix");
	for (auto &c : counit_)
		c = field().reduce(c);
	for (auto &c : coproducts)
		comul_.push_back(clean_sparse(field(), std::move(c), n * n));
}

HopfAlgebra::HopfAlgebra(FiniteAlgebra alg, const Matrix &comul, Vec counit, Matrix antipode, std::string name)
    : HopfAlgebra(alg, [&] {
	      const std::size_t n = alg.dim();
	      if (comul.rows() != n * n || comul.cols() != n)
		      throw Error("comultiplication must be an n^2 x n matrix");
	      std::vector<SparseVec> cs;
	      for (std::size_t j = 0; j < n; ++j)
		      cs.push_back(sparsify(comul.column(j)));
	      return cs;
      }(),
                  std::move(counit), std::move(antipode), std::move(name))
{
}

HopfAlgebra HopfAlgebra::renamed(std::string name) const
{
	HopfAlgebra h = *this;
	h.name_ = std::move(name);
	return h;
}

Scalar HopfAlgebra::comul_coeff(std::size_t i, std::size_t k, std::size_t j) const
{
	const std::size_t idx = i * dim() + k;
	for (const auto &t : comul_[j])
		if (t.index == idx)
			return t.coeff;
	return 0;
}

Matrix HopfAlgebra::comul_matrix() const
{
	const std::size_t n = dim();
	Matrix m(field(), n * n, n);
	for (std::size_t j = 0; j < n; ++j)
		for (const auto &t : comul_[j])
			m(t.index, j) = t.coeff;
	return m;
}

Vec HopfAlgebra::comultiply(const Vec &x) const
{
	const std::size_t n = dim();
	Vec out(n * n);
	for (std::size_t j = 0; j < n; ++j) {
		if (x[j] == 0)
			continue;
		for (const auto &t : comul_[j])
			out[t.index] += x[j] * t.coeff;
	}
	for (auto &v : out)
		v = field().reduce(v);
	return out;
}

Vec HopfAlgebra::tensor_multiply(const Vec &x, const Vec &y) const
{
	const std::size_t n = dim();
	const SparseVec sx = sparsify(x), sy = sparsify(y);
	Vec out(n * n);
	for (const auto &s : sx)
		for (const auto &t : sy) {
			const Scalar c = s.coeff * t.coeff;
			const auto &left = alg_.product(s.index / n, t.index / n);
			const auto &right = alg_.product(s.index % n, t.index % n);
			for (const auto &l : left)
				for (const auto &r : right)
					out[l.index * n + r.index] += c * l.coeff * r.coeff;
		}
	for (auto &v : out)
		v = field().reduce(v);
	return out;
}

bool HopfAlgebra::same_structure(const HopfAlgebra &o) const
{
	return alg_.same_structure(o.alg_) && comul_matrix() == o.comul_matrix() && counit_ == o.counit_ &&
	       antipode_ == o.antipode_;
}

std::vector<Violation> hopf_violations(const HopfAlgebra &h)
{
	auto out = algebra_violations(h.algebra());
	const Field &f = h.field();
	const FiniteAlgebra &a = h.algebra();
	const std::size_t n = h.dim();
	const Vec &one = a.unit();

	for (std::size_t j = 0; j < n; ++j) {
		const SparseVec &dj = h.coproduct(j);
		// coassociativity: (D (x) id) D e_j = (id (x) D) D e_j in H^(x)3
		SparseAcc lhs, rhs;
		for (const auto &t : dj) {
			const std::size_t i = t.index / n, k = t.index % n;
			for (const auto &u : h.coproduct(i))
				lhs.add(u.index * n + k, t.coeff * u.coeff);
			for (const auto &u : h.coproduct(k))
				rhs.add(i * n * n + u.index, t.coeff * u.coeff);
		}
		if (lhs.take(f) != rhs.take(f))
			out.push_back({"coassociativity", {j}});

		// counit: (eps (x) id) D = id = (id (x) eps) D
		Vec left(n), right(n);
		for (const auto &t : dj) {
			const std::size_t i = t.index / n, k = t.index % n;
			left[k] += h.counit()[i] * t.coeff;
			right[i] += h.counit()[k] * t.coeff;
		}
		for (auto &v : left)
			v = f.reduce(v);
		for (auto &v : right)
			v = f.reduce(v);
		if (left != a.basis(j) || right != a.basis(j))
			out.push_back({"counit law", {j}});

		// antipode: m (S (x) id) D = u eps = m (id (x) S) D
		Vec sl(n), sr(n);
		for (const auto &t : dj) {
			const std::size_t i = t.index / n, k = t.index % n;
			axpy(f, sl, t.coeff, a.multiply(h.antipode().column(i), a.basis(k)));
			axpy(f, sr, t.coeff, a.multiply(a.basis(i), h.antipode().column(k)));
		}
		Vec target = scale(f, h.counit()[j], one);
		if (sl != target || sr != target)
			out.push_back({"antipode", {j}});
	}

	// Delta and eps are unital algebra maps
	if (h.comultiply(one) != kron(f, one, one))
		out.push_back({"coproduct of unit", {}});
	if (h.apply_counit(one) != 1)
		out.push_back({"counit of unit", {}});
	SparseAcc lhs, rhs;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Scalar eps = 0;
			for (const auto &t : a.product(i, j)) {
				eps += t.coeff * h.counit()[t.index];
				for (const auto &u : h.coproduct(t.index))
					lhs.add(u.index, t.coeff * u.coeff);
			}
			for (const auto &s : h.coproduct(i))
				for (const auto &t : h.coproduct(j)) {
					const Scalar st = s.coeff * t.coeff;
					for (const auto &l : a.product(s.index / n, t.index / n))
						for (const auto &r : a.product(s.index % n, t.index % n))
							rhs.add(l.index * n + r.index, st * l.coeff * r.coeff);
				}
			if (lhs.take(f) != rhs.take(f))
				out.push_back({"coproduct multiplicative", {i, j}});
			if (f.reduce(eps) != f.mul(h.counit()[i], h.counit()[j]))
				out.push_back({"counit multiplicative", {i, j}});
		}
	return out;
}

bool is_cocommutative(const HopfAlgebra &h)
{
	const std::size_t n = h.dim();
	for (std::size_t j = 0; j < n; ++j) {
		Vec d = densify(h.coproduct(j), n * n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t k = i + 1; k < n; ++k)
				if (d[i * n + k] != d[k * n + i])
					return false;
	}
	return true;
}

HopfAlgebra group_algebra(Field f, const std::vector<std::vector<std::size_t>> &table, std::string name)
{
	const std::size_t n = table.size();
	if (n == 0)
		throw Error("group table is empty");
	for (const auto &row : table) {
		if (row.size() != n)
			throw Error("group table is not square");
		for (auto v : row)
			if (v >= n)
				throw Error("group table entry out of range");
	}
	std::size_t e = n;
	for (std::size_t c = 0; c < n && e == n; ++c) {
		bool ok = true;
		for (std::size_t x = 0; x < n && ok; ++x)
			ok = table[c][x] == x && table[x][c] == x;
		if (ok)
			e = c;
	}
	if (e == n)
		throw Error("group table has no identity element");
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
				if (table[table[a][b]][c] != table[a][table[b][c]])
					throw Error("group table is not associative at (" + std::to_string(a) + ", " +
					            std::to_string(b) + ", " + std::to_string(c) + ")");
	std::vector<std::size_t> inv(n, n);
	for (std::size_t a = 0; a < n; ++a) {
		for (std::size_t b = 0; b < n; ++b)
			if (table[a][b] == e && table[b][a] == e)
				inv[a] = b;
		if (inv[a] == n)
			throw Error("group table element " + std::to_string(a) + " has no inverse");
	}
	std::vector<SparseVec> products(n * n), coproducts(n);
	Matrix s(f, n, n);
	for (std::size_t a = 0; a < n; ++a) {
		for (std::size_t b = 0; b < n; ++b)
			products[a * n + b] = {{table[a][b], Scalar(1)}};
		coproducts[a] = {{a * n + a, Scalar(1)}};
		s(inv[a], a) = 1;
	}
	FiniteAlgebra alg(f, n, std::move(products), unit_vec(n, e), name);
	return HopfAlgebra(std::move(alg), std::move(coproducts), Vec(n, Scalar(1)), std::move(s), std::move(name));
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n)
{
	std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			t[a][b] = (a + b) % n;
	return t;
}

std::vector<std::vector<std::size_t>> symmetric3_table()
{
	// permutations of {0,1,2} as images, composed as (a*b)(x) = a(b(x))
	const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
	std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
	for (std::size_t a = 0; a < 6; ++a)
		for (std::size_t b = 0; b < 6; ++b) {
			std::array<int, 3> c{};
			for (int x = 0; x < 3; ++x)
				c[x] = perms[a][perms[b][x]];
			t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
		}
	return t;
}

HopfAlgebra dual_hopf(const HopfAlgebra &h)
{
	const Field &f = h.field();
	const std::size_t n = h.dim();
	const FiniteAlgebra &a = h.algebra();
	std::vector<SparseVec> products(n * n), coproducts(n);
	for (std::size_t k = 0; k < n; ++k)
		for (const auto &t : h.coproduct(k))
			products[t.index].push_back({k, t.coeff});
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (const auto &t : a.product(i, j))
				coproducts[t.index].push_back({i * n + j, t.coeff});
	std::string name = h.name().empty() ? std::string() : "(" + h.name() + ")*";
	FiniteAlgebra dual(f, n, std::move(products), h.counit(), name);
	return HopfAlgebra(std::move(dual), std::move(coproducts), a.unit(), h.antipode().transpose(), name);
}

HopfAlgebra tensor_hopf(const HopfAlgebra &a, const HopfAlgebra &b)
{
	if (a.field() != b.field())
		throw Error("tensor product of Hopf algebras over different fields");
	const Field &f = a.field();
	const std::size_t n = a.dim(), m = b.dim(), d = n * m;
	FiniteAlgebra alg = tensor_algebra_prod(a.algebra(), b.algebra());
	std::vector<SparseVec> coproducts(d);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < m; ++y)
			for (const auto &s : a.coproduct(x))
				for (const auto &t : b.coproduct(y)) {
					const std::size_t i = s.index / n, j = s.index % n;
					const std::size_t k = t.index / m, l = t.index % m;
					coproducts[x * m + y].push_back({(i * m + k) * d + (j * m + l), f.mul(s.coeff, t.coeff)});
				}
	Matrix s(f, d, d);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < m; ++y)
			s.set_column(x * m + y, kron(f, a.antipode().column(x), b.antipode().column(y)));
	std::string name;
	if (!a.name().empty() && !b.name().empty())
		name = a.name() + "(x)" + b.name();
	return HopfAlgebra(alg.renamed(name), std::move(coproducts), kron(f, a.counit(), b.counit()), std::move(s),
	                   name);
}

HopfAlgebra sweedler(Field f)
{
	// basis 1, g, x, gx
	const Scalar one(1), m1 = f.from_int(-1);
	std::vector<SparseVec> p(16);
	auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar &c) { p[i * 4 + j] = {{k, c}}; };
	for (std::size_t i = 0; i < 4; ++i) {
		set(0, i, i, one);
		set(i, 0, i, one);
	}
	set(1, 1, 0, one);
	set(1, 2, 3, one);
	set(1, 3, 2, one);
	set(2, 1, 3, m1);
	set(3, 1, 2, m1);
	FiniteAlgebra alg(f, 4, std::move(p), unit_vec(4, 0), "H4");
	std::vector<SparseVec> c(4);
	c[0] = {{0, one}};
	c[1] = {{1 * 4 + 1, one}};
	c[2] = {{2 * 4 + 0, one}, {1 * 4 + 2, one}};
	c[3] = {{0 * 4 + 3, one}, {3 * 4 + 1, one}};
	Matrix s(f, 4, 4);
	s(0, 0) = 1;
	s(1, 1) = 1;
	s(3, 2) = m1;
	s(2, 3) = 1;
	return HopfAlgebra(std::move(alg), std::move(c), Vec{1, 1, 0, 0}, std::move(s), "H4");
}

HopfAlgebra truncated_primitive(Field f)
{
	if (!f.is_prime_field())
		throw Error("k[x]/(x^p) with x primitive needs a prime field");
	const std::size_t p = static_cast<std::size_t>(f.p());
	FiniteAlgebra alg = truncated_polynomial(f, p);
	std::vector<SparseVec> c(p);
	Matrix s(f, p, p);
	for (std::size_t m = 0; m < p; ++m) {
		Scalar binom(1);
		for (std::size_t i = 0; i <= m; ++i) {
			c[m].push_back({i * p + (m - i), binom});
			binom = binom * Scalar(static_cast<long>(m - i)) / Scalar(static_cast<long>(i + 1));
		}
		s(m, m) = f.from_int(m % 2 ? -1 : 1);
	}
	std::string name = "u(" + f.name() + ")";
	return HopfAlgebra(alg.renamed(name), std::move(c), unit_vec(p, 0), std::move(s), name);
}

HopfAlgebra trivial_hopf(Field f)
{
	return HopfAlgebra(ground_field_algebra(f), std::vector<SparseVec>{{{0, Scalar(1)}}}, Vec{1},
	                   Matrix::identity(f, 1), "k");
}

bool is_grouplike(const HopfAlgebra &h, const Vec &x)
{
	if (x.size() != h.dim())
		throw Error("is_grouplike: vector length mismatch");
	return h.apply_counit(x) == 1 && h.comultiply(x) == kron(h.field(), x, x);
}

std::vector<Vec> enumerate_grouplikes(const HopfAlgebra &h, std::uint64_t bound)
{
	std::vector<Vec> out;
	for_each_vector(
	    h.field(), h.dim(),
	    [&](const Vec &x) {
		    if (is_grouplike(h, x))
			    out.push_back(x);
	    },
	    bound);
	return out;
}

Subspace primitives(const HopfAlgebra &h)
{
	const Field &f = h.field();
	const std::size_t n = h.dim();
	const Vec &one = h.algebra().unit();
	std::vector<Vec> cols;
	for (std::size_t j = 0; j < n; ++j) {
		Vec e = unit_vec(n, j);
		Vec d = densify(h.coproduct(j), n * n);
		d = sub(f, d, kron(f, e, one));
		d = sub(f, d, kron(f, one, e));
		cols.push_back(d);
	}
	return kernel(Matrix::from_columns(f, n * n, cols));
}

} // namespace hopfact
