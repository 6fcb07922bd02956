#include "hopfact/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace hopfact {

bool is_prime_number(long n)
{
	if (n < 2)
		return false;
	for (long d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

Field Field::prime(long p)
{
	if (!is_prime_number(p))
		throw Error("field characteristic " + std::to_string(p) + " is not prime");
	return Field(Kind::prime, p);
}

std::string Field::name() const
{
	return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

namespace {

mpz_class mod_p(const mpz_class &a, long p)
{
	mpz_class r;
	mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
	return r;
}

} // namespace

Scalar Field::reduce(const Scalar &x) const
{
	Scalar a = x;
	a.canonicalize(); // values built as Scalar(num, den) need not be in lowest terms
	if (is_rationals())
		return a;
	if (a.get_den() == 1)
		return Scalar(mod_p(a.get_num(), p_));
	mpz_class den = mod_p(a.get_den(), p_);
	if (den == 0)
		throw Error("denominator vanishes in " + name());
	mpz_class inv;
	mpz_class mod(p_);
	mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
	return Scalar(mod_p(a.get_num() * inv, p_));
}

Scalar Field::add(const Scalar &a, const Scalar &b) const
{
	if (is_rationals())
		return a + b;
	return Scalar(mod_p(a.get_num() + b.get_num(), p_));
}

Scalar Field::sub(const Scalar &a, const Scalar &b) const
{
	if (is_rationals())
		return a - b;
	return Scalar(mod_p(a.get_num() - b.get_num(), p_));
}

Scalar Field::mul(const Scalar &a, const Scalar &b) const
{
	if (is_rationals())
		return a * b;
	return Scalar(mod_p(a.get_num() * b.get_num(), p_));
}

Scalar Field::neg(const Scalar &a) const
{
	if (is_rationals())
		return -a;
	return Scalar(mod_p(-a.get_num(), p_));
}

Scalar Field::inv(const Scalar &a) const
{
	if (a == 0)
		throw Error("division by zero");
	if (is_rationals())
		return 1 / a;
	mpz_class r;
	mpz_class mod(p_);
	mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), mod.get_mpz_t());
	return Scalar(r);
}

Scalar Field::pow(const Scalar &a, unsigned long e) const
{
	Scalar result = one();
	Scalar base = a;
	while (e) {
		if (e & 1)
			result = mul(result, base);
		base = mul(base, base);
		e >>= 1;
	}
	return result;
}

std::string Field::format(const Scalar &a) const
{
	Scalar r = reduce(a);
	if (is_prime_field())
		return r.get_num().get_str();
	return r.get_str();
}

Scalar Field::parse(std::string_view text) const
{
	std::string s(text);
	s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
	if (s.empty())
		throw Error("empty scalar");
	Scalar q;
	if (q.set_str(s, 10) != 0)
		throw Error("malformed scalar '" + s + "'");
	if (q.get_den() == 0)
		throw Error("zero denominator in '" + s + "'");
	q.canonicalize();
	return reduce(q);
}

// ---- vectors ---------------------------------------------------------------

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i)
{
	Vec v(n);
	v.at(i) = 1;
	return v;
}

bool is_zero(const Vec &v)
{
	return std::all_of(v.begin(), v.end(), [](const Scalar &x) { return x == 0; });
}

Vec add(const Field &f, const Vec &a, const Vec &b)
{
	Vec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = f.add(a[i], b[i]);
	return r;
}

Vec sub(const Field &f, const Vec &a, const Vec &b)
{
	Vec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = f.sub(a[i], b[i]);
	return r;
}

Vec scale(const Field &f, const Scalar &c, const Vec &a)
{
	Vec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = f.mul(c, a[i]);
	return r;
}

void axpy(const Field &f, Vec &a, const Scalar &c, const Vec &b)
{
	if (c == 0)
		return;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (b[i] != 0)
			a[i] = f.add(a[i], f.mul(c, b[i]));
}

Scalar dot(const Field &f, const Vec &a, const Vec &b)
{
	Scalar s = 0;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (a[i] != 0 && b[i] != 0)
			s += a[i] * b[i];
	return f.reduce(s);
}

Vec kron(const Field &f, const Vec &a, const Vec &b)
{
	Vec r(a.size() * b.size());
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (a[i] == 0)
			continue;
		for (std::size_t j = 0; j < b.size(); ++j)
			if (b[j] != 0)
				r[i * b.size() + j] = f.mul(a[i], b[j]);
	}
	return r;
}

// ---- matrices --------------------------------------------------------------

Matrix Matrix::identity(Field f, std::size_t n)
{
	Matrix m(f, n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec> &rows)
{
	Matrix m(f, rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r)
		m.set_row(r, rows[r]);
	return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec> &cols)
{
	Matrix m(f, rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c)
		m.set_column(c, cols[c]);
	return m;
}

Vec Matrix::row(std::size_t r) const
{
	return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
	           data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const
{
	Vec v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

std::vector<Vec> Matrix::row_vectors() const
{
	std::vector<Vec> out;
	out.reserve(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		out.push_back(row(r));
	return out;
}

void Matrix::set_row(std::size_t r, const Vec &v)
{
	if (v.size() != cols_)
		throw Error("row length mismatch");
	for (std::size_t c = 0; c < cols_; ++c)
		(*this)(r, c) = field_.reduce(v[c]);
}

void Matrix::set_column(std::size_t c, const Vec &v)
{
	if (v.size() != rows_)
		throw Error("column length mismatch");
	for (std::size_t r = 0; r < rows_; ++r)
		(*this)(r, c) = field_.reduce(v[r]);
}

Vec Matrix::apply(const Vec &v) const
{
	if (v.size() != cols_)
		throw Error("matrix-vector dimension mismatch");
	Vec out(rows_);
	for (std::size_t r = 0; r < rows_; ++r) {
		Scalar s = 0;
		const Scalar *row = &data_[r * cols_];
		for (std::size_t c = 0; c < cols_; ++c)
			if (row[c] != 0 && v[c] != 0)
				s += row[c] * v[c];
		out[r] = field_.reduce(s);
	}
	return out;
}

Matrix Matrix::transpose() const
{
	Matrix t(field_, cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

bool Matrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(), [](const Scalar &x) { return x == 0; });
}

Matrix Matrix::operator*(const Matrix &o) const
{
	if (cols_ != o.rows_)
		throw Error("matrix product dimension mismatch");
	Matrix out(field_, rows_, o.cols_);
	std::vector<Scalar> acc(o.cols_);
	for (std::size_t r = 0; r < rows_; ++r) {
		std::fill(acc.begin(), acc.end(), Scalar(0));
		for (std::size_t k = 0; k < cols_; ++k) {
			const Scalar &a = (*this)(r, k);
			if (a == 0)
				continue;
			for (std::size_t c = 0; c < o.cols_; ++c)
				if (o(k, c) != 0)
					acc[c] += a * o(k, c);
		}
		for (std::size_t c = 0; c < o.cols_; ++c)
			out(r, c) = field_.reduce(acc[c]);
	}
	return out;
}

Matrix Matrix::operator+(const Matrix &o) const
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw Error("matrix sum dimension mismatch");
	Matrix out(field_, rows_, cols_);
	for (std::size_t i = 0; i < data_.size(); ++i)
		out.data_[i] = field_.add(data_[i], o.data_[i]);
	return out;
}

Matrix Matrix::operator-(const Matrix &o) const
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw Error("matrix difference dimension mismatch");
	Matrix out(field_, rows_, cols_);
	for (std::size_t i = 0; i < data_.size(); ++i)
		out.data_[i] = field_.sub(data_[i], o.data_[i]);
	return out;
}

Matrix Matrix::scaled(const Scalar &c) const
{
	Matrix out(field_, rows_, cols_);
	for (std::size_t i = 0; i < data_.size(); ++i)
		out.data_[i] = field_.mul(c, data_[i]);
	return out;
}

bool Matrix::operator==(const Matrix &o) const
{
	return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

// ---- elimination -----------------------------------------------------------

RrefResult rref_with_pivots(const Matrix &input)
{
	Matrix m = input;
	const Field &f = m.field();
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
		std::size_t sel = r;
		while (sel < m.rows() && m(sel, c) == 0)
			++sel;
		if (sel == m.rows())
			continue;
		if (sel != r)
			for (std::size_t k = 0; k < m.cols(); ++k)
				std::swap(m(sel, k), m(r, k));
		Scalar inv = f.inv(m(r, c));
		for (std::size_t k = c; k < m.cols(); ++k)
			m(r, k) = f.mul(m(r, k), inv);
		for (std::size_t i = 0; i < m.rows(); ++i) {
			if (i == r || m(i, c) == 0)
				continue;
			Scalar factor = m(i, c);
			for (std::size_t k = c; k < m.cols(); ++k)
				if (m(r, k) != 0)
					m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
		}
		pivots.push_back(c);
		++r;
	}
	return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix &m) { return rref_with_pivots(m).matrix; }

std::size_t rank(const Matrix &m) { return rref_with_pivots(m).pivots.size(); }

Scalar determinant(const Matrix &input)
{
	if (input.rows() != input.cols())
		throw Error("determinant of a non-square matrix");
	Matrix m = input;
	const Field &f = m.field();
	Scalar det = 1;
	const std::size_t n = m.rows();
	for (std::size_t c = 0; c < n; ++c) {
		std::size_t sel = c;
		while (sel < n && m(sel, c) == 0)
			++sel;
		if (sel == n)
			return 0;
		if (sel != c) {
			for (std::size_t k = 0; k < n; ++k)
				std::swap(m(sel, k), m(c, k));
			det = f.neg(det);
		}
		det = f.mul(det, m(c, c));
		Scalar inv = f.inv(m(c, c));
		for (std::size_t i = c + 1; i < n; ++i) {
			if (m(i, c) == 0)
				continue;
			Scalar factor = f.mul(m(i, c), inv);
			for (std::size_t k = c; k < n; ++k)
				m(i, k) = f.sub(m(i, k), f.mul(factor, m(c, k)));
		}
	}
	return det;
}

std::optional<Matrix> inverse(const Matrix &m)
{
	if (m.rows() != m.cols())
		throw Error("inverse of a non-square matrix");
	const std::size_t n = m.rows();
	Matrix aug(m.field(), n, 2 * n);
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = 1;
	}
	RrefResult red = rref_with_pivots(aug);
	if (red.pivots.size() < n || red.pivots[n - 1] != n - 1)
		return std::nullopt;
	Matrix out(m.field(), n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			out(r, c) = red.matrix(r, n + c);
	return out;
}

Subspace kernel(const Matrix &m)
{
	RrefResult red = rref_with_pivots(m);
	const Field &f = m.field();
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : red.pivots)
		is_pivot[p] = true;
	std::vector<Vec> basis;
	for (std::size_t free = 0; free < m.cols(); ++free) {
		if (is_pivot[free])
			continue;
		Vec v(m.cols());
		v[free] = 1;
		for (std::size_t r = 0; r < red.pivots.size(); ++r)
			v[red.pivots[r]] = f.neg(red.matrix(r, free));
		basis.push_back(std::move(v));
	}
	return Subspace::span(f, m.cols(), basis);
}

std::optional<Vec> solve(const Matrix &m, const Vec &b)
{
	if (b.size() != m.rows())
		throw Error("solve: right-hand side has wrong length");
	Matrix aug(m.field(), m.rows(), m.cols() + 1);
	for (std::size_t r = 0; r < m.rows(); ++r) {
		for (std::size_t c = 0; c < m.cols(); ++c)
			aug(r, c) = m(r, c);
		aug(r, m.cols()) = m.field().reduce(b[r]);
	}
	RrefResult red = rref_with_pivots(aug);
	if (!red.pivots.empty() && red.pivots.back() == m.cols())
		return std::nullopt;
	Vec x(m.cols());
	for (std::size_t r = 0; r < red.pivots.size(); ++r)
		x[red.pivots[r]] = red.matrix(r, m.cols());
	return x;
}

// ---- subspaces -------------------------------------------------------------

Subspace Subspace::row_space(const Matrix &m)
{
	RrefResult red = rref_with_pivots(m);
	Subspace s;
	s.basis_ = Matrix(m.field(), red.pivots.size(), m.cols());
	for (std::size_t r = 0; r < red.pivots.size(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			s.basis_(r, c) = red.matrix(r, c);
	s.pivots_ = std::move(red.pivots);
	return s;
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec> &vectors)
{
	return row_space(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::full(Field f, std::size_t ambient)
{
	return row_space(Matrix::identity(f, ambient));
}

Vec Subspace::reduce(const Vec &v) const
{
	if (v.size() != ambient())
		throw Error("vector length does not match subspace ambient dimension");
	const Field &f = field();
	Vec r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = f.reduce(v[i]);
	for (std::size_t k = 0; k < pivots_.size(); ++k) {
		Scalar c = r[pivots_[k]];
		if (c == 0)
			continue;
		for (std::size_t j = pivots_[k]; j < r.size(); ++j)
			if (basis_(k, j) != 0)
				r[j] = f.sub(r[j], f.mul(c, basis_(k, j)));
	}
	return r;
}

bool Subspace::contains(const Vec &v) const { return hopfact::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &o) const
{
	require_same_ambient(*this, o);
	for (std::size_t r = 0; r < o.dim(); ++r)
		if (!contains(o.basis().row(r)))
			return false;
	return true;
}

Vec Subspace::coordinates(const Vec &v) const
{
	Vec c(dim());
	for (std::size_t k = 0; k < pivots_.size(); ++k)
		c[k] = field().reduce(v[pivots_[k]]);
	return c;
}

void require_same_ambient(const Subspace &u, const Subspace &v)
{
	if (u.ambient() != v.ambient() || u.field() != v.field())
		throw Error("subspaces live in different ambient spaces");
}

Subspace subspace_sum(const Subspace &u, const Subspace &v)
{
	require_same_ambient(u, v);
	std::vector<Vec> rows = u.vectors();
	for (auto &r : v.vectors())
		rows.push_back(std::move(r));
	return Subspace::span(u.field(), u.ambient(), rows);
}

Subspace subspace_intersect(const Subspace &u, const Subspace &v)
{
	require_same_ambient(u, v);
	const Field &f = u.field();
	const std::size_t n = u.ambient();
	// columns: u-basis then v-basis; a kernel vector (a, b) gives a.u = -b.v
	Matrix stacked(f, n, u.dim() + v.dim());
	for (std::size_t i = 0; i < u.dim(); ++i)
		for (std::size_t r = 0; r < n; ++r)
			stacked(r, i) = u.basis()(i, r);
	for (std::size_t j = 0; j < v.dim(); ++j)
		for (std::size_t r = 0; r < n; ++r)
			stacked(r, u.dim() + j) = v.basis()(j, r);
	Subspace ker = kernel(stacked);
	std::vector<Vec> out;
	for (const auto &k : ker.vectors()) {
		Vec w(n);
		for (std::size_t i = 0; i < u.dim(); ++i)
			axpy(f, w, k[i], u.basis().row(i));
		out.push_back(std::move(w));
	}
	return Subspace::span(f, n, out);
}

bool contains(const Subspace &u, const Vec &w) { return u.contains(w); }

Subspace annihilator(const Subspace &u)
{
	if (u.dim() == 0)
		return Subspace::full(u.field(), u.ambient());
	return kernel(u.basis());
}

Subspace image(const Matrix &map, const Subspace &u)
{
	if (map.cols() != u.ambient())
		throw Error("image: dimension mismatch");
	std::vector<Vec> out;
	for (const auto &v : u.vectors())
		out.push_back(map.apply(v));
	return Subspace::span(map.field(), map.rows(), out);
}

Subspace preimage(const Matrix &map, const Subspace &w)
{
	if (map.rows() != w.ambient())
		throw Error("preimage: dimension mismatch");
	Subspace ann = annihilator(w);
	if (ann.dim() == 0)
		return Subspace::full(map.field(), map.cols());
	return kernel(ann.basis() * map);
}

std::string subspace_key(const Subspace &u)
{
	std::string out = std::to_string(u.ambient()) + ":";
	for (std::size_t r = 0; r < u.dim(); ++r) {
		out += "[";
		for (std::size_t c = 0; c < u.ambient(); ++c) {
			if (c)
				out += ",";
			out += u.field().format(u.basis()(r, c));
		}
		out += "]";
	}
	return out;
}

} // namespace hopfact
