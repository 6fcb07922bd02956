#include "hopfact/lie.hpp"

#include <algorithm>
#include <sstream>

namespace hopfact {

std::vector<std::vector<Vec>> abelian_brackets(std::size_t m)
{
	return std::vector<std::vector<Vec>>(m, std::vector<Vec>(m, zero_vec(m)));
}

namespace {

Matrix combination(const LieAction &act, const Vec &c)
{
	const std::size_t n = act.algebra.dim();
	Matrix m(act.field(), n, n);
	for (std::size_t k = 0; k < c.size(); ++k)
		if (c[k] != 0)
			m = m + act.derivations[k].scaled(c[k]);
	return m;
}

std::string triple(std::size_t a, std::size_t b, std::size_t c)
{
	return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace

std::vector<CheckResult> verify_lie_action(const LieAction &act)
{
	const FiniteAlgebra &a = act.algebra;
	const Field &f = act.field();
	const std::size_t n = a.dim(), m = act.rank();
	CheckResult shape("shapes");
	for (const auto &d : act.derivations)
		if (d.rows() != n || d.cols() != n)
			shape.fail("derivation matrix is not dim A square");
	if (act.brackets.size() != m)
		shape.fail("bracket table has the wrong size");
	for (const auto &row : act.brackets) {
		if (row.size() != m)
			shape.fail("bracket table has the wrong size");
		for (const auto &v : row)
			if (v.size() != m)
				shape.fail("bracket vector has the wrong size");
	}
	if (!shape.passed)
		return {shape};

	CheckResult leibniz("Leibniz rule");
	for (std::size_t k = 0; k < m; ++k) {
		const Matrix &d = act.derivations[k];
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				Vec lhs = d.apply(densify(a.product(i, j), n));
				Vec rhs = add(f, a.multiply(d.column(i), a.basis(j)), a.multiply(a.basis(i), d.column(j)));
				if (lhs != rhs)
					leibniz.fail("D" + std::to_string(k) + " on e" + std::to_string(i) + " e" + std::to_string(j));
			}
	}
	CheckResult brackets("commutators match brackets");
	CheckResult antisym("bracket antisymmetry");
	CheckResult jacobi("Jacobi identity");
	for (std::size_t x = 0; x < m; ++x)
		for (std::size_t y = 0; y < m; ++y) {
			const Matrix &dx = act.derivations[x], &dy = act.derivations[y];
			if (dx * dy - dy * dx != combination(act, act.brackets[x][y]))
				brackets.fail("[D" + std::to_string(x) + ", D" + std::to_string(y) + "]");
			if (add(f, act.brackets[x][y], act.brackets[y][x]) != zero_vec(m))
				antisym.fail("(" + std::to_string(x) + "," + std::to_string(y) + ")");
		}
	// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 through the structure constants
	auto bracket = [&](const Vec &u, const Vec &v) {
		Vec out = zero_vec(m);
		for (std::size_t i = 0; i < m; ++i)
			for (std::size_t j = 0; j < m; ++j)
				if (u[i] != 0 && v[j] != 0)
					axpy(f, out, f.mul(u[i], v[j]), act.brackets[i][j]);
		return out;
	};
	for (std::size_t x = 0; x < m; ++x)
		for (std::size_t y = 0; y < m; ++y)
			for (std::size_t z = 0; z < m; ++z) {
				Vec ex = unit_vec(m, x), ey = unit_vec(m, y), ez = unit_vec(m, z);
				Vec s = add(f, bracket(ex, bracket(ey, ez)), bracket(ey, bracket(ez, ex)));
				s = add(f, s, bracket(ez, bracket(ex, ey)));
				if (!is_zero(s))
					jacobi.fail(triple(x, y, z));
			}
	return {leibniz, brackets, antisym, jacobi};
}

Subspace lie_core_step(const LieAction &act, const Subspace &j)
{
	Subspace next = j;
	for (const auto &d : act.derivations)
		next = subspace_intersect(next, preimage(d, j));
	return next;
}

Subspace lie_core(const LieAction &act, const Subspace &ideal)
{
	require_ideal(act.algebra, ideal);
	Subspace j = ideal;
	for (;;) {
		Subspace next = lie_core_step(act, j);
		if (next == j)
			return j;
		j = std::move(next);
	}
}

bool LieTransfer::passed() const
{
	return (!prime || core_prime) && (!semiprime || core_semiprime) && (!completely_prime || core_completely_prime);
}

LieTransfer lie_semiprime_transfer_check(const LieAction &act, const Subspace &ideal)
{
	if (act.field().characteristic() != 0)
		throw Error("the derivation-core transfer needs characteristic zero");
	const FiniteAlgebra &a = act.algebra;
	LieTransfer r;
	r.semiprime = is_semiprime(a, ideal);
	r.prime = is_prime(a, ideal);
	r.completely_prime = r.prime && is_completely_prime(a, ideal);
	r.core = lie_core(act, ideal);
	r.core_semiprime = is_semiprime(a, r.core);
	r.core_prime = is_prime(a, r.core);
	r.core_completely_prime = r.core_prime && is_completely_prime(a, r.core);
	return r;
}

Subspace composite_core(const LieAction &lie, const ModuleAlgebraAction &grp, const Subspace &ideal)
{
	if (!lie.algebra.same_structure(grp.algebra()))
		throw Error("composite core: the two actions live on different algebras");
	return core(grp, lie_core(lie, ideal));
}

Subspace joint_stable_core(const LieAction &lie, const ModuleAlgebraAction &grp, const Subspace &ideal)
{
	std::vector<Matrix> maps = lie.derivations;
	maps.insert(maps.end(), grp.ops().begin(), grp.ops().end());
	Subspace j = ideal;
	for (;;) {
		Subspace next = j;
		for (const auto &m : maps)
			next = subspace_intersect(next, preimage(m, j));
		if (next == j)
			return j;
		j = std::move(next);
	}
}

// ---- PBW -------------------------------------------------------------------

unsigned total_degree(const PBWIndex &n)
{
	unsigned d = 0;
	for (unsigned e : n)
		d += e;
	return d;
}

int monomial_cmp(const PBWIndex &a, const PBWIndex &b)
{
	if (a.size() != b.size())
		throw Error("monomial_cmp: indices in different numbers of variables");
	unsigned da = total_degree(a), db = total_degree(b);
	if (da != db)
		return da < db ? -1 : 1;
	if (a == b)
		return 0;
	return a < b ? -1 : 1;
}

std::vector<PBWIndex> pbw_indices(std::size_t vars, unsigned max_degree)
{
	std::vector<PBWIndex> out;
	PBWIndex cur(vars, 0);
	// all compositions of each degree, generated by recursion on the variable
	auto rec = [&](auto &&self, std::size_t v, unsigned left) -> void {
		if (v + 1 == vars || vars == 0) {
			if (vars)
				cur[v] = left;
			out.push_back(cur);
			return;
		}
		for (unsigned e = 0; e <= left; ++e) {
			cur[v] = e;
			self(self, v + 1, left - e);
		}
	};
	for (unsigned d = 0; d <= max_degree; ++d) {
		if (vars == 0) {
			if (d == 0)
				out.push_back(cur);
			continue;
		}
		rec(rec, 0, d);
	}
	std::sort(out.begin(), out.end(), MonomialLess());
	return out;
}

std::vector<std::pair<PBWIndex, PBWIndex>> pbw_comul(const PBWIndex &n)
{
	std::vector<std::pair<PBWIndex, PBWIndex>> out;
	PBWIndex r(n.size(), 0);
	auto rec = [&](auto &&self, std::size_t v) -> void {
		if (v == n.size()) {
			PBWIndex s(n.size());
			for (std::size_t i = 0; i < n.size(); ++i)
				s[i] = n[i] - r[i];
			out.emplace_back(r, std::move(s));
			return;
		}
		for (unsigned e = 0; e <= n[v]; ++e) {
			r[v] = e;
			self(self, v + 1);
		}
	};
	rec(rec, 0);
	return out;
}

void require_divided_powers(const Field &f, unsigned truncation)
{
	if (f.is_prime_field() && truncation >= static_cast<unsigned long>(f.p()))
		throw Error("divided powers need truncation N < p (N = " + std::to_string(truncation) +
		            ", p = " + std::to_string(f.p()) + ")");
}

TruncatedSeries::TruncatedSeries(FiniteAlgebra coeffs, std::size_t vars, unsigned truncation)
    : r_(std::move(coeffs)), vars_(vars), n_(truncation)
{
	require_divided_powers(r_.field(), n_);
}

Vec TruncatedSeries::coeff(const PBWIndex &n) const
{
	auto it = terms_.find(n);
	return it == terms_.end() ? r_.zero() : it->second;
}

void TruncatedSeries::set(const PBWIndex &n, Vec c)
{
	if (n.size() != vars_)
		throw Error("series index has the wrong number of variables");
	if (c.size() != r_.dim())
		throw Error("series coefficient has the wrong dimension");
	if (hopfact::is_zero(c) || total_degree(n) > n_)
		terms_.erase(n);
	else
		terms_[n] = std::move(c);
}

void TruncatedSeries::check_compatible(const TruncatedSeries &o) const
{
	if (vars_ != o.vars_ || n_ != o.n_ || !r_.same_structure(o.r_))
		throw Error("series over different coefficient rings or truncations");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &o) const
{
	check_compatible(o);
	TruncatedSeries s = *this;
	for (const auto &[k, v] : o.terms_)
		s.set(k, hopfact::add(r_.field(), s.coeff(k), v));
	return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &o) const
{
	check_compatible(o);
	TruncatedSeries s = *this;
	for (const auto &[k, v] : o.terms_)
		s.set(k, hopfact::sub(r_.field(), s.coeff(k), v));
	return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &o) const
{
	check_compatible(o);
	TruncatedSeries s(r_, vars_, n_);
	std::map<PBWIndex, Vec, MonomialLess> acc;
	for (const auto &[a, x] : terms_)
		for (const auto &[b, y] : o.terms_) {
			PBWIndex c(vars_);
			for (std::size_t i = 0; i < vars_; ++i)
				c[i] = a[i] + b[i];
			if (total_degree(c) > n_)
				continue;
			auto [it, fresh] = acc.try_emplace(c, r_.zero());
			it->second = hopfact::add(r_.field(), it->second, r_.multiply(x, y));
		}
	for (auto &[k, v] : acc)
		s.set(k, std::move(v));
	return s;
}

bool TruncatedSeries::operator==(const TruncatedSeries &o) const
{
	if (vars_ != o.vars_ || n_ != o.n_ || terms_.size() != o.terms_.size())
		return false;
	auto it = o.terms_.begin();
	for (const auto &[k, v] : terms_) {
		if (k != it->first || v != it->second)
			return false;
		++it;
	}
	return true;
}

TruncatedSeries TruncatedSeries::one(FiniteAlgebra coeffs, std::size_t vars, unsigned truncation)
{
	TruncatedSeries s(coeffs, vars, truncation);
	s.set(PBWIndex(vars, 0), coeffs.unit());
	return s;
}

std::string TruncatedSeries::format() const
{
	if (terms_.empty())
		return "0";
	const Field &f = r_.field();
	std::ostringstream os;
	bool first = true;
	for (const auto &[k, v] : terms_) {
		std::string mono;
		for (std::size_t i = 0; i < k.size(); ++i)
			if (k[i]) {
				mono += (mono.empty() ? "X" : " X") + std::to_string(i + 1);
				if (k[i] > 1)
					mono += "^" + std::to_string(k[i]);
			}
		std::string coeff;
		bool negative = false;
		if (r_.dim() == 1) {
			Scalar c = v[0];
			negative = c < 0;
			coeff = f.format(negative ? Scalar(-c) : c);
			if (coeff == "1" && !mono.empty())
				coeff.clear();
		} else {
			coeff = "(";
			for (std::size_t i = 0; i < v.size(); ++i)
				coeff += (i ? ", " : "") + f.format(v[i]);
			coeff += ")";
		}
		if (first)
			os << (negative ? "-" : "");
		else
			os << (negative ? " - " : " + ");
		first = false;
		if (mono.empty())
			os << coeff;
		else if (coeff.empty())
			os << mono;
		else
			os << coeff << " * " << mono;
	}
	return os.str();
}

TruncatedSeries series_iso_phi(const FiniteAlgebra &coeffs, std::size_t vars, unsigned truncation,
                               const Functional &f)
{
	TruncatedSeries s(coeffs, vars, truncation);
	for (const auto &[k, v] : f)
		if (total_degree(k) <= truncation)
			s.set(k, v);
	return s;
}

Functional conv_mult_functionals(const FiniteAlgebra &coeffs, std::size_t vars, unsigned truncation,
                                 const Functional &f, const Functional &g)
{
	require_divided_powers(coeffs.field(), truncation);
	auto value = [&](const Functional &h, const PBWIndex &n) {
		auto it = h.find(n);
		return it == h.end() ? coeffs.zero() : it->second;
	};
	Functional out;
	for (const auto &n : pbw_indices(vars, truncation)) {
		Vec v = coeffs.zero();
		for (const auto &[r, s] : pbw_comul(n))
			v = add(coeffs.field(), v, coeffs.multiply(value(f, r), value(g, s)));
		if (!is_zero(v))
			out[n] = std::move(v);
	}
	return out;
}

Functional counit_functional(const FiniteAlgebra &coeffs, std::size_t vars)
{
	Functional out;
	out[PBWIndex(vars, 0)] = coeffs.unit();
	return out;
}

Functional algebra_map_functional(const FiniteAlgebra &coeffs, const std::vector<Scalar> &values,
                                  unsigned truncation)
{
	const Field &f = coeffs.field();
	require_divided_powers(f, truncation);
	Functional out;
	for (const auto &n : pbw_indices(values.size(), truncation)) {
		Scalar c = 1;
		for (std::size_t i = 0; i < n.size(); ++i) {
			Scalar fact = 1;
			for (unsigned k = 2; k <= n[i]; ++k)
				fact = f.mul(fact, f.from_int(k));
			c = f.mul(c, f.div(f.pow(f.reduce(values[i]), n[i]), fact));
		}
		if (c != 0)
			out[n] = scale(f, c, coeffs.unit());
	}
	return out;
}

std::pair<PBWIndex, Vec> lowest_coefficient(const TruncatedSeries &s)
{
	if (s.is_zero())
		throw Error("the zero series has no lowest coefficient");
	return *s.terms().begin();
}

CharpDemo charp_grouplike_demo(long p, bool trivial_functional)
{
	if (!is_prime_number(p))
		throw Error("charp demo needs a prime, got " + std::to_string(p));
	Field f = Field::prime(p);
	FiniteAlgebra k = ground_field_algebra(f);
	const unsigned n = static_cast<unsigned>(p - 1);
	CharpDemo demo;
	demo.p = p;
	Functional eps = counit_functional(k, 1);
	Functional fn = trivial_functional ? eps : algebra_map_functional(k, {Scalar(1)}, n);
	Functional diff;
	for (const auto &idx : pbw_indices(1, n)) {
		auto get = [&](const Functional &h) {
			auto it = h.find(idx);
			return it == h.end() ? k.zero() : it->second;
		};
		Vec d = sub(f, get(fn), get(eps));
		if (!is_zero(d))
			diff[idx] = std::move(d);
	}
	Functional power = eps, npower = eps;
	for (long i = 0; i < p; ++i) {
		power = conv_mult_functionals(k, 1, n, power, fn);
		npower = conv_mult_functionals(k, 1, n, npower, diff);
	}
	TruncatedSeries lhs = series_iso_phi(k, 1, n, power), rhs = series_iso_phi(k, 1, n, eps);
	if (lhs != rhs)
		demo.power.fail("f^p = " + lhs.format());
	TruncatedSeries nil = series_iso_phi(k, 1, n, npower);
	if (!nil.is_zero())
		demo.nilpotent.fail("(f - eps)^p = " + nil.format());
	return demo;
}

namespace {

Vec random_coeff(const FiniteAlgebra &r, std::mt19937_64 &rng, int spread = 3)
{
	std::uniform_int_distribution<int> dist(-spread, spread);
	Vec v(r.dim());
	for (auto &c : v)
		c = r.field().from_int(dist(rng));
	return v;
}

Functional random_functional(const FiniteAlgebra &r, std::size_t vars, unsigned n, std::mt19937_64 &rng)
{
	Functional out;
	for (const auto &idx : pbw_indices(vars, n)) {
		Vec v = random_coeff(r, rng);
		if (!is_zero(v))
			out[idx] = std::move(v);
	}
	return out;
}

std::string index_text(const PBWIndex &n)
{
	std::string s = "(";
	for (std::size_t i = 0; i < n.size(); ++i)
		s += (i ? "," : "") + std::to_string(n[i]);
	return s + ")";
}

} // namespace

CheckResult check_phi_multiplicative(const FiniteAlgebra &coeffs, std::size_t vars, unsigned truncation,
                                     std::size_t random_pairs, std::mt19937_64 &rng)
{
	CheckResult res("phi(f * g) = phi(f) phi(g)");
	auto test = [&](const Functional &f, const Functional &g, const std::string &tag) {
		TruncatedSeries lhs = series_iso_phi(coeffs, vars, truncation, conv_mult_functionals(coeffs, vars, truncation, f, g));
		TruncatedSeries rhs = series_iso_phi(coeffs, vars, truncation, f) * series_iso_phi(coeffs, vars, truncation, g);
		if (lhs != rhs)
			res.fail(tag);
	};
	// basis functionals: one index of degree <= 2, one basis vector of R
	std::vector<std::pair<std::string, Functional>> basis;
	for (const auto &idx : pbw_indices(vars, std::min(2u, truncation)))
		for (std::size_t b = 0; b < coeffs.dim(); ++b) {
			Functional f;
			f[idx] = coeffs.basis(b);
			basis.emplace_back(index_text(idx) + "e" + std::to_string(b), std::move(f));
		}
	for (const auto &[na, fa] : basis)
		for (const auto &[nb, fb] : basis)
			test(fa, fb, na + " x " + nb);
	for (std::size_t i = 0; i < random_pairs; ++i)
		test(random_functional(coeffs, vars, truncation, rng), random_functional(coeffs, vars, truncation, rng),
		     "random pair " + std::to_string(i));
	Functional eps = counit_functional(coeffs, vars);
	if (series_iso_phi(coeffs, vars, truncation, eps) != TruncatedSeries::one(coeffs, vars, truncation))
		res.fail("phi(eps) != 1");
	return res;
}

CheckResult check_sut_min(std::size_t instances, std::size_t vars, unsigned truncation, std::mt19937_64 &rng)
{
	CheckResult res("(s u t)_min = s_min r t_min");
	FiniteAlgebra r = diagonal_algebra(Field::rationals(), 2);
	auto indices = pbw_indices(vars, truncation);
	std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
	auto random_series = [&](std::size_t from) {
		TruncatedSeries s(r, vars, truncation);
		for (std::size_t k = from; k < indices.size(); ++k)
			if (k == from || rng() % 2)
				s.set(indices[k], random_coeff(r, rng));
		return s;
	};
	std::size_t done = 0, attempts = 0;
	while (done < instances) {
		if (++attempts > 100 * instances) {
			res.fail("could not draw enough instances with s_min r t_min != 0");
			break;
		}
		TruncatedSeries s = random_series(pick(rng)), t = random_series(pick(rng));
		TruncatedSeries u = random_series(0);
		if (s.is_zero() || t.is_zero() || u.is_zero())
			continue;
		Vec rr = u.coeff(indices[0]);
		auto [sm, sc] = lowest_coefficient(s);
		auto [tm, tc] = lowest_coefficient(t);
		Vec expect = r.multiply(r.multiply(sc, rr), tc);
		PBWIndex where(vars);
		for (std::size_t i = 0; i < vars; ++i)
			where[i] = sm[i] + tm[i];
		if (is_zero(expect) || total_degree(where) > truncation)
			continue;
		TruncatedSeries sut = s * u * t;
		auto [um, uc] = lowest_coefficient(sut);
		if (um != where || uc != expect)
			res.fail("instance " + std::to_string(done));
		++done;
	}
	return res;
}

} // namespace hopfact
