#include "hopfact/action.hpp"

namespace hopfact {

ModuleAlgebraAction::ModuleAlgebraAction(HopfAlgebra h, FiniteAlgebra a, std::vector<Matrix> ops, std::string name)
    : hopf_(std::move(h)), alg_(std::move(a)), ops_(std::move(ops)), name_(std::move(name))
{
	if (hopf_.field() != alg_.field())
		throw Error("action: Hopf algebra and algebra live over different fields");
	if (ops_.size() != hopf_.dim())
		throw Error("action: need one operator per Hopf basis element");
	for (const auto &m : ops_)
		if (m.rows() != alg_.dim() || m.cols() != alg_.dim())
			throw Error("action: operator has the wrong shape");
}

ModuleAlgebraAction ModuleAlgebraAction::from_tensor(HopfAlgebra h, FiniteAlgebra a, const std::vector<Scalar> &t,
                                                     std::string name)
{
	const std::size_t n = h.dim(), d = a.dim();
	if (t.size() != n * d * d)
		throw Error("action tensor must have dimH * dimA * dimA entries");
	std::vector<Matrix> ops;
	for (std::size_t i = 0; i < n; ++i) {
		Matrix m(a.field(), d, d);
		for (std::size_t j = 0; j < d; ++j)
			for (std::size_t k = 0; k < d; ++k)
				m(k, j) = a.field().reduce(t[(i * d + j) * d + k]);
		ops.push_back(std::move(m));
	}
	return ModuleAlgebraAction(std::move(h), std::move(a), std::move(ops), std::move(name));
}

ModuleAlgebraAction ModuleAlgebraAction::trivial(HopfAlgebra h, FiniteAlgebra a, std::string name)
{
	std::vector<Matrix> ops;
	for (std::size_t i = 0; i < h.dim(); ++i)
		ops.push_back(Matrix::identity(a.field(), a.dim()).scaled(h.counit()[i]));
	return ModuleAlgebraAction(std::move(h), std::move(a), std::move(ops), std::move(name));
}

ModuleAlgebraAction ModuleAlgebraAction::renamed(std::string name) const
{
	ModuleAlgebraAction c = *this;
	c.name_ = std::move(name);
	return c;
}

Matrix ModuleAlgebraAction::op_of(const Vec &h) const
{
	Matrix m(field(), alg_.dim(), alg_.dim());
	for (std::size_t i = 0; i < ops_.size(); ++i)
		if (h[i] != 0)
			m = m + ops_[i].scaled(h[i]);
	return m;
}

std::vector<Scalar> ModuleAlgebraAction::tensor() const
{
	const std::size_t n = hopf_.dim(), d = alg_.dim();
	std::vector<Scalar> t(n * d * d);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < d; ++j)
			for (std::size_t k = 0; k < d; ++k)
				t[(i * d + j) * d + k] = ops_[i](k, j);
	return t;
}

std::vector<Violation> module_violations(const HopfAlgebra &h, const std::vector<Matrix> &ops)
{
	std::vector<Violation> out;
	const FiniteAlgebra &ha = h.algebra();
	const std::size_t n = h.dim();
	auto op_of = [&](const Vec &x) {
		Matrix m(h.field(), ops[0].rows(), ops[0].cols());
		for (std::size_t i = 0; i < n; ++i)
			if (x[i] != 0)
				m = m + ops[i].scaled(x[i]);
		return m;
	};
	if (op_of(ha.unit()) != Matrix::identity(h.field(), ops[0].rows()))
		out.push_back({"unit acts as identity", {}});
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (op_of(densify(ha.product(i, j), n)) != ops[i] * ops[j])
				out.push_back({"module associativity", {i, j}});
	return out;
}

std::vector<Violation> action_violations(const ModuleAlgebraAction &act)
{
	auto out = module_violations(act.hopf(), act.ops());
	const HopfAlgebra &h = act.hopf();
	const FiniteAlgebra &a = act.algebra();
	const Field &f = a.field();
	const std::size_t n = h.dim(), d = a.dim();
	for (std::size_t i = 0; i < n; ++i) {
		if (act.op(i).apply(a.unit()) != scale(f, h.counit()[i], a.unit()))
			out.push_back({"h.1 = eps(h) 1", {i}});
		for (std::size_t j = 0; j < d; ++j)
			for (std::size_t k = 0; k < d; ++k) {
				Vec lhs = act.op(i).apply(densify(a.product(j, k), d));
				Vec rhs(d);
				for (const auto &t : h.coproduct(i))
					axpy(f, rhs, t.coeff,
					     a.multiply(act.op(t.index / n).column(j), act.op(t.index % n).column(k)));
				if (lhs != rhs)
					out.push_back({"measuring", {i, j, k}});
			}
	}
	return out;
}

Subspace invariants(const ModuleAlgebraAction &act)
{
	const std::size_t n = act.hopf().dim(), d = act.algebra().dim();
	Matrix eqs(act.field(), n * d, d);
	for (std::size_t i = 0; i < n; ++i) {
		Matrix m = act.op(i) - Matrix::identity(act.field(), d).scaled(act.hopf().counit()[i]);
		for (std::size_t r = 0; r < d; ++r)
			for (std::size_t c = 0; c < d; ++c)
				eqs(i * d + r, c) = m(r, c);
	}
	return kernel(eqs);
}

Matrix comodule_map(const ModuleAlgebraAction &act)
{
	const std::size_t n = act.hopf().dim(), d = act.algebra().dim();
	Matrix m(act.field(), d * n, d);
	for (std::size_t j = 0; j < d; ++j)
		for (std::size_t p = 0; p < n; ++p)
			for (std::size_t q = 0; q < d; ++q)
				m(q * n + p, j) = act.op(p)(q, j);
	return m;
}

Vec reconstruct_action(const ModuleAlgebraAction &act, const Matrix &comodule, std::size_t i, std::size_t j)
{
	// h.a = a_0 <a_1, h>: pair the H* leg of the comodule image with h_i
	const std::size_t n = act.hopf().dim(), d = act.algebra().dim();
	Vec out(d);
	for (std::size_t q = 0; q < d; ++q)
		out[q] = comodule(q * n + i, j);
	return out;
}

ModuleAlgebraAction hit_action(const HopfAlgebra &h)
{
	const std::size_t n = h.dim();
	HopfAlgebra dual = dual_hopf(h);
	std::vector<Matrix> ops;
	for (std::size_t i = 0; i < n; ++i) {
		Matrix m(h.field(), n, n);
		// <e_i -> f_j, e_k> = <f_j, e_k e_i>
		for (std::size_t k = 0; k < n; ++k)
			for (const auto &t : h.algebra().product(k, i))
				m(k, t.index) = t.coeff;
		ops.push_back(std::move(m));
	}
	std::string name = h.name().empty() ? std::string() : "hit(" + h.name() + ")";
	return ModuleAlgebraAction(h, dual.algebra(), std::move(ops), name);
}

std::vector<Violation> representation_violations(const Representation &rep)
{
	if (rep.rho.size() != rep.hopf.dim())
		throw Error("representation needs one matrix per Hopf basis element");
	for (const auto &m : rep.rho)
		if (m.rows() != rep.dim || m.cols() != rep.dim)
			throw Error("representation matrix has the wrong shape");
	return module_violations(rep.hopf, rep.rho);
}

std::vector<Vec> matrix_coefficients(const Representation &rep)
{
	const std::size_t n = rep.hopf.dim(), v = rep.dim;
	std::vector<Vec> out;
	for (std::size_t i = 0; i < v; ++i)
		for (std::size_t j = 0; j < v; ++j) {
			Vec f(n);
			for (std::size_t p = 0; p < n; ++p)
				f[p] = rep.rho[p](i, j);
			out.push_back(std::move(f));
		}
	return out;
}

std::vector<Violation> coefficient_coproduct_violations(const Representation &rep)
{
	std::vector<Violation> out;
	HopfAlgebra dual = dual_hopf(rep.hopf);
	const Field &f = dual.field();
	const std::size_t v = rep.dim;
	auto coeffs = matrix_coefficients(rep);
	for (std::size_t i = 0; i < v; ++i)
		for (std::size_t j = 0; j < v; ++j) {
			Vec lhs = dual.comultiply(coeffs[i * v + j]);
			Vec rhs(lhs.size());
			for (std::size_t k = 0; k < v; ++k)
				rhs = add(f, rhs, kron(f, coeffs[i * v + k], coeffs[k * v + j]));
			if (lhs != rhs)
				out.push_back({"coefficient coproduct", {i, j}});
		}
	return out;
}

Subspace coefficient_subalgebra(const HopfAlgebra &h, const std::vector<Vec> &coeffs)
{
	HopfAlgebra dual = dual_hopf(h);
	const FiniteAlgebra &a = dual.algebra();
	const Field &f = a.field();
	std::vector<Vec> gens = coeffs;
	gens.push_back(a.unit());
	Subspace s = Subspace::span(f, a.dim(), gens);
	for (;;) {
		auto basis = s.vectors();
		std::vector<Vec> next = basis;
		for (const auto &x : basis) {
			next.push_back(dual.apply_antipode(x));
			for (const auto &y : basis)
				next.push_back(a.multiply(x, y));
		}
		Subspace t = Subspace::span(f, a.dim(), next);
		if (t.dim() == s.dim())
			return t;
		s = std::move(t);
	}
}

bool is_group_algebra(const HopfAlgebra &h)
{
	for (std::size_t i = 0; i < h.dim(); ++i)
		if (!is_grouplike(h, unit_vec(h.dim(), i)))
			return false;
	return true;
}

namespace {

Scalar cofactor(const Matrix &m, std::size_t r, std::size_t c)
{
	const std::size_t n = m.rows();
	Matrix minor(m.field(), n - 1, n - 1);
	for (std::size_t i = 0, ii = 0; i < n; ++i) {
		if (i == r)
			continue;
		for (std::size_t j = 0, jj = 0; j < n; ++j) {
			if (j == c)
				continue;
			minor(ii, jj++) = m(i, j);
		}
		++ii;
	}
	Scalar d = n == 1 ? Scalar(1) : determinant(minor);
	return (r + c) % 2 ? m.field().neg(d) : d;
}

} // namespace

std::vector<Violation> group_coeff_antipode_violations(const Representation &rep)
{
	const HopfAlgebra &h = rep.hopf;
	if (!is_group_algebra(h))
		throw Error("cofactor check needs a group algebra");
	const Field &f = h.field();
	const std::size_t n = h.dim(), v = rep.dim;
	auto coeffs = matrix_coefficients(rep);
	std::vector<Violation> out;
	for (std::size_t g = 0; g < n; ++g) {
		const Matrix &m = rep.rho[g];
		Scalar det = determinant(m);
		if (det == 0)
			throw Error("rho(g" + std::to_string(g) + ") is singular; not a group representation");
		Vec sg = h.apply_antipode(unit_vec(n, g));
		for (std::size_t i = 0; i < v; ++i)
			for (std::size_t j = 0; j < v; ++j) {
				// <S* rho_ij, g> = <rho_ij, S g>
				Scalar lhs = dot(f, coeffs[i * v + j], sg);
				Scalar rhs = f.div(cofactor(m, j, i), det);
				if (lhs != rhs)
					out.push_back({"antipode cofactor", {g, i, j}});
			}
	}
	return out;
}

} // namespace hopfact
