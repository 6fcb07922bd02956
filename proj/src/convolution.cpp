#include "hopfact/convolution.hpp"

#include <functional>
#include <map>
#include <set>

namespace hopfact {

namespace {

std::string pair_witness(const char *what, std::size_t i, std::size_t j)
{
	return std::string(what) + " (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// (p * n + p') -> list of (k, coefficient of h_p (x) h_p' in Delta h_k)
std::vector<std::vector<std::pair<std::size_t, Scalar>>> coproduct_index(const HopfAlgebra &h)
{
	const std::size_t n = h.dim();
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> out(n * n);
	for (std::size_t k = 0; k < n; ++k)
		for (const auto &t : h.coproduct(k))
			out[t.index].push_back({k, t.coeff});
	return out;
}

} // namespace

ConvolutionAlgebra::ConvolutionAlgebra(ModuleAlgebraAction act) : act_(std::move(act)), dual_(dual_hopf(act_.hopf()))
{
	const HopfAlgebra &h = act_.hopf();
	const FiniteAlgebra &a = act_.algebra();
	const Field &f = a.field();
	const std::size_t n = h.dim(), d = a.dim(), dim = n * d;

	// structure constants from (f * g)(h) = f(h_1) g(h_2) on basis functions
	auto cop = coproduct_index(h);
	std::vector<SparseVec> products(dim * dim);
	for (std::size_t q = 0; q < d; ++q)
		for (std::size_t p = 0; p < n; ++p)
			for (std::size_t q2 = 0; q2 < d; ++q2)
				for (std::size_t p2 = 0; p2 < n; ++p2) {
					auto &slot = products[index(q, p) * dim + index(q2, p2)];
					for (const auto &[k, c] : cop[p * n + p2])
						for (const auto &t : a.product(q, q2))
							slot.push_back({index(t.index, k), f.mul(c, t.coeff)});
				}
	std::string name = act_.name().empty() ? std::string() : "B(" + act_.name() + ")";
	b_ = FiniteAlgebra(f, dim, std::move(products), kron(f, a.unit(), h.counit()), name);

	// Phi b (h_k) = sum h_k1 . b(h_k2),  Psi b (h_k) = sum S(h_k1) . b(h_k2)
	std::vector<Matrix> s_ops;
	for (std::size_t r = 0; r < n; ++r)
		s_ops.push_back(act_.op_of(h.antipode().column(r)));
	phi_ = Matrix(f, dim, dim);
	psi_ = Matrix(f, dim, dim);
	for (std::size_t k = 0; k < n; ++k)
		for (const auto &t : h.coproduct(k)) {
			const std::size_t r = t.index / n, s = t.index % n;
			for (std::size_t q = 0; q < d; ++q)
				for (std::size_t q2 = 0; q2 < d; ++q2) {
					const Scalar &x = act_.op(r)(q2, q);
					if (x != 0)
						phi_(index(q2, k), index(q, s)) += t.coeff * x;
					const Scalar &y = s_ops[r](q2, q);
					if (y != 0)
						psi_(index(q2, k), index(q, s)) += t.coeff * y;
				}
		}
	for (std::size_t r = 0; r < dim; ++r)
		for (std::size_t c = 0; c < dim; ++c) {
			phi_(r, c) = f.reduce(phi_(r, c));
			psi_(r, c) = f.reduce(psi_(r, c));
		}

	// (h_i -> b)(h_k) = b(h_k h_i);  (h_i . b)(h_k) = h_i1 . b(h_k h_i2)
	const FiniteAlgebra &ha = h.algebra();
	for (std::size_t i = 0; i < n; ++i) {
		Matrix rh(f, dim, dim), dot(f, dim, dim);
		for (std::size_t k = 0; k < n; ++k)
			for (const auto &t : ha.product(k, i))
				for (std::size_t q = 0; q < d; ++q)
					rh(index(q, k), index(q, t.index)) = f.add(rh(index(q, k), index(q, t.index)), t.coeff);
		for (const auto &u : h.coproduct(i)) {
			const std::size_t r = u.index / n, s = u.index % n;
			for (std::size_t k = 0; k < n; ++k)
				for (const auto &t : ha.product(k, s))
					for (std::size_t q = 0; q < d; ++q)
						for (std::size_t q2 = 0; q2 < d; ++q2) {
							const Scalar &x = act_.op(r)(q2, q);
							if (x != 0)
								dot(index(q2, k), index(q, t.index)) += u.coeff * t.coeff * x;
						}
		}
		for (std::size_t r = 0; r < dim; ++r)
			for (std::size_t c = 0; c < dim; ++c)
				dot(r, c) = f.reduce(dot(r, c));
		rh_.push_back(std::move(rh));
		dot_.push_back(std::move(dot));
	}
}

Vec ConvolutionAlgebra::convolve(const Vec &x, const Vec &y) const
{
	const HopfAlgebra &h = hopf();
	const FiniteAlgebra &a = base();
	const std::size_t n = h.dim(), d = a.dim();
	Matrix vx = values(x), vy = values(y);
	Vec out(dim());
	for (std::size_t k = 0; k < n; ++k) {
		Vec acc(d);
		for (const auto &t : h.coproduct(k))
			axpy(field(), acc, t.coeff, a.multiply(vx.column(t.index / n), vy.column(t.index % n)));
		for (std::size_t q = 0; q < d; ++q)
			out[index(q, k)] = acc[q];
	}
	return out;
}

Matrix ConvolutionAlgebra::values(const Vec &b) const
{
	const std::size_t n = hopf().dim(), d = base().dim();
	Matrix v(field(), d, n);
	for (std::size_t q = 0; q < d; ++q)
		for (std::size_t p = 0; p < n; ++p)
			v(q, p) = b[index(q, p)];
	return v;
}

Vec ConvolutionAlgebra::from_values(const Matrix &v) const
{
	Vec b(dim());
	for (std::size_t q = 0; q < v.rows(); ++q)
		for (std::size_t p = 0; p < v.cols(); ++p)
			b[index(q, p)] = v(q, p);
	return b;
}

Vec ConvolutionAlgebra::iota(const Vec &a) const { return kron(field(), a, hopf().counit()); }

Vec ConvolutionAlgebra::del(const Vec &a) const
{
	const std::size_t n = hopf().dim(), d = base().dim();
	Vec b(dim());
	for (std::size_t p = 0; p < n; ++p) {
		Vec v = act_.op(p).apply(a);
		for (std::size_t q = 0; q < d; ++q)
			b[index(q, p)] = v[q];
	}
	return b;
}

Vec ConvolutionAlgebra::ustar(const Vec &f) const { return kron(field(), base().unit(), f); }

Vec ConvolutionAlgebra::pure_tensor(const Vec &a, const Vec &f) const { return kron(field(), a, f); }

Matrix ConvolutionAlgebra::iota_matrix() const
{
	std::vector<Vec> cols;
	for (std::size_t j = 0; j < base().dim(); ++j)
		cols.push_back(iota(base().basis(j)));
	return Matrix::from_columns(field(), dim(), cols);
}

Matrix ConvolutionAlgebra::del_matrix() const
{
	std::vector<Vec> cols;
	for (std::size_t j = 0; j < base().dim(); ++j)
		cols.push_back(del(base().basis(j)));
	return Matrix::from_columns(field(), dim(), cols);
}

ModuleAlgebraAction ConvolutionAlgebra::rh_action() const
{
	return ModuleAlgebraAction(hopf(), b_, rh_, act_.name() + ":hit");
}

ModuleAlgebraAction ConvolutionAlgebra::dot_action() const
{
	return ModuleAlgebraAction(hopf(), b_, dot_, act_.name() + ":dot");
}

Subspace ConvolutionAlgebra::iota_image() const
{
	return Subspace::row_space(iota_matrix().transpose());
}

Subspace ConvolutionAlgebra::tensor_with_dual(const Subspace &w) const
{
	std::vector<Vec> vecs;
	for (const auto &x : w.vectors())
		for (std::size_t p = 0; p < hopf().dim(); ++p)
			vecs.push_back(pure_tensor(x, unit_vec(hopf().dim(), p)));
	return Subspace::span(field(), dim(), vecs);
}

// ---- identity checks -------------------------------------------------------

std::vector<CheckResult> check_intertwining(const ConvolutionAlgebra &b)
{
	const FiniteAlgebra &B = b.algebra();
	const FiniteAlgebra &A = b.base();
	const std::size_t n = b.hopf().dim(), D = b.dim(), d = A.dim();
	CheckResult ed{"phi((iota a) b) = (del a) phi(b)"};
	CheckResult ed_psi{"psi((del a) b) = (iota a) psi(b)"};
	CheckResult inter{"phi(h . b) = h -> phi(b)"};
	CheckResult inter_psi{"psi(h -> b) = h . psi(b)"};
	for (std::size_t a = 0; a < d; ++a) {
		Vec ia = b.iota(A.basis(a)), da = b.del(A.basis(a));
		for (std::size_t j = 0; j < D; ++j) {
			Vec bj = B.basis(j);
			if (b.phi(B.multiply(ia, bj)) != B.multiply(da, b.phi(bj)))
				ed.fail(pair_witness("a, b =", a, j));
			if (b.psi(B.multiply(da, bj)) != B.multiply(ia, b.psi(bj)))
				ed_psi.fail(pair_witness("a, b =", a, j));
		}
	}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < D; ++j) {
			Vec bj = B.basis(j);
			if (b.phi(b.dot_act(i, bj)) != b.rh_act(i, b.phi(bj)))
				inter.fail(pair_witness("h, b =", i, j));
			if (b.psi(b.rh_act(i, bj)) != b.dot_act(i, b.psi(bj)))
				inter_psi.fail(pair_witness("h, b =", i, j));
		}
	return {ed, ed_psi, inter, inter_psi};
}

std::vector<CheckResult> check_identities(const ConvolutionAlgebra &b)
{
	const FiniteAlgebra &B = b.algebra();
	const FiniteAlgebra &A = b.base();
	const HopfAlgebra &H = b.hopf();
	const Field &f = b.field();
	const std::size_t n = H.dim(), D = b.dim(), d = A.dim();
	std::vector<CheckResult> out;

	CheckResult assoc{"convolution is associative and unital"};
	for (const auto &v : algebra_violations(B)) {
		std::string w = v.rule;
		for (auto x : v.witness)
			w += " " + std::to_string(x);
		assoc.fail(w);
	}
	if (B.unit() != b.ustar(H.counit()) || B.unit() != b.iota(A.unit()))
		assoc.fail("unit differs from u*(eps)");
	out.push_back(assoc);

	CheckResult tens{"convolution algebra equals A (x) H*"};
	if (!B.same_structure(tensor_algebra_prod(A, b.dual().algebra())))
		tens.fail("structure constants differ from the tensor product");
	// spot-check the generic convolution against the tables
	for (std::size_t i = 0; i < D && tens.passed; ++i)
		for (std::size_t j = 0; j < D; ++j)
			if (b.convolve(B.basis(i), B.basis(j)) != densify(B.product(i, j), D)) {
				tens.fail(pair_witness("basis pair", i, j));
				break;
			}
	out.push_back(tens);

	CheckResult emb{"iota, del, u* are unital algebra maps"};
	if (b.del(A.unit()) != B.unit())
		emb.fail("del(1) != 1");
	for (std::size_t x = 0; x < d; ++x)
		for (std::size_t y = 0; y < d; ++y) {
			Vec xy = densify(A.product(x, y), d);
			if (b.iota(xy) != B.multiply(b.iota(A.basis(x)), b.iota(A.basis(y))))
				emb.fail(pair_witness("iota at", x, y));
			if (b.del(xy) != B.multiply(b.del(A.basis(x)), b.del(A.basis(y))))
				emb.fail(pair_witness("del at", x, y));
		}
	const FiniteAlgebra &Hd = b.dual().algebra();
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			if (b.ustar(densify(Hd.product(x, y), n)) !=
			    B.multiply(b.ustar(Hd.basis(x)), b.ustar(Hd.basis(y))))
				emb.fail(pair_witness("u* at", x, y));
	// iota A commutes with u* H*
	for (std::size_t x = 0; x < d; ++x)
		for (std::size_t y = 0; y < n; ++y) {
			Vec ia = b.iota(A.basis(x)), uf = b.ustar(Hd.basis(y));
			if (B.multiply(ia, uf) != B.multiply(uf, ia))
				emb.fail(pair_witness("iota a, u* f do not commute at", x, y));
		}
	out.push_back(emb);

	CheckResult inverse{"phi psi = psi phi = id"};
	Matrix id = Matrix::identity(f, D);
	if (b.phi_matrix() * b.psi_matrix() != id)
		inverse.fail("phi psi != id");
	if (b.psi_matrix() * b.phi_matrix() != id)
		inverse.fail("psi phi != id");
	out.push_back(inverse);

	CheckResult pi{"phi iota = del"};
	for (std::size_t x = 0; x < d; ++x)
		if (b.phi(b.iota(A.basis(x))) != b.del(A.basis(x)))
			pi.fail("a = " + std::to_string(x));
	out.push_back(pi);

	CheckResult unit{"phi(1) = 1"};
	if (b.phi(B.unit()) != B.unit())
		unit.fail("phi(1) != 1");
	out.push_back(unit);

	CheckResult lin{"phi is right H*-linear"};
	for (std::size_t j = 0; j < D; ++j)
		for (std::size_t p = 0; p < n; ++p) {
			Vec uf = b.ustar(Hd.basis(p));
			if (b.phi(B.multiply(B.basis(j), uf)) != B.multiply(b.phi(B.basis(j)), uf))
				lin.fail(pair_witness("b, f =", j, p));
		}
	out.push_back(lin);

	for (auto &c : check_intertwining(b))
		out.push_back(c);

	CheckResult rhk{"hit action on B: module algebra, h -> (a (x) f) = a (x) (h -> f)"};
	for (const auto &v : action_violations(b.rh_action()))
		rhk.fail(v.rule);
	ModuleAlgebraAction hit = hit_action(H);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t q = 0; q < d; ++q)
			for (std::size_t p = 0; p < n; ++p) {
				Vec fp = unit_vec(n, p);
				if (b.rh_act(i, b.pure_tensor(A.basis(q), fp)) !=
				    b.pure_tensor(A.basis(q), hit.op(i).apply(fp)))
					rhk.fail("h = " + std::to_string(i) + ", a (x) f = " + std::to_string(b.index(q, p)));
			}
	out.push_back(rhk);

	CheckResult dot{"dot action: module, h . (a (x) f) = h1.a (x) (h2 -> f)"};
	for (const auto &v : module_violations(H, b.dot_ops()))
		dot.fail(v.rule);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t q = 0; q < d; ++q)
			for (std::size_t p = 0; p < n; ++p) {
				Vec fp = unit_vec(n, p);
				Vec rhs(D);
				for (const auto &t : H.coproduct(i))
					axpy(f, rhs, t.coeff,
					     b.pure_tensor(b.action().op(t.index / n).column(q), hit.op(t.index % n).apply(fp)));
				if (b.dot_act(i, b.pure_tensor(A.basis(q), fp)) != rhs)
					dot.fail("h = " + std::to_string(i) + ", a (x) f = " + std::to_string(b.index(q, p)));
			}
	out.push_back(dot);

	CheckResult b0{"hit invariants equal iota A"};
	if (invariants(b.rh_action()) != b.iota_image())
		b0.fail("(B, hit)^H differs from iota A");
	out.push_back(b0);
	return out;
}

DotInvResult check_dotinv(const ConvolutionAlgebra &b)
{
	DotInvResult r;
	r.cocommutative = is_cocommutative(b.hopf());
	const FiniteAlgebra &B = b.algebra();
	const std::size_t D = b.dim();
	for (std::size_t i = 0; i < D; ++i)
		for (std::size_t j = 0; j < D; ++j) {
			Vec lhs = b.phi(densify(B.product(i, j), D));
			Vec rhs = B.multiply(b.phi(B.basis(i)), b.phi(B.basis(j)));
			if (lhs != rhs)
				r.multiplicative.fail(pair_witness("basis pair", i, j));
		}
	if (invariants(b.dot_action()) != image(b.psi_matrix(), b.iota_image()))
		r.dot_invariants.fail("(B, dot)^H differs from psi(iota A)");
	if (invariants(b.rh_action()) != b.iota_image())
		r.hit_invariants.fail("(B, hit)^H differs from iota A");
	for (const auto &v : action_violations(b.dot_action())) {
		std::string w = v.rule;
		for (auto x : v.witness)
			w += " " + std::to_string(x);
		r.dot_measuring.fail(w);
	}
	return r;
}

// ---- ideal correspondence --------------------------------------------------

bool is_two_sided_ideal(const FiniteAlgebra &a, const Subspace &s)
{
	for (const auto &x : s.vectors())
		for (std::size_t i = 0; i < a.dim(); ++i) {
			if (!s.contains(a.multiply(a.basis(i), x)) || !s.contains(a.multiply(x, a.basis(i))))
				return false;
		}
	return true;
}

Subspace ideal_transport(const ConvolutionAlgebra &b, const Subspace &ideal)
{
	return image(b.psi_matrix(), b.tensor_with_dual(ideal));
}

Subspace ideal_restrict(const ConvolutionAlgebra &b, const Subspace &j)
{
	return preimage(b.iota_matrix(), image(b.phi_matrix(), j));
}

Subspace invariant_contract(const ConvolutionAlgebra &b, const Subspace &j)
{
	return subspace_intersect(j, image(b.psi_matrix(), b.iota_image()));
}

Subspace invariant_extend(const ConvolutionAlgebra &b, const Subspace &k)
{
	const FiniteAlgebra &B = b.algebra();
	std::vector<Vec> vecs;
	for (const auto &x : k.vectors())
		for (std::size_t j = 0; j < B.dim(); ++j)
			vecs.push_back(B.multiply(x, B.basis(j)));
	return Subspace::span(b.field(), B.dim(), vecs);
}

namespace {

std::vector<Matrix> multiplication_maps(const FiniteAlgebra &a)
{
	std::vector<Matrix> maps;
	for (std::size_t i = 0; i < a.dim(); ++i) {
		maps.push_back(a.left_mult(a.basis(i)));
		maps.push_back(a.right_mult(a.basis(i)));
	}
	return maps;
}

void check_bijection(CheckResult &res, const std::vector<Subspace> &domain, const std::vector<Subspace> &codomain,
                     const std::function<Subspace(const Subspace &)> &map, const char *label)
{
	std::set<std::string> target;
	for (const auto &s : codomain)
		target.insert(subspace_key(s));
	std::set<std::string> hit;
	for (std::size_t i = 0; i < domain.size(); ++i) {
		std::string key = subspace_key(map(domain[i]));
		if (!target.count(key))
			res.fail(std::string(label) + ": image of item " + std::to_string(i) + " is outside the target set");
		if (!hit.insert(key).second)
			res.fail(std::string(label) + ": item " + std::to_string(i) + " collides with an earlier image");
	}
	if (hit.size() != target.size())
		res.fail(std::string(label) + ": " + std::to_string(target.size() - std::min(target.size(), hit.size())) +
		         " target items are missed");
}

} // namespace

DotInvCorrespondence check_dotinv_correspondence(const ConvolutionAlgebra &b, std::uint64_t bound)
{
	DotInvCorrespondence r;
	const Field &f = b.field();
	const FiniteAlgebra &A = b.base();
	const FiniteAlgebra &B = b.algebra();

	auto ideals_a = enumerate_stable_subspaces(f, A.dim(), multiplication_maps(A), bound);
	auto b_maps = multiplication_maps(B);
	for (const auto &m : b.dot_ops())
		b_maps.push_back(m);
	auto h_ideals_b = enumerate_stable_subspaces(f, B.dim(), b_maps, bound);
	Subalgebra inv = subalgebra(B, image(b.psi_matrix(), b.iota_image()));
	std::vector<Subspace> ideals_inv;
	for (const auto &s : enumerate_stable_subspaces(f, inv.algebra.dim(), multiplication_maps(inv.algebra), bound))
		ideals_inv.push_back(image(inv.inclusion, s));
	r.ideals_of_a = ideals_a.size();
	r.h_ideals_of_b = h_ideals_b.size();
	r.ideals_of_invariants = ideals_inv.size();

	check_bijection(r.transport, ideals_a, h_ideals_b, [&](const Subspace &s) { return ideal_transport(b, s); },
	                "transport");
	for (std::size_t i = 0; i < ideals_a.size(); ++i)
		if (ideal_restrict(b, ideal_transport(b, ideals_a[i])) != ideals_a[i])
			r.restrict_inverse.fail("ideal " + std::to_string(i) + " of A does not round-trip");
	for (std::size_t i = 0; i < h_ideals_b.size(); ++i)
		if (ideal_transport(b, ideal_restrict(b, h_ideals_b[i])) != h_ideals_b[i])
			r.restrict_inverse.fail("H-ideal " + std::to_string(i) + " of B does not round-trip");

	check_bijection(r.contract, h_ideals_b, ideals_inv, [&](const Subspace &s) { return invariant_contract(b, s); },
	                "contraction");
	for (std::size_t i = 0; i < h_ideals_b.size(); ++i)
		if (invariant_extend(b, invariant_contract(b, h_ideals_b[i])) != h_ideals_b[i])
			r.extend_inverse.fail("H-ideal " + std::to_string(i) + " of B does not round-trip");
	for (std::size_t i = 0; i < ideals_inv.size(); ++i)
		if (invariant_contract(b, invariant_extend(b, ideals_inv[i])) != ideals_inv[i])
			r.extend_inverse.fail("ideal " + std::to_string(i) + " of the invariants does not round-trip");
	return r;
}

std::uint64_t subspace_count(std::uint64_t q, std::size_t n)
{
	// sum over k of the Gaussian binomial [n, k]_q, via [n, k] = [n-1, k-1] + q^k [n-1, k]
	std::vector<std::uint64_t> row{1};
	for (std::size_t m = 1; m <= n; ++m) {
		std::vector<std::uint64_t> next(m + 1, 0);
		std::uint64_t qk = 1;
		for (std::size_t k = 0; k <= m; ++k) {
			std::uint64_t left = k > 0 ? row[k - 1] : 0;
			std::uint64_t right = k < m ? row[k] : 0;
			next[k] = left + qk * right;
			qk *= q;
		}
		row = std::move(next);
	}
	std::uint64_t total = 0;
	for (auto x : row)
		total += x;
	return total;
}

StabilityScan stability_scan(const ConvolutionAlgebra &b, std::uint64_t bound)
{
	StabilityScan r;
	const Field &f = b.field();
	const FiniteAlgebra &B = b.algebra();
	const std::size_t n = b.hopf().dim();
	if (!f.is_prime_field())
		throw Error("stability scan needs a prime field");
	std::vector<Matrix> maps;
	for (std::size_t p = 0; p < n; ++p)
		maps.push_back(B.right_mult(b.ustar(unit_vec(n, p))));
	for (const auto &m : b.rh_ops())
		maps.push_back(m);
	Matrix iota = b.iota_matrix();
	auto stable = enumerate_stable_subspaces(f, B.dim(), maps, bound);
	std::set<std::string> seen;
	for (std::size_t i = 0; i < stable.size(); ++i) {
		Subspace w = preimage(iota, stable[i]);
		if (b.tensor_with_dual(w) != stable[i])
			r.result.fail("stable subspace " + std::to_string(i) + " is not of the form W (x) H*");
		seen.insert(subspace_key(w));
	}
	r.stable_found = stable.size();
	r.expected = subspace_count(static_cast<std::uint64_t>(f.p()), b.base().dim());
	if (r.stable_found != r.expected)
		r.result.fail("found " + std::to_string(r.stable_found) + " stable subspaces, expected " +
		              std::to_string(r.expected));
	if (seen.size() != stable.size())
		r.result.fail("two stable subspaces share the same W");
	for (const auto &w : enumerate_stable_subspaces(f, b.base().dim(), b.action().ops(), bound)) {
		Subspace v = b.tensor_with_dual(w);
		if (image(b.phi_matrix(), v) != v || image(b.psi_matrix(), v) != v)
			r.phi_psi.fail("H-stable W = " + subspace_key(w));
	}
	return r;
}

} // namespace hopfact
