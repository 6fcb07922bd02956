#include "hopfact/ideal.hpp"
#include "hopfact/polynomial.hpp"

#include <map>
#include <set>

namespace hopfact {

namespace {

std::vector<Matrix> multiplication_ops(const FiniteAlgebra &a)
{
	std::vector<Matrix> ops;
	for (std::size_t i = 0; i < a.dim(); ++i) {
		ops.push_back(a.left_mult(a.basis(i)));
		ops.push_back(a.right_mult(a.basis(i)));
	}
	return ops;
}

// Smallest subspace containing gens and stable under every map.
Subspace closure(const Field &f, std::size_t n, const std::vector<Vec> &gens, const std::vector<Matrix> &maps)
{
	Subspace s = Subspace::span(f, n, gens);
	std::vector<Vec> frontier = s.vectors();
	while (!frontier.empty()) {
		std::vector<Vec> next;
		for (const auto &v : frontier)
			for (const auto &m : maps) {
				Vec w = m.apply(v);
				if (!s.contains(w)) {
					s = Subspace::span(f, n, [&] {
						auto b = s.vectors();
						b.push_back(w);
						return b;
					}());
					next.push_back(std::move(w));
				}
			}
		frontier = std::move(next);
	}
	return s;
}


bool nilpotent_ideal(const FiniteAlgebra &a, const Subspace &i)
{
	Subspace p = i;
	for (std::size_t k = 0; k <= a.dim() && !p.is_zero(); ++k)
		p = ideal_product(a, p, i);
	return p.is_zero();
}

Vec frobenius(const FiniteAlgebra &a, const Vec &x, long times)
{
	Vec y = x;
	for (long t = 0; t < times; ++t) {
		Vec z = a.unit();
		for (long e = 0; e < a.field().p(); ++e)
			z = a.multiply(z, y);
		y = std::move(z);
	}
	return y;
}

Subspace trace_form_kernel(const FiniteAlgebra &a)
{
	const std::size_t n = a.dim();
	std::vector<Scalar> tr(n);
	for (std::size_t i = 0; i < n; ++i) {
		Scalar t = 0;
		for (std::size_t k = 0; k < n; ++k)
			t = a.field().add(t, a.constant(i, k, k));
		tr[i] = t;
	}
	// row j: x -> tr(L_{x e_j}) = sum_i x_i sum_k c_{ij}^k tr(e_k)
	Matrix m(a.field(), n, n);
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t i = 0; i < n; ++i) {
			Scalar s = 0;
			for (const auto &t : a.product(i, j))
				s = a.field().add(s, a.field().mul(t.coeff, tr[t.index]));
			m(j, i) = s;
		}
	return kernel(m);
}

Subspace ideal_image(const FiniteAlgebra &a, const Vec &x)
{
	return image(a.left_mult(x), Subspace::full(a.field(), a.dim()));
}

} // namespace

Subspace ideal_generate(const FiniteAlgebra &a, const std::vector<Vec> &gens)
{
	const std::size_t n = a.dim();
	std::vector<Vec> span;
	for (const auto &x : gens) {
		for (std::size_t i = 0; i < n; ++i) {
			Vec ex = a.multiply(a.basis(i), x);
			for (std::size_t j = 0; j < n; ++j)
				span.push_back(a.multiply(ex, a.basis(j)));
		}
	}
	return Subspace::span(a.field(), n, span);
}

Subspace ideal_product(const FiniteAlgebra &a, const Subspace &i, const Subspace &j)
{
	std::vector<Vec> span;
	auto iv = i.vectors(), jv = j.vectors();
	for (const auto &x : iv)
		for (const auto &y : jv)
			span.push_back(a.multiply(x, y));
	return ideal_generate(a, span);
}

void require_ideal(const FiniteAlgebra &a, const Subspace &s, const std::string &what)
{
	if (s.ambient() != a.dim())
		throw Error(what + ": subspace lives in dimension " + std::to_string(s.ambient()) +
		            ", algebra has dimension " + std::to_string(a.dim()));
	if (!is_two_sided_ideal(a, s))
		throw Error(what + " is not a two-sided ideal");
}

bool is_h_stable(const ModuleAlgebraAction &act, const Subspace &s)
{
	for (const auto &m : act.ops())
		if (!s.contains(image(m, s)))
			return false;
	return true;
}

Subspace h_ideal_generate(const ModuleAlgebraAction &act, const std::vector<Vec> &gens)
{
	auto maps = multiplication_ops(act.algebra());
	maps.insert(maps.end(), act.ops().begin(), act.ops().end());
	return closure(act.field(), act.algebra().dim(), gens, maps);
}

std::vector<Subspace> enumerate_ideals(const FiniteAlgebra &a, std::uint64_t bound)
{
	return enumerate_stable_subspaces(a.field(), a.dim(), multiplication_ops(a), bound);
}

std::vector<Subspace> enumerate_h_ideals(const ModuleAlgebraAction &act, std::uint64_t bound)
{
	auto maps = multiplication_ops(act.algebra());
	maps.insert(maps.end(), act.ops().begin(), act.ops().end());
	return enumerate_stable_subspaces(act.field(), act.algebra().dim(), maps, bound);
}

Subspace core(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	Subspace c = Subspace::full(act.field(), act.algebra().dim());
	for (const auto &m : act.ops())
		c = subspace_intersect(c, preimage(m, ideal));
	return c;
}


Subspace core_via_psi(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	ConvolutionAlgebra b(act);
	Subspace transported = image(b.psi_matrix(), b.tensor_with_dual(ideal));
	return preimage(b.iota_matrix(), transported);
}

Subspace group_core(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	if (!is_group_algebra(act.hopf()))
		throw Error("group core needs a group algebra");
	Subspace c = Subspace::full(act.field(), act.algebra().dim());
	for (const auto &m : act.ops())
		c = subspace_intersect(c, image(m, ideal));
	return c;
}

RadicalMethod radical_method(const FiniteAlgebra &a)
{
	const long p = a.field().characteristic();
	if (p == 0 || static_cast<std::size_t>(p) > a.dim())
		return RadicalMethod::trace_form;
	return RadicalMethod::frobenius;
}

Subspace radical(const FiniteAlgebra &a)
{
	const Field &f = a.field();
	const std::size_t n = a.dim();
	if (radical_method(a) == RadicalMethod::trace_form)
		return trace_form_kernel(a);
	// Small characteristic.  The trace-form kernel always contains the
	// radical, so it is the radical as soon as it is nilpotent.
	Subspace t = trace_form_kernel(a);
	if (nilpotent_ideal(a, t))
		return t;
	if (a.is_commutative()) {
		// x -> x^(p^k) is additive and F_p-linear; p^k >= n kills the nilradical
		long k = 0;
		for (std::uint64_t q = 1; q < n; q *= static_cast<std::uint64_t>(f.p()))
			++k;
		Matrix m(f, n, n);
		for (std::size_t j = 0; j < n; ++j)
			m.set_column(j, frobenius(a, a.basis(j), k));
		return kernel(m);
	}
	// Noncommutative: the intersection of the maximal ideals, found by
	// enumerating the ideal lattice when it is small enough.
	double size = 1;
	for (std::size_t i = 0; i < n; ++i)
		size *= static_cast<double>(f.p());
	if (size > static_cast<double>(default_enumeration_bound()))
		throw Unsupported("radical of a noncommutative algebra of dimension " + std::to_string(n) +
		                  " in characteristic " + std::to_string(f.p()) +
		                  " is beyond the enumeration bound");
	auto ideals = enumerate_ideals(a);
	Subspace rad = Subspace::full(f, n);
	for (const auto &i : ideals) {
		if (i.is_full())
			continue;
		bool maximal = true;
		for (const auto &j : ideals)
			if (!j.is_full() && j.dim() > i.dim() && j.contains(i)) {
				maximal = false;
				break;
			}
		if (maximal)
			rad = subspace_intersect(rad, i);
	}
	return rad;
}

Subspace radical_of(const FiniteAlgebra &a, const Subspace &ideal)
{
	require_ideal(a, ideal);
	if (ideal.is_full())
		return ideal;
	Quotient q = quotient(a, ideal);
	return q.pull_back(radical(q.algebra));
}

bool is_semiprime(const FiniteAlgebra &a, const Subspace &ideal) { return radical_of(a, ideal) == ideal; }

std::vector<Vec> primitive_idempotents(const FiniteAlgebra &z)
{
	const Field &f = z.field();
	const std::size_t n = z.dim();
	if (!z.is_commutative())
		throw Error("primitive idempotents: algebra is not commutative");
	if (n == 0)
		return {};
	if (n == 1)
		return {z.unit()};
	if (f.is_prime_field()) {
		// The Frobenius-fixed subalgebra is a product of copies of F_p; its
		// basis separates the blocks, so cutting along each coordinate
		// value e (1 - (w - s)^(p-1)) ends at the primitive idempotents.
		Matrix fm(f, n, n);
		for (std::size_t j = 0; j < n; ++j)
			fm.set_column(j, frobenius(z, z.basis(j), 1));
		auto split = kernel(fm - Matrix::identity(f, n)).vectors();
		std::vector<Vec> ids{z.unit()};
		for (const auto &w : split) {
			std::vector<Vec> next;
			for (const auto &e : ids)
				for (long s = 0; s < f.p(); ++s) {
					Vec d = sub(f, w, scale(f, f.from_int(s), z.unit()));
					Vec pw = z.unit();
					for (long k = 0; k < f.p() - 1; ++k)
						pw = z.multiply(pw, d);
					Vec piece = z.multiply(e, sub(f, z.unit(), pw));
					if (!is_zero(piece))
						next.push_back(std::move(piece));
				}
			ids = std::move(next);
		}
		return ids;
	}
	// Over Q a commutative semisimple algebra is a product of number fields
	// and has a primitive element; split its minimal polynomial.
	Vec prim;
	Poly m;
	for (long t = 1; t <= static_cast<long>(8 * n + 32); ++t) {
		Vec zt(n);
		Scalar c = 1;
		for (std::size_t i = 0; i < n; ++i) {
			zt[i] = c;
			c *= t;
		}
		Poly mt = minimal_polynomial(z, zt);
		if (static_cast<std::size_t>(poly_degree(mt)) == n) {
			prim = std::move(zt);
			m = std::move(mt);
			break;
		}
	}
	if (prim.empty())
		throw Error("primitive idempotents: no primitive element found; algebra is not semisimple");
	auto factors = factor_rational(m);
	std::vector<Vec> ids;
	for (const auto &g : factors) {
		Poly h = poly_divmod(f, m, g).first;
		ExtGcd e = poly_ext_gcd(f, h, g);
		if (poly_degree(e.g) != 0)
			throw Error("primitive idempotents: minimal polynomial is not squarefree");
		ids.push_back(poly_eval_element(z, poly_mul(f, e.s, h), prim));
	}
	return ids;
}

namespace {

struct Blocks {
	Quotient semisimple; // A -> A/rad
	std::vector<Vec> central;     // central primitive idempotents in A/rad
	std::vector<std::size_t> heart_dims;
};

Blocks central_blocks(const FiniteAlgebra &a)
{
	Blocks b;
	b.semisimple = quotient(a, radical(a));
	const FiniteAlgebra &s = b.semisimple.algebra;
	Subalgebra z = subalgebra(s, center(s));
	for (const auto &e : primitive_idempotents(z.algebra)) {
		Vec es = z.include(e);
		b.central.push_back(es);
		b.heart_dims.push_back(rank(z.algebra.left_mult(e)));
	}
	return b;
}

} // namespace

std::vector<SpectrumEntry> spectrum(const FiniteAlgebra &a)
{
	if (a.dim() == 0)
		return {};
	Blocks b = central_blocks(a);
	const FiniteAlgebra &s = b.semisimple.algebra;
	std::vector<SpectrumEntry> out;
	for (std::size_t k = 0; k < b.central.size(); ++k) {
		const Vec &e = b.central[k];
		Vec rest = sub(s.field(), s.unit(), e);
		SpectrumEntry entry;
		entry.prime = b.semisimple.pull_back(ideal_image(s, rest));
		entry.simple_quotient_dim = rank(s.left_mult(e));
		entry.heart_dim = b.heart_dims[k];
		entry.inert = entry.heart_dim > 1;
		out.push_back(std::move(entry));
	}
	return out;
}

bool is_prime(const FiniteAlgebra &a, const Subspace &ideal)
{
	require_ideal(a, ideal);
	if (ideal.is_full())
		return false;
	Quotient q = quotient(a, ideal);
	if (!radical(q.algebra).is_zero())
		return false;
	return spectrum(q.algebra).size() == 1;
}

bool is_completely_prime(const FiniteAlgebra &a, const Subspace &ideal)
{
	if (!is_prime(a, ideal))
		return false;
	Quotient q = quotient(a, ideal);
	const FiniteAlgebra &s = q.algebra;
	// a simple algebra is a domain iff it is a division algebra
	if (s.is_commutative())
		return true;
	if (s.field().is_prime_field())
		return false; // finite division rings are commutative
	for (std::size_t i = 0; i < s.dim(); ++i)
		if (rank(s.left_mult(s.basis(i))) < s.dim())
			return false;
	throw Unsupported("cannot decide whether a noncommutative simple algebra over Q is a division algebra");
}

Heart heart(const FiniteAlgebra &a, const Subspace &prime)
{
	if (!is_prime(a, prime))
		throw Error("heart: the ideal is not prime");
	Quotient q = quotient(a, prime);
	return {a.field(), center(q.algebra).dim()};
}

std::vector<Subspace> semiprime_ideals(const FiniteAlgebra &a)
{
	auto spec = spectrum(a);
	if (spec.size() > 16)
		throw Unsupported("too many primes to list every semiprime ideal");
	std::vector<Subspace> out;
	std::set<std::string> seen;
	for (std::size_t mask = 0; mask < (std::size_t(1) << spec.size()); ++mask) {
		Subspace s = Subspace::full(a.field(), a.dim());
		for (std::size_t k = 0; k < spec.size(); ++k)
			if (mask >> k & 1)
				s = subspace_intersect(s, spec[k].prime);
		if (seen.insert(subspace_key(s)).second)
			out.push_back(std::move(s));
	}
	return out;
}

Strata strata(const ModuleAlgebraAction &act)
{
	Strata out;
	out.spectrum = spectrum(act.algebra());
	std::map<std::string, std::size_t> where;
	for (std::size_t k = 0; k < out.spectrum.size(); ++k) {
		Subspace c = core(act, out.spectrum[k].prime);
		auto [it, fresh] = where.emplace(subspace_key(c), out.strata.size());
		if (fresh) {
			Stratum s;
			s.core = c;
			s.core_is_prime = is_prime(act.algebra(), c);
			out.strata.push_back(std::move(s));
		}
		out.strata[it->second].primes.push_back(k);
	}
	return out;
}

ModuleAlgebraAction quotient_action(const ModuleAlgebraAction &act, const Quotient &q)
{
	if (!is_h_stable(act, q.kernel))
		throw Error("the ideal is not H-stable, so H does not act on the quotient");
	std::vector<Matrix> ops;
	for (const auto &m : act.ops())
		ops.push_back(q.projection * m * q.section);
	std::string name = act.name().empty() ? std::string() : act.name() + "/I";
	return ModuleAlgebraAction(act.hopf(), q.algebra, std::move(ops), name);
}

StratumAlgebra stratum_algebra(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	const FiniteAlgebra &a = act.algebra();
	require_ideal(a, ideal);
	if (ideal.is_full())
		throw Undefined("stratum algebra: I = A");
	if (!is_h_stable(act, ideal))
		throw Error("stratum algebra: I is not an H-ideal");
	if (!is_semiprime(a, ideal))
		throw Undefined("stratum algebra: A/I is not semiprime, so its center is not the heart the "
		            "construction needs (I must be an H-prime)");
	Quotient q = quotient(a, ideal);
	ModuleAlgebraAction qa = quotient_action(act, q);
	Subalgebra z = subalgebra(q.algebra, center(q.algebra));
	if (!is_h_stable(qa, z.space))
		throw Undefined("stratum algebra: the center of A/I is not H-stable");
	std::vector<Matrix> zops;
	for (const auto &m : qa.ops()) {
		Matrix r(act.field(), z.algebra.dim(), z.algebra.dim());
		for (std::size_t j = 0; j < z.algebra.dim(); ++j)
			r.set_column(j, z.coordinates(m.apply(z.include(z.algebra.basis(j)))));
		zops.push_back(std::move(r));
	}
	ModuleAlgebraAction za(act.hopf(), z.algebra, std::move(zops), "Z(A/I)");
	ConvolutionAlgebra c(za);
	auto dot = c.dot_action();
	std::vector<Subspace> hp;
	std::set<std::string> seen;
	for (const auto &e : spectrum(c.algebra())) {
		Subspace k = core(dot, e.prime);
		if (seen.insert(subspace_key(k)).second)
			hp.push_back(std::move(k));
	}
	return StratumAlgebra{std::move(q), std::move(z), std::move(za), std::move(c), std::move(hp)};
}

bool StratBijection::passed() const
{
	for (const auto &c : checks)
		if (!c.passed)
			return false;
	return true;
}

StratBijection verify_strat_bijection(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	const FiniteAlgebra &a = act.algebra();
	const Field &f = a.field();
	const std::size_t n = act.hopf().dim();
	StratumAlgebra sa = stratum_algebra(act, ideal);
	ConvolutionAlgebra full(act);
	ConvolutionAlgebra onq(quotient_action(act, sa.quotient));

	StratBijection out;
	out.h_prime_count = sa.h_primes.size();
	std::vector<Subspace> primes;
	for (const auto &e : spectrum(a))
		if (core(act, e.prime) == ideal)
			primes.push_back(e.prime);
	out.stratum_size = primes.size();

	CheckResult coeff("P:H = iota^{-1}(Psi(P (x) H*))");
	CheckResult transfer("Psi(P (x) H*) is prime when P (x) H* is");
	CheckResult lands("c(P) is an H-prime of C_I");
	CheckResult order("c(P) <= c(P') iff P <= P'");
	CheckResult hearts("dim C_I/c(P) = dim Z((A/P) (x) H*)");
	CheckResult empty("stratum is nonempty");
	if (primes.empty())
		empty.fail("no prime has core I");

	// C_I = Z(A/I) (x) H* sits inside (A/I) (x) H* through incl (x) id
	const std::size_t dz = sa.center.algebra.dim(), dq = sa.quotient.algebra.dim();
	Matrix embed(f, dq * n, dz * n);
	for (std::size_t s = 0; s < dz; ++s)
		for (std::size_t p = 0; p < n; ++p)
			for (std::size_t r = 0; r < dq; ++r)
				embed(r * n + p, s * n + p) = sa.center.inclusion(r, s);

	std::vector<Subspace> images;
	for (std::size_t k = 0; k < primes.size(); ++k) {
		const Subspace &p = primes[k];
		const std::string tag = "P" + std::to_string(k);
		Subspace tensored = full.tensor_with_dual(p);
		Subspace pp = image(full.psi_matrix(), tensored);
		if (preimage(full.iota_matrix(), pp) != core(act, p))
			coeff.fail(tag);
		if (is_prime(full.algebra(), tensored) && !is_prime(full.algebra(), pp))
			transfer.fail(tag);

		Subspace pbar = sa.quotient.push_forward(p);
		Subspace c = preimage(embed, image(onq.psi_matrix(), onq.tensor_with_dual(pbar)));
		bool found = false;
		for (const auto &h : sa.h_primes)
			found = found || h == c;
		if (!found)
			lands.fail(tag);
		images.push_back(c);

		Quotient ap = quotient(a, p);
		FiniteAlgebra target = tensor_algebra_prod(ap.algebra, full.dual().algebra());
		out.heart_dims.push_back(c.ambient() - c.dim());
		out.target_dims.push_back(center(target).dim());
		if (out.heart_dims.back() != out.target_dims.back())
			hearts.fail(tag + ": " + std::to_string(out.heart_dims.back()) + " vs " +
			            std::to_string(out.target_dims.back()));
	}
	for (std::size_t i = 0; i < primes.size(); ++i)
		for (std::size_t j = 0; j < primes.size(); ++j)
			if (images[j].contains(images[i]) != primes[j].contains(primes[i]))
				order.fail("P" + std::to_string(i) + ", P" + std::to_string(j));

	out.checks = {empty, coeff, transfer, lands, order, hearts};
	if (!out.passed())
		out.status = "failed";
	else if (primes.size() == sa.h_primes.size())
		out.status = "bijection verified";
	else
		out.status = "injective only";
	return out;
}

CheckResult reformulation_check(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	const FiniteAlgebra &a = act.algebra();
	require_ideal(a, ideal);
	CheckResult res("H.sqrt(I) lies in sqrt(H.I)");
	Subspace root = radical_of(a, ideal);
	Subspace hi = h_ideal_generate(act, ideal.vectors());
	Subspace root_hi = radical_of(a, hi);
	for (std::size_t i = 0; i < act.ops().size(); ++i)
		if (!root_hi.contains(image(act.op(i), root)))
			res.fail("h" + std::to_string(i));
	return res;
}

SemiprimeCoreResult semiprime_core_check(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	const FiniteAlgebra &a = act.algebra();
	if (!is_semiprime(a, ideal))
		throw Error("semiprime core check: the ideal is not semiprime");
	SemiprimeCoreResult r;
	r.core = core(act, ideal);
	r.core_semiprime = is_semiprime(a, r.core);
	r.characteristic_zero = a.field().characteristic() == 0;
	r.cocommutative = is_cocommutative(act.hopf());
	if (r.core_semiprime)
		r.status = "pass";
	else if (r.characteristic_zero && r.cocommutative)
		r.status = "fail";
	else
		r.status = "counterexample";
	return r;
}

} // namespace hopfact
