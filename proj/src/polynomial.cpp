#include "hopfact/polynomial.hpp"

#include <algorithm>
#include <functional>

namespace hopfact {

void poly_trim(Poly &a)
{
	while (!a.empty() && a.back() == 0)
		a.pop_back();
}

long poly_degree(const Poly &a)
{
	for (std::size_t i = a.size(); i-- > 0;)
		if (a[i] != 0)
			return static_cast<long>(i);
	return -1;
}

Poly poly_add(const Field &f, const Poly &a, const Poly &b)
{
	Poly c(std::max(a.size(), b.size()));
	for (std::size_t i = 0; i < c.size(); ++i)
		c[i] = f.add(i < a.size() ? a[i] : Scalar(0), i < b.size() ? b[i] : Scalar(0));
	poly_trim(c);
	return c;
}

Poly poly_sub(const Field &f, const Poly &a, const Poly &b)
{
	Poly c(std::max(a.size(), b.size()));
	for (std::size_t i = 0; i < c.size(); ++i)
		c[i] = f.sub(i < a.size() ? a[i] : Scalar(0), i < b.size() ? b[i] : Scalar(0));
	poly_trim(c);
	return c;
}

Poly poly_mul(const Field &f, const Poly &a, const Poly &b)
{
	if (a.empty() || b.empty())
		return {};
	Poly c(a.size() + b.size() - 1);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			c[i + j] += a[i] * b[j];
	for (auto &x : c)
		x = f.reduce(x);
	poly_trim(c);
	return c;
}

std::pair<Poly, Poly> poly_divmod(const Field &f, const Poly &a, const Poly &b)
{
	Poly r = a, d = b;
	poly_trim(r);
	poly_trim(d);
	if (d.empty())
		throw Error("polynomial division by zero");
	const long db = poly_degree(d);
	const Scalar lead_inv = f.inv(d.back());
	Poly q;
	if (poly_degree(r) >= db)
		q.assign(static_cast<std::size_t>(poly_degree(r) - db + 1), Scalar(0));
	while (poly_degree(r) >= db) {
		const std::size_t shift = static_cast<std::size_t>(poly_degree(r) - db);
		const Scalar c = f.mul(r.back(), lead_inv);
		q[shift] = c;
		for (std::size_t i = 0; i < d.size(); ++i)
			r[i + shift] = f.sub(r[i + shift], f.mul(c, d[i]));
		poly_trim(r);
	}
	poly_trim(q);
	return {q, r};
}

Poly poly_mod(const Field &f, const Poly &a, const Poly &b) { return poly_divmod(f, a, b).second; }

Poly poly_monic(const Field &f, const Poly &a)
{
	Poly c = a;
	poly_trim(c);
	if (c.empty())
		return c;
	const Scalar inv = f.inv(c.back());
	for (auto &x : c)
		x = f.mul(x, inv);
	return c;
}

Poly poly_gcd(const Field &f, const Poly &a, const Poly &b) { return poly_ext_gcd(f, a, b).g; }

ExtGcd poly_ext_gcd(const Field &f, const Poly &a, const Poly &b)
{
	Poly r0 = a, r1 = b, s0{Scalar(1)}, s1, t0, t1{Scalar(1)};
	poly_trim(r0);
	poly_trim(r1);
	while (!r1.empty()) {
		auto [q, r] = poly_divmod(f, r0, r1);
		Poly s2 = poly_sub(f, s0, poly_mul(f, q, s1));
		Poly t2 = poly_sub(f, t0, poly_mul(f, q, t1));
		r0 = std::move(r1);
		r1 = std::move(r);
		s0 = std::move(s1);
		s1 = std::move(s2);
		t0 = std::move(t1);
		t1 = std::move(t2);
	}
	if (r0.empty())
		return {{}, {}, {}};
	const Scalar inv = f.inv(r0.back());
	Poly one{inv};
	return {poly_mul(f, r0, one), poly_mul(f, s0, one), poly_mul(f, t0, one)};
}

Poly poly_derivative(const Field &f, const Poly &a)
{
	Poly d;
	for (std::size_t i = 1; i < a.size(); ++i)
		d.push_back(f.mul(a[i], f.from_int(static_cast<long>(i))));
	poly_trim(d);
	return d;
}

Scalar poly_eval(const Field &f, const Poly &a, const Scalar &x)
{
	Scalar acc(0);
	for (std::size_t i = a.size(); i-- > 0;)
		acc = f.add(f.mul(acc, x), a[i]);
	return acc;
}

std::string poly_format(const Field &f, const Poly &a, const std::string &var)
{
	std::string out;
	for (std::size_t i = a.size(); i-- > 0;) {
		if (a[i] == 0)
			continue;
		std::string c = f.format(a[i]);
		bool neg = f.is_rationals() && a[i] < 0;
		if (neg)
			c = f.format(-a[i]);
		if (!out.empty())
			out += neg ? " - " : " + ";
		else if (neg)
			out += "-";
		std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
		if (mono.empty())
			out += c;
		else if (c == "1")
			out += mono;
		else
			out += c + "*" + mono;
	}
	return out.empty() ? "0" : out;
}

Vec poly_eval_element(const FiniteAlgebra &alg, const Poly &p, const Vec &z)
{
	Vec acc = alg.zero();
	for (std::size_t i = p.size(); i-- > 0;) {
		acc = alg.multiply(acc, z);
		axpy(alg.field(), acc, p[i], alg.unit());
	}
	return acc;
}

Poly minimal_polynomial(const FiniteAlgebra &alg, const Vec &z)
{
	const Field &f = alg.field();
	std::vector<Vec> powers{alg.unit()};
	for (std::size_t d = 1; d <= alg.dim() + 1; ++d) {
		Vec next = alg.multiply(powers.back(), z);
		auto c = solve(Matrix::from_columns(f, alg.dim(), powers), next);
		if (c) {
			Poly m(d + 1);
			for (std::size_t i = 0; i < d; ++i)
				m[i] = f.neg((*c)[i]);
			m[d] = 1;
			return m;
		}
		powers.push_back(std::move(next));
	}
	throw Error("minimal polynomial: no dependency found (inconsistent algebra)");
}

std::vector<Poly> berlekamp(const Field &f, const Poly &a)
{
	if (!f.is_prime_field())
		throw Error("berlekamp needs a prime field");
	Poly u = poly_monic(f, a);
	const long n = poly_degree(u);
	if (n <= 1)
		return n == 1 ? std::vector<Poly>{u} : std::vector<Poly>{};
	const std::size_t nn = static_cast<std::size_t>(n);
	// column i of Q holds x^(i p) mod u
	Poly xp{Scalar(1)};
	{
		Poly x{Scalar(0), Scalar(1)};
		for (long e = 0; e < f.p(); ++e)
			xp = poly_mod(f, poly_mul(f, xp, x), u);
	}
	Matrix q(f, nn, nn);
	Poly cur{Scalar(1)};
	for (std::size_t i = 0; i < nn; ++i) {
		for (std::size_t k = 0; k < cur.size(); ++k)
			q(k, i) = cur[k];
		cur = poly_mod(f, poly_mul(f, cur, xp), u);
	}
	Subspace fixed = kernel(q - Matrix::identity(f, nn));
	const std::size_t r = fixed.dim();
	std::vector<Poly> factors{u};
	for (const auto &v : fixed.vectors()) {
		if (factors.size() == r)
			break;
		Poly vp = v;
		poly_trim(vp);
		if (poly_degree(vp) < 1)
			continue;
		std::vector<Poly> next;
		for (const auto &w : factors) {
			Poly rest = w;
			for (long s = 0; s < f.p() && poly_degree(rest) > 0; ++s) {
				Poly shifted = vp;
				shifted[0] = f.sub(shifted[0], Scalar(s));
				Poly g = poly_gcd(f, rest, shifted);
				if (poly_degree(g) > 0 && poly_degree(g) < poly_degree(rest)) {
					next.push_back(g);
					rest = poly_divmod(f, rest, g).first;
				} else if (poly_degree(g) == poly_degree(rest)) {
					break;
				}
			}
			if (poly_degree(rest) > 0)
				next.push_back(poly_monic(f, rest));
		}
		factors = std::move(next);
	}
	return factors;
}

// ---- factoring over Q -------------------------------------------------------

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly &a)
{
	while (!a.empty() && a.back() == 0)
		a.pop_back();
}

ZPoly zmul(const ZPoly &a, const ZPoly &b)
{
	if (a.empty() || b.empty())
		return {};
	ZPoly c(a.size() + b.size() - 1);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			c[i + j] += a[i] * b[j];
	ztrim(c);
	return c;
}

mpz_class sym_mod(const mpz_class &x, const mpz_class &m)
{
	mpz_class r;
	mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
	if (2 * r > m)
		r -= m;
	return r;
}

ZPoly zmod(const ZPoly &a, const mpz_class &m)
{
	ZPoly c(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		c[i] = sym_mod(a[i], m);
	ztrim(c);
	return c;
}

Poly to_field(const Field &f, const ZPoly &a)
{
	Poly c;
	for (const auto &x : a)
		c.push_back(f.reduce(Scalar(x)));
	poly_trim(c);
	return c;
}

ZPoly from_field(const Poly &a)
{
	ZPoly c;
	for (const auto &x : a)
		c.push_back(x.get_num());
	ztrim(c);
	return c;
}

/// Exact division by a monic integer polynomial; nullopt when it leaves a remainder.
std::optional<ZPoly> zdiv_monic(const ZPoly &a, const ZPoly &b)
{
	ZPoly r = a;
	ztrim(r);
	const std::size_t db = b.size() - 1;
	if (r.size() < b.size())
		return r.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
	ZPoly q(r.size() - db);
	while (r.size() >= b.size()) {
		const std::size_t shift = r.size() - b.size();
		const mpz_class c = r.back();
		q[shift] = c;
		for (std::size_t i = 0; i < b.size(); ++i)
			r[i + shift] -= c * b[i];
		ztrim(r);
	}
	if (!r.empty())
		return std::nullopt;
	ztrim(q);
	return q;
}

/// Lifts F = g h (mod p), both monic, to F = G H (mod p^k).
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly &F, const Field &fp, const Poly &g, const Poly &h, unsigned k)
{
	const ExtGcd eg = poly_ext_gcd(fp, g, h);
	if (poly_degree(eg.g) != 0)
		throw Error("hensel lifting: factors are not coprime mod p");
	const mpz_class p(fp.p());
	ZPoly G = from_field(g), H = from_field(h);
	mpz_class m = p;
	for (unsigned j = 1; j < k; ++j) {
		ZPoly diff = F;
		ZPoly gh = zmul(G, H);
		diff.resize(std::max(diff.size(), gh.size()));
		for (std::size_t i = 0; i < gh.size(); ++i)
			diff[i] -= gh[i];
		ztrim(diff);
		ZPoly e;
		for (auto &c : diff) {
			mpz_class qv;
			mpz_divexact(qv.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
			e.push_back(qv);
		}
		Poly ep = to_field(fp, e);
		auto [q, a] = poly_divmod(fp, poly_mul(fp, eg.t, ep), g);
		Poly b = poly_add(fp, poly_mul(fp, eg.s, ep), poly_mul(fp, q, h));
		ZPoly A = from_field(a), B = from_field(b);
		G.resize(std::max(G.size(), A.size()));
		H.resize(std::max(H.size(), B.size()));
		for (std::size_t i = 0; i < A.size(); ++i)
			G[i] += m * A[i];
		for (std::size_t i = 0; i < B.size(); ++i)
			H[i] += m * B[i];
		m *= p;
		G = zmod(G, m);
		H = zmod(H, m);
	}
	return {G, H};
}

std::vector<ZPoly> hensel_multi(const ZPoly &F, const Field &fp, const std::vector<Poly> &factors, unsigned k)
{
	if (factors.size() == 1) {
		mpz_class m = 1;
		for (unsigned j = 0; j < k; ++j)
			m *= fp.p();
		return {zmod(F, m)};
	}
	Poly rest{Scalar(1)};
	for (std::size_t i = 1; i < factors.size(); ++i)
		rest = poly_mul(fp, rest, factors[i]);
	auto [G, H] = hensel_pair(F, fp, factors[0], rest, k);
	std::vector<Poly> tail(factors.begin() + 1, factors.end());
	auto lifted = hensel_multi(H, fp, tail, k);
	lifted.insert(lifted.begin(), G);
	return lifted;
}

std::vector<ZPoly> zassenhaus_monic(const ZPoly &F)
{
	const std::size_t n = F.size() - 1;
	if (n <= 1)
		return {F};
	// a prime keeping F squarefree
	Field fp;
	for (long p = 3;; p += 2) {
		if (!is_prime_number(p))
			continue;
		if (p > 100000)
			throw Unsupported("no suitable prime for factoring");
		Field cand = Field::prime(p);
		Poly fm = to_field(cand, F);
		if (poly_degree(poly_gcd(cand, fm, poly_derivative(cand, fm))) == 0) {
			fp = cand;
			break;
		}
	}
	auto modp = berlekamp(fp, to_field(fp, F));
	if (modp.size() == 1)
		return {F};
	mpz_class maxc = 0;
	for (const auto &c : F)
		maxc = std::max(maxc, mpz_class(abs(c)));
	mpz_class bound = maxc * mpz_class(static_cast<unsigned long>(n + 1));
	bound <<= static_cast<mp_bitcnt_t>(n);
	bound *= 2;
	unsigned k = 1;
	mpz_class m = fp.p();
	while (m <= bound) {
		m *= fp.p();
		++k;
	}
	auto lifted = hensel_multi(F, fp, modp, k);

	std::vector<ZPoly> found;
	ZPoly cur = F;
	std::vector<ZPoly> pool = lifted;
	for (std::size_t s = 1; 2 * s <= pool.size();) {
		bool hit = false;
		std::vector<std::size_t> idx(s);
		std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t depth, std::size_t start) -> bool {
			if (depth == s) {
				ZPoly g{1};
				for (auto i : idx)
					g = zmod(zmul(g, pool[i]), m);
				auto q = zdiv_monic(cur, g);
				if (!q)
					return false;
				found.push_back(g);
				cur = *q;
				std::vector<ZPoly> next;
				for (std::size_t i = 0; i < pool.size(); ++i)
					if (std::find(idx.begin(), idx.end(), i) == idx.end())
						next.push_back(pool[i]);
				pool = std::move(next);
				return true;
			}
			for (std::size_t i = start; i < pool.size(); ++i) {
				idx[depth] = i;
				if (pick(depth + 1, i + 1))
					return true;
			}
			return false;
		};
		hit = pick(0, 0);
		if (!hit)
			++s;
	}
	if (cur.size() > 1)
		found.push_back(cur);
	return found;
}

} // namespace

std::vector<Poly> factor_rational(const Poly &a)
{
	const Field q = Field::rationals();
	Poly f = poly_monic(q, a);
	if (poly_degree(f) < 1)
		return {};
	// squarefree part
	Poly g = poly_gcd(q, f, poly_derivative(q, f));
	if (poly_degree(g) > 0)
		f = poly_monic(q, poly_divmod(q, f, g).first);
	const std::size_t n = f.size() - 1;
	if (n == 1)
		return {f};
	// clear denominators, then make monic over Z: F(x) = c^(n-1) f0(x / c)
	mpz_class den = 1;
	for (const auto &c : f)
		mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
	ZPoly f0;
	for (const auto &c : f)
		f0.push_back(mpz_class(c * den));
	const mpz_class lc = f0.back();
	ZPoly F(n + 1);
	mpz_class power = 1;
	for (std::size_t i = n + 1; i-- > 0;) {
		if (i == n) {
			F[i] = 1;
			continue;
		}
		F[i] = f0[i] * power;
		power *= lc;
	}
	std::vector<Poly> out;
	for (const auto &G : zassenhaus_monic(F)) {
		// undo the substitution: G(lc x), then normalize
		Poly back;
		mpz_class pw = 1;
		for (const auto &c : G) {
			back.push_back(Scalar(c * pw));
			pw *= lc;
		}
		out.push_back(poly_monic(q, back));
	}
	return out;
}

} // namespace hopfact
