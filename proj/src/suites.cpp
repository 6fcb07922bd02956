#include "hopfact/suites.hpp"

#include <chrono>
#include <set>

namespace hopfact {

namespace {

std::string violation_line(const Violation &v)
{
	std::string s = v.rule;
	if (!v.witness.empty()) {
		s += " at (";
		for (std::size_t i = 0; i < v.witness.size(); ++i)
			s += (i ? "," : "") + std::to_string(v.witness[i]);
		s += ")";
	}
	return s;
}

bool enumerable(const Field &f, std::size_t n, std::uint64_t bound)
{
	if (!f.is_prime_field())
		return false;
	std::uint64_t total = 1;
	for (std::size_t i = 0; i < n; ++i) {
		total *= static_cast<std::uint64_t>(f.p());
		if (total > bound)
			return false;
	}
	return true;
}

Report check_report(const CheckResult &c, bool must_pass)
{
	return must_pass ? Report::from_check(c) : Report::expected_failure(c);
}

Report finish(Report r)
{
	r.aggregate();
	return r;
}

std::vector<Matrix> multiplication_ops(const FiniteAlgebra &a)
{
	std::vector<Matrix> ops;
	for (std::size_t i = 0; i < a.dim(); ++i) {
		ops.push_back(a.left_mult(a.basis(i)));
		ops.push_back(a.right_mult(a.basis(i)));
	}
	return ops;
}

} // namespace

Report timed(const std::string &name, const std::function<Report()> &fn)
{
	auto t0 = std::chrono::steady_clock::now();
	Report r;
	try {
		r = fn();
	} catch (const Error &e) {
		r = Report::error(name, e.what());
	}
	if (r.name.empty() || r.status == "error")
		r.name = name;
	r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return r;
}

Report report_from_violations(const std::string &name, const std::vector<Violation> &v)
{
	Report r(name);
	r.status = v.empty() ? "pass" : "fail";
	for (std::size_t i = 0; i < v.size() && i < 20; ++i)
		r.witnesses.push_back(violation_line(v[i]));
	return r;
}

Report report_from_checks(const std::string &name, const std::vector<CheckResult> &checks)
{
	Report r(name);
	for (const auto &c : checks)
		r.add(Report::from_check(c));
	return finish(std::move(r));
}

std::vector<std::pair<std::string, Subspace>> test_ideals(const Workspace &ws, const std::string &alg)
{
	std::vector<std::pair<std::string, Subspace>> out;
	std::set<std::string> seen;
	auto push = [&](std::string name, Subspace s) {
		if (seen.insert(subspace_key(s)).second)
			out.emplace_back(std::move(name), std::move(s));
	};
	for (const auto &name : ws.ideal_names(alg))
		push(name, ws.ideal(alg, name));
	try {
		auto spec = spectrum(ws.algebra(alg));
		for (std::size_t k = 0; k < spec.size(); ++k)
			push("prime " + std::to_string(k), spec[k].prime);
	} catch (const Unsupported &) {
		// primes out of reach: the named ideals still get tested
	}
	return out;
}

// ---- identities ----------------------------------------------------------

Report suite_identities(const Workspace &ws)
{
	Report top("paper-identities");
	for (const auto &[name, h] : ws.hopfs)
		top.add(timed("hopf axioms " + name, [&, &h = h] { return report_from_violations("", hopf_violations(h)); }));
	for (const auto &[name, act] : ws.actions)
		top.add(timed("identities " + name, [&, &act = act] {
			ConvolutionAlgebra b(act);
			Report r = report_from_checks("", check_identities(b));
			r.details["dim B"] = b.dim();
			return r;
		}));
	return finish(std::move(top));
}

// ---- semiprime cores ------------------------------------------------------

Report suite_semiprime_cores(const Workspace &ws)
{
	Report top("theorem2");
	for (const auto &[name, act] : ws.actions) {
		const std::string alg = ws.algebra_name(act.algebra());
		const bool char0 = act.field().characteristic() == 0;
		const bool cocomm = is_cocommutative(act.hopf());
		top.add(timed("semiprime cores " + name, [&, &act = act] {
			Report r;
			r.details["characteristic"] = act.field().characteristic();
			r.details["cocommutative"] = cocomm;
			auto ideals = semiprime_ideals(act.algebra());
			std::size_t counterexamples = 0;
			for (std::size_t k = 0; k < ideals.size(); ++k) {
				SemiprimeCoreResult s = semiprime_core_check(act, ideals[k]);
				Report c("semiprime ideal " + std::to_string(k) + " of dim " + std::to_string(ideals[k].dim()));
				c.status = s.status;
				c.details["core"] = subspace_json(s.core);
				if (s.status != "pass") {
					c.witnesses.push_back("core of dim " + std::to_string(s.core.dim()) + " is not semiprime");
					++counterexamples;
				}
				r.add(std::move(c));
			}
			r.aggregate();
			r.details["semiprime ideals"] = ideals.size();
			r.details["counterexamples"] = counterexamples;
			return r;
		}));
		top.add(timed("reformulation " + name, [&, &act = act] {
			Report r;
			for (const auto &[iname, ideal] : test_ideals(ws, alg)) {
				CheckResult c = reformulation_check(act, ideal);
				c.check = "I = " + iname;
				r.add(check_report(c, char0 && cocomm));
			}
			return finish(std::move(r));
		}));
	}
	return finish(std::move(top));
}

// ---- dotinv ----------------------------------------------------------------

Report suite_dotinv(const Workspace &ws, const SuiteOptions &opt)
{
	Report top("dotinv");
	for (const auto &[name, act] : ws.actions) {
		top.add(timed("dotinv " + name, [&, &act = act] {
			ConvolutionAlgebra b(act);
			DotInvResult d = check_dotinv(b);
			Report r;
			r.details["cocommutative"] = d.cocommutative;
			r.add(check_report(d.multiplicative, d.cocommutative));
			r.add(check_report(d.dot_invariants, d.cocommutative));
			r.add(Report::from_check(d.hit_invariants));
			r.add(check_report(d.dot_measuring, d.cocommutative));
			return finish(std::move(r));
		}));
		const Field &f = act.field();
		const std::size_t dim_b = act.hopf().dim() * act.algebra().dim();
		if (!enumerable(f, dim_b, opt.bound))
			continue;
		if (is_cocommutative(act.hopf()))
			top.add(timed("ideal correspondence " + name, [&, &act = act] {
				ConvolutionAlgebra b(act);
				DotInvCorrespondence c = check_dotinv_correspondence(b, opt.bound);
				Report r = report_from_checks("", {c.transport, c.restrict_inverse, c.contract, c.extend_inverse});
				r.details["ideals of A"] = c.ideals_of_a;
				r.details["H-ideals of B"] = c.h_ideals_of_b;
				r.details["ideals of the invariants"] = c.ideals_of_invariants;
				return r;
			}));
		top.add(timed("stability scan " + name, [&, &act = act] {
			ConvolutionAlgebra b(act);
			StabilityScan s = stability_scan(b, opt.bound);
			Report r = report_from_checks("", {s.result, s.phi_psi});
			r.details["stable subspaces"] = s.stable_found;
			r.details["subspaces of A"] = s.expected;
			return r;
		}));
	}
	return finish(std::move(top));
}

// ---- strata ----------------------------------------------------------------

Report strat_bijection_report(const ModuleAlgebraAction &act, const Subspace &ideal)
{
	Report r("strat-bijection");
	r.details["core"] = subspace_json(ideal);
	try {
		StratBijection b = verify_strat_bijection(act, ideal);
		for (const auto &c : b.checks)
			r.add(Report::from_check(c));
		r.aggregate();
		r.details["defined"] = true;
		r.details["result"] = b.status;
		r.details["stratum size"] = b.stratum_size;
		r.details["H-primes of C_I"] = b.h_prime_count;
		r.details["dim C_I/c(P)"] = b.heart_dims;
		r.details["dim Z((A/P) (x) H*)"] = b.target_dims;
	} catch (const Undefined &e) {
		r.details["defined"] = false;
		r.details["reason"] = e.what();
	}
	return r;
}

Report suite_strata(const Workspace &ws)
{
	Report top("strata");
	for (const auto &[name, act] : ws.actions)
		top.add(timed("strata " + name, [&, &act = act] {
			Report r;
			Strata s = strata(act);
			CheckResult part("strata partition Spec A");
			CheckResult stable("cores of primes are H-ideals");
			std::vector<int> hits(s.spectrum.size(), 0);
			for (const auto &st : s.strata) {
				for (auto k : st.primes) {
					++hits[k];
					if (core(act, s.spectrum[k].prime) != st.core)
						part.fail("prime " + std::to_string(k) + " filed under a different core");
				}
				if (!is_h_stable(act, st.core) || !is_two_sided_ideal(act.algebra(), st.core))
					stable.fail("core of dim " + std::to_string(st.core.dim()));
			}
			for (std::size_t k = 0; k < hits.size(); ++k)
				if (hits[k] != 1)
					part.fail("prime " + std::to_string(k) + " lies in " + std::to_string(hits[k]) + " strata");
			r.add(Report::from_check(part));
			r.add(Report::from_check(stable));
			for (const auto &st : s.strata) {
				Report b = strat_bijection_report(act, st.core);
				b.name = "stratum of core dim " + std::to_string(st.core.dim());
				r.add(std::move(b));
			}
			r.details["primes"] = s.spectrum.size();
			r.details["strata"] = s.strata.size();
			return finish(std::move(r));
		}));
	return finish(std::move(top));
}

// ---- pbw -------------------------------------------------------------------

Report suite_pbw(const SuiteOptions &opt)
{
	Report top("pbw");
	const unsigned n = opt.truncation;
	top.add(timed("comultiplication of divided powers", [&] {
		CheckResult c("Delta e_n = sum over r + s = n of e_r (x) e_s");
		std::size_t tested = 0;
		for (std::size_t vars = 1; vars <= 3; ++vars) {
			auto all = pbw_indices(vars, n);
			for (const auto &idx : all) {
				// oracle: filter every pair of indices by componentwise sum
				std::set<std::pair<PBWIndex, PBWIndex>> expect;
				for (const auto &r : all)
					for (const auto &s : all) {
						bool ok = true;
						for (std::size_t v = 0; v < vars && ok; ++v)
							ok = r[v] + s[v] == idx[v];
						if (ok)
							expect.emplace(r, s);
					}
				auto got = pbw_comul(idx);
				std::set<std::pair<PBWIndex, PBWIndex>> got_set(got.begin(), got.end());
				if (got_set != expect || got.size() != got_set.size())
					c.fail("index of degree " + std::to_string(total_degree(idx)) + " in " + std::to_string(vars) +
					       " variables");
				++tested;
			}
		}
		Report r = Report::from_check(c);
		r.details["indices"] = tested;
		return r;
	}));
	top.add(timed("monomial order", [&] {
		CheckResult c("graded lex is a translation-invariant total order with minimum 0");
		for (std::size_t vars = 1; vars <= 3; ++vars) {
			auto all = pbw_indices(vars, 3);
			PBWIndex zero(vars, 0);
			for (const auto &a : all) {
				if (a != zero && monomial_cmp(zero, a) >= 0)
					c.fail("0 is not below every other index");
				for (const auto &b : all) {
					int ab = monomial_cmp(a, b), ba = monomial_cmp(b, a);
					if (ab != -ba || (ab == 0) != (a == b))
						c.fail("not antisymmetric");
					for (const auto &t : all) {
						PBWIndex at = a, bt = b;
						for (std::size_t v = 0; v < vars; ++v)
							at[v] += t[v], bt[v] += t[v];
						if (monomial_cmp(at, bt) != ab)
							c.fail("translation changes the order");
						if (ab < 0 && monomial_cmp(b, t) < 0 && monomial_cmp(a, t) >= 0)
							c.fail("not transitive");
					}
				}
			}
		}
		return Report::from_check(c);
	}));
	std::mt19937_64 rng(opt.seed);
	const Field q = Field::rationals();
	for (std::size_t vars : {1, 2})
		top.add(timed("phi multiplicative over Q, " + std::to_string(vars) + " variables", [&] {
			return Report::from_check(check_phi_multiplicative(ground_field_algebra(q), vars, n, 100, rng));
		}));
	top.add(timed("phi multiplicative over Q x Q", [&] {
		return Report::from_check(check_phi_multiplicative(diagonal_algebra(q, 2), 2, n, 100, rng));
	}));
	top.add(timed("lowest coefficient of s u t", [&] {
		Report r = Report::from_check(check_sut_min(50, 2, n, rng));
		r.details["instances"] = 50;
		return r;
	}));
	for (long p : {2, 3, 5})
		top.add(timed("f^p = eps over F_" + std::to_string(p), [&] {
			CharpDemo d = charp_grouplike_demo(p);
			return report_from_checks("", {d.power, d.nilpotent});
		}));
	return finish(std::move(top));
}

// ---- cores -----------------------------------------------------------------

Report suite_cores(const Workspace &ws)
{
	Report top("cores");
	for (const auto &[name, act] : ws.actions)
		top.add(timed("cores " + name, [&, &act = act] {
			const std::string alg = ws.algebra_name(act.algebra());
			const bool group = is_group_algebra(act.hopf());
			CheckResult psi("core equals core via psi");
			CheckResult grp("core equals the intersection of the translates g.I");
			CheckResult props("core is an H-ideal inside I and a fixed point");
			std::size_t n = 0;
			for (const auto &[iname, ideal] : test_ideals(ws, alg)) {
				Subspace c = core(act, ideal);
				if (core_via_psi(act, ideal) != c)
					psi.fail("I = " + iname);
				if (group && group_core(act, ideal) != c)
					grp.fail("I = " + iname);
				if (!ideal.contains(c) || !is_h_stable(act, c) || !is_two_sided_ideal(act.algebra(), c) ||
				    core(act, c) != c)
					props.fail("I = " + iname);
				++n;
			}
			Report r;
			r.add(Report::from_check(psi));
			if (group)
				r.add(Report::from_check(grp));
			r.add(Report::from_check(props));
			r.details["ideals"] = n;
			return finish(std::move(r));
		}));
	return finish(std::move(top));
}

// ---- lie -------------------------------------------------------------------

Report suite_lie(const Workspace &ws, const SuiteOptions &opt)
{
	Report top("lie");
	for (const auto &[name, lie] : ws.lies) {
		const std::string alg = ws.algebra_name(lie.algebra);
		top.add(timed("verify " + name, [&, &lie = lie] { return report_from_checks("", verify_lie_action(lie)); }));
		top.add(timed("derivation cores " + name, [&, &lie = lie] {
			CheckResult fixed("lie core is a stable ideal inside I and a fixed point");
			Report r;
			for (const auto &[iname, ideal] : test_ideals(ws, alg)) {
				Subspace c = lie_core(lie, ideal);
				if (!ideal.contains(c) || lie_core_step(lie, c) != c || !is_two_sided_ideal(lie.algebra, c))
					fixed.fail("I = " + iname);
			}
			r.add(Report::from_check(fixed));
			return finish(std::move(r));
		}));
		if (lie.field().characteristic() == 0)
			top.add(timed("transfer " + name, [&, &lie = lie] {
				Report r;
				for (const auto &[iname, ideal] : test_ideals(ws, alg)) {
					LieTransfer t = lie_semiprime_transfer_check(lie, ideal);
					Report c("I = " + iname);
					c.status = t.passed() ? "pass" : "fail";
					c.details["prime"] = {t.prime, t.core_prime};
					c.details["semiprime"] = {t.semiprime, t.core_semiprime};
					c.details["completely prime"] = {t.completely_prime, t.core_completely_prime};
					r.add(std::move(c));
				}
				return finish(std::move(r));
			}));
		if (enumerable(lie.field(), lie.algebra.dim(), opt.bound))
			top.add(timed("maximality by enumeration " + name, [&, &lie = lie] {
				auto ops = multiplication_ops(lie.algebra);
				ops.insert(ops.end(), lie.derivations.begin(), lie.derivations.end());
				auto stable = enumerate_stable_subspaces(lie.field(), lie.algebra.dim(), ops, opt.bound);
				CheckResult c("every stable ideal inside I lies in the lie core, which is one of them");
				for (const auto &[iname, ideal] : test_ideals(ws, alg)) {
					Subspace core = lie_core(lie, ideal);
					bool listed = false;
					for (const auto &s : stable) {
						listed = listed || s == core;
						if (ideal.contains(s) && !core.contains(s))
							c.fail("I = " + iname + ": stable ideal of dim " + std::to_string(s.dim()));
					}
					if (!listed)
						c.fail("I = " + iname + ": core not among the stable ideals");
				}
				Report r = Report::from_check(c);
				r.details["stable ideals"] = stable.size();
				return r;
			}));
		for (const auto &[aname, act] : ws.actions) {
			if (!act.algebra().same_structure(lie.algebra))
				continue;
			top.add(timed("composite core " + name + " then " + aname, [&, &lie = lie, &act = act] {
				CheckResult c("(I:U):V equals the joint stable core");
				for (const auto &[iname, ideal] : test_ideals(ws, alg))
					if (composite_core(lie, act, ideal) != joint_stable_core(lie, act, ideal))
						c.fail("I = " + iname);
				return Report::from_check(c);
			}));
		}
	}
	return finish(std::move(top));
}

// ---- dispatch --------------------------------------------------------------

const std::vector<std::string> &suite_names()
{
	static const std::vector<std::string> names{"paper-identities", "theorem2", "dotinv", "strata",
	                                            "pbw",              "cores",    "lie"};
	return names;
}

Report run_suite(const Workspace &ws, const std::string &name, const SuiteOptions &opt)
{
	auto t0 = std::chrono::steady_clock::now();
	Report r;
	if (name == "paper-identities")
		r = suite_identities(ws);
	else if (name == "theorem2")
		r = suite_semiprime_cores(ws);
	else if (name == "dotinv")
		r = suite_dotinv(ws, opt);
	else if (name == "strata")
		r = suite_strata(ws);
	else if (name == "pbw")
		r = suite_pbw(opt);
	else if (name == "cores")
		r = suite_cores(ws);
	else if (name == "lie")
		r = suite_lie(ws, opt);
	else
		throw Error("unknown suite '" + name + "'");
	r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return r;
}

} // namespace hopfact
