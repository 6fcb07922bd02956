#include "hopfact/commands.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopfact {

namespace {

const ModuleAlgebraAction &need_action(const Workspace &ws, const CommandArgs &a)
{
	if (a.action.empty())
		throw UsageError("this command needs --action");
	return ws.action(a.action);
}

const LieAction &need_lie(const Workspace &ws, const CommandArgs &a)
{
	if (a.lie.empty())
		throw UsageError("this command needs --lie");
	return ws.lie(a.lie);
}

std::string action_algebra(const Workspace &ws, const ModuleAlgebraAction &act)
{
	return ws.algebra_name(act.algebra());
}

Subspace need_ideal(const Workspace &ws, const std::string &alg, const CommandArgs &a,
                    const char *fallback = nullptr)
{
	if (a.ideal.empty()) {
		if (!fallback)
			throw UsageError("this command needs --ideal");
		return resolve_ideal(ws, alg, fallback);
	}
	return resolve_ideal(ws, alg, a.ideal);
}

/// --algebra, or the algebra of --action, or of --lie.
std::string target_algebra(const Workspace &ws, const CommandArgs &a)
{
	if (!a.algebra.empty()) {
		ws.algebra(a.algebra);
		return a.algebra;
	}
	if (!a.action.empty())
		return action_algebra(ws, ws.action(a.action));
	if (!a.lie.empty())
		return ws.algebra_name(ws.lie(a.lie).algebra);
	throw UsageError("this command needs --algebra or --action");
}

Report checked(std::string name, const std::vector<CheckResult> &checks, bool must_pass = true)
{
	Report r(std::move(name));
	for (const auto &c : checks)
		r.add(must_pass ? Report::from_check(c) : Report::expected_failure(c));
	r.aggregate();
	return r;
}

Json spectrum_json(const std::vector<SpectrumEntry> &spec)
{
	Json out = Json::array();
	for (const auto &e : spec) {
		Json j;
		j["prime"] = subspace_json(e.prime);
		j["simple quotient dim"] = e.simple_quotient_dim;
		j["heart dim"] = e.heart_dim;
		j["inert"] = e.inert;
		out.push_back(std::move(j));
	}
	return out;
}

std::vector<Scalar> parse_values(const Field &f, const std::string &text)
{
	std::vector<Scalar> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
		out.push_back(f.parse(item));
	if (out.empty())
		throw UsageError("--values needs at least one scalar");
	return out;
}

std::uint64_t bound_of(const CommandArgs &a) { return a.bound ? a.bound : default_enumeration_bound(); }

Report base_report(const std::string &command, const CommandArgs &a)
{
	Report r(command);
	if (!a.action.empty())
		r.details["action"] = a.action;
	if (!a.lie.empty())
		r.details["lie"] = a.lie;
	if (!a.algebra.empty())
		r.details["algebra"] = a.algebra;
	return r;
}

// ---- individual commands ---------------------------------------------------

Report cmd_verify(const Workspace &ws, const CommandArgs &a)
{
	Report r("verify");
	bool any = !a.algebra.empty() || !a.hopf.empty() || !a.action.empty() || !a.lie.empty() ||
	           !a.representation.empty();
	auto want = [&](const std::string &sel, const std::string &name) { return any ? sel == name : true; };
	for (const auto &[name, alg] : ws.algebras)
		if (want(a.algebra, name))
			r.add(report_from_violations("algebra " + name, algebra_violations(alg)));
	for (const auto &[name, h] : ws.hopfs)
		if (want(a.hopf, name))
			r.add(report_from_violations("hopf " + name, hopf_violations(h)));
	for (const auto &[name, act] : ws.actions)
		if (want(a.action, name))
			r.add(report_from_violations("action " + name, action_violations(act)));
	for (const auto &[name, rep] : ws.representations)
		if (want(a.representation, name)) {
			auto v = representation_violations(rep);
			auto c = coefficient_coproduct_violations(rep);
			v.insert(v.end(), c.begin(), c.end());
			if (is_group_algebra(rep.hopf)) {
				auto s = group_coeff_antipode_violations(rep);
				v.insert(v.end(), s.begin(), s.end());
			}
			Report rr = report_from_violations("representation " + name, v);
			rr.details["coefficient subalgebra dim"] =
			    coefficient_subalgebra(rep.hopf, matrix_coefficients(rep)).dim();
			r.add(std::move(rr));
		}
	for (const auto &[name, l] : ws.lies)
		if (want(a.lie, name))
			r.add(checked("lie " + name, verify_lie_action(l)));
	if (any && r.children.empty())
		throw UsageError("no object matches the selection");
	r.aggregate();
	return r;
}

Report cmd_core(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	Subspace i = need_ideal(ws, action_algebra(ws, act), a);
	Report r = base_report("core", a);
	Subspace c = core(act, i);
	r.details["ideal"] = subspace_json(i);
	r.details["core"] = subspace_json(c);
	CheckResult ok("core is an H-ideal inside I");
	if (!i.contains(c) || !is_h_stable(act, c) || !is_two_sided_ideal(act.algebra(), c))
		ok.fail("core");
	r.add(Report::from_check(ok));
	r.aggregate();
	return r;
}

Report cmd_core_psi(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	Subspace i = need_ideal(ws, action_algebra(ws, act), a);
	Report r = base_report("core-psi", a);
	Subspace c = core(act, i), cp = core_via_psi(act, i);
	r.details["ideal"] = subspace_json(i);
	r.details["core"] = subspace_json(c);
	r.details["core via psi"] = subspace_json(cp);
	CheckResult eq("core equals core via psi");
	if (c != cp)
		eq.fail("dims " + std::to_string(c.dim()) + " and " + std::to_string(cp.dim()));
	r.add(Report::from_check(eq));
	if (is_group_algebra(act.hopf())) {
		CheckResult g("core equals the intersection of the translates g.I");
		if (group_core(act, i) != c)
			g.fail("intersection differs");
		r.add(Report::from_check(g));
	}
	r.aggregate();
	return r;
}

Report cmd_radical(const Workspace &ws, const CommandArgs &a)
{
	const std::string alg = target_algebra(ws, a);
	const FiniteAlgebra &A = ws.algebra(alg);
	Report r = base_report("radical", a);
	r.details["algebra"] = alg;
	if (!a.ideal.empty()) {
		Subspace i = resolve_ideal(ws, alg, a.ideal);
		r.details["ideal"] = subspace_json(i);
		r.details["radical"] = subspace_json(radical_of(A, i));
		r.details["semiprime"] = is_semiprime(A, i);
		r.details["prime"] = is_prime(A, i);
		return r;
	}
	r.details["method"] = radical_method(A) == RadicalMethod::trace_form ? "trace form" : "frobenius";
	Subspace rad = radical(A);
	r.details["radical"] = subspace_json(rad);
	CheckResult nil("radical is a nilpotent ideal with semiprime quotient");
	Subspace pw = rad;
	for (std::size_t k = 0; k < A.dim() && !pw.is_zero(); ++k)
		pw = ideal_product(A, pw, rad);
	if (!pw.is_zero() || !is_two_sided_ideal(A, rad))
		nil.fail("radical");
	r.add(Report::from_check(nil));
	r.aggregate();
	return r;
}

Report cmd_spectrum(const Workspace &ws, const CommandArgs &a)
{
	const std::string alg = target_algebra(ws, a);
	Report r = base_report("spectrum", a);
	r.details["algebra"] = alg;
	auto spec = spectrum(ws.algebra(alg));
	r.details["primes"] = spectrum_json(spec);
	return r;
}

Report cmd_strata(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	Report r = base_report("strata", a);
	Strata s = strata(act);
	r.details["spectrum"] = spectrum_json(s.spectrum);
	Json list = Json::array();
	for (const auto &st : s.strata)
		list.push_back({{"core", subspace_json(st.core)}, {"primes", st.primes}, {"core is prime", st.core_is_prime}});
	r.details["strata"] = std::move(list);
	return r;
}

Report cmd_stratum_algebra(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	Subspace i = need_ideal(ws, action_algebra(ws, act), a, "zero");
	Report r = base_report("stratum-algebra", a);
	StratumAlgebra s = stratum_algebra(act, i);
	r.details["ideal"] = subspace_json(i);
	r.details["dim A/I"] = s.quotient.algebra.dim();
	r.details["dim Z(A/I)"] = s.center.algebra.dim();
	r.details["dim C_I"] = s.algebra.dim();
	Json hp = Json::array();
	for (const auto &p : s.h_primes)
		hp.push_back(subspace_json(p));
	r.details["H-primes of C_I"] = std::move(hp);
	CheckResult comm("C_I is commutative and the dot action measures");
	if (!s.algebra.algebra().is_commutative())
		comm.fail("C_I is not commutative");
	if (!action_violations(s.algebra.dot_action()).empty())
		comm.fail("dot action on C_I");
	r.add(is_cocommutative(act.hopf()) ? Report::from_check(comm) : Report::expected_failure(comm));
	r.aggregate();
	return r;
}

Report cmd_strat_bijection(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	if (!a.ideal.empty()) {
		Report r = strat_bijection_report(act, resolve_ideal(ws, action_algebra(ws, act), a.ideal));
		if (!r.details["defined"].get<bool>())
			throw Undefined(r.details["reason"].get<std::string>());
		r.details["action"] = a.action;
		return r;
	}
	Report r = base_report("strat-bijection", a);
	for (const auto &st : strata(act).strata) {
		Report b = strat_bijection_report(act, st.core);
		b.name = "stratum of core dim " + std::to_string(st.core.dim());
		r.add(std::move(b));
	}
	r.aggregate();
	return r;
}

Report cmd_transport(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	Subspace i = need_ideal(ws, action_algebra(ws, act), a);
	require_ideal(act.algebra(), i);
	ConvolutionAlgebra b(act);
	Report r = base_report("transport", a);
	Subspace j = ideal_transport(b, i);
	Subspace k = invariant_contract(b, j);
	r.details["ideal"] = subspace_json(i);
	r.details["transported"] = subspace_json(j);
	r.details["contracted"] = subspace_json(k);
	CheckResult h("Psi(I (x) H*) is a dot-stable two-sided ideal");
	if (!is_two_sided_ideal(b.algebra(), j))
		h.fail("not a two-sided ideal");
	if (!is_h_stable(b.dot_action(), j))
		h.fail("not dot-stable");
	CheckResult back("restriction returns I");
	if (ideal_restrict(b, j) != i)
		back.fail("restriction differs");
	CheckResult ext("extension of the contraction returns Psi(I (x) H*)");
	if (invariant_extend(b, k) != j)
		ext.fail("extension differs");
	const bool cocomm = is_cocommutative(act.hopf());
	r.details["cocommutative"] = cocomm;
	for (const auto &c : {h, back, ext})
		r.add(cocomm ? Report::from_check(c) : Report::expected_failure(c));
	r.aggregate();
	return r;
}

Report cmd_stability_scan(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	ConvolutionAlgebra b(act);
	StabilityScan s = stability_scan(b, bound_of(a));
	Report r = checked("stability-scan", {s.result, s.phi_psi});
	r.details["action"] = a.action;
	r.details["stable subspaces"] = s.stable_found;
	r.details["subspaces of A"] = s.expected;
	return r;
}

Report cmd_dotinv(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	ConvolutionAlgebra b(act);
	DotInvResult d = check_dotinv(b);
	Report r = base_report("dotinv", a);
	r.details["cocommutative"] = d.cocommutative;
	auto add = [&](const CheckResult &c, bool must) {
		r.add(must ? Report::from_check(c) : Report::expected_failure(c));
	};
	add(d.multiplicative, d.cocommutative);
	add(d.dot_invariants, d.cocommutative);
	add(d.hit_invariants, true);
	add(d.dot_measuring, d.cocommutative);
	if (d.cocommutative && act.field().is_prime_field()) {
		try {
			DotInvCorrespondence c = check_dotinv_correspondence(b, bound_of(a));
			Report cr = checked("ideal correspondence", {c.transport, c.restrict_inverse, c.contract, c.extend_inverse});
			cr.details["ideals of A"] = c.ideals_of_a;
			cr.details["H-ideals of B"] = c.h_ideals_of_b;
			cr.details["ideals of the invariants"] = c.ideals_of_invariants;
			r.add(std::move(cr));
		} catch (const Error &e) {
			r.details["ideal correspondence"] = std::string("skipped: ") + e.what();
		}
	}
	r.aggregate();
	return r;
}

Report cmd_intertwine(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	Report r = checked("intertwine", check_intertwining(ConvolutionAlgebra(act)));
	r.details["action"] = a.action;
	return r;
}

Report cmd_lie_core(const Workspace &ws, const CommandArgs &a)
{
	const auto &lie = need_lie(ws, a);
	Subspace i = need_ideal(ws, ws.algebra_name(lie.algebra), a);
	Report r = base_report("lie-core", a);
	Subspace c = lie_core(lie, i);
	r.details["ideal"] = subspace_json(i);
	r.details["core"] = subspace_json(c);
	CheckResult fixed("lie core is a stable ideal inside I and a fixed point");
	if (!i.contains(c) || lie_core_step(lie, c) != c || !is_two_sided_ideal(lie.algebra, c))
		fixed.fail("core");
	r.add(Report::from_check(fixed));
	r.aggregate();
	return r;
}

Report cmd_lie_transfer(const Workspace &ws, const CommandArgs &a)
{
	const auto &lie = need_lie(ws, a);
	Subspace i = need_ideal(ws, ws.algebra_name(lie.algebra), a);
	LieTransfer t = lie_semiprime_transfer_check(lie, i);
	Report r = base_report("lie-transfer", a);
	r.status = t.passed() ? "pass" : "fail";
	r.details["ideal"] = subspace_json(i);
	r.details["core"] = subspace_json(t.core);
	r.details["prime"] = {t.prime, t.core_prime};
	r.details["semiprime"] = {t.semiprime, t.core_semiprime};
	r.details["completely prime"] = {t.completely_prime, t.core_completely_prime};
	if (!t.passed())
		r.witnesses.push_back("the core loses a property of I");
	return r;
}

Report cmd_series_phi(const CommandArgs &a)
{
	Field f = a.p ? Field::prime(a.p) : Field::rationals();
	if (a.p && !is_prime_number(a.p))
		throw UsageError("--p must be a prime");
	require_divided_powers(f, a.truncation);
	FiniteAlgebra k = ground_field_algebra(f);
	auto v1 = parse_values(f, a.values);
	auto v2 = parse_values(f, a.values2.empty() ? a.values : a.values2);
	if (v1.size() != v2.size())
		throw UsageError("--values and --values2 need the same number of entries");
	const std::size_t vars = v1.size();
	Functional fa = algebra_map_functional(k, v1, a.truncation);
	Functional fb = algebra_map_functional(k, v2, a.truncation);
	TruncatedSeries sf = series_iso_phi(k, vars, a.truncation, fa);
	TruncatedSeries sg = series_iso_phi(k, vars, a.truncation, fb);
	TruncatedSeries sfg = series_iso_phi(k, vars, a.truncation, conv_mult_functionals(k, vars, a.truncation, fa, fb));
	Report r("series-phi");
	r.details["field"] = f.name();
	r.details["truncation"] = a.truncation;
	r.details["phi(f)"] = sf.format();
	r.details["phi(g)"] = sg.format();
	r.details["phi(f * g)"] = sfg.format();
	CheckResult mult("phi(f * g) = phi(f) phi(g)");
	if (sfg != sf * sg)
		mult.fail("product differs: " + (sf * sg).format());
	CheckResult unit("phi(eps) = 1");
	if (series_iso_phi(k, vars, a.truncation, counit_functional(k, vars)) != TruncatedSeries::one(k, vars, a.truncation))
		unit.fail("phi(eps) is not 1");
	r.add(Report::from_check(mult));
	r.add(Report::from_check(unit));
	r.aggregate();
	return r;
}

Report cmd_charp_demo(const CommandArgs &a)
{
	long p = a.p ? a.p : 2;
	CharpDemo d = charp_grouplike_demo(p);
	Report r = checked("charp-demo", {d.power, d.nilpotent});
	r.details["p"] = p;
	return r;
}

Report cmd_composite_core(const Workspace &ws, const CommandArgs &a)
{
	const auto &lie = need_lie(ws, a);
	const auto &act = need_action(ws, a);
	Subspace i = need_ideal(ws, action_algebra(ws, act), a);
	Report r = base_report("composite-core", a);
	Subspace c = composite_core(lie, act, i);
	r.details["ideal"] = subspace_json(i);
	r.details["lie core"] = subspace_json(lie_core(lie, i));
	r.details["composite core"] = subspace_json(c);
	CheckResult joint("(I:U):V equals the joint stable core");
	if (joint_stable_core(lie, act, i) != c)
		joint.fail("joint fixed point differs");
	r.add(Report::from_check(joint));
	r.aggregate();
	return r;
}

Report cmd_reformulation(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	Subspace i = need_ideal(ws, action_algebra(ws, act), a, "zero");
	CheckResult c = reformulation_check(act, i);
	const bool predicted = act.field().characteristic() == 0 && is_cocommutative(act.hopf());
	Report r = predicted ? Report::from_check(c) : Report::expected_failure(c);
	r.name = "reformulation";
	r.details["action"] = a.action;
	r.details["ideal"] = subspace_json(i);
	r.details["radical of I"] = subspace_json(radical_of(act.algebra(), i));
	r.details["radical of H.I"] = subspace_json(radical_of(act.algebra(), h_ideal_generate(act, i.vectors())));
	return r;
}

Report cmd_semiprime_core(const Workspace &ws, const CommandArgs &a)
{
	const auto &act = need_action(ws, a);
	Subspace i = need_ideal(ws, action_algebra(ws, act), a);
	SemiprimeCoreResult s = semiprime_core_check(act, i);
	Report r = base_report("semiprime-core", a);
	r.status = s.status;
	r.details["ideal"] = subspace_json(i);
	r.details["core"] = subspace_json(s.core);
	r.details["core semiprime"] = s.core_semiprime;
	r.details["characteristic"] = act.field().characteristic();
	r.details["cocommutative"] = s.cocommutative;
	if (!s.core_semiprime)
		r.witnesses.push_back("radical of A/core has dim " +
		                      std::to_string(radical_of(act.algebra(), s.core).dim() - s.core.dim()));
	return r;
}

Report cmd_suite(const Workspace &ws, const CommandArgs &a)
{
	if (a.target.empty())
		throw UsageError("suite needs a name: one of paper-identities, theorem2, dotinv, strata, pbw, cores, lie");
	SuiteOptions opt;
	opt.bound = bound_of(a);
	opt.truncation = a.truncation;
	try {
		return run_suite(ws, a.target, opt);
	} catch (const Error &e) {
		if (std::find(suite_names().begin(), suite_names().end(), a.target) == suite_names().end())
			throw UsageError(e.what());
		throw;
	}
}

Report cmd_export(const Workspace &ws, const CommandArgs &a)
{
	if (a.target.empty())
		throw UsageError("export needs a target directory");
	write_workspace(ws, a.target);
	Report r("export");
	r.details["directory"] = a.target;
	r.details["algebras"] = ws.algebras.size();
	r.details["hopf"] = ws.hopfs.size();
	r.details["actions"] = ws.actions.size();
	r.details["representations"] = ws.representations.size();
	r.details["lie"] = ws.lies.size();
	return r;
}

} // namespace

Subspace resolve_ideal(const Workspace &ws, const std::string &alg, const std::string &spec)
{
	const FiniteAlgebra &a = ws.algebra(alg);
	auto first = spec.find_first_not_of(" \t");
	if (first != std::string::npos && (spec[first] == '[' || spec[first] == '{')) {
		Json j;
		try {
			j = Json::parse(spec);
		} catch (const nlohmann::json::exception &e) {
			throw InputError(std::string("--ideal: ") + e.what());
		}
		const Json &gens = j.is_object() ? j.value("generators", Json::array()) : j;
		if (!gens.is_array())
			throw InputError("--ideal: generators must be an array");
		std::vector<Vec> vs;
		for (const auto &g : gens)
			vs.push_back(vec_from_json(a.field(), g, a.dim()));
		return ideal_generate(a, vs);
	}
	return ws.ideal(alg, spec);
}

const std::vector<std::string> &command_names()
{
	static const std::vector<std::string> names{
	    "verify",   "core",          "core-psi",   "radical",    "spectrum",       "strata",       "stratum-algebra",
	    "strat-bijection", "transport", "stability-scan", "dotinv", "intertwine", "lie-core", "lie-transfer",
	    "series-phi", "charp-demo", "composite-core", "reformulation", "semiprime-core", "suite", "export"};
	return names;
}

Report run_command(const Workspace &ws, const std::string &command, const CommandArgs &args)
{
	using Fn = Report (*)(const Workspace &, const CommandArgs &);
	static const std::map<std::string, Fn> table{
	    {"verify", cmd_verify},
	    {"core", cmd_core},
	    {"core-psi", cmd_core_psi},
	    {"radical", cmd_radical},
	    {"spectrum", cmd_spectrum},
	    {"strata", cmd_strata},
	    {"stratum-algebra", cmd_stratum_algebra},
	    {"strat-bijection", cmd_strat_bijection},
	    {"transport", cmd_transport},
	    {"stability-scan", cmd_stability_scan},
	    {"dotinv", cmd_dotinv},
	    {"intertwine", cmd_intertwine},
	    {"lie-core", cmd_lie_core},
	    {"lie-transfer", cmd_lie_transfer},
	    {"series-phi", [](const Workspace &, const CommandArgs &a) { return cmd_series_phi(a); }},
	    {"charp-demo", [](const Workspace &, const CommandArgs &a) { return cmd_charp_demo(a); }},
	    {"composite-core", cmd_composite_core},
	    {"reformulation", cmd_reformulation},
	    {"semiprime-core", cmd_semiprime_core},
	    {"suite", cmd_suite},
	    {"export", cmd_export},
	};
	auto it = table.find(command);
	if (it == table.end())
		throw UsageError("unknown command '" + command + "'");
	return timed(command, [&] { return it->second(ws, args); });
}

} // namespace hopfact
