#pragma once

// Batteries over a whole workspace.  Each suite returns one aggregate Report
// whose children are per-fixture reports.

#include "hopfact/fixtures.hpp"
#include "hopfact/report.hpp"

namespace hopfact {

struct SuiteOptions {
	std::uint64_t bound = default_enumeration_bound();
	std::uint64_t seed = 20240611;
	unsigned truncation = 6;
};

const std::vector<std::string> &suite_names();
/// Throws Error for an unknown suite.
Report run_suite(const Workspace &ws, const std::string &name, const SuiteOptions &opt = {});

Report report_from_violations(const std::string &name, const std::vector<Violation> &v);
/// One child per check, all required to pass.
Report report_from_checks(const std::string &name, const std::vector<CheckResult> &checks);

Report suite_identities(const Workspace &ws);
Report suite_semiprime_cores(const Workspace &ws);
Report suite_dotinv(const Workspace &ws, const SuiteOptions &opt);
Report suite_strata(const Workspace &ws);
Report suite_pbw(const SuiteOptions &opt);
Report suite_cores(const Workspace &ws);
Report suite_lie(const Workspace &ws, const SuiteOptions &opt);

/// The stratum report for one H-ideal: bijection status or the reason the
/// stratum algebra is undefined.
Report strat_bijection_report(const ModuleAlgebraAction &act, const Subspace &ideal);
/// Named ideals of the action's algebra together with its primes.
std::vector<std::pair<std::string, Subspace>> test_ideals(const Workspace &ws, const std::string &algebra);

/// Runs fn and records its wall time; Error becomes an error report.
Report timed(const std::string &name, const std::function<Report()> &fn);

} // namespace hopfact
