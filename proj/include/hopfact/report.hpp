#pragma once

// Verdicts shared by the CLI, the suites and the Python module.  JSON and
// text are rendered from the same tree; timings are the only field allowed
// to differ between two runs on the same input.

#include "hopfact/convolution.hpp"

#include <json.hpp>

namespace hopfact {

using Json = nlohmann::ordered_json;

struct Report {
	std::string name;
	/// pass, fail, error or counterexample
	std::string status = "pass";
	std::vector<std::string> witnesses;
	Json details = Json::object();
	std::vector<Report> children;
	double seconds = 0;

	Report() = default;
	explicit Report(std::string n) : name(std::move(n)) {}
	static Report from_check(const CheckResult &c);
	/// A failed check that the theory does not forbid becomes a counterexample.
	static Report expected_failure(const CheckResult &c);
	static Report error(std::string name, std::string message);

	void add(Report child);
	/// fail beats error beats pass; counterexamples below a parent are
	/// expected outcomes and leave it passing.
	void aggregate();
	bool ok() const { return status == "pass" || status == "counterexample"; }
	/// 0 for pass or counterexample, 1 for fail, 2 for error.
	int exit_code() const;

	Json to_json(bool with_timings = true) const;
	std::string to_text() const;
};

Json scalar_json(const Field &f, const Scalar &s);
Json vec_json(const Field &f, const Vec &v);
Json subspace_json(const Subspace &s);

} // namespace hopfact
