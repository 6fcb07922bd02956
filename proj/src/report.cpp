#include "hopfact/report.hpp"

#include <cstdio>
#include <sstream>

namespace hopfact {

Report Report::from_check(const CheckResult &c)
{
	Report r(c.check);
	r.status = c.passed ? "pass" : "fail";
	r.witnesses = c.witnesses;
	return r;
}

Report Report::expected_failure(const CheckResult &c)
{
	Report r = from_check(c);
	if (!c.passed)
		r.status = "counterexample";
	return r;
}

Report Report::error(std::string name, std::string message)
{
	Report r(std::move(name));
	r.status = "error";
	r.details["message"] = std::move(message);
	return r;
}

void Report::add(Report child) { children.push_back(std::move(child)); }

void Report::aggregate()
{
	bool fail = false, err = false;
	for (const auto &c : children) {
		fail = fail || c.status == "fail";
		err = err || c.status == "error";
	}
	status = fail ? "fail" : err ? "error" : "pass";
}

int Report::exit_code() const
{
	if (status == "fail")
		return 1;
	if (status == "error")
		return 2;
	return 0;
}

Json Report::to_json(bool with_timings) const
{
	Json j;
	j["name"] = name;
	j["status"] = status;
	j["witnesses"] = witnesses;
	if (!details.empty())
		j["details"] = details;
	if (!children.empty()) {
		Json kids = Json::array();
		for (const auto &c : children)
			kids.push_back(c.to_json(with_timings));
		j["children"] = std::move(kids);
	}
	if (with_timings) {
		char buf[32];
		std::snprintf(buf, sizeof buf, "%.6f", seconds);
		j["timings"] = {{"seconds", std::stod(buf)}};
	}
	return j;
}

namespace {

void render(const Report &r, std::ostringstream &os, int depth)
{
	std::string pad(2 * depth, ' ');
	os << pad << "[" << r.status << "] " << r.name;
	if (r.seconds > 0) {
		char buf[32];
		std::snprintf(buf, sizeof buf, " (%.3fs)", r.seconds);
		os << buf;
	}
	os << "\n";
	for (const auto &[k, v] : r.details.items())
		os << pad << "    " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
	for (const auto &w : r.witnesses)
		os << pad << "    witness: " << w << "\n";
	for (const auto &c : r.children)
		render(c, os, depth + 1);
}

} // namespace

std::string Report::to_text() const
{
	std::ostringstream os;
	render(*this, os, 0);
	return os.str();
}

Json scalar_json(const Field &f, const Scalar &s) { return f.format(s); }

Json vec_json(const Field &f, const Vec &v)
{
	Json j = Json::array();
	for (const auto &c : v)
		j.push_back(f.format(c));
	return j;
}

Json subspace_json(const Subspace &s)
{
	Json j;
	j["dim"] = s.dim();
	j["ambient"] = s.ambient();
	Json basis = Json::array();
	for (const auto &v : s.vectors())
		basis.push_back(vec_json(s.field(), v));
	j["basis"] = std::move(basis);
	return j;
}

} // namespace hopfact
