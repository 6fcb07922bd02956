// Drives the hopfact binary named by $HOPFACT_CLI.

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

namespace {

struct CliRun {
	int code = -1;
	std::string out;
};

CliRun run(const std::string &args)
{
	const char *cli = std::getenv("HOPFACT_CLI");
	if (!cli)
		return {};
	std::string cmd = std::string("\"") + cli + "\" " + args + " 2>/dev/null";
	CliRun r;
	FILE *p = popen(cmd.c_str(), "r");
	if (!p)
		return r;
	std::array<char, 4096> buf;
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
		r.out.append(buf.data(), n);
	int status = pclose(p);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

nlohmann::json json_of(const CliRun &r) { return nlohmann::json::parse(r.out); }

void drop_timings(nlohmann::json &j)
{
	if (j.is_object()) {
		j.erase("seconds");
		for (auto &[_, v] : j.items())
			drop_timings(v);
	} else if (j.is_array()) {
		for (auto &v : j)
			drop_timings(v);
	}
}

class Cli : public ::testing::Test {
  protected:
	void SetUp() override
	{
		if (!std::getenv("HOPFACT_CLI"))
			GTEST_SKIP() << "HOPFACT_CLI not set";
	}
};

} // namespace

TEST_F(Cli, CoreOfTheAugmentationIdeal)
{
	auto r = run("core --action grading2 --ideal aug --json");
	EXPECT_EQ(r.code, 0);
	auto j = json_of(r);
	EXPECT_EQ(j["status"], "pass");
	EXPECT_EQ(j["details"]["core"]["dim"], 0);
}

TEST_F(Cli, SemiprimeCoreCounterexampleExitsZero)
{
	auto r = run("semiprime-core --action grading2 --ideal aug --json");
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(json_of(r)["status"], "counterexample");
}

TEST_F(Cli, DotinvOnSweedlerPasses)
{
	auto r = run("dotinv --action sweedler-act --json");
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(json_of(r)["status"], "pass");
	EXPECT_NE(r.out.find("phi multiplicative"), std::string::npos);
}

TEST_F(Cli, InlineIdeal)
{
	auto r = run("core --action swap --ideal '[[1, 0]]' --json");
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(json_of(r)["details"]["core"]["dim"], 0);
}

TEST_F(Cli, UsageErrorsExitTwo)
{
	EXPECT_EQ(run("no-such-command").code, 2);
	EXPECT_EQ(run("core --action no-such-action --ideal aug").code, 2);
	EXPECT_EQ(run("core --action grading2").code, 2);
	EXPECT_EQ(run("--bogus-flag core").code, 2);
	EXPECT_EQ(run("suite no-such-suite").code, 2);
}

TEST_F(Cli, BadFixturesExitTwo)
{
	EXPECT_EQ(run("verify --hopf QC2 --fixtures /nonexistent/path").code, 2);
}

TEST_F(Cli, JsonIsDeterministicApartFromTimings)
{
	for (const char *args : {"strata --action conj --json", "suite theorem2 --json", "radical --algebra F2C2 --json"}) {
		auto a = json_of(run(args)), b = json_of(run(args));
		drop_timings(a);
		drop_timings(b);
		EXPECT_EQ(a.dump(), b.dump()) << args;
	}
}

TEST_F(Cli, TextOutput)
{
	auto r = run("verify --hopf H4");
	EXPECT_EQ(r.code, 0);
	EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST_F(Cli, SuitesPass)
{
	for (const char *s : {"paper-identities", "theorem2", "strata", "cores"}) {
		auto r = run(std::string("suite ") + s + " --json");
		EXPECT_EQ(r.code, 0) << s;
		EXPECT_EQ(json_of(r)["status"], "pass") << s;
	}
}
