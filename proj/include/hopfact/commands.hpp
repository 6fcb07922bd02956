#pragma once

// Command dispatch behind the hopfact CLI and the Python module.

#include "hopfact/io.hpp"
#include "hopfact/suites.hpp"

namespace hopfact {

/// Bad command line: unknown command, missing argument.
class UsageError : public Error {
  public:
	using Error::Error;
};

struct CommandArgs {
	std::string action;
	std::string algebra;
	std::string hopf;
	std::string lie;
	std::string representation;
	/// A registered ideal name, or inline JSON: a list of generators or
	/// {"generators": [...]}.
	std::string ideal;
	/// Suite name for "suite", directory for "export".
	std::string target;
	/// Comma-separated scalars for series-phi.
	std::string values = "1";
	std::string values2;
	long p = 0;
	unsigned truncation = 6;
	/// 0 means default_enumeration_bound().
	std::uint64_t bound = 0;
};

const std::vector<std::string> &command_names();
/// Throws UsageError or Error; the CLI turns both into exit code 2.
Report run_command(const Workspace &ws, const std::string &command, const CommandArgs &args);

/// Resolves --ideal against an algebra registered in ws.
Subspace resolve_ideal(const Workspace &ws, const std::string &algebra, const std::string &spec);

} // namespace hopfact
