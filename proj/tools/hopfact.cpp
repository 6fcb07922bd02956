// hopfact <command> [--fixtures DIR] [--json] [--bound N] [args]

#include "hopfact/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hopfact;

namespace {

int emit(const Report &r, bool json)
{
	if (json)
		std::cout << r.to_json().dump(2) << "\n";
	else
		std::cout << r.to_text();
	return r.exit_code();
}

std::string command_list()
{
	std::string s;
	for (const auto &c : command_names())
		s += (s.empty() ? "" : ", ") + c;
	return s;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Finite-dimensional Hopf actions: cores, spectra, strata and convolution checks.\n"
	             "Commands: " + command_list()};
	app.set_version_flag("--version", "hopfact 0.1");
	std::string command, fixtures;
	bool json = false;
	CommandArgs args;
	app.add_option("command", command, "what to run")->required();
	app.add_option("target", args.target, "suite name for 'suite', output directory for 'export'");
	app.add_option("--fixtures", fixtures, "load the workspace from this directory or file instead of the bundled corpus");
	app.add_flag("--json", json, "machine-readable report");
	app.add_option("--bound", args.bound, "cap on p^n for exhaustive subspace enumeration");
	app.add_option("--action", args.action, "action name");
	app.add_option("--algebra", args.algebra, "algebra name");
	app.add_option("--hopf", args.hopf, "Hopf algebra name (verify)");
	app.add_option("--lie", args.lie, "Lie action name");
	app.add_option("--representation", args.representation, "representation name (verify)");
	app.add_option("--ideal", args.ideal, "ideal name, or inline JSON list of generators");
	app.add_option("--values", args.values, "series-phi: comma-separated values f(e_i)");
	app.add_option("--values2", args.values2, "series-phi: values g(e_i); defaults to --values");
	app.add_option("--p", args.p, "prime for series-phi and charp-demo");
	app.add_option("--truncation", args.truncation, "degree bound for truncated series");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForVersion &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return 2;
	}

	try {
		Workspace loaded;
		const Workspace *ws = &builtin_workspace();
		if (!fixtures.empty()) {
			loaded = load_workspace(fixtures);
			ws = &loaded;
		}
		return emit(run_command(*ws, command, args), json);
	} catch (const std::exception &e) {
		Report r = Report::error(command, e.what());
		if (json)
			std::cout << r.to_json().dump(2) << "\n";
		else
			std::cerr << "hopfact: " << e.what() << "\n";
		return 2;
	}
}
