#include "hopfact/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace hopfact;

namespace {

// Holds either a loaded workspace or a pointer to the bundled one.
struct PyWorkspace {
	std::shared_ptr<const Workspace> owned;
	const Workspace *ws = nullptr;

	const Workspace &get() const { return *ws; }
};

PyWorkspace builtin()
{
	PyWorkspace w;
	w.ws = &builtin_workspace();
	return w;
}

PyWorkspace load(const std::string &path)
{
	PyWorkspace w;
	w.owned = std::make_shared<const Workspace>(load_workspace(path));
	w.ws = w.owned.get();
	return w;
}

CommandArgs to_args(const std::map<std::string, std::string> &opts)
{
	CommandArgs a;
	for (const auto &[k, v] : opts) {
		if (k == "action")
			a.action = v;
		else if (k == "algebra")
			a.algebra = v;
		else if (k == "hopf")
			a.hopf = v;
		else if (k == "lie")
			a.lie = v;
		else if (k == "representation")
			a.representation = v;
		else if (k == "ideal")
			a.ideal = v;
		else if (k == "target")
			a.target = v;
		else if (k == "values")
			a.values = v;
		else if (k == "values2")
			a.values2 = v;
		else if (k == "p")
			a.p = std::stol(v);
		else if (k == "truncation")
			a.truncation = static_cast<unsigned>(std::stoul(v));
		else if (k == "bound")
			a.bound = std::stoull(v);
		else
			throw UsageError("unknown option '" + k + "'");
	}
	return a;
}

template <class M>
std::vector<std::string> keys(const M &m)
{
	std::vector<std::string> out;
	for (const auto &[k, _] : m)
		out.push_back(k);
	return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "Exact finite-dimensional Hopf action workbench";

	py::register_exception<Error>(m, "HopfactError", PyExc_RuntimeError);

	py::class_<PyWorkspace>(m, "Workspace")
	    .def_static("builtin", &builtin, "The bundled fixture corpus")
	    .def_static("load", &load, py::arg("path"), "Load a fixture directory or file")
	    .def("algebras", [](const PyWorkspace &w) { return keys(w.get().algebras); })
	    .def("hopf_algebras", [](const PyWorkspace &w) { return keys(w.get().hopfs); })
	    .def("actions", [](const PyWorkspace &w) { return keys(w.get().actions); })
	    .def("lie_actions", [](const PyWorkspace &w) { return keys(w.get().lies); })
	    .def("ideal_names", [](const PyWorkspace &w, const std::string &a) { return w.get().ideal_names(a); })
	    .def("to_json", [](const PyWorkspace &w) { return workspace_to_json(w.get()).dump(); })
	    .def(
	        "run",
	        [](const PyWorkspace &w, const std::string &command, const std::map<std::string, std::string> &opts,
	           bool timings) {
		        Report r;
		        {
			        py::gil_scoped_release release;
			        r = run_command(w.get(), command, to_args(opts));
		        }
		        return py::make_tuple(r.to_json(timings).dump(), r.exit_code());
	        },
	        py::arg("command"), py::arg("options") = std::map<std::string, std::string>{},
	        py::arg("timings") = false,
	        "Run a command; returns (report JSON, exit code)");

	m.def("commands", &command_names);
	m.def("suites", &suite_names);
	m.def("subspace_count", &subspace_count, py::arg("q"), py::arg("n"));
}
