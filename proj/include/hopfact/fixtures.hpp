#pragma once

// Named objects the CLI and the test batteries work on, plus the bundled
// corpus of small fields, algebras, Hopf algebras, actions and ideals.

#include "hopfact/lie.hpp"

#include <map>

namespace hopfact {

struct IdealFixture {
	std::string algebra;
	std::vector<Vec> generators;
};

struct Workspace {
	std::map<std::string, FiniteAlgebra> algebras;
	std::map<std::string, HopfAlgebra> hopfs;
	std::map<std::string, ModuleAlgebraAction> actions;
	std::map<std::string, Representation> representations;
	std::map<std::string, LieAction> lies;
	/// ideals[algebra][name]
	std::map<std::string, std::map<std::string, IdealFixture>> ideals;

	/// Name of the registered algebra; throws if missing.
	std::string algebra_name(const FiniteAlgebra &a) const;
	std::string hopf_name(const HopfAlgebra &h) const;
	const FiniteAlgebra &algebra(const std::string &name) const;
	const HopfAlgebra &hopf(const std::string &name) const;
	const ModuleAlgebraAction &action(const std::string &name) const;
	const Representation &representation(const std::string &name) const;
	const LieAction &lie(const std::string &name) const;
	/// "zero" and "all" exist for every algebra.
	Subspace ideal(const std::string &algebra, const std::string &name) const;
	std::vector<std::string> ideal_names(const std::string &algebra) const;

	void add(const std::string &name, FiniteAlgebra a);
	void add(const std::string &name, HopfAlgebra h);
	void add(const std::string &name, ModuleAlgebraAction act);
	void add(const std::string &name, Representation r);
	void add(const std::string &name, LieAction l);
	void add_ideal(const std::string &algebra, const std::string &name, std::vector<Vec> gens);
};

/// The bundled corpus, each object verified on construction.
const Workspace &builtin_workspace();

// Building blocks for the corpus, also handy in tests.

/// (kG)* acting on kG by projection onto the graded pieces.
ModuleAlgebraAction grading_action(const HopfAlgebra &group, std::string name = {});
/// Group algebra acting through algebra automorphisms given per group element.
ModuleAlgebraAction group_action(const HopfAlgebra &group, const FiniteAlgebra &a, const std::vector<Matrix> &autos,
                                 std::string name = {});
/// Conjugation a -> u a u^{-1} on M_n by the images of the group elements.
ModuleAlgebraAction conjugation_action(const HopfAlgebra &group, const std::vector<Matrix> &units,
                                       std::string name = {});
/// Commutator derivations [x, -] on M_n for the listed matrices.
std::vector<Matrix> inner_derivations(const FiniteAlgebra &mn, const std::vector<Vec> &elements);

} // namespace hopfact
