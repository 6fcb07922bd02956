#pragma once

// JSON fixture files.  A fixture file is an object with any of the sections
// "algebras", "hopf", "actions", "representations", "lie" and "ideals", each
// mapping names to objects; docs/schemas.md has one annotated example per kind.
// Matrices are row-major nested arrays with the column convention (column j
// is the image of basis vector j); action tensors are t[i][j] = h_i.a_j.

#include "hopfact/fixtures.hpp"
#include "hopfact/report.hpp"

namespace hopfact {

/// Malformed input: bad JSON, schema violations, unknown or duplicate names,
/// objects failing their verifier.
class InputError : public Error {
  public:
	using Error::Error;
};

Field field_from_json(const Json &j);
Json field_to_json(const Field &f);
Scalar scalar_from_json(const Field &f, const Json &j);
Vec vec_from_json(const Field &f, const Json &j, std::size_t n);

FiniteAlgebra algebra_from_json(const Json &j);
Json algebra_to_json(const FiniteAlgebra &a);
HopfAlgebra hopf_from_json(const Json &j);
Json hopf_to_json(const HopfAlgebra &h);

/// Loads every *.json file of a directory (or a single file), in name order.
Workspace load_workspace(const std::string &path);
/// Parses one fixture document into ws.  Objects may reference names
/// already present in ws.
void load_document(Workspace &ws, const Json &doc);
Json workspace_to_json(const Workspace &ws);
/// One file per section inside dir.
void write_workspace(const Workspace &ws, const std::string &dir);

} // namespace hopfact
