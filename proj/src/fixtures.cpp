#include "hopfact/fixtures.hpp"

namespace hopfact {

namespace {

template <class Map>
const typename Map::mapped_type &lookup(const Map &m, const std::string &name, const char *kind)
{
	auto it = m.find(name);
	if (it == m.end())
		throw Error(std::string("unknown ") + kind + " '" + name + "'");
	return it->second;
}

template <class Map, class T>
void insert_new(Map &m, const std::string &name, T value, const char *kind)
{
	if (name.empty())
		throw Error(std::string(kind) + " needs a name");
	if (!m.emplace(name, std::move(value)).second)
		throw Error(std::string("duplicate ") + kind + " name '" + name + "'");
}

std::string violation_text(const std::vector<Violation> &v)
{
	std::string s = v.front().rule;
	if (!v.front().witness.empty()) {
		s += " at (";
		for (std::size_t i = 0; i < v.front().witness.size(); ++i)
			s += (i ? "," : "") + std::to_string(v.front().witness[i]);
		s += ")";
	}
	if (v.size() > 1)
		s += " and " + std::to_string(v.size() - 1) + " more";
	return s;
}

} // namespace

std::string Workspace::algebra_name(const FiniteAlgebra &a) const
{
	if (!a.name().empty()) {
		auto it = algebras.find(a.name());
		if (it != algebras.end() && it->second.same_structure(a))
			return a.name();
	}
	for (const auto &[name, b] : algebras)
		if (b.same_structure(a))
			return name;
	throw Error("algebra is not registered in the workspace");
}

std::string Workspace::hopf_name(const HopfAlgebra &h) const
{
	if (!h.name().empty()) {
		auto it = hopfs.find(h.name());
		if (it != hopfs.end() && it->second.same_structure(h))
			return h.name();
	}
	for (const auto &[name, g] : hopfs)
		if (g.same_structure(h))
			return name;
	throw Error("Hopf algebra is not registered in the workspace");
}

const FiniteAlgebra &Workspace::algebra(const std::string &name) const { return lookup(algebras, name, "algebra"); }
const HopfAlgebra &Workspace::hopf(const std::string &name) const { return lookup(hopfs, name, "Hopf algebra"); }
const ModuleAlgebraAction &Workspace::action(const std::string &name) const
{
	return lookup(actions, name, "action");
}
const Representation &Workspace::representation(const std::string &name) const
{
	return lookup(representations, name, "representation");
}
const LieAction &Workspace::lie(const std::string &name) const { return lookup(lies, name, "Lie action"); }

Subspace Workspace::ideal(const std::string &alg, const std::string &name) const
{
	const FiniteAlgebra &a = algebra(alg);
	if (name == "zero")
		return Subspace(a.field(), a.dim());
	if (name == "all")
		return Subspace::full(a.field(), a.dim());
	auto it = ideals.find(alg);
	if (it == ideals.end() || !it->second.count(name))
		throw Error("unknown ideal '" + name + "' of algebra '" + alg + "'");
	return ideal_generate(a, it->second.at(name).generators);
}

std::vector<std::string> Workspace::ideal_names(const std::string &alg) const
{
	std::vector<std::string> out{"zero"};
	if (auto it = ideals.find(alg); it != ideals.end())
		for (const auto &[name, _] : it->second)
			out.push_back(name);
	out.push_back("all");
	return out;
}

void Workspace::add(const std::string &name, FiniteAlgebra a)
{
	if (auto v = algebra_violations(a); !v.empty())
		throw Error("algebra '" + name + "' is invalid: " + violation_text(v));
	insert_new(algebras, name, a.renamed(name), "algebra");
}

void Workspace::add(const std::string &name, HopfAlgebra h)
{
	if (auto v = hopf_violations(h); !v.empty())
		throw Error("Hopf algebra '" + name + "' is invalid: " + violation_text(v));
	insert_new(hopfs, name, h.renamed(name), "Hopf algebra");
}

void Workspace::add(const std::string &name, ModuleAlgebraAction act)
{
	// keep the registered names on both sides
	act = ModuleAlgebraAction(hopf(hopf_name(act.hopf())), algebra(algebra_name(act.algebra())), act.ops());
	if (auto v = action_violations(act); !v.empty())
		throw Error("action '" + name + "' is invalid: " + violation_text(v));
	insert_new(actions, name, act.renamed(name), "action");
}

void Workspace::add(const std::string &name, Representation r)
{
	if (auto v = representation_violations(r); !v.empty())
		throw Error("representation '" + name + "' is invalid: " + violation_text(v));
	r.name = name;
	insert_new(representations, name, std::move(r), "representation");
}

void Workspace::add(const std::string &name, LieAction l)
{
	for (const auto &c : verify_lie_action(l))
		if (!c.passed)
			throw Error("Lie action '" + name + "' is invalid: " + c.check +
			            (c.witnesses.empty() ? std::string() : " at " + c.witnesses.front()));
	l.name = name;
	insert_new(lies, name, std::move(l), "Lie action");
}

void Workspace::add_ideal(const std::string &alg, const std::string &name, std::vector<Vec> gens)
{
	const FiniteAlgebra &a = algebra(alg);
	if (name == "zero" || name == "all")
		throw Error("ideal names 'zero' and 'all' are reserved");
	for (auto &g : gens) {
		if (g.size() != a.dim())
			throw Error("ideal '" + name + "': generator has the wrong length");
		for (auto &c : g)
			c = a.field().reduce(c);
	}
	insert_new(ideals[alg], name, IdealFixture{alg, std::move(gens)}, "ideal");
}

ModuleAlgebraAction grading_action(const HopfAlgebra &group, std::string name)
{
	const std::size_t n = group.dim();
	std::vector<Matrix> ops;
	for (std::size_t h = 0; h < n; ++h) {
		Matrix m(group.field(), n, n);
		m(h, h) = 1;
		ops.push_back(std::move(m));
	}
	return ModuleAlgebraAction(dual_hopf(group), group.algebra(), std::move(ops), std::move(name));
}

ModuleAlgebraAction group_action(const HopfAlgebra &group, const FiniteAlgebra &a, const std::vector<Matrix> &autos,
                                 std::string name)
{
	return ModuleAlgebraAction(group, a, autos, std::move(name));
}

namespace {

Vec matrix_element(const Matrix &u)
{
	Vec v;
	for (std::size_t i = 0; i < u.rows(); ++i)
		for (std::size_t j = 0; j < u.cols(); ++j)
			v.push_back(u(i, j));
	return v;
}

Matrix rows(const Field &f, std::vector<std::vector<long>> r)
{
	std::vector<Vec> out;
	for (const auto &row : r) {
		Vec v;
		for (long x : row)
			v.push_back(f.from_int(x));
		out.push_back(std::move(v));
	}
	return Matrix::from_rows(f, out.front().size(), out);
}

Vec ints(const Field &f, std::vector<long> v)
{
	Vec out;
	for (long x : v)
		out.push_back(f.from_int(x));
	return out;
}

// Matrix sending basis vector i to basis vector perm[i].
Matrix permutation(const Field &f, const std::vector<std::size_t> &perm)
{
	Matrix m(f, perm.size(), perm.size());
	for (std::size_t i = 0; i < perm.size(); ++i)
		m(perm[i], i) = 1;
	return m;
}

} // namespace

ModuleAlgebraAction conjugation_action(const HopfAlgebra &group, const std::vector<Matrix> &units, std::string name)
{
	const Field &f = group.field();
	const std::size_t n = units.front().rows();
	FiniteAlgebra mn = matrix_algebra(f, n);
	std::vector<Matrix> ops;
	for (const auto &u : units) {
		auto inv = inverse(u);
		if (!inv)
			throw Error("conjugation by a singular matrix");
		ops.push_back(mn.left_mult(matrix_element(u)) * mn.right_mult(matrix_element(*inv)));
	}
	return ModuleAlgebraAction(group, mn, std::move(ops), std::move(name));
}

std::vector<Matrix> inner_derivations(const FiniteAlgebra &mn, const std::vector<Vec> &elements)
{
	std::vector<Matrix> out;
	for (const auto &x : elements)
		out.push_back(mn.left_mult(x) - mn.right_mult(x));
	return out;
}

namespace {

Workspace build()
{
	Workspace w;
	const Field q = Field::rationals(), f2 = Field::prime(2), f3 = Field::prime(3), f7 = Field::prime(7);

	// algebras
	w.add("Q", ground_field_algebra(q));
	w.add("Q2", diagonal_algebra(q, 2));
	w.add("Q3", diagonal_algebra(q, 3));
	w.add("M2Q", matrix_algebra(q, 2));
	w.add("T2Q", upper_triangular2(q));
	w.add("Qx3", truncated_polynomial(q, 3));
	w.add("Qt2", truncated_polynomial(q, 2));
	w.add("Qxy", square_zero_plane(q));
	w.add("F2_2", diagonal_algebra(f2, 2));
	w.add("F2x3", truncated_polynomial(f2, 3));
	w.add("F2t2", truncated_polynomial(f2, 2));
	w.add("F2xy", square_zero_plane(f2));
	w.add("M2F2", matrix_algebra(f2, 2));
	w.add("F3_3", diagonal_algebra(f3, 3));
	w.add("F3x3", truncated_polynomial(f3, 3));

	// Hopf algebras
	w.add("QC2", group_algebra(q, cyclic_group_table(2)));
	w.add("QC3", group_algebra(q, cyclic_group_table(3)));
	w.add("QS3", group_algebra(q, symmetric3_table()));
	w.add("F2C2", group_algebra(f2, cyclic_group_table(2)));
	w.add("F3C3", group_algebra(f3, cyclic_group_table(3)));
	w.add("F7C3", group_algebra(f7, cyclic_group_table(3)));
	w.add("QC2*", dual_hopf(w.hopf("QC2")));
	w.add("F2C2*", dual_hopf(w.hopf("F2C2")));
	w.add("H4", sweedler(q));
	w.add("F2prim", truncated_primitive(f2));
	w.add("Qk", trivial_hopf(q));

	// the underlying algebras of the group algebras carry ideals too
	w.add("QC2", w.hopf("QC2").algebra());
	w.add("F2C2", w.hopf("F2C2").algebra());
	w.add("QC2*", w.hopf("QC2*").algebra());
	w.add("F2C2*", w.hopf("F2C2*").algebra());
	w.add("H4", w.hopf("H4").algebra());
	w.add("H4*", dual_hopf(w.hopf("H4")).algebra());
	w.add("QS3*", dual_hopf(w.hopf("QS3")).algebra());

	const HopfAlgebra &qc2 = w.hopf("QC2"), &f2c2 = w.hopf("F2C2");
	w.add("swap", group_action(qc2, w.algebra("Q2"),
	                           {Matrix::identity(q, 2), permutation(q, {1, 0})}));
	w.add("swap2", group_action(f2c2, w.algebra("F2_2"),
	                            {Matrix::identity(f2, 2), permutation(f2, {1, 0})}));
	w.add("gradingQ", grading_action(qc2));
	w.add("grading2", grading_action(f2c2));
	w.add("conj", conjugation_action(qc2, {Matrix::identity(q, 2), rows(q, {{1, 0}, {0, -1}})}));
	w.add("conj2", conjugation_action(f2c2, {Matrix::identity(f2, 2), rows(f2, {{0, 1}, {1, 0}})}));
	w.add("trivial-Q2", ModuleAlgebraAction::trivial(qc2, w.algebra("Q2")));
	w.add("trivial-M2", ModuleAlgebraAction::trivial(qc2, w.algebra("M2Q")));
	w.add("trivial-Qx3", ModuleAlgebraAction::trivial(w.hopf("Qk"), w.algebra("Qx3")));
	w.add("trivial-F2C2", ModuleAlgebraAction::trivial(f2c2, w.algebra("F2C2")));
	w.add("neg-Qxy", group_action(qc2, w.algebra("Qxy"), {Matrix::identity(q, 3), rows(q, {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}})}));
	// x -> x + x^2 on F2[x]/(x^3), an involution
	w.add("frob2", group_action(f2c2, w.algebra("F2x3"),
	                            {Matrix::identity(f2, 3), rows(f2, {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}})}));
	{
		// g.t = -t, x.t = 1
		Matrix g = rows(q, {{1, 0}, {0, -1}}), x = rows(q, {{0, 1}, {0, 0}});
		w.add("sweedler-act", ModuleAlgebraAction(w.hopf("H4"), w.algebra("Qt2"),
		                                          {Matrix::identity(q, 2), g, x, g * x}));
	}
	w.add("hitC2", hit_action(qc2));
	w.add("hit2", hit_action(f2c2));
	w.add("hitH4", hit_action(w.hopf("H4")));
	w.add("hitS3", hit_action(w.hopf("QS3")));
	{
		// S3 permuting the idempotents of Q^3: e, (12), (23), (13), (123), (132)
		std::vector<std::vector<std::size_t>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
		std::vector<Matrix> ops;
		for (const auto &p : perms)
			ops.push_back(permutation(q, p));
		w.add("s3perm", group_action(w.hopf("QS3"), w.algebra("Q3"), ops));
	}
	{
		std::vector<Matrix> ops;
		for (std::size_t s = 0; s < 3; ++s)
			ops.push_back(permutation(f3, {s % 3, (s + 1) % 3, (s + 2) % 3}));
		w.add("cyc3", group_action(w.hopf("F3C3"), w.algebra("F3_3"), ops));
	}
	// x primitive acting as d/dt on F2[t]/(t^2)
	w.add("prim2", ModuleAlgebraAction(w.hopf("F2prim"), w.algebra("F2t2"),
	                                   {Matrix::identity(f2, 2), rows(f2, {{0, 1}, {0, 0}})}));

	// representations
	w.add("sign", Representation{qc2, 1, {rows(q, {{1}}), rows(q, {{-1}})}, {}});
	w.add("trivC2", Representation{qc2, 1, {rows(q, {{1}}), rows(q, {{1}})}, {}});
	w.add("regC2", Representation{qc2, 2, {Matrix::identity(q, 2), permutation(q, {1, 0})}, {}});
	w.add("permS3", Representation{w.hopf("QS3"), 3, w.action("s3perm").ops(), {}});
	{
		Matrix r = rows(f7, {{0, -1}, {1, -1}});
		w.add("rotC3", Representation{w.hopf("F7C3"), 2, {Matrix::identity(f7, 2), r, r * r}, {}});
	}

	// Lie actions
	w.add("euler", LieAction{w.algebra("Qx3"), {rows(q, {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}})}, abelian_brackets(1), {}});
	w.add("shift", LieAction{w.algebra("Qxy"), {rows(q, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}})}, abelian_brackets(1), {}});
	w.add("toric", LieAction{w.algebra("Qxy"),
	                         {rows(q, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}), rows(q, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})},
	                         abelian_brackets(2), {}});
	{
		// ad e, ad f, ad h with [h,e] = 2e, [h,f] = -2f, [e,f] = h
		const FiniteAlgebra &m2 = w.algebra("M2Q");
		auto br = abelian_brackets(3);
		br[0][1] = ints(q, {0, 0, 1});
		br[1][0] = ints(q, {0, 0, -1});
		br[2][0] = ints(q, {2, 0, 0});
		br[0][2] = ints(q, {-2, 0, 0});
		br[2][1] = ints(q, {0, -2, 0});
		br[1][2] = ints(q, {0, 2, 0});
		w.add("sl2ad", LieAction{m2, inner_derivations(m2, {ints(q, {0, 1, 0, 0}), ints(q, {0, 0, 1, 0}), ints(q, {1, 0, 0, -1})}),
		                         br, {}});
	}
	{
		// ad E11, ad E12 on the upper triangular matrices, [E11, E12] = E12
		const FiniteAlgebra &t2 = w.algebra("T2Q");
		auto br = abelian_brackets(2);
		br[0][1] = ints(q, {0, 1});
		br[1][0] = ints(q, {0, -1});
		w.add("borel", LieAction{t2, inner_derivations(t2, {ints(q, {1, 0, 0}), ints(q, {0, 1, 0})}), br, {}});
	}
	w.add("eulerF2", LieAction{w.algebra("F2x3"), {rows(f2, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}})}, abelian_brackets(1), {}});
	w.add("shiftF2", LieAction{w.algebra("F2xy"), {rows(f2, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}})}, abelian_brackets(1), {}});
	w.add("eulerF3", LieAction{w.algebra("F3x3"), {rows(f3, {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}})}, abelian_brackets(1), {}});

	// ideals
	w.add_ideal("Q2", "e1", {ints(q, {1, 0})});
	w.add_ideal("Q2", "e2", {ints(q, {0, 1})});
	w.add_ideal("F2_2", "e1", {ints(f2, {1, 0})});
	w.add_ideal("Q3", "e1", {ints(q, {1, 0, 0})});
	w.add_ideal("QC2", "aug", {ints(q, {1, -1})});
	w.add_ideal("QC2", "plus", {ints(q, {1, 1})});
	w.add_ideal("F2C2", "aug", {ints(f2, {1, 1})});
	w.add_ideal("Qx3", "x", {ints(q, {0, 1, 0})});
	w.add_ideal("F2x3", "x", {ints(f2, {0, 1, 0})});
	w.add_ideal("F2x3", "x2", {ints(f2, {0, 0, 1})});
	w.add_ideal("F3x3", "x", {ints(f3, {0, 1, 0})});
	w.add_ideal("Qxy", "x", {ints(q, {0, 1, 0})});
	w.add_ideal("Qxy", "m", {ints(q, {0, 1, 0}), ints(q, {0, 0, 1})});
	w.add_ideal("F2xy", "x", {ints(f2, {0, 1, 0})});
	w.add_ideal("F2xy", "m", {ints(f2, {0, 1, 0}), ints(f2, {0, 0, 1})});
	w.add_ideal("T2Q", "upper", {ints(q, {0, 1, 0})});
	w.add_ideal("F2t2", "t", {ints(f2, {0, 1})});
	return w;
}

} // namespace

const Workspace &builtin_workspace()
{
	static const Workspace w = build();
	return w;
}

} // namespace hopfact
