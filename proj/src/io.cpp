#include "hopfact/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace hopfact {

namespace fs = std::filesystem;

namespace {

const Json &need(const Json &j, const char *key, const std::string &where)
{
	if (!j.is_object() || !j.contains(key))
		throw InputError(where + ": missing \"" + key + "\"");
	return j.at(key);
}

std::size_t need_size(const Json &j, const char *key, const std::string &where)
{
	const Json &v = need(j, key, where);
	if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
		throw InputError(where + ": \"" + key + "\" must be a nonnegative integer");
	return v.get<std::size_t>();
}

void need_array(const Json &j, std::size_t n, const std::string &where)
{
	if (!j.is_array() || j.size() != n)
		throw InputError(where + ": expected an array of length " + std::to_string(n));
}

Matrix images_from_json(const Field &f, const Json &j, std::size_t rows, std::size_t cols, const std::string &where)
{
	// j[c] lists the coordinates of the image of basis vector c
	need_array(j, cols, where);
	Matrix m(f, rows, cols);
	for (std::size_t c = 0; c < cols; ++c)
		m.set_column(c, vec_from_json(f, j[c], rows));
	return m;
}

Json images_to_json(const Matrix &m)
{
	Json j = Json::array();
	for (std::size_t c = 0; c < m.cols(); ++c)
		j.push_back(vec_json(m.field(), m.column(c)));
	return j;
}

Matrix rows_from_json(const Field &f, const Json &j, std::size_t rows, std::size_t cols, const std::string &where)
{
	need_array(j, rows, where);
	Matrix m(f, rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
		m.set_row(r, vec_from_json(f, j[r], cols));
	return m;
}

Json rows_to_json(const Matrix &m)
{
	Json j = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		j.push_back(vec_json(m.field(), m.row(r)));
	return j;
}

std::vector<SparseVec> products_from_json(const Field &f, const Json &j, std::size_t n, const std::string &where)
{
	need_array(j, n, where + ".mult");
	std::vector<SparseVec> products;
	for (std::size_t i = 0; i < n; ++i) {
		need_array(j[i], n, where + ".mult[" + std::to_string(i) + "]");
		for (std::size_t k = 0; k < n; ++k)
			products.push_back(sparsify(vec_from_json(f, j[i][k], n)));
	}
	return products;
}

Json products_to_json(const FiniteAlgebra &a)
{
	Json j = Json::array();
	for (std::size_t i = 0; i < a.dim(); ++i) {
		Json row = Json::array();
		for (std::size_t k = 0; k < a.dim(); ++k)
			row.push_back(vec_json(a.field(), densify(a.product(i, k), a.dim())));
		j.push_back(std::move(row));
	}
	return j;
}

} // namespace

Field field_from_json(const Json &j)
{
	const std::string where = "field";
	const Json &k = need(j, "kind", where);
	if (!k.is_string())
		throw InputError("field: \"kind\" must be a string");
	if (k == "rationals")
		return Field::rationals();
	if (k == "prime-field") {
		const Json &p = need(j, "p", where);
		if (!p.is_number_integer() || !is_prime_number(p.get<long>()))
			throw InputError("field: \"p\" must be a prime");
		return Field::prime(p.get<long>());
	}
	throw InputError("field: unknown kind " + k.dump());
}

Json field_to_json(const Field &f)
{
	if (f.is_rationals())
		return {{"kind", "rationals"}};
	return {{"kind", "prime-field"}, {"p", f.p()}};
}

Scalar scalar_from_json(const Field &f, const Json &j)
{
	try {
		if (j.is_string())
			return f.parse(j.get<std::string>());
		if (j.is_number_integer())
			return f.from_int(j.get<long>());
	} catch (const InputError &) {
		throw;
	} catch (const std::exception &e) {
		throw InputError("bad scalar " + j.dump() + ": " + e.what());
	}
	throw InputError("scalars must be strings or integers, got " + j.dump());
}

Vec vec_from_json(const Field &f, const Json &j, std::size_t n)
{
	need_array(j, n, "vector");
	Vec v(n);
	for (std::size_t i = 0; i < n; ++i)
		v[i] = scalar_from_json(f, j[i]);
	return v;
}

FiniteAlgebra algebra_from_json(const Json &j)
{
	const std::string where = "algebra";
	Field f = field_from_json(need(j, "field", where));
	const std::size_t n = need_size(j, "dim", where);
	auto products = products_from_json(f, need(j, "mult", where), n, where);
	Vec unit = vec_from_json(f, need(j, "unit", where), n);
	std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string();
	return FiniteAlgebra(f, n, std::move(products), std::move(unit), name);
}

Json algebra_to_json(const FiniteAlgebra &a)
{
	Json j;
	j["field"] = field_to_json(a.field());
	j["dim"] = a.dim();
	j["mult"] = products_to_json(a);
	j["unit"] = vec_json(a.field(), a.unit());
	return j;
}

HopfAlgebra hopf_from_json(const Json &j)
{
	const std::string where = "hopf";
	Field f = field_from_json(need(j, "field", where));
	std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string();
	if (j.contains("group_table")) {
		const Json &t = j.at("group_table");
		if (!t.is_array())
			throw InputError("hopf: group_table must be an array of rows");
		std::vector<std::vector<std::size_t>> table;
		for (const auto &row : t) {
			if (!row.is_array())
				throw InputError("hopf: group_table must be an array of rows");
			std::vector<std::size_t> r;
			for (const auto &x : row) {
				if (!x.is_number_unsigned())
					throw InputError("hopf: group_table entries must be element indices");
				r.push_back(x.get<std::size_t>());
			}
			table.push_back(std::move(r));
		}
		try {
			return group_algebra(f, table, name);
		} catch (const Error &e) {
			throw InputError(std::string("hopf: ") + e.what());
		}
	}
	const std::size_t n = need_size(j, "dim", where);
	FiniteAlgebra alg(f, n, products_from_json(f, need(j, "mult", where), n, where),
	                  vec_from_json(f, need(j, "unit", where), n), name);
	// n^2 x n, column j = Delta e_j
	Matrix comul = rows_from_json(f, need(j, "comul", where), n * n, n, where + ".comul");
	Vec counit = vec_from_json(f, need(j, "counit", where), n);
	Matrix s = rows_from_json(f, need(j, "antipode", where), n, n, where + ".antipode");
	return HopfAlgebra(std::move(alg), std::move(comul), std::move(counit), std::move(s), name);
}

Json hopf_to_json(const HopfAlgebra &h)
{
	const std::size_t n = h.dim();
	Json j;
	j["field"] = field_to_json(h.field());
	j["dim"] = n;
	j["mult"] = products_to_json(h.algebra());
	j["unit"] = vec_json(h.field(), h.algebra().unit());
	j["comul"] = rows_to_json(h.comul_matrix());
	j["counit"] = vec_json(h.field(), h.counit());
	j["antipode"] = rows_to_json(h.antipode());
	return j;
}

namespace {

const char *const kSections[] = {"algebras", "hopf", "actions", "representations", "lie", "ideals"};

std::string label(const char *section, const std::string &name) { return std::string(section) + " '" + name + "'"; }

void add_checked(const std::function<void()> &fn)
{
	try {
		fn();
	} catch (const InputError &) {
		throw;
	} catch (const Error &e) {
		throw InputError(e.what());
	} catch (const nlohmann::json::exception &e) {
		throw InputError(e.what());
	}
}

} // namespace

void load_document(Workspace &ws, const Json &doc)
{
	if (!doc.is_object())
		throw InputError("a fixture document must be a JSON object");
	for (const auto &[key, _] : doc.items())
		if (std::find_if(std::begin(kSections), std::end(kSections), [&](const char *s) { return key == s; }) ==
		    std::end(kSections))
			throw InputError("unknown fixture section \"" + key + "\"");
	static const Json empty = Json::object();
	// returns a reference: iterating items() of a temporary would dangle
	auto section = [&](const char *s) -> const Json & {
		if (!doc.contains(s))
			return empty;
		if (!doc.at(s).is_object())
			throw InputError(std::string("section \"") + s + "\" must map names to objects");
		return doc.at(s);
	};
	for (const auto &[name, j] : section("algebras").items())
		add_checked([&, &name = name, &j = j] {
			try {
				ws.add(name, algebra_from_json(j));
			} catch (const InputError &e) {
				throw InputError(label("algebra", name) + ": " + e.what());
			}
		});
	for (const auto &[name, j] : section("hopf").items())
		add_checked([&, &name = name, &j = j] {
			try {
				ws.add(name, hopf_from_json(j));
			} catch (const InputError &e) {
				throw InputError(label("hopf", name) + ": " + e.what());
			}
		});
	for (const auto &[name, j] : section("actions").items())
		add_checked([&, &name = name, &j = j] {
			const std::string where = label("action", name);
			const HopfAlgebra &h = ws.hopf(need(j, "hopf", where).get<std::string>());
			const FiniteAlgebra &a = ws.algebra(need(j, "algebra", where).get<std::string>());
			if (h.field() != a.field())
				throw InputError(where + ": Hopf algebra and algebra live over different fields");
			const Json &t = need(j, "tensor", where);
			need_array(t, h.dim(), where + ".tensor");
			std::vector<Matrix> ops;
			for (std::size_t i = 0; i < h.dim(); ++i)
				ops.push_back(images_from_json(a.field(), t[i], a.dim(), a.dim(), where + ".tensor"));
			ws.add(name, ModuleAlgebraAction(h, a, std::move(ops)));
		});
	for (const auto &[name, j] : section("representations").items())
		add_checked([&, &name = name, &j = j] {
			const std::string where = label("representation", name);
			const HopfAlgebra &h = ws.hopf(need(j, "hopf", where).get<std::string>());
			const Json &rho = need(j, "rho", where);
			if (!rho.is_object() || rho.size() != h.dim())
				throw InputError(where + ": rho needs one matrix per Hopf basis index");
			std::vector<Matrix> mats(h.dim());
			std::size_t dim = 0;
			for (const auto &[key, m] : rho.items()) {
				std::size_t idx;
				try {
					idx = std::stoul(key);
				} catch (...) {
					throw InputError(where + ": rho keys must be basis indices");
				}
				if (idx >= h.dim() || !m.is_array() || m.empty())
					throw InputError(where + ": bad rho entry \"" + key + "\"");
				dim = m.size();
				std::vector<Vec> rows;
				for (const auto &r : m)
					rows.push_back(vec_from_json(h.field(), r, dim));
				mats[idx] = Matrix::from_rows(h.field(), dim, rows);
			}
			for (const auto &m : mats)
				if (m.rows() != dim)
					throw InputError(where + ": rho matrices differ in size");
			ws.add(name, Representation{h, dim, std::move(mats), name});
		});
	for (const auto &[name, j] : section("lie").items())
		add_checked([&, &name = name, &j = j] {
			const std::string where = label("Lie action", name);
			const FiniteAlgebra &a = ws.algebra(need(j, "algebra", where).get<std::string>());
			const Json &d = need(j, "derivations", where);
			if (!d.is_array())
				throw InputError(where + ": derivations must be an array");
			LieAction l{a, {}, {}, name};
			for (const auto &m : d)
				l.derivations.push_back(rows_from_json(a.field(), m, a.dim(), a.dim(), where + ".derivations"));
			const std::size_t m = l.derivations.size();
			const Json &b = need(j, "brackets", where);
			need_array(b, m, where + ".brackets");
			for (const auto &row : b) {
				need_array(row, m, where + ".brackets");
				std::vector<Vec> r;
				for (const auto &v : row)
					r.push_back(vec_from_json(a.field(), v, m));
				l.brackets.push_back(std::move(r));
			}
			ws.add(name, std::move(l));
		});
	for (const auto &[name, j] : section("ideals").items())
		add_checked([&, &name = name, &j = j] {
			const std::string where = label("ideal", name);
			const std::string alg = need(j, "algebra", where).get<std::string>();
			const FiniteAlgebra &a = ws.algebra(alg);
			const Json &g = need(j, "generators", where);
			if (!g.is_array())
				throw InputError(where + ": generators must be an array");
			std::vector<Vec> gens;
			for (const auto &v : g)
				gens.push_back(vec_from_json(a.field(), v, a.dim()));
			// an entry may carry an explicit "name" when two algebras share one
			std::string iname = j.contains("name") ? j.at("name").get<std::string>() : name;
			ws.add_ideal(alg, iname, std::move(gens));
		});
}

Workspace load_workspace(const std::string &path)
{
	std::vector<fs::path> files;
	std::error_code ec;
	if (fs::is_directory(path, ec)) {
		for (const auto &e : fs::directory_iterator(path))
			if (e.path().extension() == ".json")
				files.push_back(e.path());
		std::sort(files.begin(), files.end());
	} else if (fs::exists(path, ec)) {
		files.push_back(path);
	} else {
		throw InputError("fixture path '" + path + "' does not exist");
	}
	Json merged = Json::object();
	for (const auto &file : files) {
		std::ifstream in(file);
		Json doc;
		try {
			doc = Json::parse(in);
		} catch (const nlohmann::json::exception &e) {
			throw InputError(file.string() + ": " + e.what());
		}
		if (!doc.is_object())
			throw InputError(file.string() + ": a fixture document must be a JSON object");
		for (const auto &[section, objects] : doc.items()) {
			if (!objects.is_object())
				throw InputError(file.string() + ": section \"" + section + "\" must map names to objects");
			for (const auto &[name, obj] : objects.items()) {
				if (merged.contains(section) && merged[section].contains(name))
					throw InputError(file.string() + ": duplicate " + section + " name '" + name + "'");
				merged[section][name] = obj;
			}
		}
	}
	Workspace ws;
	load_document(ws, merged);
	return ws;
}

Json workspace_to_json(const Workspace &ws)
{
	Json doc;
	for (const auto &[name, a] : ws.algebras)
		doc["algebras"][name] = algebra_to_json(a);
	for (const auto &[name, h] : ws.hopfs)
		doc["hopf"][name] = hopf_to_json(h);
	for (const auto &[name, act] : ws.actions) {
		Json j;
		j["hopf"] = ws.hopf_name(act.hopf());
		j["algebra"] = ws.algebra_name(act.algebra());
		Json t = Json::array();
		for (const auto &m : act.ops())
			t.push_back(images_to_json(m));
		j["tensor"] = std::move(t);
		doc["actions"][name] = std::move(j);
	}
	for (const auto &[name, r] : ws.representations) {
		Json j;
		j["hopf"] = ws.hopf_name(r.hopf);
		for (std::size_t i = 0; i < r.rho.size(); ++i)
			j["rho"][std::to_string(i)] = rows_to_json(r.rho[i]);
		doc["representations"][name] = std::move(j);
	}
	for (const auto &[name, l] : ws.lies) {
		Json j;
		j["algebra"] = ws.algebra_name(l.algebra);
		Json d = Json::array();
		for (const auto &m : l.derivations)
			d.push_back(rows_to_json(m));
		j["derivations"] = std::move(d);
		Json b = Json::array();
		for (const auto &row : l.brackets) {
			Json r = Json::array();
			for (const auto &v : row)
				r.push_back(vec_json(l.field(), v));
			b.push_back(std::move(r));
		}
		j["brackets"] = std::move(b);
		doc["lie"][name] = std::move(j);
	}
	for (const auto &[alg, ideals] : ws.ideals)
		for (const auto &[name, fx] : ideals) {
			Json j;
			j["algebra"] = alg;
			j["name"] = name;
			Json g = Json::array();
			for (const auto &v : fx.generators)
				g.push_back(vec_json(ws.algebra(alg).field(), v));
			j["generators"] = std::move(g);
			doc["ideals"][alg + "/" + name] = std::move(j);
		}
	return doc;
}

void write_workspace(const Workspace &ws, const std::string &dir)
{
	fs::create_directories(dir);
	Json doc = workspace_to_json(ws);
	for (const char *section : kSections) {
		if (!doc.contains(section))
			continue;
		std::ofstream out(fs::path(dir) / (std::string(section) + ".json"));
		out << Json{{section, doc[section]}}.dump(1, '\t') << "\n";
	}
}

} // namespace hopfact
