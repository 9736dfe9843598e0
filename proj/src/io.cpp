#include "trop/io.hpp"

#include "trop/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace trop {

namespace {

Error schema(const std::string& msg)
{
	return Error("schema_error", msg);
}

const json& field_of(const json& j, const char* key, const std::string& where)
{
	if (!j.is_object()) throw schema(where + ": expected an object");
	auto it = j.find(key);
	if (it == j.end()) throw schema(where + ": missing \"" + key + "\"");
	return *it;
}

Q rational_of(const json& j, const std::string& where)
{
	try {
		if (j.is_number_integer()) return Q(j.get<long>());
		if (j.is_string()) return parse_rational(j.get<std::string>());
	} catch (const std::invalid_argument& e) {
		throw Error("parse_error", where + ": " + e.what());
	}
	throw schema(where + ": expected a rational as string or integer");
}

json qvec(const QVec& v)
{
	json a = json::array();
	for (auto& x : v) a.push_back(to_string(x));
	return a;
}

json exps(const std::vector<Exp>& v)
{
	json a = json::array();
	for (auto& e : v) a.push_back(e);
	return a;
}

json multimap_json(const FilteredAlgebra& src, const FilteredAlgebra& dst, const MultiMap& M)
{
	json a = json::array();
	for (auto& [t, out] : M) {
		json in = json::array();
		for (int i : t) in.push_back(src.basis[i].name);
		a.push_back({{"in", in}, {"out", element_to_json(dst, out)}});
	}
	return a;
}

void read_maps(const json& maps, char prefix, const FilteredAlgebra& src, const FilteredAlgebra& dst, int kmax,
               std::vector<MultiMap>& out)
{
	out.assign(kmax + 1, {});
	if (!maps.is_object()) throw schema("\"maps\" must be an object");
	for (auto& [key, entries] : maps.items()) {
		std::string digits = key.substr(key.size() > 0 && key[0] == prefix ? 1 : 0);
		if (key.empty() || key[0] != prefix) throw schema("unknown map key \"" + key + "\"");
		digits.erase(0, digits.find_first_not_of(' '));
		if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
			throw schema("unknown map key \"" + key + "\"");
		int k = std::stoi(digits);
		if (k > kmax) throw schema("map \"" + key + "\" above kmax " + std::to_string(kmax));
		if (!entries.is_array()) throw schema("\"" + key + "\" must be an array");
		for (auto& e : entries) {
			auto& in = field_of(e, "in", key);
			if (!in.is_array() || (int)in.size() != k) throw schema(key + ": \"in\" must list " + std::to_string(k) + " names");
			Tuple t;
			for (auto& nm : in) {
				if (!nm.is_string()) throw schema(key + ": input names must be strings");
				int i = src.index(nm.get<std::string>());
				if (i < 0) throw schema(key + ": unknown basis element " + nm.get<std::string>());
				t.push_back(i);
			}
			Element v = element_from_json(dst, field_of(e, "out", key));
			auto& slot = out[k][t];
			slot = slot.empty() ? v : add(slot, v);
			if (is_zero(slot)) out[k].erase(t);
		}
	}
}

Field field_from(const json& j, Field fallback)
{
	auto it = j.find("field");
	if (it == j.end()) return fallback;
	if (*it == "F2") return Field::F2;
	if (*it == "Q") return Field::Q;
	throw schema("\"field\" must be \"F2\" or \"Q\"");
}

// ---- svg helpers

struct Frame {
	double x0, x1, y0, y1;
	double W = 480, H = 480, pad = 24;
	double X(double x) const { return pad + (x - x0) / (x1 - x0) * (W - 2 * pad); }
	double Y(double y) const { return H - pad - (y - y0) / (y1 - y0) * (H - 2 * pad); }
};

std::string num(double v)
{
	std::ostringstream s;
	s.precision(6);
	s << v;
	return s.str();
}

std::string header(const Frame& f)
{
	return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(f.W) + "\" height=\"" + num(f.H) +
	       "\" viewBox=\"0 0 " + num(f.W) + " " + num(f.H) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string polyline(const Frame& f, const std::vector<std::pair<double, double>>& pts, const char* colour)
{
	std::string s = "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"";
	for (auto& [x, y] : pts) s += num(f.X(x)) + "," + num(f.Y(y)) + " ";
	return s + "\"/>\n";
}

std::string line(const Frame& f, double ax, double ay, double bx, double by, const char* colour, double w = 1)
{
	return "<line x1=\"" + num(f.X(ax)) + "\" y1=\"" + num(f.Y(ay)) + "\" x2=\"" + num(f.X(bx)) + "\" y2=\"" +
	       num(f.Y(by)) + "\" stroke=\"" + colour + "\" stroke-width=\"" + num(w) + "\"/>\n";
}

std::string label(double x, double y, const std::string& text)
{
	return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"monospace\" font-size=\"11\">" + text +
	       "</text>\n";
}

std::string curves(const std::vector<std::vector<std::pair<double, double>>>& series, const char* const* colours,
                   const std::vector<std::string>& names)
{
	double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
	for (auto& s : series)
		for (auto& [x, y] : s) {
			x0 = std::min(x0, x);
			x1 = std::max(x1, x);
			y0 = std::min(y0, y);
			y1 = std::max(y1, y);
		}
	if (y1 - y0 < 1e-12) y1 = y0 + 1;
	double my = 0.05 * (y1 - y0);
	Frame f{x0, x1, y0 - my, y1 + my};
	std::string s = header(f);
	s += line(f, x0, 0, x1, 0, "#bbb");
	for (size_t i = 0; i < series.size(); ++i) {
		s += polyline(f, series[i], colours[i]);
		s += "<text x=\"" + num(f.pad + 4) + "\" y=\"" + num(f.pad + 12 * (i + 1)) +
		     "\" font-family=\"monospace\" font-size=\"11\" fill=\"" + colours[i] + "\">" + names[i] + "</text>\n";
	}
	return s + "</svg>\n";
}

}  // namespace

json parse_json(const std::string& text)
{
	try {
		return json::parse(text);
	} catch (const json::parse_error& e) {
		size_t line = 1, col = 1;
		for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
			if (text[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
		throw Error("parse_error", "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
	}
}

std::string read_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in) throw Error("io_error", "cannot read " + path);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

TropicalPolynomial polynomial_from_json(const json& j)
{
	auto& nj = field_of(j, "n", "polynomial");
	if (!nj.is_number_integer() || nj.get<long>() < 1) throw schema("\"n\" must be a positive integer");
	int n = nj.get<int>();
	auto& mons = field_of(j, "monomials", "polynomial");
	if (!mons.is_array()) throw schema("\"monomials\" must be an array");
	if (mons.empty()) throw Error("parse_error", "empty monomial list");
	std::map<Exp, Q> terms;
	for (size_t k = 0; k < mons.size(); ++k) {
		std::string where = "monomial " + std::to_string(k);
		auto& e = field_of(mons[k], "exp", where);
		if (!e.is_array() || (int)e.size() != n) throw schema(where + ": \"exp\" needs " + std::to_string(n) + " integers");
		Exp v;
		for (auto& x : e) {
			if (!x.is_number_integer()) throw schema(where + ": exponents must be integers");
			v.push_back(x.get<long>());
		}
		Q a = rational_of(field_of(mons[k], "coeff", where), where);
		// a repeated exponent is a tropical sum: keep the smaller coefficient
		auto it = terms.find(v);
		if (it == terms.end() || a < it->second) terms[v] = a;
	}
	return TropicalPolynomial(n, std::vector<std::pair<Exp, Q>>(terms.begin(), terms.end()));
}

json to_json(const TropicalPolynomial& phi)
{
	json mons = json::array();
	for (auto& [v, a] : phi.monomials) mons.push_back({{"exp", v}, {"coeff", to_string(a)}});
	return {{"n", phi.n}, {"monomials", mons}};
}

json to_json(const PolyhedralComplex& C)
{
	json cells = json::array();
	for (auto& c : C.cells) {
		json vs = json::array(), rays = json::array();
		for (auto& v : c.vertices) vs.push_back(qvec(v));
		for (auto& r : c.rays) rays.push_back({{"base", qvec(r.base)}, {"direction", r.direction}});
		cells.push_back({{"active", exps(c.active)}, {"dim", c.dim}, {"vertices", vs}, {"rays", rays},
		                 {"lines", exps(c.lines)}, {"bounded", c.bounded()}});
	}
	return {{"n", C.n}, {"cells", cells}};
}

json to_json(const RegularSubdivision& S)
{
	json cells = json::array();
	for (auto& c : S.cells) {
		auto cl = classify_cell(S, c);
		cells.push_back({{"vertices", exps(c.vertices)}, {"points", exps(c.points)}, {"dim", c.dim},
		                 {"smooth", cl.smooth}, {"self_intersection", cl.self_intersection}});
	}
	json heights = json::array();
	for (auto& [v, a] : S.heights) heights.push_back({{"exp", v}, {"height", to_string(a)}});
	return {{"n", S.n}, {"dim", S.dim}, {"cells", cells}, {"heights", heights}};
}

json to_json(const PolynomialReport& r)
{
	return {{"smooth", r.smooth}, {"self_intersections", r.total_self_intersections}, {"embedded", r.embedded_lift}};
}

json to_json(const LiftTopology& t)
{
	json j = {{"immersed", t.immersed}, {"punctures", t.punctures}, {"self_intersections", t.self_intersections}};
	j["genus"] = t.genus ? json(*t.genus) : json("immersed-sphere");
	j["euler_characteristic"] = t.euler_characteristic ? json(*t.euler_characteristic) : json(nullptr);
	return j;
}

json analyze_report(const TropicalPolynomial& phi)
{
	json j = {{"polynomial", to_json(phi)},
	          {"tropical_variety", to_json(tropical_variety(phi))},
	          {"dual_subdivision", to_json(dual_subdivision(phi))},
	          {"classify_polynomial", to_json(classify_polynomial(phi))}};
	if (phi.n == 2) j["lift_topology"] = to_json(lift_topology(phi));
	else j["lift_topology"] = nullptr;
	return j;
}

void write_mesh_jsonl(std::ostream& os, const LagrangianMesh& M)
{
	for (size_t i = 0; i < M.size(); ++i) {
		json q = json::array(), p = json::array();
		for (int k = 0; k < M.n; ++k) {
			q.push_back(M.q_at(i)[k]);
			p.push_back(M.p_at(i)[k]);
		}
		json j = {{"q", q}, {"p", p}, {"chart", std::string(1, M.chart[i])}, {"region", M.region[i]}};
		os << j.dump() << '\n';
	}
}

FilteredAlgebra algebra_from_json(const json& j, Field field)
{
	field = field_from(j, field);
	Q cutoff = 10;
	if (j.contains("cutoff")) cutoff = rational_of(j["cutoff"], "cutoff");
	if (cutoff <= 0) throw schema("\"cutoff\" must be positive");
	int kmax = default_kmax;
	if (j.contains("kmax")) {
		if (!j["kmax"].is_number_integer() || j["kmax"].get<int>() < 0) throw schema("\"kmax\" must be a non-negative integer");
		kmax = j["kmax"].get<int>();
	}
	FilteredAlgebra A = zero_algebra(field, cutoff, kmax);
	auto& basis = field_of(j, "basis", "algebra");
	if (!basis.is_array()) throw schema("\"basis\" must be an array");
	for (auto& b : basis) {
		auto& nm = field_of(b, "name", "basis entry");
		auto& dg = field_of(b, "deg", "basis entry");
		if (!nm.is_string() || !dg.is_number_integer()) throw schema("basis entries need a string name and integer deg");
		A.basis.push_back({nm.get<std::string>(), dg.get<int>()});
	}
	if (j.contains("maps")) read_maps(j["maps"], 'm', A, A, kmax, A.m);
	validate(A);
	return A;
}

json to_json(const FilteredAlgebra& A)
{
	json basis = json::array();
	for (auto& b : A.basis) basis.push_back({{"name", b.name}, {"deg", b.deg}});
	json maps = json::object();
	for (int k = 0; k <= A.kmax; ++k)
		if (!A.m[k].empty()) maps["m" + std::to_string(k)] = multimap_json(A, A, A.m[k]);
	return {{"basis", basis},
	        {"cutoff", to_string(A.cutoff)},
	        {"field", A.field == Field::F2 ? "F2" : "Q"},
	        {"kmax", A.kmax},
	        {"maps", maps}};
}

AInftyHom hom_from_json(const json& j, Field field)
{
	field = field_from(j, field);
	AInftyHom f;
	f.source = algebra_from_json(field_of(j, "source", "homomorphism"), field);
	f.target = algebra_from_json(field_of(j, "target", "homomorphism"), field);
	f.kmax = std::min(f.source.kmax, f.target.kmax);
	if (j.contains("maps")) read_maps(j["maps"], 'f', f.source, f.target, f.kmax, f.f);
	else f.f.assign(f.kmax + 1, {});
	validate(f);
	return f;
}

json to_json(const AInftyHom& f)
{
	json maps = json::object();
	for (int k = 0; k <= f.kmax; ++k)
		if (!f.f[k].empty()) maps["f" + std::to_string(k)] = multimap_json(f.source, f.target, f.f[k]);
	return {{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"maps", maps}};
}

Element element_from_json(const FilteredAlgebra& A, const json& j)
{
	if (!j.is_array()) throw schema("an element is an array of {\"b\", \"c\"}");
	Element out = A.zero();
	for (auto& t : j) {
		auto& b = field_of(t, "b", "element term");
		auto& c = field_of(t, "c", "element term");
		if (!b.is_string()) throw schema("element term: \"b\" must be a basis name");
		int i = A.index(b.get<std::string>());
		if (i < 0) throw schema("element term: unknown basis element " + b.get<std::string>());
		std::string text = c.is_string() ? c.get<std::string>() : c.dump();
		out[i] += parse_novikov(text, A.field, A.cutoff);
	}
	return out;
}

json element_to_json(const FilteredAlgebra& A, const Element& a)
{
	json out = json::array();
	for (int i = 0; i < A.dim(); ++i)
		if (!a[i].is_zero()) out.push_back({{"b", A.basis[i].name}, {"c", to_string(a[i])}});
	return out;
}

json to_json(const FilteredAlgebra& A, const RelationReport& r)
{
	json worst = json::object();
	for (size_t k = 0; k < r.worst.size(); ++k)
		worst[std::to_string(k)] = r.worst[k] ? json(to_string(*r.worst[k])) : json(nullptr);
	json j = {{"pass", r.pass}, {"tuples", r.tuples}, {"worst_valuation", worst}};
	if (r.first) {
		// residuals of homomorphism checks live in the target, so only the
		// names and the valuation are printed when the sizes differ
		json res = (int)r.first->residual.size() == A.dim() ? element_to_json(A, r.first->residual) : json(nullptr);
		j["first_violation"] = {{"arity", r.first->arity},
		                        {"tuple", r.first->tuple},
		                        {"valuation", to_string(r.first->valuation)},
		                        {"residual", res}};
	}
	return j;
}

std::string svg_variety(const TropicalPolynomial& phi, double lo, double hi, const LagrangianMesh* M)
{
	if (phi.n > 2) throw Error("unsupported_dimension", "SVG output is available for n <= 2");
	Frame f{lo, hi, phi.n == 1 ? -1.0 : lo, phi.n == 1 ? 1.0 : hi};
	std::string s = header(f);
	if (M) {
		size_t stride = std::max<size_t>(1, M->size() / 20000);
		for (size_t i = 0; i < M->size(); i += stride) {
			double x = M->q_at(i)[0], y = M->n == 2 ? M->q_at(i)[1] : 0;
			s += "<circle cx=\"" + num(f.X(x)) + "\" cy=\"" + num(f.Y(y)) + "\" r=\"0.8\" fill=\"" +
			     (M->chart[i] == 's' ? "#4a90d9" : "#d98a4a") + "\"/>\n";
		}
	}
	auto C = tropical_variety(phi);
	double far = 4 * (hi - lo + 1);
	for (auto& c : C.cells) {
		auto pt = [&](const QVec& v, int k) { return k < (int)v.size() ? v[k].get_d() : 0.0; };
		if (c.dim == 0) {
			s += "<circle cx=\"" + num(f.X(pt(c.vertices[0], 0))) + "\" cy=\"" + num(f.Y(pt(c.vertices[0], 1))) +
			     "\" r=\"3\" fill=\"black\"/>\n";
			continue;
		}
		if (c.dim != 1 || phi.n != 2) continue;
		if (c.vertices.size() == 2) {
			s += line(f, pt(c.vertices[0], 0), pt(c.vertices[0], 1), pt(c.vertices[1], 0), pt(c.vertices[1], 1), "black", 2);
		}
		for (auto& r : c.rays) {
			double bx = pt(r.base, 0), by = pt(r.base, 1);
			s += line(f, bx, by, bx + far * r.direction[0], by + far * r.direction[1], "black", 2);
		}
		for (auto& d : c.lines) {
			double bx = pt(c.base, 0), by = pt(c.base, 1);
			s += line(f, bx - far * d[0], by - far * d[1], bx + far * d[0], by + far * d[1], "black", 2);
		}
	}
	return s + "</svg>\n";
}

std::string svg_torus(const ArgumentCheck& a)
{
	int res = a.resolution;
	if (res <= 0) throw Error("invalid_parameter", "empty argument raster");
	bool two = a.hit.size() == (size_t)res * res;
	Frame f{0, 1, 0, two ? 1.0 : 0.1};
	std::string s = header(f);
	double cw = (f.W - 2 * f.pad) / res, ch = two ? (f.H - 2 * f.pad) / res : 40;
	for (size_t i = 0; i < a.hit.size(); ++i) {
		int r = two ? (int)(i / res) : (int)i, c = two ? (int)(i % res) : 0;
		const char* fill = a.hit[i] ? (a.target[i] ? "black" : "red") : (a.target[i] ? "#ddd" : nullptr);
		if (!fill) continue;
		// first coordinate to the right, second upwards
		double x = f.pad + r * cw, y = two ? f.H - f.pad - (c + 1) * ch : f.H / 2 - ch / 2;
		s += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cw + 0.05) + "\" height=\"" +
		     num(ch + 0.05) + "\" fill=\"" + fill + "\"/>\n";
	}
	s += label(f.pad, 14, "coverage " + num(a.coverage) + "  spill " + num(a.spill));
	return s + "</svg>\n";
}

std::string svg_profiles(const SurgeryProfile& P, int samples)
{
	double c = P.identity() ? 1 : P.c;
	std::vector<std::pair<double, double>> r, s, id;
	for (int i = 0; i < samples; ++i) {
		double t = c + 2 * c * i / (samples - 1);
		r.emplace_back(t, P.r(t));
		s.emplace_back(t, P.s(t));
		id.emplace_back(t, t);
	}
	static const char* colours[] = {"#c0392b", "#2c7fb8", "#999"};
	return curves({r, s, id}, colours, {"r", "s", "t"});
}

std::string svg_cobordism(const CobordismProfile& G, int samples)
{
	std::vector<std::pair<double, double>> d, g;
	for (auto& [t, v] : G.curve(samples)) {
		d.emplace_back(t, v);
		g.emplace_back(t, G.g(t));
	}
	static const char* colours[] = {"#c0392b", "#2c7fb8"};
	return curves({d, g}, colours, {"g'", "g"});
}

}  // namespace trop
