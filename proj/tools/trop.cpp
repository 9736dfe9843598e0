// Command-line front end: analyze, lift, profiles, cobordism, ainfty, index.
// Reports go to stdout as JSON; with --out they are also written to files
// next to the SVG pictures. Failures print {"error": {"code", "message"}}
// on stderr.

#include "trop/error.hpp"
#include "trop/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace trop;
namespace fs = std::filesystem;

namespace {

// exit statuses
constexpr int check_failed = 1;
constexpr int bad_input = 2;
constexpr int run_error = 3;

struct RunConfig {
	std::string input, out;
	double epsilon = 0.05, c = 0, shape = 0, grid = 0, delta = 0.1;
	std::string window, rays, field = "F2";
	std::string cutoff;
};

// Values from a JSON config file fill every option not given on the
// command line.
void apply_config(const std::string& path, CLI::App& app, RunConfig& cfg)
{
	if (path.empty()) return;
	json j = parse_json(read_file(path));
	if (!j.is_object()) throw Error("schema_error", "config must be a JSON object");
	auto given = [&](const char* name) {
		try {
			return app.count(std::string("--") + name) > 0;
		} catch (const CLI::OptionNotFound&) {
			return false;
		}
	};
	auto num = [&](const char* key, double& slot) {
		if (!j.contains(key) || given(key)) return;
		if (!j[key].is_number()) throw Error("schema_error", std::string("config \"") + key + "\" must be a number");
		slot = j[key].get<double>();
	};
	auto str = [&](const char* key, std::string& slot) {
		if (!j.contains(key) || given(key)) return;
		slot = j[key].is_string() ? j[key].get<std::string>() : j[key].dump();
	};
	num("epsilon", cfg.epsilon);
	num("c", cfg.c);
	num("shape", cfg.shape);
	num("grid", cfg.grid);
	num("delta", cfg.delta);
	str("window", cfg.window);
	str("rays", cfg.rays);
	str("field", cfg.field);
	str("cutoff", cfg.cutoff);
	if (j.contains("out") && !given("out")) cfg.out = j["out"].get<std::string>();
}

std::vector<double> numbers(const std::string& s, char sep = ',')
{
	std::vector<double> out;
	std::stringstream ss(s);
	std::string tok;
	while (std::getline(ss, tok, sep)) {
		try {
			size_t used = 0;
			out.push_back(std::stod(tok, &used));
			if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
		} catch (const std::exception&) {
			throw Error("parse_error", "bad number '" + tok + "' in '" + s + "'");
		}
	}
	return out;
}

std::vector<Exp> parse_rays(const std::string& s)
{
	std::vector<Exp> rays;
	std::stringstream ss(s);
	std::string tok;
	while (std::getline(ss, tok, ';')) {
		Exp r;
		for (double x : numbers(tok)) {
			if (x != std::floor(x)) throw Error("parse_error", "fan rays need integer entries");
			r.push_back((long)x);
		}
		rays.push_back(r);
	}
	return rays;
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& text)
{
	if (cfg.out.empty()) return;
	fs::create_directories(cfg.out);
	std::ofstream o(fs::path(cfg.out) / name);
	if (!o) throw Error("io_error", "cannot write " + (fs::path(cfg.out) / name).string());
	o << text;
}

Field field_of(const RunConfig& cfg)
{
	if (cfg.field == "F2") return Field::F2;
	if (cfg.field == "Q") return Field::Q;
	throw Error("parse_error", "field must be F2 or Q");
}

json load(const std::string& path)
{
	return parse_json(read_file(path));
}

// inline JSON when it starts with '[', otherwise a file
json element_arg(const std::string& s)
{
	auto p = s.find_first_not_of(" \t");
	if (p != std::string::npos && s[p] == '[') return parse_json(s);
	return load(s);
}

int cmd_analyze(const RunConfig& cfg)
{
	auto phi = polynomial_from_json(load(cfg.input));
	json rep = analyze_report(phi);
	if (phi.n <= 2) {
		double lo = -2, hi = 2;
		for (auto& v : tropical_variety(phi).vertices())
			for (auto& x : v) {
				lo = std::min(lo, x.get_d() - 1);
				hi = std::max(hi, x.get_d() + 1);
			}
		emit(cfg, "variety.svg", svg_variety(phi, lo, hi));
	} else {
		rep["notice"] = "SVG output is only drawn for n <= 2";
	}
	std::string text = rep.dump(2) + "\n";
	emit(cfg, "report.json", text);
	std::cout << text;
	return 0;
}

// Distinct primitive ray directions of V(phi); for n = 1 the two half lines.
std::vector<Exp> variety_rays(const TropicalPolynomial& phi)
{
	if (phi.n == 1) return {{1}, {-1}};
	std::vector<Exp> out;
	for (auto& c : tropical_variety(phi).cells)
		for (auto& r : c.rays)
			if (std::find(out.begin(), out.end(), r.direction) == out.end()) out.push_back(r.direction);
	for (auto& c : tropical_variety(phi).cells)
		for (auto& d : c.lines)
			for (int s : {1, -1}) {
				Exp e = d;
				for (auto& x : e) x *= s;
				if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
			}
	return out;
}

int cmd_lift(const RunConfig& cfg)
{
	auto phi = polynomial_from_json(load(cfg.input));
	if (!(cfg.epsilon > 0) || cfg.c < 0 || cfg.grid < 0 || !(cfg.delta > 0))
		throw Error("invalid_parameter", "epsilon and delta must be positive, c and grid non-negative");
	int n = phi.n;
	double lo = -2, hi = 2;
	if (!cfg.window.empty()) {
		auto w = numbers(cfg.window);
		if (w.size() != 2 || !(w[0] < w[1])) throw Error("parse_error", "window is 'lo,hi'");
		lo = w[0];
		hi = w[1];
	} else {
		for (auto& v : tropical_variety(phi).vertices())
			for (auto& x : v) {
				lo = std::min(lo, x.get_d() - 1);
				hi = std::max(hi, x.get_d() + 1);
			}
	}
	double h = cfg.grid > 0 ? cfg.grid : cfg.epsilon / 8;
	auto grid = Grid::make(std::vector<double>(n, lo), std::vector<double>(n, hi), h);
	auto F = smooth(phi, cfg.epsilon, grid);
	auto M = lift(F, cfg.c, cfg.shape);

	json rep;
	rep["samples"] = M.size();
	rep["c"] = M.profile.c;
	rep["necks"] = M.necks;
	rep["double_points"] = M.double_points;
	auto v = valuation_projection_check(M);
	rep["valuation"] = {{"hausdorff", v.hausdorff}, {"pass", v.pass}};
	auto a = argument_projection_check(M);
	rep["argument"] = {{"coverage", a.coverage}, {"spill", a.spill}, {"resolution", a.resolution}, {"pass", a.pass}};
	bool ok = v.pass && a.pass;
	if (n <= 2) {
		auto rays = cfg.rays.empty() ? variety_rays(phi) : parse_rays(cfg.rays);
		auto ad = admissibility_check(M, rays, {}, cfg.delta);
		rep["admissibility"] = {{"rays", ad.rays},
		                        {"max_deviation", ad.max_deviation},
		                        {"checked", ad.checked},
		                        {"radius", ad.radius},
		                        {"pass", ad.pass}};
		ok = ok && ad.pass;
		emit(cfg, "variety.svg", svg_variety(phi, lo, hi, &M));
		emit(cfg, "arguments.svg", svg_torus(a));
	}
	rep["pass"] = ok;
	if (!cfg.out.empty()) {
		std::ostringstream mesh;
		write_mesh_jsonl(mesh, M);
		emit(cfg, "mesh.jsonl", mesh.str());
	}
	std::string text = rep.dump(2) + "\n";
	emit(cfg, "checks.json", text);
	std::cout << text;
	return ok ? 0 : check_failed;
}

int cmd_profiles(const RunConfig& cfg)
{
	double c = cfg.c > 0 ? cfg.c : 1;
	auto P = make_profile(c, cfg.shape);
	auto chk = check_profile(P);
	json rep = {{"c", c},
	            {"shape", cfg.shape},
	            {"r(c)", P.r(c)},
	            {"s(c)", P.s(c)},
	            {"neck_width", neck_width(P)},
	            {"flux", profile_flux(P)},
	            {"checks",
	             {{"boundary", chk.boundary},
	              {"midpoint", chk.midpoint},
	              {"monotone", chk.monotone},
	              {"joint_slope", chk.joint_slope},
	              {"tail_slope", chk.tail_slope},
	              {"pass", chk.ok(1e-8)}}}};
	emit(cfg, "profiles.svg", svg_profiles(P));
	std::string text = rep.dump(2) + "\n";
	emit(cfg, "profiles.json", text);
	std::cout << text;
	return chk.ok(1e-8) ? 0 : check_failed;
}

int cmd_cobordism(const RunConfig& cfg)
{
	auto G = cobordism_profile(cfg.epsilon);
	json pts = json::array();
	for (auto& [t, d] : G.curve(41)) pts.push_back({t, d, G.g(t)});
	json rep = {{"epsilon", cfg.epsilon}, {"g(0)", G.g(0)}, {"samples", pts}};
	emit(cfg, "cobordism.svg", svg_cobordism(G));
	std::string text = rep.dump(2) + "\n";
	emit(cfg, "cobordism.json", text);
	std::cout << text;
	return 0;
}

FilteredAlgebra load_algebra(const RunConfig& cfg)
{
	auto A = algebra_from_json(load(cfg.input), field_of(cfg));
	if (!cfg.cutoff.empty() && parse_rational(cfg.cutoff) != A.cutoff)
		throw Error("cutoff_mismatch", "algebra cutoff " + to_string(A.cutoff) + " differs from --cutoff " + cfg.cutoff);
	return A;
}

int print(const json& rep, bool ok)
{
	std::cout << rep.dump(2) << "\n";
	return ok ? 0 : check_failed;
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Tropical polynomials, their Lagrangian lifts, and filtered A-infinity algebras"};
	app.require_subcommand(1);
	RunConfig cfg;
	std::string config;
	app.add_option("--config", config, "JSON file with option defaults");

	auto common = [&](CLI::App* s) {
		s->add_option("--out", cfg.out, "directory for report, mesh and SVG files");
	};
	auto* analyze = app.add_subcommand("analyze", "variety, dual subdivision and classification");
	analyze->add_option("polynomial", cfg.input, "polynomial JSON")->required();
	common(analyze);

	auto* lift_cmd = app.add_subcommand("lift", "build the lift and run its checks");
	lift_cmd->add_option("polynomial", cfg.input, "polynomial JSON")->required();
	lift_cmd->add_option("--epsilon", cfg.epsilon, "smoothing radius");
	lift_cmd->add_option("--c", cfg.c, "surgery constant (0 picks one)");
	lift_cmd->add_option("--shape", cfg.shape, "profile shape parameter in (-1, 1/2)");
	lift_cmd->add_option("--grid", cfg.grid, "grid spacing (default epsilon/8)");
	lift_cmd->add_option("--delta", cfg.delta, "admissibility region margin");
	lift_cmd->add_option("--window", cfg.window, "square window 'lo,hi'");
	lift_cmd->add_option("--rays", cfg.rays, "fan rays 'a,b;c,d;...' (default: rays of V)");
	common(lift_cmd);

	auto* prof = app.add_subcommand("profiles", "surgery profile invariants, neck width and flux");
	prof->add_option("--c", cfg.c, "surgery constant");
	prof->add_option("--shape", cfg.shape, "shape parameter in (-1, 1/2)");
	common(prof);

	auto* cob = app.add_subcommand("cobordism", "cobordism profile curve");
	cob->add_option("--epsilon", cfg.epsilon, "width of the transition");
	common(cob);

	long idx_n = 2, idx_k = 1;
	auto* index = app.add_subcommand("index", "dimension of the polygon moduli space");
	index->add_option("--n", idx_n)->required();
	index->add_option("--k", idx_k)->required();

	auto* ainf = app.add_subcommand("ainfty", "filtered A-infinity algebras");
	ainf->require_subcommand(1);
	ainf->add_option("--field", cfg.field, "F2 or Q (when the file does not say)");
	ainf->add_option("--cutoff", cfg.cutoff, "expected cutoff");
	std::string element, ideal, support, exponents;
	auto* a_check = ainf->add_subcommand("check", "A-infinity relations, or homomorphism relations with --hom");
	a_check->add_option("file", cfg.input)->required();
	bool is_hom = false;
	a_check->add_flag("--hom", is_hom, "the file holds a homomorphism");
	auto* a_def = ainf->add_subcommand("deform", "deform by an element");
	a_def->add_option("file", cfg.input)->required();
	a_def->add_option("--element", element, "element JSON or file")->required();
	auto* a_mc = ainf->add_subcommand("mc", "Maurer-Cartan residual, or brute-force search with --support");
	a_mc->add_option("file", cfg.input)->required();
	a_mc->add_option("--element", element, "element JSON or file");
	a_mc->add_option("--support", support, "basis names 'x,y' for the search");
	a_mc->add_option("--exponents", exponents, "exponent grid '1/2,1'")->default_val("1/2,1");
	auto* a_push = ainf->add_subcommand("push", "pushforward along a homomorphism");
	a_push->add_option("file", cfg.input)->required();
	a_push->add_option("--element", element, "element JSON or file")->required();
	auto* a_quot = ainf->add_subcommand("quotient", "quotient by the ideal spanned by basis elements");
	a_quot->add_option("file", cfg.input)->required();
	a_quot->add_option("--ideal", ideal, "basis names 'x,y'")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		if (e.get_exit_code() == 0) return app.exit(e);
		json err = {{"error", {{"code", "usage_error"}, {"message", e.what()}}}};
		std::cerr << err.dump() << "\n";
		return bad_input;
	}

	try {
		apply_config(config, *app.get_subcommands().front(), cfg);
		if (*analyze) return cmd_analyze(cfg);
		if (*lift_cmd) return cmd_lift(cfg);
		if (*prof) return cmd_profiles(cfg);
		if (*cob) return cmd_cobordism(cfg);
		if (*index) {
			long d = polygon_moduli_dimension(idx_n, idx_k);
			return print({{"n", idx_n}, {"k", idx_k}, {"dimension", d}}, true);
		}
		auto names = [](const std::string& s) {
			std::vector<std::string> out;
			std::stringstream ss(s);
			std::string t;
			while (std::getline(ss, t, ','))
				if (!t.empty()) out.push_back(t);
			return out;
		};
		if (*a_check) {
			if (is_hom) {
				auto f = hom_from_json(load(cfg.input), field_of(cfg));
				auto r = check_hom(f);
				return print(to_json(f.target, r), r.pass);
			}
			auto A = load_algebra(cfg);
			auto r = check_relations(A);
			return print(to_json(A, r), r.pass);
		}
		if (*a_def) {
			auto A = load_algebra(cfg);
			auto D = deform(A, element_from_json(A, element_arg(element)));
			auto r = check_relations(D);
			return print({{"algebra", to_json(D)}, {"relations", to_json(D, r)}}, r.pass);
		}
		if (*a_mc) {
			auto A = load_algebra(cfg);
			if (!support.empty()) {
				std::vector<int> sup;
				for (auto& nm : names(support)) {
					int i = A.index(nm);
					if (i < 0) throw Error("schema_error", "unknown basis element " + nm);
					sup.push_back(i);
				}
				std::vector<Q> grid;
				for (auto& e : names(exponents)) grid.push_back(parse_rational(e));
				json list = json::array();
				for (auto& a : mc_bruteforce(A, sup, grid)) list.push_back(element_to_json(A, a));
				return print({{"solutions", list}, {"unobstructed", !list.empty()}}, true);
			}
			if (element.empty()) throw Error("usage_error", "mc needs --element or --support");
			auto a = element_from_json(A, element_arg(element));
			auto r = mc_residual(A, a);
			return print({{"residual", element_to_json(A, r)}, {"is_mc", is_zero(r)}}, true);
		}
		if (*a_push) {
			auto f = hom_from_json(load(cfg.input), field_of(cfg));
			auto b = element_from_json(f.source, element_arg(element));
			auto img = pushforward(f, b);
			return print({{"image", element_to_json(f.target, img)},
			              {"source_is_mc", is_mc(f.source, b)},
			              {"image_is_mc", is_mc(f.target, img)}},
			             true);
		}
		if (*a_quot) {
			auto A = load_algebra(cfg);
			auto Qa = quotient_ideal(A, names(ideal));
			return print(to_json(Qa), true);
		}
	} catch (const Error& e) {
		json err = {{"error", {{"code", e.code}, {"message", e.what()}}}};
		std::cerr << err.dump() << "\n";
		static const char* input_codes[] = {"parse_error", "schema_error", "io_error", "usage_error"};
		for (auto* c : input_codes)
			if (e.code == c) return bad_input;
		return run_error;
	} catch (const std::exception& e) {
		json err = {{"error", {{"code", "internal_error"}, {"message", e.what()}}}};
		std::cerr << err.dump() << "\n";
		return run_error;
	}
	return bad_input;
}
