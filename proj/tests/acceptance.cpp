// Acceptance run: one PASS/FAIL line per criterion, with the measured
// numbers. Exit status 1 when any criterion fails.

#include "oracles.hpp"
#include "trop/ainfty.hpp"
#include "trop/error.hpp"
#include "trop/lift.hpp"
#include "trop/subdivision.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>

using namespace trop;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
	return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int k, bool pass, double secs, const std::string& detail)
{
	if (!pass) ++failures;
	std::printf("criterion %d: %s (%.2f s) %s\n", k, pass ? "PASS" : "FAIL", secs, detail.c_str());
	std::fflush(stdout);
}

void note(int k, const std::string& detail)
{
	std::printf("  %d: %s\n", k, detail.c_str());
	std::fflush(stdout);
}

std::string fmt(double x)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.3g", x);
	return buf;
}

std::string code_of(const std::function<void()>& fn)
{
	try {
		fn();
	} catch (const Error& e) {
		return e.code;
	}
	return "";
}

// ---- 1

bool same(const PolynomialReport& r, bool smooth, long self, bool embedded)
{
	return r.smooth == smooth && r.total_self_intersections == self && r.embedded_lift == embedded;
}

void classification()
{
	auto t0 = Clock::now();
	auto r0 = classify_polynomial(fixtures::t2_zero());
	auto r1 = classify_polynomial(fixtures::t2_c(1));
	auto rp = classify_polynomial(fixtures::square());
	auto l1 = lift_topology(fixtures::t2_c(1));
	auto lp = lift_topology(fixtures::square());
	bool ok = same(r0, false, 1, false) && same(r1, true, 0, true) && same(rp, false, 0, true);
	ok = ok && l1.genus == 1 && l1.punctures == 3 && lp.genus == 0 && lp.punctures == 4;
	double t = seconds_since(t0);
	std::ostringstream s;
	s << "T2^0 {" << r0.smooth << "," << r0.total_self_intersections << "," << r0.embedded_lift << "} T2^1 {"
	  << r1.smooth << "," << r1.total_self_intersections << "," << r1.embedded_lift << "} square {" << rp.smooth << ","
	  << rp.total_self_intersections << "," << rp.embedded_lift << "}; T2^1 genus " << l1.genus.value_or(-1) << " punctures "
	  << l1.punctures << ", square genus " << lp.genus.value_or(-1) << " punctures " << lp.punctures;
	report(1, ok && t < 1, t, s.str());
}

// ---- 2

void duality(unsigned seed)
{
	auto t0 = Clock::now();
	std::mt19937 rng(seed + 101);
	int cells = 0, bad = 0;
	for (int it = 0; it < 20; ++it) {
		auto phi = oracle::random_poly(rng, 2, 8);
		auto S = dual_subdivision(phi);
		auto V = tropical_variety(phi);
		int positive = 0;
		for (auto& c : S.cells) positive += c.dim >= 1;
		if ((int)V.cells.size() != positive) ++bad;
		for (auto& vc : V.cells) {
			++cells;
			const SubdivisionCell* match = nullptr;
			for (auto& sc : S.cells)
				if (sc.points == vc.active) match = &sc;
			if (!match || vc.dim + match->dim != 2) ++bad;
		}
		// every vertex found by brute force is a 0-cell of V
		for (auto& x : oracle::vertices_2d(phi)) {
			bool found = false;
			for (auto& vc : V.cells)
				if (vc.dim == 0 && vc.vertices[0] == x) found = true;
			if (!found) ++bad;
		}
	}
	double t = seconds_since(t0);
	report(2, bad == 0 && t < 10, t, std::to_string(cells) + " cells in 20 polynomials, " + std::to_string(bad) + " mismatches");
}

// ---- 3

// B_eps(q) inside the closed region of the monomial minimal at q.
bool far_from_variety(const TropicalPolynomial& phi, const double* q, double eps)
{
	double best = 1e300;
	const Exp* arg = nullptr;
	for (auto& [v, a] : phi.monomials) {
		double t = a.get_d();
		for (int k = 0; k < phi.n; ++k) t += v[k] * q[k];
		if (t < best) {
			best = t;
			arg = &v;
		}
	}
	for (auto& [u, a] : phi.monomials) {
		if (&u == arg) continue;
		double t = a.get_d(), d2 = 0;
		for (int k = 0; k < phi.n; ++k) {
			t += u[k] * q[k];
			d2 += double(u[k] - (*arg)[k]) * double(u[k] - (*arg)[k]);
		}
		if (t - best < eps * std::sqrt(d2) + 1e-12) return false;
	}
	return true;
}

// Smallest signed distance of g to the edges of the counterclockwise
// polygon P (negative outside).
double hull_margin(const double* g, const std::vector<std::pair<double, double>>& P)
{
	double m = 1e300;
	for (size_t i = 0; i < P.size(); ++i) {
		auto [ax, ay] = P[i];
		auto [bx, by] = P[(i + 1) % P.size()];
		double cross = (bx - ax) * (g[1] - ay) - (by - ay) * (g[0] - ax);
		m = std::min(m, cross / std::hypot(bx - ax, by - ay));
	}
	return m;
}

void smoothing_properties()
{
	auto t0 = Clock::now();
	double eps = 0.05;
	auto grid = Grid::make({-2, -2}, {2, 2}, eps / 8);
	auto phi = fixtures::t2_c(1);
	auto F = smooth(phi, eps, grid);

	double concavity = -1e300, far_err = 0, hull = 1e300;
	size_t far = 0;
	std::vector<double> x(2);
	const std::vector<std::pair<double, double>> triangle = {{1, 0}, {0, 1}, {-1, -1}};
	int N0 = grid.dims[0], N1 = grid.dims[1];
	for (size_t i = 0; i < grid.size(); ++i) {
		grid.point(i, x.data());
		if (far_from_variety(phi, x.data(), eps)) {
			++far;
			far_err = std::max(far_err, std::abs(F.value[i] - evaluate_d(phi, x.data())));
		}
		hull = std::min(hull, hull_margin(F.grad_cached(i), triangle));
		// midpoint defects along the four lattice directions
		auto m = grid.multi(i);
		for (auto [d0, d1] : {std::pair{1, 0}, {0, 1}, {1, 1}, {1, -1}}) {
			int a0 = m[0] - d0, a1 = m[1] - d1, b0 = m[0] + d0, b1 = m[1] + d1;
			if (a0 < 0 || b0 >= N0 || std::min(a1, b1) < 0 || std::max(a1, b1) >= N1) continue;
			double va = F.value[grid.index({a0, a1})], vb = F.value[grid.index({b0, b1})];
			concavity = std::max(concavity, (va + vb) / 2 - F.value[i]);
		}
	}
	auto c1 = intersection_components(F);
	int open1 = 0;
	for (auto& c : c1) open1 += c.open;

	auto F0 = smooth(fixtures::t2_zero(), eps, grid);
	auto c0 = intersection_components(F0);
	int open0 = 0;
	bool centre_closed = false;
	for (auto& c : c0) {
		open0 += c.open;
		if (c.lattice == Exp{0, 0} && !c.open) centre_closed = true;
	}
	double t = seconds_since(t0);
	bool ok = concavity <= 1e-9 && far_err <= 1e-12 && hull >= -1e-12 && c1.size() == 4 && open1 == 4 && c0.size() == 4 &&
	          open0 == 3 && centre_closed && t < 120;
	report(3, ok, t,
	       "concavity defect " + fmt(concavity) + ", |phi~ - phi| " + fmt(far_err) + " on " + std::to_string(far) +
	           " far nodes, hull margin " + fmt(hull) + "; T2^1 " + std::to_string(c1.size()) + " components " +
	           std::to_string(open1) + " open; T2^0 " + std::to_string(c0.size()) + " components " + std::to_string(open0) +
	           " open");
}

// ---- 4

void profiles()
{
	auto t0 = Clock::now();
	bool bullets = true;
	for (double c : {0.02, 1.0})
		for (double a : {-0.9, -0.3, 0.0, 0.25, 0.49}) bullets = bullets && check_profile(make_profile(c, a)).ok(1e-8);

	double magnitude = 0, telescoped = 0;
	for (double a : {-0.5, 0.0, 0.3}) {
		auto P = make_profile(1, a);
		double f = profile_flux(P);
		magnitude = std::max(magnitude, std::abs(std::abs(f) - std::abs(neck_width(P))));
		telescoped = std::max(telescoped, std::abs(f - telescoped_flux(P)));
	}
	// equal neck width: every shape has w = -c, so equal c is the tuning
	auto P1 = make_profile(1, -0.5), P2 = make_profile(1, 0.3);
	double dw = std::abs(neck_width(P1) - neck_width(P2));
	double dflux = std::abs(profile_flux(P1) - profile_flux(P2));
	double t = seconds_since(t0);
	bool mag_ok = magnitude <= 1e-6, equal_ok = dw <= 1e-12 && dflux <= 1e-6;
	report(4, bullets && mag_ok && equal_ok, t,
	       std::string("profile conditions ") + (bullets ? "pass" : "fail") + "; ||flux| - |w|| = " + fmt(magnitude) +
	           (mag_ok ? " pass" : " FAIL") + "; equal w (diff " + fmt(dw) + ") flux diff " + fmt(dflux) +
	           (equal_ok ? " pass" : " FAIL"));
	note(4, "flux against s(c) - r(c): max error " + fmt(telescoped) + (telescoped <= 1e-10 ? " (agrees)" : " (disagrees)"));
	note(4, "w = -r(c) - s(c) and flux = s(c) - r(c) differ by 2 s(c) < 0 for every admissible profile");
}

// ---- 5

struct Lifts {
	double eps = 0.05;
	std::unique_ptr<SmoothedField> F1, F2;
	LagrangianMesh M1, M2;
};

Lifts& lifts()
{
	static Lifts L;
	return L;
}

const std::vector<Exp> v_fan = {{2, -1}, {-1, 2}, {-1, -1}};
const std::vector<Exp> line_fan = {{1}, {-1}};

void lift_checks()
{
	auto t0 = Clock::now();
	auto& L = lifts();
	double eps = L.eps;
	L.F1 = std::make_unique<SmoothedField>(smooth(fixtures::line(), eps, Grid::make({-2}, {2}, eps / 8)));
	L.M1 = lift(*L.F1);
	L.F2 = std::make_unique<SmoothedField>(smooth(fixtures::t2_c(1), eps, Grid::make({-2, -2}, {2, 2}, eps / 8)));
	L.M2 = lift(*L.F2);

	bool ok = true;
	std::string detail;
	// the lift of 0 (+) x is one fibre over the vertex, so its far field is
	// empty and admissibility holds vacuously there
	auto run = [&](const char* name, const LagrangianMesh& M, const std::vector<Exp>& fan, bool far_field) {
		auto v = valuation_projection_check(M);
		auto a = argument_projection_check(M);
		auto ap = argument_projection_check(M, 0, +1);
		auto ad = admissibility_check(M, fan, {}, 0.1);
		double dev = 0;
		size_t checked = 0;
		for (size_t k = 0; k < ad.rays.size(); ++k) {
			dev = std::max(dev, ad.max_deviation[k]);
			checked += ad.checked[k];
		}
		bool each = v.hausdorff <= 2 * eps && a.coverage >= 0.99 && a.spill <= 0.01 && ap.coverage >= 0.99 &&
		            ap.spill <= 0.01 && ad.pass && dev <= 1e-6 && (checked > 0) == far_field;
		ok = ok && each;
		detail += std::string(name) + ": hausdorff " + fmt(v.hausdorff) + ", coverage " + fmt(a.coverage) + "/" +
		          fmt(ap.coverage) + ", spill " + fmt(a.spill) + "/" + fmt(ap.spill) + ", admissibility " + fmt(dev) +
		          " on " + std::to_string(checked) + (far_field ? " samples; " : " samples (empty far field); ");
	};
	run("n=1", L.M1, line_fan, false);
	run("n=2", L.M2, v_fan, true);
	double t = seconds_since(t0);
	report(5, ok && t < 300, t, detail + "fan of the rays of V");

	auto lit = admissibility_check(L.M2, {{1, 0}, {0, 1}, {-1, -1}}, {}, 0.1);
	auto sec = admissibility_check(section_mesh(*L.F2, -1), {{1, 0}, {0, 1}, {-1, -1}}, {}, 0.1);
	double dl = 0, ds = 0;
	for (double d : lit.max_deviation) dl = std::max(dl, d);
	for (double d : sec.max_deviation) ds = std::max(ds, d);
	note(5, "fan (1,0),(0,1),(-1,-1): lift deviation " + fmt(dl) + ", section of -phi deviation " + fmt(ds) +
	            " (the section is not admissible for this fan either)");
}

// ---- 6

void index_formula()
{
	auto t0 = Clock::now();
	int points = 0, bad = 0;
	for (long n = 1; n <= 10; ++n)
		for (long k = 1; k <= 5; ++k) {
			++points;
			if (polygon_moduli_dimension(n, k) != (2 - n) * k - 3 + n) ++bad;
		}
	int negative = 0;
	for (long n = 2; n <= 5; ++n)
		for (long k = 1; k <= 10; ++k) negative += polygon_moduli_dimension(n, k) < 0;
	double t = seconds_since(t0);
	report(6, bad == 0 && negative == 40, t,
	       std::to_string(points) + " grid points, " + std::to_string(bad) + " mismatches; " + std::to_string(negative) +
	           "/40 negative");
}

// ---- 7

std::vector<int> degree_one(const FilteredAlgebra& A)
{
	std::vector<int> out;
	for (int i = 0; i < A.dim(); ++i)
		if (A.basis[i].deg == 1) out.push_back(i);
	return out;
}

void algebra_suites(unsigned seed)
{
	auto t0 = Clock::now();
	std::mt19937 rng(seed + 707);
	int rel_bad = 0, def_bad = 0, comm_bad = 0, nonzero = 0;
	for (int i = 0; i < 100; ++i) {
		auto A = random_dga(rng);
		if (!check_relations(A).pass) ++rel_bad;
		auto a1 = random_deg1(rng, A), a2 = random_deg1(rng, A);
		nonzero += !is_zero(a1);
		auto D = deform(A, a1);
		if (!check_relations(D).pass) ++def_bad;
		if (!(deform(D, a2) == deform(A, add(a1, a2)))) ++comm_bad;
	}

	int fixtures_n = 0, homs = 0, mcs = 0, push_bad = 0, close_bad = 0, hom_bad = 0;
	for (int fx = 0; fx < 20; ++fx) {
		auto A = random_dga(rng), B = random_dga(rng);
		++fixtures_n;
		auto mc = mc_bruteforce(A, degree_one(A), {Q(1, 2), Q(1)});
		auto fs = random_homs(rng, A, B, 3);
		fs.push_back(identity_hom(A));
		for (auto& f : fs) {
			++homs;
			if (!check_hom(f).pass) ++hom_bad;
			for (auto& b : mc) {
				++mcs;
				if (!is_mc(f.target, pushforward(f, b))) ++push_bad;
				auto fb = deform_hom(f, b);
				if (!(pushforward(fb, fb.source.zero()) == pushforward(f, b))) ++close_bad;
			}
		}
	}
	double t = seconds_since(t0);
	bool ok = rel_bad + def_bad + comm_bad + push_bad + close_bad + hom_bad == 0 && nonzero > 0 && mcs > 0 && t < 120;
	report(7, ok, t,
	       "100 algebras: relations " + std::to_string(rel_bad) + " bad, deformations " + std::to_string(def_bad) +
	           " bad (" + std::to_string(nonzero) + " nonzero), commuting " + std::to_string(comm_bad) + " bad; " +
	           std::to_string(fixtures_n) + " fixtures, " + std::to_string(homs) + " homs, " + std::to_string(mcs) +
	           " (hom, MC) pairs: pushforward " + std::to_string(push_bad) + " bad, closing identity " +
	           std::to_string(close_bad) + " bad");
}

// ---- 8

Novikov T(const Q& l)
{
	return Novikov::monomial(1, l, Field::F2);
}

// u (deg 0) a unit, x (deg 1), y (deg 2); dx = T y, x x = T y.
FilteredAlgebra unital()
{
	DGATables D;
	D.basis = {{"u", 0}, {"x", 1}, {"y", 2}};
	FilteredAlgebra shape = zero_algebra();
	shape.basis = D.basis;
	D.d[1] = shape.unit(2, T(1));
	for (auto [i, j, k] : {std::tuple{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2}})
		D.product[{i, j}] = shape.unit(k, T(0));
	D.product[{1, 1}] = shape.unit(2, T(1));
	return dga_builder(D);
}

void negative_controls()
{
	auto t0 = Clock::now();
	std::string detail;
	bool ok = true;

	auto A = unital();
	auto C = A;
	C.m[2][{1, 0}] = A.unit(1, T(Q(1, 2)));
	auto rep = check_relations(C);
	bool m2 = !rep.pass && rep.first && rep.first->arity == 2;
	ok = ok && m2 && check_relations(A).pass;
	detail += std::string("corrupted m2 ") + (m2 ? "rejected" : "ACCEPTED");
	if (rep.first) detail += " at arity " + std::to_string(rep.first->arity) + " valuation " + to_string(rep.first->valuation);

	std::string ideal = code_of([&] { quotient_ideal(A, {"x"}); });
	std::string ideal2 = code_of([&] { quotient_ideal(A, {"u"}); });
	ok = ok && ideal == "not_an_ideal" && ideal2 == "not_an_ideal" && code_of([&] { quotient_ideal(A, {"y"}); }).empty();
	detail += "; non-ideals (x), (u): " + ideal + ", " + ideal2;

	DGATables broken;
	broken.basis = {{"x", 1}, {"y", 2}};
	FilteredAlgebra shape = zero_algebra();
	shape.basis = broken.basis;
	broken.d[0] = shape.unit(0, T(1));  // d raises degree by 0
	std::string dga = code_of([&] { dga_builder(broken); });
	ok = ok && dga == "dga_axioms";
	detail += "; broken tables: " + dga;

	auto& L = lifts();
	double rot = 1e300;
	for (int axis = 0; axis < 2; ++axis) {
		LagrangianMesh R = L.M2;
		for (size_t i = 0; i < R.size(); ++i) R.p[i * 2 + axis] = frac(R.p[i * 2 + axis] + 0.3);
		auto a = admissibility_check(R, v_fan, {}, 0.1);
		double dev = 0;
		for (double d : a.max_deviation) dev = std::max(dev, d);
		rot = std::min(rot, a.pass ? 0.0 : dev);
	}
	bool rotated = rot > 0.1 && admissibility_check(L.M2, v_fan, {}, 0.1).pass;
	ok = ok && rotated;
	detail += std::string("; rotated meshes ") + (rotated ? "rejected" : "ACCEPTED") + " (deviation >= " + fmt(rot) + ")";

	std::string big = code_of([] { smooth(fixtures::t2_c(1), 0.9, Grid::make({-2, -2}, {2, 2}, 0.1)); });
	std::string big1 = code_of([] { lift(fixtures::t2_c(1), 0.9, Grid::make({-2, -2}, {2, 2}, 0.1)); });
	ok = ok && big == "epsilon_too_large" && big1 == "epsilon_too_large";
	detail += "; oversized eps: " + big + ", " + big1;

	report(8, ok, seconds_since(t0), detail);
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"acceptance checks"};
	unsigned seed = 0;
	app.add_option("--seed", seed, "seed for the random fixtures");
	CLI11_PARSE(app, argc, argv);
	std::printf("seed %u\n", seed);

	classification();
	duality(seed);
	smoothing_properties();
	profiles();
	lift_checks();
	index_formula();
	algebra_suites(seed);
	negative_controls();

	std::printf("%d of 8 criteria failed\n", failures);
	return failures ? 1 : 0;
}
