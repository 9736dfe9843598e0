#include "trop/subdivision.hpp"

#include "trop/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace trop {

namespace {

struct Lifted {
	std::vector<Exp> v;
	std::vector<Q> a;
	std::vector<QVec> q;
};

Lifted lifted(const TropicalPolynomial& phi)
{
	Lifted L;
	for (auto& [e, c] : phi.monomials) {
		L.v.push_back(e);
		L.a.push_back(c);
		L.q.push_back(to_qvec(e));
	}
	return L;
}

// Point sets of the lower facets: for every affinely spanning (d+1)-subset,
// interpolate the heights affinely and keep it when every other lifted point
// lies on or above.
std::vector<std::vector<int>> lower_facets(const Lifted& L)
{
	int N = (int)L.v.size();
	if (N == 1) return {{0}};
	AffineHull H = affine_hull(L.q);
	int d = H.dim();
	std::vector<QVec> lam;
	for (auto& p : L.q) {
		QVec c = H.coords(p);
		c.push_back(1);
		lam.push_back(c);
	}
	std::set<std::vector<int>> out;
	for_each_combination(N, d + 1, [&](const std::vector<int>& S) {
		QMat A;
		QVec b;
		for (int s : S) {
			A.push_back(lam[s]);
			b.push_back(L.a[s]);
		}
		auto h = solve_unique(A, b, d + 1);
		if (!h) return true;
		std::vector<int> face;
		for (int u = 0; u < N; ++u) {
			Q hu = dot(*h, lam[u]);
			if (L.a[u] < hu) return true;
			if (L.a[u] == hu) face.push_back(u);
		}
		out.insert(face);
		return true;
	});
	return {out.begin(), out.end()};
}

}  // namespace

std::vector<const SubdivisionCell*> RegularSubdivision::top_cells() const
{
	std::vector<const SubdivisionCell*> r;
	for (auto& c : cells)
		if (c.dim == dim) r.push_back(&c);
	return r;
}

const SubdivisionCell* RegularSubdivision::find(const std::vector<Exp>& vertices) const
{
	std::vector<Exp> v = vertices;
	std::sort(v.begin(), v.end());
	for (auto& c : cells)
		if (c.vertices == v) return &c;
	return nullptr;
}

RegularSubdivision dual_subdivision(const TropicalPolynomial& phi)
{
	Lifted L = lifted(phi);
	RegularSubdivision S;
	S.n = phi.n;
	std::set<std::vector<int>> faces;
	for (auto& top : lower_facets(L)) {
		std::vector<QVec> sub;
		for (int i : top) sub.push_back(L.q[i]);
		for (auto& f : point_faces(sub)) {
			std::vector<int> g;
			for (int i : f) g.push_back(top[i]);
			faces.insert(g);
		}
	}
	std::vector<Exp> verts;
	for (auto& f : faces) {
		SubdivisionCell c;
		std::vector<QVec> sub;
		for (int i : f) {
			c.points.push_back(L.v[i]);
			sub.push_back(L.q[i]);
		}
		c.dim = affine_hull(sub).dim();
		for (int i : extreme_points(sub)) c.vertices.push_back(L.v[f[i]]);
		std::sort(c.points.begin(), c.points.end());
		std::sort(c.vertices.begin(), c.vertices.end());
		if (c.dim == 0) {
			verts.push_back(L.v[f[0]]);
			S.heights[L.v[f[0]]] = L.a[f[0]];
		}
		S.cells.push_back(std::move(c));
	}
	std::sort(S.cells.begin(), S.cells.end(), [](const SubdivisionCell& x, const SubdivisionCell& y) {
		return std::tie(x.dim, x.vertices) < std::tie(y.dim, y.vertices);
	});
	S.polytope = lattice_polytope(phi.n, verts);
	S.dim = S.polytope.dim;
	return S;
}

std::vector<Exp> lower_hull_vertices(const TropicalPolynomial& phi)
{
	std::vector<Exp> r;
	for (auto& [v, a] : dual_subdivision(phi).heights) r.push_back(v);
	return r;
}

TropicalPolynomial LegendreData::rebuild(int n) const
{
	std::vector<std::pair<Exp, Q>> terms(heights.begin(), heights.end());
	return TropicalPolynomial(n, terms);
}

LegendreData legendre_transform(const TropicalPolynomial& phi)
{
	LegendreData L;
	L.subdivision = dual_subdivision(phi);
	L.heights = L.subdivision.heights;
	return L;
}

StratumClassification classify_cell(const RegularSubdivision& S, const SubdivisionCell& cell)
{
	if (!S.find(cell.vertices)) throw Error("not_a_cell", "vertex set is not a cell of the subdivision");
	StratumClassification c;
	LatticePolytope P = lattice_polytope(S.n, cell.vertices);
	c.self_intersection = (long)lattice_points(P).interior.size();
	c.smooth = (int)cell.vertices.size() == cell.dim + 1 && simplex_lattice_volume(cell.vertices) == 1;
	return c;
}

PolynomialReport classify_polynomial(const TropicalPolynomial& phi)
{
	RegularSubdivision S = dual_subdivision(phi);
	PolynomialReport r;
	for (auto& cell : S.cells) {
		if (cell.dim == 0) continue;
		auto c = classify_cell(S, cell);
		r.smooth = r.smooth && c.smooth;
		r.total_self_intersections += c.self_intersection;
	}
	r.embedded_lift = r.total_self_intersections == 0;
	return r;
}

LiftTopology lift_topology(const TropicalPolynomial& phi)
{
	if (phi.n != 2) throw Error("unsupported_dimension", "lift topology is only defined for n = 2");
	RegularSubdivision S = dual_subdivision(phi);
	if (S.dim != 2)
		throw Error("degenerate_newton_polytope", "Newton polytope is not two-dimensional; the lift is a union of cylinders");
	LatticePoints lp = lattice_points(S.polytope);
	PolynomialReport rep = classify_polynomial(phi);
	LiftTopology t;
	t.punctures = (long)(lp.all.size() - lp.interior.size());
	t.self_intersections = rep.total_self_intersections;
	if (rep.embedded_lift) {
		t.genus = (long)lp.interior.size();
		t.euler_characteristic = 2 - 2 * *t.genus - t.punctures;
		return t;
	}
	// immersed: only interior points that carry a surgery region add a handle
	t.immersed = true;
	long g = 0;
	for (auto& p : lp.interior)
		if (S.heights.count(p)) ++g;
	if (g > 0) t.genus = g;
	return t;
}

}  // namespace trop
