#include "trop/kernel.hpp"

#include "trop/error.hpp"
#include "trop/subdivision.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace trop {

bool LatticePolytope::contains(const QVec& x) const
{
	for (size_t i = 0; i < eq_normals.size(); ++i)
		if (dot(eq_normals[i], x) != eq_offsets[i]) return false;
	for (size_t i = 0; i < facet_normals.size(); ++i)
		if (dot(facet_normals[i], x) < facet_offsets[i]) return false;
	return true;
}

bool LatticePolytope::relative_interior(const QVec& x) const
{
	if (dim <= 0) return false;
	for (size_t i = 0; i < eq_normals.size(); ++i)
		if (dot(eq_normals[i], x) != eq_offsets[i]) return false;
	for (size_t i = 0; i < facet_normals.size(); ++i)
		if (dot(facet_normals[i], x) <= facet_offsets[i]) return false;
	return true;
}

LatticePolytope lattice_polytope(int n, const std::vector<Exp>& pts)
{
	LatticePolytope P;
	P.n = n;
	std::vector<QVec> q;
	for (auto& p : pts) q.push_back(to_qvec(p));
	if (q.empty()) return P;
	for (int i : extreme_points(q)) P.vertices.push_back(pts[i]);
	std::sort(P.vertices.begin(), P.vertices.end());
	AffineHull H = affine_hull(q);
	P.dim = H.dim();
	for (auto& e : H.complement()) {
		P.eq_normals.push_back(e);
		P.eq_offsets.push_back(dot(e, H.origin));
	}
	for (auto& f : point_facets(q)) {
		P.facet_normals.push_back(f.normal);
		P.facet_offsets.push_back(f.offset);
	}
	return P;
}

LatticePoints lattice_points(const LatticePolytope& P)
{
	LatticePoints out;
	if (P.vertices.empty()) return out;
	int n = P.n;
	Exp lo = P.vertices[0], hi = P.vertices[0];
	for (auto& v : P.vertices)
		for (int i = 0; i < n; ++i) {
			lo[i] = std::min(lo[i], v[i]);
			hi[i] = std::max(hi[i], v[i]);
		}
	Exp x = lo;
	while (true) {
		QVec q = to_qvec(x);
		if (P.contains(q)) {
			out.all.push_back(x);
			if (P.relative_interior(q)) out.interior.push_back(x);
		}
		int i = 0;
		while (i < n && x[i] == hi[i]) {
			x[i] = lo[i];
			++i;
		}
		if (i == n) break;
		++x[i];
	}
	return out;
}

std::vector<QVec> PolyhedralComplex::vertices() const
{
	std::vector<QVec> r;
	for (auto& c : cells)
		if (c.dim == 0) r.push_back(c.vertices[0]);
	return r;
}

namespace {

HPolyhedron stratum(const std::vector<Exp>& v, const std::vector<Q>& a, const std::vector<int>& S, int n)
{
	HPolyhedron P;
	P.n = n;
	int s0 = S[0];
	std::vector<bool> in(v.size(), false);
	for (int s : S) in[s] = true;
	for (size_t k = 1; k < S.size(); ++k) {
		P.eqA.push_back(sub(to_qvec(v[S[k]]), to_qvec(v[s0])));
		P.eqb.push_back(a[s0] - a[S[k]]);
	}
	for (size_t u = 0; u < v.size(); ++u) {
		if (in[u]) continue;
		P.inA.push_back(sub(to_qvec(v[u]), to_qvec(v[s0])));
		P.inb.push_back(a[s0] - a[u]);
	}
	return P;
}

QVec ray_base(const HPolyhedron& P, const VRep& V, const QVec& d)
{
	int n = P.n;
	for (auto& v : V.vertices) {
		QMat tight = P.eqA;
		for (auto& l : V.lines) tight.push_back(l);
		for (size_t i = 0; i < P.inA.size(); ++i)
			if (dot(P.inA[i], d) == 0 && dot(P.inA[i], v) == P.inb[i]) tight.push_back(P.inA[i]);
		if (!tight.empty() && rank(tight, n) == n - 1) return v;
	}
	return V.base;
}

}  // namespace

PolyhedralComplex tropical_variety(const TropicalPolynomial& phi)
{
	PolyhedralComplex C;
	C.n = phi.n;
	std::vector<Exp> v;
	std::vector<Q> a;
	for (auto& [e, c] : phi.monomials) {
		v.push_back(e);
		a.push_back(c);
	}
	int N = (int)v.size();
	// Depth-first over active sets; a set whose stratum is empty cannot be
	// extended (adding a monomial only adds equalities).
	std::vector<int> S;
	std::function<void(int)> grow = [&](int next) {
		for (int j = next; j < N; ++j) {
			S.push_back(j);
			bool keep = true;
			if (S.size() >= 2) {
				HPolyhedron P = stratum(v, a, S, phi.n);
				VRep V = vrep(P);
				if (V.empty) {
					keep = false;
				} else {
					QVec x = V.relative_interior_point();
					Evaluation e = evaluate(phi, x);
					std::vector<Exp> act(S.size());
					for (size_t k = 0; k < S.size(); ++k) act[k] = v[S[k]];
					std::sort(act.begin(), act.end());
					if (e.active == act) {
						VarietyCell cell;
						cell.active = act;
						cell.dim = V.dim;
						cell.h = P;
						cell.vertices = V.vertices;
						std::sort(cell.vertices.begin(), cell.vertices.end());
						cell.base = V.base;
						for (auto& r : V.rays) cell.rays.push_back({ray_base(P, V, r), primitive(r)});
						for (auto& l : V.lines) cell.lines.push_back(primitive(l));
						C.cells.push_back(std::move(cell));
					}
				}
			}
			if (keep) grow(j + 1);
			S.pop_back();
		}
	};
	grow(0);
	std::sort(C.cells.begin(), C.cells.end(), [](const VarietyCell& x, const VarietyCell& y) {
		return std::tie(x.dim, x.active) < std::tie(y.dim, y.active);
	});
	return C;
}

NewtonPolytope newton_polytope(const TropicalPolynomial& phi)
{
	NewtonPolytope N;
	N.active_lattice = lower_hull_vertices(phi);
	N.polytope = lattice_polytope(phi.n, N.active_lattice);
	return N;
}

namespace {

int half(const Exp& r)
{
	return (r[1] > 0 || (r[1] == 0 && r[0] > 0)) ? 0 : 1;
}

std::vector<std::vector<int>> infer_cones(const Fan& fan)
{
	std::vector<std::vector<int>> cones;
	int m = (int)fan.rays.size();
	if (fan.n == 1 || m == 1) {
		for (int i = 0; i < m; ++i) cones.push_back({i});
		return cones;
	}
	if (fan.n != 2) throw Error("invalid_fan", "cones must be given explicitly in dimension > 2");
	std::vector<int> ord(m);
	for (int i = 0; i < m; ++i) ord[i] = i;
	std::sort(ord.begin(), ord.end(), [&](int i, int j) {
		auto& p = fan.rays[i];
		auto& q = fan.rays[j];
		if (half(p) != half(q)) return half(p) < half(q);
		return p[0] * q[1] - p[1] * q[0] > 0;
	});
	std::vector<bool> used(m, false);
	for (int k = 0; k < m; ++k) {
		int i = ord[k], j = ord[(k + 1) % m];
		auto& p = fan.rays[i];
		auto& q = fan.rays[j];
		if (p[0] * q[1] - p[1] * q[0] > 0) {
			cones.push_back({i, j});
			used[i] = used[j] = true;
		}
	}
	for (int i = 0; i < m; ++i)
		if (!used[i]) cones.push_back({i});
	return cones;
}

}  // namespace

std::optional<Q> fan_function(const Fan& fan, const std::vector<std::vector<int>>& cones, const QVec& x)
{
	int n = fan.n;
	for (auto& c : cones) {
		QMat A(n, QVec(c.size()));
		for (int r = 0; r < n; ++r)
			for (size_t j = 0; j < c.size(); ++j) A[r][j] = fan.rays[c[j]][r];
		auto lam = solve_any(A, x, (int)c.size());
		if (!lam) continue;
		bool ok = true;
		for (auto& l : *lam)
			if (l < 0) ok = false;
		if (!ok) continue;
		Q val = 0;
		for (size_t j = 0; j < c.size(); ++j) val += (*lam)[j] * fan.values[c[j]];
		return val;
	}
	return std::nullopt;
}

SupportFunction support_function(const Fan& fan)
{
	if (fan.rays.empty()) throw Error("invalid_fan", "fan has no rays");
	if (fan.rays.size() != fan.values.size()) throw Error("invalid_fan", "one value per ray is required");
	std::vector<std::pair<Exp, Q>> terms;
	for (size_t i = 0; i < fan.rays.size(); ++i) {
		auto& r = fan.rays[i];
		if ((int)r.size() != fan.n) throw Error("dimension_mismatch", "ray of wrong length");
		if (!is_primitive(r)) {
			std::string s;
			for (long x : r) s += (s.empty() ? "" : ",") + std::to_string(x);
			throw Error("non_primitive_ray", "ray generator (" + s + ") is not primitive");
		}
		terms.push_back({r, fan.values[i]});
	}
	SupportFunction out;
	out.poly = TropicalPolynomial(fan.n, terms);
	out.cones = fan.cones.empty() ? infer_cones(fan) : fan.cones;
	int n = fan.n;
	bool concave = true;
	// A function linear on the cones is concave iff the linear piece of each
	// full-dimensional cone dominates the values at every ray.
	for (auto& c : out.cones) {
		QMat A;
		QVec b;
		for (int i : c) {
			A.push_back(to_qvec(fan.rays[i]));
			b.push_back(fan.values[i]);
		}
		if (rank(A, n) < n) continue;
		auto m = solve_any(A, b, n);
		if (!m) {
			concave = false;  // values not linear on a non-simplicial cone
			continue;
		}
		for (size_t r = 0; r < fan.rays.size(); ++r)
			if (dot(fan.rays[r], *m) < fan.values[r]) concave = false;
	}
	// along a line through the origin spanned by two opposite rays
	for (size_t i = 0; i < fan.rays.size(); ++i)
		for (size_t j = i + 1; j < fan.rays.size(); ++j) {
			bool opp = true;
			for (int k = 0; k < n; ++k)
				if (fan.rays[i][k] != -fan.rays[j][k]) opp = false;
			if (opp && fan.values[i] + fan.values[j] > 0) concave = false;
		}
	out.is_concave = concave;
	return out;
}

}  // namespace trop
