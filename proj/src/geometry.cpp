#include "trop/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trop {

void for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn)
{
	if (k < 0 || k > n) return;
	std::vector<int> c(k);
	std::iota(c.begin(), c.end(), 0);
	while (true) {
		if (!fn(c)) return;
		int i = k - 1;
		while (i >= 0 && c[i] == n - k + i) --i;
		if (i < 0) return;
		++c[i];
		for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
	}
}

static QMat columns(const QMat& basis, int n)
{
	QMat A(n, QVec(basis.size()));
	for (int r = 0; r < n; ++r)
		for (size_t j = 0; j < basis.size(); ++j) A[r][j] = basis[j][r];
	return A;
}

QVec AffineHull::coords(const QVec& p) const
{
	int n = (int)origin.size();
	auto x = solve_any(columns(basis, n), sub(p, origin), (int)basis.size());
	return x ? *x : QVec(basis.size(), Q(0));
}

bool AffineHull::contains(const QVec& p) const
{
	int n = (int)origin.size();
	return solve_any(columns(basis, n), sub(p, origin), (int)basis.size()).has_value();
}

QMat AffineHull::complement() const
{
	int n = (int)origin.size();
	if (basis.empty()) {
		QMat id(n, QVec(n, Q(0)));
		for (int i = 0; i < n; ++i) id[i][i] = 1;
		return id;
	}
	return nullspace(basis, n);
}

AffineHull affine_hull(const std::vector<QVec>& pts)
{
	AffineHull h;
	if (pts.empty()) return h;
	h.origin = pts[0];
	int n = (int)pts[0].size();
	for (size_t i = 1; i < pts.size(); ++i) {
		QVec d = sub(pts[i], h.origin);
		QMat trial = h.basis;
		trial.push_back(d);
		if (rank(trial, n) == (int)trial.size()) h.basis.push_back(d);
		if ((int)h.basis.size() == n) break;
	}
	return h;
}

std::vector<PointFacet> point_facets(const std::vector<QVec>& pts)
{
	std::vector<PointFacet> out;
	AffineHull H = affine_hull(pts);
	int k = H.dim();
	if (k == 0) return out;
	std::vector<QVec> lam;
	for (auto& p : pts) lam.push_back(H.coords(p));
	// Gram matrix to turn coordinate normals back into ambient ones
	QMat G(k, QVec(k));
	for (int i = 0; i < k; ++i)
		for (int j = 0; j < k; ++j) G[i][j] = dot(H.basis[i], H.basis[j]);
	std::set<std::vector<int>> seen;
	for_each_combination((int)pts.size(), k, [&](const std::vector<int>& S) {
		QMat M;
		for (size_t i = 1; i < S.size(); ++i) M.push_back(sub(lam[S[i]], lam[S[0]]));
		QMat N = k == 1 ? QMat{QVec{Q(1)}} : nullspace(M, k);
		if (N.size() != 1) return true;
		QVec c = N[0];
		std::vector<Q> t(pts.size());
		bool lo = false, hi = false;
		Q t0 = dot(c, lam[S[0]]);
		for (size_t i = 0; i < pts.size(); ++i) {
			t[i] = dot(c, lam[i]);
			if (t[i] < t0) lo = true;
			if (t[i] > t0) hi = true;
		}
		if (lo && hi) return true;
		if (lo) {
			c = scale(c, Q(-1));
			t0 = -t0;
			for (auto& x : t) x = -x;
		}
		std::vector<int> idx;
		for (size_t i = 0; i < pts.size(); ++i)
			if (t[i] == t0) idx.push_back((int)i);
		if (!seen.insert(idx).second) return true;
		auto d = solve_unique(G, c, k);
		QVec normal(H.origin.size(), Q(0));
		for (int j = 0; j < k; ++j) normal = add(normal, scale(H.basis[j], (*d)[j]));
		out.push_back({idx, normal, dot(normal, H.origin) + t0});
		return true;
	});
	return out;
}

static void faces_rec(const std::vector<QVec>& pts, const std::vector<int>& idx, std::set<std::vector<int>>& out)
{
	if (!out.insert(idx).second) return;
	std::vector<QVec> sub_pts;
	for (int i : idx) sub_pts.push_back(pts[i]);
	for (auto& f : point_facets(sub_pts)) {
		std::vector<int> g;
		for (int i : f.idx) g.push_back(idx[i]);
		faces_rec(pts, g, out);
	}
}

std::vector<std::vector<int>> point_faces(const std::vector<QVec>& pts)
{
	std::set<std::vector<int>> out;
	if (pts.empty()) return {};
	std::vector<int> all(pts.size());
	std::iota(all.begin(), all.end(), 0);
	faces_rec(pts, all, out);
	return {out.begin(), out.end()};
}

std::vector<int> extreme_points(const std::vector<QVec>& pts)
{
	if (pts.size() == 1) return {0};
	// a point is extreme iff it is not in the hull of the others; checking
	// this through the facet structure is simplest for our sizes
	std::vector<int> r;
	for (auto& f : point_faces(pts))
		if (f.size() == 1) r.push_back(f[0]);
	std::sort(r.begin(), r.end());
	return r;
}

static std::vector<std::vector<int>> tri_rec(const std::vector<QVec>& pts, const std::vector<int>& E)
{
	std::vector<QVec> sub_pts;
	for (int i : E) sub_pts.push_back(pts[i]);
	int k = affine_hull(sub_pts).dim();
	if ((int)E.size() == k + 1) return {E};
	std::vector<std::vector<int>> out;
	int v0 = E[0];
	for (auto& f : point_facets(sub_pts)) {
		if (std::find(f.idx.begin(), f.idx.end(), 0) != f.idx.end()) continue;
		std::vector<int> g;
		for (int i : f.idx) g.push_back(E[i]);
		for (auto s : tri_rec(pts, g)) {
			s.insert(s.begin(), v0);
			out.push_back(s);
		}
	}
	return out;
}

std::vector<std::vector<int>> triangulate(const std::vector<QVec>& pts)
{
	if (pts.empty()) return {};
	return tri_rec(pts, extreme_points(pts));
}

mpz_class simplex_lattice_volume(const std::vector<Exp>& verts)
{
	int k = (int)verts.size() - 1;
	if (k <= 0) return 1;
	int n = (int)verts[0].size();
	mpz_class g = 0;
	for_each_combination(n, k, [&](const std::vector<int>& rows) {
		std::vector<std::vector<mpz_class>> M(k, std::vector<mpz_class>(k));
		for (int i = 0; i < k; ++i)
			for (int j = 0; j < k; ++j) M[i][j] = verts[j + 1][rows[i]] - verts[0][rows[i]];
		mpz_class d = det(M);
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
		return true;
	});
	return abs(g);
}

mpz_class lattice_volume(const std::vector<Exp>& pts)
{
	std::vector<QVec> q;
	for (auto& p : pts) q.push_back(to_qvec(p));
	mpz_class v = 0;
	for (auto& s : triangulate(q)) {
		std::vector<Exp> verts;
		for (int i : s) verts.push_back(pts[i]);
		v += simplex_lattice_volume(verts);
	}
	return v;
}

bool HPolyhedron::contains(const QVec& x) const
{
	for (size_t i = 0; i < eqA.size(); ++i)
		if (dot(eqA[i], x) != eqb[i]) return false;
	for (size_t i = 0; i < inA.size(); ++i)
		if (dot(inA[i], x) < inb[i]) return false;
	return true;
}

QVec VRep::relative_interior_point() const
{
	QVec p = base;
	if (!vertices.empty()) {
		QVec s(base.size(), Q(0));
		for (auto& v : vertices) s = add(s, v);
		p = scale(s, Q(1) / (long)vertices.size());
	}
	for (auto& r : rays) p = add(p, r);
	return p;
}

VRep vrep(const HPolyhedron& P)
{
	int n = P.n;
	VRep out;
	QMat all = P.eqA;
	all.insert(all.end(), P.inA.begin(), P.inA.end());
	out.lines = all.empty() ? nullspace(QMat{QVec(n, Q(0))}, n) : nullspace(all, n);
	QMat eqs = P.eqA;
	QVec eqb = P.eqb;
	for (auto& l : out.lines) {
		eqs.push_back(l);
		eqb.push_back(0);
	}
	int r0 = eqs.empty() ? 0 : rank(eqs, n);
	int k = n - r0;
	int m = (int)P.inA.size();
	auto add_vertex = [&](const QVec& x) {
		for (auto& v : out.vertices)
			if (v == x) return;
		out.vertices.push_back(x);
	};
	if (k == 0) {
		auto x = solve_unique(eqs, eqb, n);
		if (x && P.contains(*x)) add_vertex(*x);
	} else {
		for_each_combination(m, k, [&](const std::vector<int>& c) {
			QMat A = eqs;
			QVec b = eqb;
			for (int i : c) {
				A.push_back(P.inA[i]);
				b.push_back(P.inb[i]);
			}
			auto x = solve_unique(A, b, n);
			if (x && P.contains(*x)) add_vertex(*x);
			return true;
		});
	}
	if (out.vertices.empty()) return out;
	out.empty = false;
	out.base = out.vertices[0];
	if (k >= 1) {
		std::set<Exp> seen;
		for_each_combination(m, k - 1, [&](const std::vector<int>& c) {
			QMat A = eqs;
			for (int i : c) A.push_back(P.inA[i]);
			QMat N = A.empty() ? nullspace(QMat{QVec(n, Q(0))}, n) : nullspace(A, n);
			if (N.size() != 1) return true;
			QVec d = N[0];
			bool pos = true, neg = true;
			for (auto& a : P.inA) {
				Q t = dot(a, d);
				if (t < 0) pos = false;
				if (t > 0) neg = false;
			}
			if (!pos && !neg) return true;
			if (!pos) d = scale(d, Q(-1));
			Exp prim = primitive(d);
			if (seen.insert(prim).second) out.rays.push_back(to_qvec(prim));
			return true;
		});
	}
	QMat span;
	for (size_t i = 1; i < out.vertices.size(); ++i) span.push_back(sub(out.vertices[i], out.vertices[0]));
	for (auto& r : out.rays) span.push_back(r);
	for (auto& l : out.lines) span.push_back(l);
	out.dim = span.empty() ? 0 : rank(span, n);
	return out;
}

}  // namespace trop
