#include "trop/lift.hpp"

#include "trop/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace trop {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::vector<double> to_d(const QVec& x)
{
	std::vector<double> r;
	for (auto& v : x) r.push_back(v.get_d());
	return r;
}

// Uniform bucket grid for nearest-neighbour queries in n <= 3.
struct Buckets {
	int n = 0;
	double size = 1;
	const std::vector<double>* pts = nullptr;
	std::unordered_map<int64_t, std::vector<size_t>> map;
	long lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};

	static int64_t key(const long* c)
	{
		return ((c[0] + (1 << 20)) << 42) ^ ((c[1] + (1 << 20)) << 21) ^ (c[2] + (1 << 20));
	}
	void cell(const double* x, long* c) const
	{
		for (int k = 0; k < 3; ++k) c[k] = k < n ? (long)std::floor(x[k] / size) : 0;
	}
	Buckets(int dim, double s, const std::vector<double>& p) : n(dim), size(s), pts(&p)
	{
		size_t m = p.size() / n;
		for (size_t i = 0; i < m; ++i) {
			long c[3];
			cell(&p[i * n], c);
			for (int k = 0; k < 3; ++k) {
				lo[k] = i ? std::min(lo[k], c[k]) : c[k];
				hi[k] = i ? std::max(hi[k], c[k]) : c[k];
			}
			map[key(c)].push_back(i);
		}
	}
	double nearest(const double* x) const
	{
		if (map.empty()) return inf;
		long c[3];
		cell(x, c);
		long reach = 0;
		for (int k = 0; k < n; ++k) reach = std::max({reach, std::abs(c[k] - lo[k]), std::abs(c[k] - hi[k])});
		double best = inf;
		for (long r = 0; r <= reach; ++r) {
			long d[3] = {0, 0, 0};
			long span[3];
			for (int k = 0; k < 3; ++k) span[k] = k < n ? r : 0;
			for (d[0] = -span[0]; d[0] <= span[0]; ++d[0])
				for (d[1] = -span[1]; d[1] <= span[1]; ++d[1])
					for (d[2] = -span[2]; d[2] <= span[2]; ++d[2]) {
						if (std::max({std::abs(d[0]), std::abs(d[1]), std::abs(d[2])}) != r) continue;
						long e[3] = {c[0] + d[0], c[1] + d[1], c[2] + d[2]};
						auto it = map.find(key(e));
						if (it == map.end()) continue;
						for (size_t i : it->second) {
							double s2 = 0;
							for (int k = 0; k < n; ++k) s2 += ((*pts)[i * n + k] - x[k]) * ((*pts)[i * n + k] - x[k]);
							best = std::min(best, std::sqrt(s2));
						}
					}
			if (best <= r * size) break;
		}
		return best;
	}
};

double directed(int n, const std::vector<double>& from, const std::vector<double>& to, double bucket)
{
	if (from.empty()) return 0;
	if (to.empty()) return inf;
	Buckets B(n, bucket, to);
	double worst = 0;
	for (size_t i = 0; i < from.size() / n; ++i) worst = std::max(worst, B.nearest(&from[i * n]));
	return worst;
}

// Parameter range of base + t dir inside the box, intersected with [t0, t1].
bool clip(const Grid& g, const std::vector<double>& base, const std::vector<double>& dir, double& t0, double& t1)
{
	for (int k = 0; k < g.n(); ++k) {
		if (std::abs(dir[k]) < 1e-15) {
			if (base[k] < g.lo[k] || base[k] > g.hi[k]) return false;
			continue;
		}
		double a = (g.lo[k] - base[k]) / dir[k], b = (g.hi[k] - base[k]) / dir[k];
		if (a > b) std::swap(a, b);
		t0 = std::max(t0, a);
		t1 = std::min(t1, b);
	}
	return t0 <= t1;
}

struct Raster {
	int n, res;
	std::vector<char> cells;
	Raster(int dim, int r) : n(dim), res(r), cells((size_t)std::pow(r, dim), 0) {}
	void mark(const double* x)
	{
		size_t idx = 0;
		for (int k = 0; k < n; ++k) {
			int c = (int)std::floor(frac(x[k]) * res);
			idx = idx * res + std::clamp(c, 0, res - 1);
		}
		cells[idx] = 1;
	}
	// Dense barycentric sweep of the simplex spanned by pts (2 or 3 points
	// in the plane, 2 on the line).
	void simplex(const std::vector<std::vector<double>>& pts)
	{
		double len = 0;
		for (size_t i = 0; i < pts.size(); ++i)
			for (size_t j = i + 1; j < pts.size(); ++j) {
				double s2 = 0;
				for (int k = 0; k < n; ++k) s2 += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
				len = std::max(len, std::sqrt(s2));
			}
		int m = (int)std::ceil(len * res * 2) + 1;
		std::vector<double> x(n);
		if (pts.size() == 1) {
			mark(pts[0].data());
			return;
		}
		if (pts.size() == 2) {
			for (int i = 0; i <= m; ++i) {
				for (int k = 0; k < n; ++k) x[k] = pts[0][k] + (pts[1][k] - pts[0][k]) * i / m;
				mark(x.data());
			}
			return;
		}
		for (int i = 0; i <= m; ++i)
			for (int j = 0; i + j <= m; ++j) {
				for (int k = 0; k < n; ++k)
					x[k] = pts[0][k] + (pts[1][k] - pts[0][k]) * i / m + (pts[2][k] - pts[0][k]) * j / m;
				mark(x.data());
			}
	}
	// Every triangle (or segment) on the given points covers their hull.
	void hull(const std::vector<std::vector<double>>& pts)
	{
		if (pts.size() <= 2 || n == 1) {
			if (n == 1) {
				auto [a, b] = std::minmax_element(pts.begin(), pts.end());
				simplex({*a, *b});
			} else {
				simplex(pts);
			}
			return;
		}
		for (size_t i = 0; i < pts.size(); ++i)
			for (size_t j = i + 1; j < pts.size(); ++j)
				for (size_t k = j + 1; k < pts.size(); ++k) simplex({pts[i], pts[j], pts[k]});
	}
};

// Lift the points to one sheet of R^n over the torus, all within 1/2 of the
// first; false when the spread shows the chart wraps inside the simplex.
bool unwrap(std::vector<std::vector<double>>& pts)
{
	for (size_t i = 1; i < pts.size(); ++i)
		for (size_t k = 0; k < pts[i].size(); ++k) pts[i][k] -= std::round(pts[i][k] - pts[0][k]);
	for (size_t k = 0; k < pts[0].size(); ++k) {
		double lo = inf, hi = -inf;
		for (auto& x : pts) {
			lo = std::min(lo, x[k]);
			hi = std::max(hi, x[k]);
		}
		if (hi - lo > 0.45) return false;
	}
	return true;
}

std::vector<std::vector<size_t>> grid_simplices(const Grid& g)
{
	std::vector<std::vector<size_t>> out;
	if (g.n() == 1) {
		for (int i = 0; i + 1 < g.dims[0]; ++i) out.push_back({(size_t)i, (size_t)i + 1});
		return out;
	}
	for (int i = 0; i + 1 < g.dims[0]; ++i)
		for (int j = 0; j + 1 < g.dims[1]; ++j) {
			size_t a = g.index({i, j}), b = g.index({i + 1, j}), c = g.index({i + 1, j + 1}), d = g.index({i, j + 1});
			out.push_back({a, b, c});
			out.push_back({a, d, c});
		}
	return out;
}

}  // namespace

double circle_dist(double x)
{
	return std::abs(x - std::round(x));
}

LagrangianMesh lift(const SmoothedField& F, double c, double shape)
{
	const Grid& g = F.grid;
	int n = F.n();
	LagrangianMesh M;
	M.n = n;
	M.phi = F.phi;
	M.eps = F.mol.eps;
	M.grid = g;
	M.necks = lower_hull_vertices(F.phi);
	size_t K = M.necks.size(), N = g.size();
	std::vector<double> a(K);
	for (size_t k = 0; k < K; ++k) a[k] = F.phi.monomials.at(M.necks[k]).get_d();

	// f_v = a_v + <v,q> - phi~(q) >= 0 with equality exactly on U_v, since
	// phi~ averages phi <= a_v + <v,.> against a symmetric kernel
	M.node_region.assign(N, 0);
	M.node_f.assign(N, 0);
	std::vector<double> second(N, inf);
	std::vector<double> x(n);
	double min2 = inf;
	for (size_t i = 0; i < N; ++i) {
		g.point(i, x.data());
		double b1 = inf, b2 = inf;
		int arg = 0;
		for (size_t k = 0; k < K; ++k) {
			double f = a[k] - F.value[i];
			for (int j = 0; j < n; ++j) f += M.necks[k][j] * x[j];
			f = std::max(f, 0.0);
			if (f < b1) {
				b2 = b1;
				b1 = f;
				arg = (int)k;
			} else if (f < b2) {
				b2 = f;
			}
		}
		M.node_region[i] = arg;
		M.node_f[i] = b1;
		second[i] = b2;
		min2 = std::min(min2, b2);
	}
	if (c <= 0) {
		c = std::isfinite(min2) ? 0.4 * min2 : M.eps;
		if (!(c > 0)) throw Error("overlapping_sublevels", "two regions touch on the grid; no positive c separates them");
	} else {
		for (size_t i = 0; i < N; ++i)
			if (second[i] < 2 * c)
				throw Error("overlapping_sublevels",
				            "2c-sublevels of two regions overlap; largest admissible c is " + std::to_string(min2 / 2));
	}
	M.profile = make_profile(c, shape);

	M.node_sample.assign(N, -1);
	std::vector<double> df(n);
	for (size_t i = 0; i < N; ++i) {
		double f = M.node_f[i];
		if (f < c) continue;
		int k = M.node_region[i];
		const double* gr = F.grad_cached(i);
		for (int j = 0; j < n; ++j) df[j] = M.necks[k][j] - gr[j];
		g.point(i, x.data());
		M.node_sample[i] = (long)M.size();
		for (char ch : {'s', 'r'}) {
			double lam = ch == 's' ? M.profile.ds(f) : M.profile.dr(f);
			for (int j = 0; j < n; ++j) {
				M.q.push_back(x[j]);
				M.p.push_back(frac(lam * df[j]));
			}
			M.chart.push_back(ch);
			M.region.push_back(f < 2 * c ? k : -1);
			M.node.push_back(i);
		}
	}

	auto lp = lattice_points(newton_polytope(F.phi).polytope);
	if (lp.all.size() > K) {
		for (auto& comp : intersection_components(F)) {
			if (comp.open) continue;
			std::vector<double> centre(n, 0);
			for (size_t i : comp.points) {
				g.point(i, x.data());
				for (int j = 0; j < n; ++j) centre[j] += x[j] / comp.points.size();
			}
			M.double_points.push_back(centre);
		}
	}
	return M;
}

LagrangianMesh lift(const TropicalPolynomial& phi, double eps, const Grid& grid, double c, double shape)
{
	return lift(smooth(phi, eps, grid), c, shape);
}

LagrangianMesh section_mesh(const SmoothedField& F, int sign)
{
	LagrangianMesh M;
	M.n = F.n();
	M.phi = F.phi;
	M.eps = F.mol.eps;
	M.grid = F.grid;
	size_t N = F.grid.size();
	M.node_region.assign(N, -1);
	M.node_f.assign(N, inf);
	M.node_sample.assign(N, -1);
	std::vector<double> x(M.n);
	for (size_t i = 0; i < N; ++i) {
		F.grid.point(i, x.data());
		M.node_sample[i] = (long)M.size();
		for (int j = 0; j < M.n; ++j) {
			M.q.push_back(x[j]);
			M.p.push_back(frac(sign * F.grad_cached(i)[j]));
		}
		M.chart.push_back(sign < 0 ? 'r' : 's');
		M.region.push_back(-1);
		M.node.push_back(i);
	}
	return M;
}

double chart_agreement(const LagrangianMesh& M, const SmoothedField& F)
{
	double worst = 0;
	for (size_t i = 0; i < M.size(); ++i) {
		if (M.region[i] != -1) continue;
		const double* gr = F.grad_cached(M.node[i]);
		for (int j = 0; j < M.n; ++j) {
			double want = M.chart[i] == 's' ? 0.0 : -gr[j];
			worst = std::max(worst, circle_dist(M.p_at(i)[j] - want));
		}
	}
	return worst;
}

std::vector<std::vector<double>> sample_variety(const TropicalPolynomial& phi, const Grid& window, double step)
{
	int n = phi.n;
	if (n > 2) throw Error("unsupported_dimension", "variety sampling is implemented for n <= 2");
	std::vector<std::vector<double>> out;
	auto V = tropical_variety(phi);
	for (auto& cell : V.cells) {
		if (cell.dim != n - 1) continue;
		if (n == 1) {
			auto v = to_d(cell.vertices[0]);
			if (window.inside(v.data())) out.push_back(v);
			continue;
		}
		std::vector<double> base, dir;
		double t0 = -inf, t1 = inf;
		if (cell.bounded()) {
			base = to_d(cell.vertices[0]);
			auto end = to_d(cell.vertices[1]);
			for (int k = 0; k < n; ++k) dir.push_back(end[k] - base[k]);
			t0 = 0;
			t1 = 1;
		} else if (!cell.rays.empty()) {
			base = to_d(cell.rays[0].base);
			for (long d : cell.rays[0].direction) dir.push_back((double)d);
			t0 = 0;
		} else {
			base = to_d(cell.vertices.empty() ? cell.base : cell.vertices[0]);
			for (long d : cell.lines[0]) dir.push_back((double)d);
		}
		if (!clip(window, base, dir, t0, t1)) continue;
		double len = std::hypot(dir[0], dir[1]) * (t1 - t0);
		int m = std::max(1, (int)std::ceil(len / step));
		for (int i = 0; i <= m; ++i) {
			double t = t0 + (t1 - t0) * i / m;
			out.push_back({base[0] + t * dir[0], base[1] + t * dir[1]});
		}
	}
	return out;
}

ValuationCheck valuation_projection_check(const LagrangianMesh& M)
{
	int n = M.n;
	std::vector<double> A, B;
	std::vector<double> x(n);
	for (size_t i = 0; i < M.node_sample.size(); ++i) {
		if (M.node_sample[i] < 0) continue;
		M.grid.point(i, x.data());
		A.insert(A.end(), x.begin(), x.end());
	}
	for (auto& v : sample_variety(M.phi, M.grid, M.grid.h / 2)) B.insert(B.end(), v.begin(), v.end());
	ValuationCheck out;
	double bucket = std::max(2 * M.eps, 4 * M.grid.h);
	out.hausdorff = std::max(directed(n, A, B, bucket), directed(n, B, A, bucket));
	out.pass = out.hausdorff <= 2 * M.eps;
	return out;
}

ArgumentCheck argument_projection_check(const LagrangianMesh& M, int resolution, int sign)
{
	int n = M.n;
	if (n > 2) throw Error("unsupported_dimension", "argument rasterization is implemented for n <= 2");
	ArgumentCheck out;
	out.resolution = resolution > 0 ? resolution : (n == 1 ? 1024 : 128);
	int res = out.resolution;

	// target: cells with an interior subsample in sign * Delta + Z^n
	auto P = newton_polytope(M.phi).polytope;
	Raster T(n, res);
	if (P.dim > 0) {
		std::vector<std::vector<double>> A, E;
		std::vector<double> b, e;
		for (size_t i = 0; i < P.facet_normals.size(); ++i) {
			A.push_back(to_d(P.facet_normals[i]));
			b.push_back(P.facet_offsets[i].get_d());
		}
		for (size_t i = 0; i < P.eq_normals.size(); ++i) {
			E.push_back(to_d(P.eq_normals[i]));
			e.push_back(P.eq_offsets[i].get_d());
		}
		std::vector<long> lo(n, 0), hi(n, 0);
		for (int k = 0; k < n; ++k) {
			for (auto& v : P.vertices) {
				lo[k] = std::min(lo[k], sign * v[k]);
				hi[k] = std::max(hi[k], sign * v[k]);
			}
			lo[k] -= 1;
			hi[k] += 1;
		}
		double eq_tol = 1.0 / res;
		auto inside = [&](const std::vector<double>& y) {
			// y in sign * Delta  <=>  sign * y in Delta
			for (size_t i = 0; i < A.size(); ++i) {
				double s = 0;
				for (int k = 0; k < n; ++k) s += A[i][k] * sign * y[k];
				if (s < b[i] - 1e-12) return false;
			}
			for (size_t i = 0; i < E.size(); ++i) {
				double s = 0;
				for (int k = 0; k < n; ++k) s += E[i][k] * sign * y[k];
				if (std::abs(s - e[i]) > eq_tol) return false;
			}
			return true;
		};
		const int sub = 4;
		size_t cells = T.cells.size();
		std::vector<double> y(n);
		for (size_t idx = 0; idx < cells; ++idx) {
			std::vector<int> c(n);
			size_t r = idx;
			for (int k = n - 1; k >= 0; --k) {
				c[k] = (int)(r % res);
				r /= res;
			}
			bool hit = false;
			int total = (int)std::pow(sub, n);
			for (int s = 0; s < total && !hit; ++s) {
				int t = s;
				std::vector<double> base(n);
				for (int k = 0; k < n; ++k) {
					base[k] = (c[k] + (t % sub + 0.5) / sub) / res;
					t /= sub;
				}
				// translates by Z^n inside the padded bounding box
				std::vector<long> w(lo);
				while (!hit) {
					for (int k = 0; k < n; ++k) y[k] = base[k] + w[k];
					if (inside(y)) hit = true;
					int k = 0;
					while (k < n && ++w[k] > hi[k]) w[k] = lo[k], ++k;
					if (k == n) break;
				}
			}
			T.cells[idx] = hit;
		}
	}

	Raster H(n, res);
	auto sheet = [&](size_t node, char ch) {
		long s = M.node_sample[node];
		const double* p = M.p_at(s + (ch == 'r'));
		return std::vector<double>(p, p + n);
	};
	for (auto& simp : grid_simplices(M.grid)) {
		std::vector<size_t> have;
		bool hole = false;
		for (size_t v : simp) {
			if (M.node_sample[v] >= 0)
				have.push_back(v);
			else if (M.node_region[v] >= 0)
				hole = true;
		}
		if (have.empty()) continue;
		if (have.size() == simp.size()) {
			for (char ch : {'s', 'r'}) {
				std::vector<std::vector<double>> pts;
				for (size_t v : have) pts.push_back(sheet(v, ch));
				if (unwrap(pts)) H.simplex(pts);
			}
		} else {
			std::vector<std::vector<double>> pts;
			for (size_t v : have) {
				pts.push_back(sheet(v, 's'));
				pts.push_back(sheet(v, 'r'));
			}
			if (hole && unwrap(pts)) H.hull(pts);
			// partial simplices at the window edge still carry their samples
			for (auto& x : pts) H.mark(x.data());
		}
	}
	for (size_t i = 0; i < M.size(); ++i) H.mark(M.p_at(i));

	size_t target = 0, hit = 0, both = 0;
	for (size_t i = 0; i < H.cells.size(); ++i) {
		target += T.cells[i];
		hit += H.cells[i];
		both += H.cells[i] && T.cells[i];
	}
	out.coverage = target ? double(both) / target : 1.0;
	out.spill = hit ? double(hit - both) / hit : 0.0;
	out.pass = out.coverage >= 0.99 && out.spill <= 0.01;
	out.hit = std::move(H.cells);
	out.target = std::move(T.cells);
	return out;
}

std::vector<char> slice_fiber(const LagrangianMesh& M, int axis, int index, int resolution, double from, double to)
{
	if (M.n != 2) throw Error("unsupported_dimension", "fibre slices are implemented for n = 2");
	const Grid& g = M.grid;
	int other = 1 - axis;
	Raster H(2, resolution);
	auto sheet = [&](size_t node, char ch) {
		const double* p = M.p_at(M.node_sample[node] + (ch == 'r'));
		return std::vector<double>(p, p + 2);
	};
	std::vector<int> m(2);
	m[axis] = index;
	for (int i = 0; i + 1 < g.dims[other]; ++i) {
		double y = g.lo[other] + i * g.h;
		if (y < from || y + g.h > to) continue;
		m[other] = i;
		size_t a = g.index(m);
		m[other] = i + 1;
		size_t b = g.index(m);
		bool ha = M.node_sample[a] >= 0, hb = M.node_sample[b] >= 0;
		if (ha && hb) {
			for (char ch : {'s', 'r'}) {
				std::vector<std::vector<double>> pts{sheet(a, ch), sheet(b, ch)};
				if (unwrap(pts)) H.simplex(pts);
			}
		} else if (ha || hb) {
			size_t v = ha ? a : b;
			std::vector<std::vector<double>> pts{sheet(v, 's'), sheet(v, 'r')};
			if (unwrap(pts)) H.simplex(pts);
		}
	}
	return H.cells;
}

AdmissibilityReport admissibility_check(const LagrangianMesh& M, const std::vector<Exp>& rays,
                                        const std::vector<double>& offsets, double delta, double radius, double tol)
{
	int n = M.n;
	if (n > 2) throw Error("unsupported_dimension", "admissibility regions are implemented for n <= 2");
	if (rays.empty()) throw Error("fan_cover", "empty fan");
	for (auto& r : rays)
		if ((int)r.size() != n) throw Error("dimension_mismatch", "fan ray of wrong length");
	if (!offsets.empty() && offsets.size() != rays.size())
		throw Error("dimension_mismatch", "one offset per ray expected");
	size_t R = rays.size();
	std::vector<double> k(R, 0);
	if (!offsets.empty()) k = offsets;

	// open stars: angular neighbours in the plane, sign on the line
	std::vector<double> ang(R);
	std::vector<size_t> prev(R), next(R);
	if (n == 1) {
		bool pos = false, neg = false;
		for (auto& r : rays) (r[0] > 0 ? pos : neg) = true;
		if (!pos || !neg) throw Error("fan_cover", "rays do not cover the line");
	} else {
		std::vector<size_t> order(R);
		std::iota(order.begin(), order.end(), 0);
		for (size_t i = 0; i < R; ++i) ang[i] = std::atan2((double)rays[i][1], (double)rays[i][0]);
		std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return ang[a] < ang[b]; });
		for (size_t i = 0; i < R; ++i) {
			size_t a = order[i], b = order[(i + 1) % R];
			double gap = ang[b] - ang[a];
			if (gap <= 0) gap += 2 * M_PI;
			if (R < 3 || gap >= M_PI - 1e-12) throw Error("fan_cover", "rays do not span a complete fan");
			next[a] = b;
			prev[b] = a;
		}
	}
	auto in_star = [&](size_t a, const double* q) {
		if (n == 1) return q[0] * rays[a][0] > 0;
		auto ccw = [](double from, double to) {
			double d = to - from;
			while (d < 0) d += 2 * M_PI;
			while (d >= 2 * M_PI) d -= 2 * M_PI;
			return d;
		};
		double t = std::atan2(q[1], q[0]);
		double d = ccw(ang[prev[a]], t);
		return d > 0 && d < ccw(ang[prev[a]], ang[next[a]]);
	};

	AdmissibilityReport out;
	out.rays = rays;
	out.max_deviation.assign(R, 0);
	out.checked.assign(R, 0);
	if (radius <= 0) {
		double m = 0;
		for (auto& v : tropical_variety(M.phi).vertices()) {
			double s2 = 0;
			for (auto& c : v) s2 += c.get_d() * c.get_d();
			m = std::max(m, std::sqrt(s2));
		}
		radius = m + 1;
	}
	out.radius = radius;
	std::vector<double> m(R);
	for (size_t i = 0; i < M.size(); ++i) {
		const double* q = M.q_at(i);
		double norm = 0;
		for (int j = 0; j < n; ++j) norm += q[j] * q[j];
		if (std::sqrt(norm) <= radius) continue;
		double top = -inf;
		for (size_t a = 0; a < R; ++a) {
			m[a] = k[a];
			for (int j = 0; j < n; ++j) m[a] += rays[a][j] * q[j];
			top = std::max(top, m[a]);
		}
		for (size_t a = 0; a < R; ++a) {
			if (m[a] < top - delta) continue;
			if (!in_star(a, q)) throw Error("fan_cover", "a region C_a leaves the open star of its ray; shrink delta");
			double s = 0;
			for (int j = 0; j < n; ++j) s += rays[a][j] * M.p_at(i)[j];
			out.max_deviation[a] = std::max(out.max_deviation[a], circle_dist(s));
			++out.checked[a];
		}
	}
	out.pass = true;
	for (size_t a = 0; a < R; ++a) out.pass = out.pass && out.max_deviation[a] <= tol;
	return out;
}

LagrangianMesh fiberwise_sum(const LagrangianMesh& M, const TropicalPolynomial& psi)
{
	if (psi.n != M.n) throw Error("dimension_mismatch", "twisting polynomial has the wrong dimension");
	check_epsilon(psi, M.eps);
	SmoothedField G;
	G.phi = psi;
	G.mol = Mollifier::make(psi.n, M.eps);
	LagrangianMesh out = M;
	std::vector<double> d(M.n);
	for (size_t i = 0; i < out.size(); ++i) {
		if (psi.size() == 1) {
			auto& v = psi.monomials.begin()->first;
			for (int j = 0; j < M.n; ++j) d[j] = (double)v[j];
		} else {
			G.gradient_at(out.q_at(i), d.data());
		}
		for (int j = 0; j < M.n; ++j) out.p[i * M.n + j] = frac(out.p[i * M.n + j] + d[j]);
	}
	return out;
}

}  // namespace trop
