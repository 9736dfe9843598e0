#include "trop/smoothing.hpp"

#include "trop/error.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace trop {

size_t Grid::size() const
{
	size_t s = 1;
	for (int d : dims) s *= (size_t)d;
	return s;
}

Grid Grid::make(const std::vector<double>& lo, const std::vector<double>& hi, double h)
{
	if (lo.size() != hi.size() || lo.empty()) throw Error("invalid_grid", "bbox corners must have equal positive length");
	if (!(h > 0)) throw Error("invalid_grid", "grid spacing must be positive");
	Grid g;
	g.lo = lo;
	g.h = h;
	for (size_t k = 0; k < lo.size(); ++k) {
		if (!(hi[k] > lo[k])) throw Error("invalid_grid", "empty bbox");
		int d = (int)std::floor((hi[k] - lo[k]) / h + 1e-9) + 1;
		g.dims.push_back(d);
		g.hi.push_back(lo[k] + (d - 1) * h);
	}
	return g;
}

std::vector<int> Grid::multi(size_t idx) const
{
	std::vector<int> m(dims.size());
	for (int k = (int)dims.size() - 1; k >= 0; --k) {
		m[k] = (int)(idx % dims[k]);
		idx /= dims[k];
	}
	return m;
}

size_t Grid::index(const std::vector<int>& m) const
{
	size_t idx = 0;
	for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + m[k];
	return idx;
}

void Grid::point(size_t idx, double* x) const
{
	for (int k = (int)dims.size() - 1; k >= 0; --k) {
		x[k] = lo[k] + (double)(idx % dims[k]) * h;
		idx /= dims[k];
	}
}

bool Grid::inside(const double* x) const
{
	for (size_t k = 0; k < dims.size(); ++k)
		if (x[k] < lo[k] - 1e-12 || x[k] > hi[k] + 1e-12) return false;
	return true;
}

namespace {

template <unsigned N>
void gauss_fill(std::vector<double>& x, std::vector<double>& w)
{
	using G = boost::math::quadrature::gauss<double, N>;
	auto& a = G::abscissa();
	auto& b = G::weights();
	for (size_t i = 0; i < a.size(); ++i) {
		if (a[i] == 0) {
			x.push_back(0);
			w.push_back(b[i]);
		} else {
			x.push_back(-a[i]);
			w.push_back(b[i]);
			x.push_back(a[i]);
			w.push_back(b[i]);
		}
	}
}

// Gauss-Legendre rule on [-1, 1].
void gauss_rule(int order, std::vector<double>& x, std::vector<double>& w)
{
	switch (order) {
	case 4: gauss_fill<4>(x, w); break;
	case 6: gauss_fill<6>(x, w); break;
	case 8: gauss_fill<8>(x, w); break;
	case 10: gauss_fill<10>(x, w); break;
	case 12: gauss_fill<12>(x, w); break;
	case 16: gauss_fill<16>(x, w); break;
	case 20: gauss_fill<20>(x, w); break;
	case 24: gauss_fill<24>(x, w); break;
	case 32: gauss_fill<32>(x, w); break;
	default: throw Error("invalid_parameter", "unsupported quadrature order " + std::to_string(order));
	}
}

}  // namespace

double Mollifier::bump(double r2) { return r2 < 1 ? std::exp(-1.0 / (1.0 - r2)) : 0.0; }

Mollifier Mollifier::make(int n, double eps, int order)
{
	if (!(eps > 0)) throw Error("invalid_parameter", "epsilon must be positive");
	Mollifier M;
	M.eps = eps;
	M.n = n;
	M.order = order;
	std::vector<double> gx, gw;
	gauss_rule(order, gx, gw);
	// radial nodes on (0, 1); the angular part is a periodic trapezoid rule so
	// that the node set is invariant under u -> -u
	std::vector<double> r, rw;
	for (size_t i = 0; i < gx.size(); ++i) {
		r.push_back((gx[i] + 1) / 2);
		rw.push_back(gw[i] / 2);
	}
	const int M_ang = 4 * order;
	auto push = [&](std::initializer_list<double> u, double w) {
		M.nodes.insert(M.nodes.end(), u);
		M.weights.push_back(w);
	};
	for (size_t i = 0; i < r.size(); ++i) {
		double base = rw[i] * bump(r[i] * r[i]);
		if (n == 1) {
			push({-r[i]}, base);
			push({r[i]}, base);
		} else if (n == 2) {
			for (int j = 0; j < M_ang; ++j) {
				double t = 2 * M_PI * (j + 0.5) / M_ang;
				push({r[i] * std::cos(t), r[i] * std::sin(t)}, base * r[i]);
			}
		} else if (n == 3) {
			for (size_t k = 0; k < gx.size(); ++k) {
				double ct = gx[k], st = std::sqrt(1 - ct * ct);
				for (int j = 0; j < M_ang; ++j) {
					double t = 2 * M_PI * (j + 0.5) / M_ang;
					push({r[i] * st * std::cos(t), r[i] * st * std::sin(t), r[i] * ct}, base * r[i] * r[i] * gw[k]);
				}
			}
		} else {
			throw Error("unsupported_dimension", "smoothing is implemented for n <= 3");
		}
	}
	double s = std::accumulate(M.weights.begin(), M.weights.end(), 0.0);
	for (auto& w : M.weights) w /= s;
	return M;
}

namespace {

std::vector<double> to_d(const QVec& v)
{
	std::vector<double> r;
	for (auto& x : v) r.push_back(x.get_d());
	return r;
}

double dist(const std::vector<double>& a, const std::vector<double>& b)
{
	double d = 0;
	for (size_t k = 0; k < a.size(); ++k) d += (a[k] - b[k]) * (a[k] - b[k]);
	return std::sqrt(d);
}

// Length of the part of d orthogonal to span(L).
double orth_norm(const QMat& L, std::vector<double> d)
{
	std::vector<std::vector<double>> gs;
	for (auto& l : L) {
		std::vector<double> v = to_d(l);
		for (auto& g : gs) {
			double p = 0;
			for (size_t k = 0; k < v.size(); ++k) p += v[k] * g[k];
			for (size_t k = 0; k < v.size(); ++k) v[k] -= p * g[k];
		}
		double nv = 0;
		for (double x : v) nv += x * x;
		nv = std::sqrt(nv);
		for (auto& x : v) x /= nv;
		gs.push_back(v);
	}
	for (auto& g : gs) {
		double p = 0;
		for (size_t k = 0; k < d.size(); ++k) p += d[k] * g[k];
		for (size_t k = 0; k < d.size(); ++k) d[k] -= p * g[k];
	}
	double s = 0;
	for (double x : d) s += x * x;
	return std::sqrt(s);
}

[[noreturn]] void ball_error(const std::vector<double>& a, const std::vector<double>& b, double sep, double eps)
{
	std::ostringstream os;
	os << "ball of radius " << eps << " centred at (";
	for (size_t k = 0; k < a.size(); ++k) os << (k ? ", " : "") << (a[k] + b[k]) / 2;
	os << ") meets two vertex strata; epsilon must be below " << sep / 2;
	throw Error("epsilon_too_large", os.str());
}

}  // namespace

void check_epsilon(const TropicalPolynomial& phi, double eps)
{
	PolyhedralComplex V = tropical_variety(phi);
	std::vector<std::vector<double>> verts;
	for (auto& v : V.vertices()) verts.push_back(to_d(v));
	for (size_t i = 0; i < verts.size(); ++i)
		for (size_t j = i + 1; j < verts.size(); ++j) {
			double d = dist(verts[i], verts[j]);
			if (d <= 2 * eps) ball_error(verts[i], verts[j], d, eps);
		}
	if (!verts.empty()) return;
	// no vertices: the minimal strata are parallel flats
	std::vector<const VarietyCell*> flats;
	for (auto& c : V.cells)
		if (c.rays.empty()) flats.push_back(&c);
	for (size_t i = 0; i < flats.size(); ++i)
		for (size_t j = i + 1; j < flats.size(); ++j) {
			QMat L;
			for (auto& l : flats[i]->lines) L.push_back(to_qvec(l));
			auto a = to_d(flats[i]->base), b = to_d(flats[j]->base);
			std::vector<double> d(a.size());
			for (size_t k = 0; k < a.size(); ++k) d[k] = b[k] - a[k];
			double sep = orth_norm(L, d);
			if (sep <= 2 * eps) ball_error(a, b, sep, eps);
		}
}

namespace {

// Monomials as plain arrays for the quadrature loops; order (and so the tie
// breaking) follows the map order of evaluate_d.
struct Flat {
	int n = 0;
	std::vector<double> a, v;
	explicit Flat(const TropicalPolynomial& phi) : n(phi.n)
	{
		for (auto& [e, c] : phi.monomials) {
			a.push_back(c.get_d());
			for (long x : e) v.push_back((double)x);
		}
	}
	// returns phi(y); writes the index of the minimizing monomial
	double eval(const double* y, size_t& arg) const
	{
		double best = 0;
		for (size_t j = 0; j < a.size(); ++j) {
			double t = a[j];
			for (int k = 0; k < n; ++k) t += v[j * n + k] * y[k];
			if (j == 0 || t < best) {
				best = t;
				arg = j;
			}
		}
		return best;
	}
};

void convolve(const Flat& P, const Mollifier& mol, const double* x, double* value, double* g)
{
	int n = P.n;
	double y[3] = {0, 0, 0};
	double s = 0;
	if (g)
		for (int k = 0; k < n; ++k) g[k] = 0;
	for (size_t i = 0; i < mol.count(); ++i) {
		for (int k = 0; k < n; ++k) y[k] = x[k] - mol.eps * mol.nodes[i * n + k];
		size_t arg = 0;
		double f = P.eval(y, arg);
		s += mol.weights[i] * f;
		if (g)
			for (int k = 0; k < n; ++k) g[k] += mol.weights[i] * P.v[arg * n + k];
	}
	if (value) *value = s;
}

}  // namespace

double SmoothedField::value_at(const double* x) const
{
	double s = 0;
	convolve(Flat(phi), mol, x, &s, nullptr);
	return s;
}

void SmoothedField::gradient_at(const double* x, double* g) const
{
	convolve(Flat(phi), mol, x, nullptr, g);
}

SmoothedField smooth(const TropicalPolynomial& phi, double eps, const Grid& grid, int order, bool preflight)
{
	if (grid.n() != phi.n) throw Error("dimension_mismatch", "grid dimension differs from polynomial dimension");
	if (preflight) check_epsilon(phi, eps);
	SmoothedField F;
	F.phi = phi;
	F.mol = Mollifier::make(phi.n, eps, order);
	F.grid = grid;
	size_t N = grid.size();
	int n = phi.n;
	F.value.assign(N, 0);
	F.grad.assign(N * n, 0);
	if (phi.size() == 1) {
		// affine: convolution is the identity
		auto& [v, a] = *phi.monomials.begin();
		std::vector<double> x(n);
		for (size_t i = 0; i < N; ++i) {
			grid.point(i, x.data());
			F.value[i] = evaluate_d(phi, x.data());
			for (int k = 0; k < n; ++k) F.grad[i * n + k] = (double)v[k];
		}
		return F;
	}
	unsigned T = std::max(1u, std::thread::hardware_concurrency());
	std::vector<std::thread> pool;
	for (unsigned t = 0; t < T; ++t)
		pool.emplace_back([&, t] {
			std::vector<double> x(n);
			Flat P(phi);
			for (size_t i = t; i < N; i += T) {
				grid.point(i, x.data());
				convolve(P, F.mol, x.data(), &F.value[i], &F.grad[i * n]);
			}
		});
	for (auto& th : pool) th.join();
	return F;
}

std::vector<double> smoothed_gradient(const SmoothedField& F, const std::vector<double>& x)
{
	if ((int)x.size() != F.n()) throw Error("dimension_mismatch", "point of wrong length");
	if (!F.grid.inside(x.data())) throw Error("out_of_domain", "point outside the grid domain");
	std::vector<double> g(F.n());
	if (F.phi.size() == 1) {
		auto& v = F.phi.monomials.begin()->first;
		for (int k = 0; k < F.n(); ++k) g[k] = (double)v[k];
		return g;
	}
	F.gradient_at(x.data(), g.data());
	return g;
}

double frac(double x)
{
	double f = x - std::floor(x);
	return f >= 1.0 ? 0.0 : f;
}

std::vector<double> section_point(const SmoothedField& F, const std::vector<double>& q, int sign)
{
	auto g = smoothed_gradient(F, q);
	for (auto& x : g) {
		x = frac(sign * x);
		if (x > 1 - 1e-12) x = 0;  // representative of 1 - tiny is 0 within rounding
	}
	return g;
}

std::vector<char> strata_regions(const SmoothedField& F, const std::vector<Exp>& cell, double tol)
{
	RegularSubdivision S = dual_subdivision(F.phi);
	const SubdivisionCell* c = S.find(cell);
	if (!c) throw Error("not_a_cell", "exponent set is not a cell of the dual subdivision");
	int n = F.n();
	LatticePolytope P = lattice_polytope(n, c->vertices);
	std::vector<std::vector<double>> en, fn;
	std::vector<double> eo, fo;
	for (size_t i = 0; i < P.eq_normals.size(); ++i) {
		en.push_back(to_d(P.eq_normals[i]));
		eo.push_back(P.eq_offsets[i].get_d());
	}
	for (size_t i = 0; i < P.facet_normals.size(); ++i) {
		fn.push_back(to_d(P.facet_normals[i]));
		fo.push_back(P.facet_offsets[i].get_d());
	}
	auto norm = [](const std::vector<double>& v) {
		double s = 0;
		for (double x : v) s += x * x;
		return std::sqrt(s);
	};
	std::vector<char> mask(F.grid.size(), 0);
	for (size_t i = 0; i < mask.size(); ++i) {
		const double* g = F.grad_cached(i);
		bool in = true;
		if (c->dim == 0) {
			for (int k = 0; k < n; ++k)
				if (std::abs(g[k] - c->vertices[0][k]) > tol) in = false;
		} else {
			for (size_t j = 0; j < en.size() && in; ++j) {
				double t = 0;
				for (int k = 0; k < n; ++k) t += en[j][k] * g[k];
				if (std::abs(t - eo[j]) > tol * norm(en[j])) in = false;
			}
			for (size_t j = 0; j < fn.size() && in; ++j) {
				double t = 0;
				for (int k = 0; k < n; ++k) t += fn[j][k] * g[k];
				if (t - fo[j] <= tol * norm(fn[j])) in = false;
			}
		}
		mask[i] = in;
	}
	return mask;
}

namespace {

// p = G0 + sum lambda_k (Gk - G0) with lambda in the standard simplex?
bool in_simplex_image(const std::vector<const double*>& G, const std::vector<double>& p, int n)
{
	// Solve the n x n system by Gaussian elimination with partial pivoting.
	std::vector<std::vector<double>> A(n, std::vector<double>(n + 1));
	for (int r = 0; r < n; ++r) {
		for (int k = 0; k < n; ++k) A[r][k] = G[k + 1][r] - G[0][r];
		A[r][n] = p[r] - G[0][r];
	}
	for (int c = 0; c < n; ++c) {
		int piv = c;
		for (int r = c + 1; r < n; ++r)
			if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
		if (std::abs(A[piv][c]) < 1e-14) return false;
		std::swap(A[piv], A[c]);
		for (int r = 0; r < n; ++r) {
			if (r == c) continue;
			double f = A[r][c] / A[c][c];
			for (int k = c; k <= n; ++k) A[r][k] -= f * A[c][k];
		}
	}
	double sum = 0;
	for (int c = 0; c < n; ++c) {
		double l = A[c][n] / A[c][c];
		if (l < -1e-12) return false;
		sum += l;
	}
	return sum <= 1 + 1e-12;
}

}  // namespace

std::vector<Component> intersection_components(const SmoothedField& F, double tol)
{
	const Grid& G = F.grid;
	int n = F.n();
	size_t N = G.size();
	std::vector<char> marked(N, 0);
	std::vector<Exp> label(N);
	bool conflict = false;
	auto mark = [&](size_t i, const Exp& p) {
		if (marked[i] && label[i] != p) conflict = true;
		marked[i] = 1;
		label[i] = p;
	};
	for (size_t i = 0; i < N; ++i) {
		const double* g = F.grad_cached(i);
		Exp p(n);
		bool near = true;
		for (int k = 0; k < n; ++k) {
			p[k] = std::lround(g[k]);
			if (std::abs(g[k] - p[k]) >= tol) near = false;
		}
		if (near) mark(i, p);
	}
	// Isolated preimages of lattice points can fall between grid points; the
	// piecewise-linear interpolant on a Kuhn triangulation of every grid cube
	// catches them.
	std::vector<int> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	std::vector<std::vector<int>> perms;
	do perms.push_back(perm);
	while (std::next_permutation(perm.begin(), perm.end()));
	std::vector<int> cube(n, 0), m(n);
	std::vector<size_t> corner(n + 1);
	std::vector<const double*> grads(n + 1);
	bool more = true;
	for (int k = 0; k < n; ++k)
		if (G.dims[k] < 2) more = false;
	while (more) {
		for (auto& pm : perms) {
			m = cube;
			corner[0] = G.index(m);
			for (int k = 0; k < n; ++k) {
				++m[pm[k]];
				corner[k + 1] = G.index(m);
			}
			bool all_same = true;
			for (int k = 0; k <= n; ++k) {
				grads[k] = F.grad_cached(corner[k]);
				if (!marked[corner[k]] || label[corner[k]] != label[corner[0]]) all_same = false;
			}
			if (all_same) continue;
			Exp lo(n), hi(n);
			for (int k = 0; k < n; ++k) {
				double a = grads[0][k], b = grads[0][k];
				for (int j = 1; j <= n; ++j) {
					a = std::min(a, grads[j][k]);
					b = std::max(b, grads[j][k]);
				}
				lo[k] = (long)std::ceil(a - tol);
				hi[k] = (long)std::floor(b + tol);
				if (lo[k] > hi[k]) all_same = true;  // no lattice point in range
			}
			if (all_same) continue;
			Exp p = lo;
			while (true) {
				std::vector<double> pd(p.begin(), p.end());
				if (in_simplex_image(grads, pd, n))
					for (int k = 0; k <= n; ++k) mark(corner[k], p);
				int k = 0;
				while (k < n && p[k] == hi[k]) {
					p[k] = lo[k];
					++k;
				}
				if (k == n) break;
				++p[k];
			}
		}
		int k = n - 1;
		while (k >= 0 && cube[k] == G.dims[k] - 2) {
			cube[k] = 0;
			--k;
		}
		if (k < 0) break;
		++cube[k];
	}
	if (conflict)
		throw Error("components_merge", "a grid point is attached to two lattice points; refine the grid (h <= " +
		                                    std::to_string(G.h / 2) + ")");
	std::vector<int> comp(N, -1);
	std::vector<Component> out;
	std::vector<size_t> stack;
	for (size_t s = 0; s < N; ++s) {
		if (!marked[s] || comp[s] >= 0) continue;
		int id = (int)out.size();
		out.push_back({label[s], false, {}});
		comp[s] = id;
		stack.push_back(s);
		while (!stack.empty()) {
			size_t i = stack.back();
			stack.pop_back();
			out[id].points.push_back(i);
			auto mi = G.multi(i);
			for (int k = 0; k < n; ++k)
				for (int d : {-1, 1}) {
					auto mj = mi;
					mj[k] += d;
					if (mj[k] < 0 || mj[k] >= G.dims[k]) continue;
					size_t j = G.index(mj);
					if (!marked[j] || comp[j] >= 0) continue;
					if (label[j] != out[id].lattice)
						throw Error("components_merge",
						            "components of two lattice points touch; refine the grid (h <= " +
						                std::to_string(G.h / 2) + ")");
					comp[j] = id;
					stack.push_back(j);
				}
		}
		std::sort(out[id].points.begin(), out[id].points.end());
	}
	// open: contains every grid point within distance 2h of one of its points
	std::vector<std::vector<int>> ball;
	{
		std::vector<int> d(n, -2);
		while (true) {
			int r2 = 0;
			for (int x : d) r2 += x * x;
			if (r2 <= 4) ball.push_back(d);
			int k = 0;
			while (k < n && d[k] == 2) {
				d[k] = -2;
				++k;
			}
			if (k == n) break;
			++d[k];
		}
	}
	for (size_t id = 0; id < out.size(); ++id) {
		for (size_t i : out[id].points) {
			auto mi = G.multi(i);
			bool ok = true;
			for (auto& d : ball) {
				auto mj = mi;
				for (int k = 0; k < n && ok; ++k) {
					mj[k] += d[k];
					if (mj[k] < 0 || mj[k] >= G.dims[k]) ok = false;
				}
				if (!ok || comp[G.index(mj)] != (int)id) {
					ok = false;
					break;
				}
			}
			if (ok) {
				out[id].open = true;
				break;
			}
		}
	}
	std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) { return a.lattice < b.lattice; });
	return out;
}

}  // namespace trop
