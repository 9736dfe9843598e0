#pragma once
// Mollified tropical polynomials: phi~ = rho_eps * phi evaluated by a fixed
// quadrature rule on the unit ball, cached on a rectangular grid.

#include "trop/kernel.hpp"
#include "trop/subdivision.hpp"

#include <cstddef>
#include <vector>

namespace trop {

struct Grid {
	std::vector<double> lo, hi;
	double h = 0;
	std::vector<int> dims;  // points per axis; last axis varies fastest

	static Grid make(const std::vector<double>& lo, const std::vector<double>& hi, double h);
	int n() const { return (int)dims.size(); }
	size_t size() const;
	std::vector<int> multi(size_t idx) const;
	size_t index(const std::vector<int>& m) const;
	void point(size_t idx, double* x) const;
	bool inside(const double* x) const;
};

struct Mollifier {
	double eps = 0;
	int n = 0;
	int order = 8;
	std::vector<double> nodes;  // n coordinates per node, unit ball
	std::vector<double> weights;
	size_t count() const { return weights.size(); }

	static Mollifier make(int n, double eps, int order = 8);
	static double bump(double r2);  // unnormalized profile exp(-1/(1-|u|^2))
};

// Throws Error("epsilon_too_large") when some ball of radius eps meets two
// vertex strata of V(phi); the message names the ball.
void check_epsilon(const TropicalPolynomial& phi, double eps);

struct SmoothedField {
	TropicalPolynomial phi;
	Mollifier mol;
	Grid grid;
	std::vector<double> value;  // per grid point
	std::vector<double> grad;   // n per grid point

	int n() const { return phi.n; }
	double value_at(const double* x) const;
	void gradient_at(const double* x, double* g) const;
	const double* grad_cached(size_t idx) const { return &grad[idx * phi.n]; }
};

SmoothedField smooth(const TropicalPolynomial& phi, double eps, const Grid& grid, int order = 8,
                     bool preflight = true);

std::vector<double> smoothed_gradient(const SmoothedField& F, const std::vector<double>& x);
// (sign * dphi~(q)) mod 1, componentwise in [0,1)
std::vector<double> section_point(const SmoothedField& F, const std::vector<double>& q, int sign);

constexpr double lattice_tol = 1e-3;

// Grid mask of the points whose smoothed gradient lies in the relative
// interior of hull(cell), up to the tolerance band.
std::vector<char> strata_regions(const SmoothedField& F, const std::vector<Exp>& cell, double tol = lattice_tol);

struct Component {
	Exp lattice;
	bool open = false;
	std::vector<size_t> points;  // grid indices, sorted
};

std::vector<Component> intersection_components(const SmoothedField& F, double tol = lattice_tol);

// Wrap to [0,1).
double frac(double x);

}  // namespace trop
