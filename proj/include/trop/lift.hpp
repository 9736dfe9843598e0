#pragma once
// Sampled surgery of the zero section with the section of -phi along the
// regions U_v, v in the lattice points of the strata of top dimension.

#include "trop/smoothing.hpp"
#include "trop/surgery.hpp"

#include <optional>
#include <vector>

namespace trop {

struct LagrangianMesh {
	int n = 0;
	TropicalPolynomial phi;
	double eps = 0;
	SurgeryProfile profile;
	Grid grid;
	std::vector<Exp> necks;  // surgered lattice points

	// per grid node: closest neck (smallest f_v), its f value, and the index
	// of the s-chart sample there (the r-chart sample follows), -1 in a hole
	std::vector<int> node_region;
	std::vector<double> node_f;
	std::vector<long> node_sample;

	std::vector<double> q, p;  // n per sample; p in [0,1)^n
	std::vector<char> chart;   // 's' deforms the zero section, 'r' the section of -phi
	std::vector<int> region;   // neck index, -1 where every f_v >= 2c
	std::vector<size_t> node;  // grid node of each sample
	std::vector<std::vector<double>> double_points;  // unsurgered lattice preimages

	size_t size() const { return chart.size(); }
	const double* q_at(size_t i) const { return &q[i * n]; }
	const double* p_at(size_t i) const { return &p[i * n]; }
};

// c <= 0 picks c from the sublevel condition: 0.4 times the smallest second
// smallest f_v over the grid, so the 2c-sublevels of distinct necks are
// disjoint. Throws "overlapping_sublevels" when a given c is too large.
LagrangianMesh lift(const SmoothedField& F, double c = 0, double shape = 0);
LagrangianMesh lift(const TropicalPolynomial& phi, double eps, const Grid& grid, double c = 0, double shape = 0);

// The unsurgered section of sign * phi over every grid node (chart 'r' for
// sign -1, 's' for the zero section when phi is constant).
LagrangianMesh section_mesh(const SmoothedField& F, int sign);

// Largest circular distance between each far sample and the section it
// should reproduce (0 for 's', -dphi~ for 'r').
double chart_agreement(const LagrangianMesh& M, const SmoothedField& F);

// Points of V(phi) inside the mesh window, spaced at most `step` apart
// along each cell (n <= 2).
std::vector<std::vector<double>> sample_variety(const TropicalPolynomial& phi, const Grid& window, double step);

struct ValuationCheck {
	double hausdorff = 0;
	bool pass = false;
};

ValuationCheck valuation_projection_check(const LagrangianMesh& M);

struct ArgumentCheck {
	int resolution = 0;
	double coverage = 1;
	double spill = 0;
	bool pass = false;
	std::vector<char> hit, target;  // torus raster, last axis fastest
};

// Hits are rasterized from the piecewise-linear interpolation of each chart
// over the grid simplices, plus the neck waists where a simplex meets a hole.
// The target is pi(-Delta) = -Delta mod Z^n, the argument of the section
// of -phi. sign = +1 compares with pi(Delta) instead.
ArgumentCheck argument_projection_check(const LagrangianMesh& M, int resolution = 0, int sign = -1);

// Torus raster (n = 2) of the fibre over one transverse line of grid nodes:
// the nodes whose coordinate `axis` has grid index `index`, joined
// piecewise linearly along the line and across neck waists. Only nodes with
// the other coordinate in [from, to] take part.
std::vector<char> slice_fiber(const LagrangianMesh& M, int axis, int index, int resolution, double from, double to);

struct AdmissibilityReport {
	std::vector<Exp> rays;
	std::vector<double> max_deviation;  // per ray
	std::vector<size_t> checked;        // far samples inside C_alpha, per ray
	double radius = 0;
	bool pass = false;
};

// Regions C_a = {<a,q> + k_a >= max_b (<b,q> + k_b) - delta}; samples with
// |q| > radius inside C_a must have <a,p> in Z. radius <= 0 uses the largest
// vertex norm of V(phi) plus 1. Fans are given by rays (n <= 2, complete);
// "fan_cover" when they are not, or when some C_a leaves the open star of a.
AdmissibilityReport admissibility_check(const LagrangianMesh& M, const std::vector<Exp>& rays,
                                        const std::vector<double>& offsets, double delta, double radius = 0,
                                        double tol = 1e-6);

// p -> p + dpsi~(q) mod 1 with psi smoothed at the mesh's eps.
LagrangianMesh fiberwise_sum(const LagrangianMesh& M, const TropicalPolynomial& psi);

// Distance from x to the nearest integer.
double circle_dist(double x);

}  // namespace trop
