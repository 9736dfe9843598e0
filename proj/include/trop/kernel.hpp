#pragma once

#include "trop/geometry.hpp"
#include "trop/polynomial.hpp"

#include <optional>
#include <vector>

namespace trop {

struct LatticePolytope {
	int n = 0;
	int dim = -1;
	std::vector<Exp> vertices;
	// affine span: eq_normals[i] . x = eq_offsets[i]
	QMat eq_normals;
	QVec eq_offsets;
	// facets: facet_normals[i] . x >= facet_offsets[i]
	QMat facet_normals;
	QVec facet_offsets;

	bool contains(const QVec& x) const;
	bool relative_interior(const QVec& x) const;
};

LatticePolytope lattice_polytope(int n, const std::vector<Exp>& pts);

struct LatticePoints {
	std::vector<Exp> all;
	std::vector<Exp> interior;
};

LatticePoints lattice_points(const LatticePolytope& P);

struct Ray {
	QVec base;
	Exp direction;
};

struct VarietyCell {
	std::vector<Exp> active;  // sorted
	int dim = 0;
	HPolyhedron h;
	std::vector<QVec> vertices;
	std::vector<Ray> rays;
	std::vector<Exp> lines;  // lineality directions through vertices[0] / base
	QVec base;
	bool bounded() const { return rays.empty() && lines.empty(); }
};

struct PolyhedralComplex {
	int n = 0;
	std::vector<VarietyCell> cells;
	std::vector<QVec> vertices() const;  // 0-dimensional cells
};

PolyhedralComplex tropical_variety(const TropicalPolynomial& phi);

struct NewtonPolytope {
	LatticePolytope polytope;
	std::vector<Exp> active_lattice;
};

NewtonPolytope newton_polytope(const TropicalPolynomial& phi);

struct Fan {
	int n = 0;
	std::vector<Exp> rays;
	std::vector<Q> values;
	// maximal cones as ray index lists; inferred when empty (n <= 2)
	std::vector<std::vector<int>> cones;
};

struct SupportFunction {
	TropicalPolynomial poly;
	bool is_concave = false;
	std::vector<std::vector<int>> cones;
};

SupportFunction support_function(const Fan& fan);
// Cone-wise linear interpolation of the ray values at x (nullopt outside the support).
std::optional<Q> fan_function(const Fan& fan, const std::vector<std::vector<int>>& cones, const QVec& x);

}  // namespace trop
