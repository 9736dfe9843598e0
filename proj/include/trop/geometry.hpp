#pragma once
// Exact polyhedral helpers: affine hulls, facets and faces of finite point
// sets, V-representations of small H-polyhedra, lattice volumes.
// Everything is brute force over subsets, which is fine at the sizes the
// tropical code feeds in (a handful of monomials in low dimension).

#include "trop/rational.hpp"

#include <functional>
#include <vector>

namespace trop {

// Calls fn(indices) for every k-subset of {0..n-1}; stops early if fn
// returns false.
void for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn);

struct AffineHull {
	QVec origin;
	QMat basis;  // independent direction vectors
	int dim() const { return (int)basis.size(); }
	// Coordinates of p with respect to (origin, basis); p must lie in the hull.
	QVec coords(const QVec& p) const;
	bool contains(const QVec& p) const;
	// Normals e with <e, x> = <e, origin> on the hull.
	QMat complement() const;
};

AffineHull affine_hull(const std::vector<QVec>& pts);

// Facet of conv(pts): normal . x >= offset on all points, equality on idx.
// Normals live in the direction space of the affine hull.
struct PointFacet {
	std::vector<int> idx;
	QVec normal;
	Q offset;
};

std::vector<PointFacet> point_facets(const std::vector<QVec>& pts);
// All nonempty faces of conv(pts) as sorted index sets, the full set included.
std::vector<std::vector<int>> point_faces(const std::vector<QVec>& pts);
std::vector<int> extreme_points(const std::vector<QVec>& pts);
// Triangulation of conv(pts) into simplices on extreme points (index lists).
std::vector<std::vector<int>> triangulate(const std::vector<QVec>& pts);
// Lattice volume of a simplex with integer vertices, normalized to the
// saturated lattice of its own span (unimodular simplex -> 1).
mpz_class simplex_lattice_volume(const std::vector<Exp>& verts);
mpz_class lattice_volume(const std::vector<Exp>& pts);

// { x : eqA x = eqb, inA x >= inb }
struct HPolyhedron {
	int n = 0;
	QMat eqA;
	QVec eqb;
	QMat inA;
	QVec inb;
	bool contains(const QVec& x) const;
};

struct VRep {
	bool empty = true;
	std::vector<QVec> vertices;
	std::vector<QVec> rays;  // extreme rays of the recession cone, pointed part
	QMat lines;              // lineality basis
	QVec base;               // a point of the polyhedron (first vertex when there is one)
	int dim = -1;
	QVec relative_interior_point() const;
};

VRep vrep(const HPolyhedron& P);

}  // namespace trop
