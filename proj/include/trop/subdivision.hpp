#pragma once

#include "trop/kernel.hpp"

#include <map>
#include <optional>
#include <vector>

namespace trop {

struct SubdivisionCell {
	std::vector<Exp> vertices;  // sorted
	std::vector<Exp> points;    // every exponent whose lift lies on the face, sorted
	int dim = 0;
};

struct RegularSubdivision {
	int n = 0;
	int dim = 0;  // dimension of the Newton polytope
	LatticePolytope polytope;
	std::vector<SubdivisionCell> cells;  // sorted by (dim, vertices)
	std::map<Exp, Q> heights;            // on the lower hull vertices
	std::vector<const SubdivisionCell*> top_cells() const;
	const SubdivisionCell* find(const std::vector<Exp>& vertices) const;
};

// Exponents that are vertices of the lower hull of {(v, a_v)}.
std::vector<Exp> lower_hull_vertices(const TropicalPolynomial& phi);

RegularSubdivision dual_subdivision(const TropicalPolynomial& phi);

struct LegendreData {
	std::map<Exp, Q> heights;
	RegularSubdivision subdivision;
	TropicalPolynomial rebuild(int n) const;
};

LegendreData legendre_transform(const TropicalPolynomial& phi);

struct StratumClassification {
	bool smooth = false;
	long self_intersection = 0;
};

StratumClassification classify_cell(const RegularSubdivision& S, const SubdivisionCell& cell);

struct PolynomialReport {
	bool smooth = true;
	long total_self_intersections = 0;
	bool embedded_lift = true;
};

PolynomialReport classify_polynomial(const TropicalPolynomial& phi);

struct LiftTopology {
	std::optional<long> genus;  // empty means an immersed sphere
	bool immersed = false;
	long punctures = 0;
	long self_intersections = 0;
	std::optional<long> euler_characteristic;
};

LiftTopology lift_topology(const TropicalPolynomial& phi);

}  // namespace trop
