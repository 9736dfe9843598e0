#pragma once
// File formats: polynomials, complexes and reports as JSON, meshes as
// JSON lines, A-infinity algebras and homomorphisms as JSON, and the SVG
// pictures. Objects use sorted keys, so equal inputs give equal bytes.

#include "trop/ainfty.hpp"
#include "trop/lift.hpp"
#include "trop/subdivision.hpp"
#include "trop/surgery.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace trop {

using json = nlohmann::json;

// Throws "parse_error" (with line and column) on malformed JSON and
// "schema_error" on well-formed JSON of the wrong shape.
json parse_json(const std::string& text);
std::string read_file(const std::string& path);  // "io_error" when unreadable

// { "n": 2, "monomials": [ { "exp": [1, 0], "coeff": "1/2" }, ... ] }
TropicalPolynomial polynomial_from_json(const json& j);
json to_json(const TropicalPolynomial& phi);
json to_json(const PolyhedralComplex& C);
json to_json(const RegularSubdivision& S);
json to_json(const PolynomialReport& r);
json to_json(const LiftTopology& t);
// tropical_variety, dual_subdivision, classify_polynomial, lift_topology
json analyze_report(const TropicalPolynomial& phi);

// One line per sample: {"chart", "p", "q", "region"}.
void write_mesh_jsonl(std::ostream& os, const LagrangianMesh& M);

FilteredAlgebra algebra_from_json(const json& j, Field field = Field::F2);
json to_json(const FilteredAlgebra& A);
// { "source": algebra, "target": algebra, "maps": { "f1": [...] } }
AInftyHom hom_from_json(const json& j, Field field = Field::F2);
json to_json(const AInftyHom& f);
// [ { "b": "x", "c": "T^1" }, ... ]
Element element_from_json(const FilteredAlgebra& A, const json& j);
json element_to_json(const FilteredAlgebra& A, const Element& a);
json to_json(const FilteredAlgebra& A, const RelationReport& r);

// SVG pictures, n <= 2 where a mesh or variety is drawn.
std::string svg_variety(const TropicalPolynomial& phi, double lo, double hi, const LagrangianMesh* M = nullptr);
std::string svg_torus(const ArgumentCheck& a);
std::string svg_profiles(const SurgeryProfile& P, int samples = 400);
std::string svg_cobordism(const CobordismProfile& G, int samples = 400);

}  // namespace trop
