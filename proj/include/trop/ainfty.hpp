#pragma once
// Filtered curved A-infinity algebras on a finite basis over the truncated
// Novikov ring, homomorphisms between them, deformation by an element,
// Maurer-Cartan residuals and pushforward.
//
// Over F2 no signs appear. Over Q the algebra relations use
//   (-1)^(|a_{k-j1}| + ... + |a_k| - i)
// for the term m^{j1+j2+1}(id^j1 (x) m^i (x) id^j2) applied to a_1..a_k,
// taken literally; the sign-free formulas (deformation, composition,
// pushforward) are used unchanged in both fields.

#include "trop/novikov.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace trop {

struct BasisElement {
	std::string name;
	int deg = 0;
	bool operator==(const BasisElement&) const = default;
};

// Coefficient per basis element.
using Element = std::vector<Novikov>;
using Tuple = std::vector<int>;
// One component: input basis tuple -> output combination. Missing tuples
// map to zero; all tuples in one map have the same length.
using MultiMap = std::map<Tuple, Element>;

constexpr int default_kmax = 6;

struct FilteredAlgebra {
	Field field = Field::F2;
	Q cutoff = 10;
	int kmax = default_kmax;
	std::vector<BasisElement> basis;
	std::vector<MultiMap> m;  // m[k] for 0 <= k <= kmax

	int dim() const { return (int)basis.size(); }
	int index(const std::string& name) const;  // -1 when absent
	Element zero() const;
	Element unit(int i, const Novikov& c) const;
	Novikov scalar(const Q& coef, const Q& exponent) const;
	// Largest k with m^k nonzero, -1 when all vanish.
	int top_arity() const;
	bool operator==(const FilteredAlgebra&) const;
};

struct AInftyHom {
	FilteredAlgebra source, target;
	int kmax = default_kmax;
	std::vector<MultiMap> f;  // f[k]: source tuples -> target elements
	int top_arity() const;
};

// Empty basis, all maps zero.
FilteredAlgebra zero_algebra(Field field = Field::F2, const Q& cutoff = 10, int kmax = default_kmax);
// Throws "invalid_algebra" on negative valuations, curvature of valuation 0,
// a degree rule violation, or malformed tuples.
void validate(const FilteredAlgebra& A);
void validate(const AInftyHom& f);

// ---- elements
Element add(const Element& a, const Element& b);
Element scale(const Novikov& c, const Element& a);
bool is_zero(const Element& a);
std::optional<Q> valuation(const Element& a);  // nullopt for zero
std::string to_string(const FilteredAlgebra& A, const Element& a);

// sum over the map's entries of (product of input coefficients) * output
Element apply(const MultiMap& M, const Element& zero, const std::vector<const Element*>& in);
Element apply(const FilteredAlgebra& A, int k, const std::vector<const Element*>& in);

// ---- relation checks
struct Defect {
	int arity = 0;
	std::vector<std::string> tuple;
	Element residual;
	Q valuation;
};

struct RelationReport {
	bool pass = true;
	// per arity 0..kmax: least valuation of a nonzero defect, nullopt if none
	std::vector<std::optional<Q>> worst;
	std::optional<Defect> first;  // first violating tuple in enumeration order
	size_t tuples = 0;
};

RelationReport check_relations(const FilteredAlgebra& A);
// Both sides of the homomorphism relation on every source tuple up to
// kmax. Over Q the relation's signs are not fixed: throws "unsupported_field".
RelationReport check_hom(const AInftyHom& f);

// ---- deformation and Maurer-Cartan
// m^k_a = sum_n m^{k+n} over all placements of n copies of a among the
// inputs. Throws "zero_valuation" unless val(a) > 0.
FilteredAlgebra deform(const FilteredAlgebra& A, const Element& a);
// m^0_a = sum_k m^k(a, ..., a). The sum is finite, so a of valuation 0
// is accepted.
Element mc_residual(const FilteredAlgebra& A, const Element& a);
bool is_mc(const FilteredAlgebra& A, const Element& a);

// ---- homomorphisms
AInftyHom identity_hom(const FilteredAlgebra& A);
// The homomorphism 0_b from the zero algebra: only f^0 = b.
AInftyHom zero_source_hom(const FilteredAlgebra& B, const Element& b);
// g o f; "algebra_mismatch" unless target(f) == source(g).
AInftyHom compose_homs(const AInftyHom& g, const AInftyHom& f);
Element pushforward(const AInftyHom& f, const Element& b);
// f_a from (A, m_a) to B. Throws "zero_valuation" unless val(a) > 0.
AInftyHom deform_hom(const AInftyHom& f, const Element& a);
bool operator==(const AInftyHom& f, const AInftyHom& g);

// ---- ideals
// Ideal spanned by the named basis elements; "not_an_ideal" (with the
// violating tuple in the message) unless every m^k with an input in I lands
// in I. m^0 need not lie in I.
FilteredAlgebra quotient_ideal(const FilteredAlgebra& A, const std::vector<std::string>& ideal);
// A / A_{>0}: keeps the T^0 part of every coefficient.
FilteredAlgebra reduce_zero_energy(const FilteredAlgebra& A);

// ---- fixtures
struct DGATables {
	std::vector<BasisElement> basis;
	std::map<int, Element> d;                       // missing -> 0
	std::map<std::pair<int, int>, Element> product;  // missing -> 0
};

// m^1 = d, m^2 = product, everything else zero. Throws "dga_axioms" when
// d^2 = 0, associativity, the Leibniz rule (d(ab) = (da)b + (-1)^|a| a(db))
// or the degree rules fail, naming the offending basis tuple.
FilteredAlgebra dga_builder(const DGATables& tables, Field field = Field::F2, const Q& cutoff = 10,
                            int kmax = default_kmax);

// Every element supported on `support` whose coefficients are sums of
// distinct T^l, l in `exponents` (F2 only), that has zero MC residual.
std::vector<Element> mc_bruteforce(const FilteredAlgebra& A, const std::vector<int>& support,
                                   const std::vector<Q>& exponents);

// Random F2 DGA with 2-3 basis elements (at least one of degree 1) and at
// least one nonzero structure constant, by rejection sampling.
FilteredAlgebra random_dga(std::mt19937& rng, const Q& cutoff = 10);
// Random element supported on degree-1 basis elements with valuation > 0
// (zero if there are none).
Element random_deg1(std::mt19937& rng, const FilteredAlgebra& A);
// Up to `want` distinct homomorphisms A -> B passing check_hom, found among
// random f^0 (zero or an MC element of B), f^1 and sparse f^2.
std::vector<AInftyHom> random_homs(std::mt19937& rng, const FilteredAlgebra& A, const FilteredAlgebra& B, int want,
                                   int attempts = 400);

}  // namespace trop
