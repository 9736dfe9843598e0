#include "trop/polynomial.hpp"

#include "trop/error.hpp"

#include <limits>

namespace trop {

TropicalPolynomial::TropicalPolynomial(int dim, const std::vector<std::pair<Exp, Q>>& terms) : n(dim)
{
	if (dim < 1) throw Error("invalid_polynomial", "dimension must be positive");
	if (terms.empty()) throw Error("invalid_polynomial", "polynomial needs at least one monomial");
	for (auto& [v, a] : terms) {
		if ((int)v.size() != dim)
			throw Error("dimension_mismatch", "exponent of length " + std::to_string(v.size()) +
			                                      " in a polynomial of dimension " + std::to_string(dim));
		if (!monomials.emplace(v, a).second) throw Error("invalid_polynomial", "repeated exponent vector");
	}
}

std::vector<Exp> TropicalPolynomial::exponents() const
{
	std::vector<Exp> r;
	for (auto& [v, a] : monomials) r.push_back(v);
	return r;
}

Evaluation evaluate(const TropicalPolynomial& phi, const QVec& x)
{
	if ((int)x.size() != phi.n)
		throw Error("dimension_mismatch", "point has length " + std::to_string(x.size()) + ", expected " +
		                                      std::to_string(phi.n));
	Evaluation e;
	bool first = true;
	for (auto& [v, a] : phi.monomials) {
		Q val = a + dot(v, x);
		if (first || val < e.value) {
			e.value = val;
			e.active.clear();
			e.active.push_back(v);
			first = false;
		} else if (val == e.value) {
			e.active.push_back(v);
		}
	}
	return e;
}

double evaluate_d(const TropicalPolynomial& phi, const double* x, double* grad)
{
	double best = std::numeric_limits<double>::infinity();
	const Exp* arg = nullptr;
	for (auto& [v, a] : phi.monomials) {
		double val = a.get_d();
		for (int i = 0; i < phi.n; ++i) val += v[i] * x[i];
		if (val < best) {
			best = val;
			arg = &v;
		}
	}
	if (grad)
		for (int i = 0; i < phi.n; ++i) grad[i] = (double)(*arg)[i];
	return best;
}

namespace fixtures {

TropicalPolynomial t2(const Q& c, bool with_center)
{
	std::vector<std::pair<Exp, Q>> terms = {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, c}};
	if (with_center) terms.push_back({{0, 0}, 0});
	return TropicalPolynomial(2, terms);
}

TropicalPolynomial t2_zero() { return t2(0, false); }
TropicalPolynomial t2_c(const Q& c) { return t2(c, true); }

TropicalPolynomial square()
{
	return TropicalPolynomial(2, {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}});
}

TropicalPolynomial line() { return TropicalPolynomial(1, {{{0}, 0}, {{1}, 0}}); }

}  // namespace fixtures

}  // namespace trop
