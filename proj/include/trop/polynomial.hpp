#pragma once

#include "trop/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace trop {

// min over monomials of a_v + <v, x>
struct TropicalPolynomial {
	int n = 0;
	std::map<Exp, Q> monomials;

	TropicalPolynomial() = default;
	TropicalPolynomial(int dim, const std::vector<std::pair<Exp, Q>>& terms);

	size_t size() const { return monomials.size(); }
	std::vector<Exp> exponents() const;
};

struct Evaluation {
	Q value;
	std::vector<Exp> active;
};

Evaluation evaluate(const TropicalPolynomial& phi, const QVec& x);

// Floating evaluation for the numerical modules; returns the value and
// writes the gradient (an exponent of the minimizing monomial, ties broken
// by the map order) when grad is non-null.
double evaluate_d(const TropicalPolynomial& phi, const double* x, double* grad = nullptr);

namespace fixtures {
// x1 + x2 + (x1 x2)^-1 with coefficient c on the last monomial; with_center
// adds the constant monomial 0 at exponent (0,0).
TropicalPolynomial t2(const Q& c, bool with_center);
TropicalPolynomial t2_zero();  // x1 (+) x2 (+) (x1x2)^-1
TropicalPolynomial t2_c(const Q& c);
TropicalPolynomial square();  // 0 (+) x1 (+) x2 (+) x1x2
TropicalPolynomial line();    // 0 (+) x in one variable
}  // namespace fixtures

}  // namespace trop
