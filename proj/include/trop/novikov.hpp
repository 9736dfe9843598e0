#pragma once
// Truncated Novikov series sum c_i T^{l_i} with exact rational exponents and
// coefficients in Q or F2. Terms with exponent >= cutoff are dropped.

#include "trop/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trop {

enum class Field { F2, Q };

struct Novikov {
	Field field = Field::F2;
	Q cutoff = 10;
	std::vector<std::pair<Q, Q>> terms;  // (exponent, coefficient), exponents increasing

	static Novikov zero(Field f = Field::F2, const Q& cutoff = 10);
	static Novikov monomial(const Q& coef, const Q& exponent, Field f = Field::F2, const Q& cutoff = 10);
	static Novikov one(Field f = Field::F2, const Q& cutoff = 10) { return monomial(1, 0, f, cutoff); }

	bool is_zero() const { return terms.empty(); }
	// Least exponent; nullopt stands for +infinity (the zero series).
	std::optional<Q> valuation() const;
	// Ring variant: all exponents >= 0.
	bool in_ring() const;
	// Coefficient of T^0.
	Q constant() const;
};

Novikov operator+(const Novikov& a, const Novikov& b);
Novikov operator-(const Novikov& a);
Novikov operator-(const Novikov& a, const Novikov& b);
Novikov operator*(const Novikov& a, const Novikov& b);
Novikov& operator+=(Novikov& a, const Novikov& b);
bool operator==(const Novikov& a, const Novikov& b);

// T^l * a
Novikov shift(const Novikov& a, const Q& l);
// Image in the quotient with a lower cutoff.
Novikov truncate(const Novikov& a, const Q& cutoff);

// "1*T^{0} + 1*T^{1/2}", "0" for zero.
std::string to_string(const Novikov& a);
// Accepts the output of to_string plus shorthand such as "T", "T^2",
// "3/2", "-T^{1/3}", "2*T^-1". Throws "parse_error".
Novikov parse_novikov(const std::string& s, Field f = Field::F2, const Q& cutoff = 10);

}  // namespace trop
