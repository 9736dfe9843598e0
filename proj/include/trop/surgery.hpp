#pragma once
// Surgery profiles r, s joining the zero section to the graph of a convex
// primitive, their neck width and flux, the cobordism profile g and the
// polygon index formula.

#include <vector>

namespace trop {

// Transition curve S(u) = sin(pi/2 * v), v = sqrt(u) (1 + a (1 - u)).
// S^2 is smooth in u, so the curves (t, r'(t)) and (t, s'(t)) glue to one
// smooth curve with a vertical tangent at t = c.
struct SurgeryProfile {
	double c = 0;      // 0 marks the identity profile r = t, s = 0
	double shape = 0;  // a in (-1, 1/2)

	bool identity() const { return c == 0; }
	double S(double u) const;
	double r(double t) const;
	double s(double t) const;
	double dr(double t) const;
	double ds(double t) const;
};

// Throws "invalid_parameter" for c <= 0 and "non_monotone_shape" when S is
// not increasing on [0,1].
SurgeryProfile make_profile(double c, double shape = 0);
SurgeryProfile identity_profile();

double neck_width(const SurgeryProfile& P);

// Integral of p dq along the neck path of the surgery of y = 0 with the
// graph of f' for the test primitive f(x) = x^2 / 2 (s-chart from f = 2c in
// to f = c, r-chart back out to f = 2c), minus the same integral for the
// identity profile. Throws "nonconvergent" when the quadrature error
// estimate stays above 1e-10.
double profile_flux(const SurgeryProfile& P);

// Closed form the flux telescopes to: s(c) - r(c).
double telescoped_flux(const SurgeryProfile& P);

struct ProfileCheck {
	double boundary = 0;       // max |r(t) - t|, |s(t)| for t >= 2c
	double midpoint = 0;       // |r'(c) - 1/2| + |s'(c) - 1/2|
	double monotone = 0;       // largest decrease of r' / increase of s'
	double joint_slope = 0;    // |dt/dy| at the joint, from the sqrt branch
	double tail_slope = 0;     // max |r' - 1|, |s'| at 2c
	bool ok(double tol) const;
};

ProfileCheck check_profile(const SurgeryProfile& P, int samples = 2001);

struct CobordismProfile {
	double eps = 0;
	double dg(double t) const;
	double g(double t) const;
	// Samples of z(t) = (t, g'(t)) on [-2 eps, eps].
	std::vector<std::pair<double, double>> curve(int samples) const;
};

CobordismProfile cobordism_profile(double eps);

long polygon_moduli_dimension(long n, long k);

}  // namespace trop
