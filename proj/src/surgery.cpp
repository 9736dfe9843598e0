#include "trop/surgery.hpp"

#include "trop/error.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace trop {

namespace {

using boost::math::quadrature::gauss;
using boost::math::quadrature::gauss_kronrod;

// int_{u0}^{1} S(u) du with u = w^2, which removes the sqrt at u = 0.
double tail_integral(const SurgeryProfile& P, double u0)
{
	double w0 = std::sqrt(std::clamp(u0, 0.0, 1.0));
	if (w0 >= 1) return 0;
	return gauss<double, 30>::integrate([&](double w) { return P.S(w * w) * 2 * w; }, w0, 1.0);
}

}  // namespace

double SurgeryProfile::S(double u) const
{
	u = std::clamp(u, 0.0, 1.0);
	double v = std::sqrt(u) * (1 + shape * (1 - u));
	return std::sin(M_PI / 2 * v);
}

double SurgeryProfile::r(double t) const
{
	if (identity() || t >= 2 * c) return t;
	return 2 * c - (2 * c - t) / 2 - c / 2 * tail_integral(*this, (t - c) / c);
}

double SurgeryProfile::s(double t) const
{
	if (identity() || t >= 2 * c) return 0;
	return -(2 * c - t) / 2 + c / 2 * tail_integral(*this, (t - c) / c);
}

double SurgeryProfile::dr(double t) const
{
	if (identity() || t >= 2 * c) return 1;
	return 0.5 + 0.5 * S((t - c) / c);
}

double SurgeryProfile::ds(double t) const
{
	if (identity() || t >= 2 * c) return 0;
	return 0.5 - 0.5 * S((t - c) / c);
}

SurgeryProfile make_profile(double c, double shape)
{
	if (!(c > 0)) throw Error("invalid_parameter", "profile constant c must be positive");
	// dv/dw = 1 + a - 3 a w^2 must stay positive on [0,1]
	if (!(shape > -1 && shape < 0.5))
		throw Error("non_monotone_shape", "shape parameter " + std::to_string(shape) + " outside (-1, 1/2)");
	SurgeryProfile P;
	P.c = c;
	P.shape = shape;
	return P;
}

SurgeryProfile identity_profile()
{
	return SurgeryProfile{};
}

double neck_width(const SurgeryProfile& P)
{
	return -P.r(P.c) - P.s(P.c);
}

double profile_flux(const SurgeryProfile& P)
{
	if (P.identity()) return 0;
	double c = P.c;
	// Path parameter w in [0,1] with f(q(w)) = c (1 + w^2); on both charts
	// p dq = lambda(f) f'(q) dq = lambda(f) * 2 c w dw.
	double err_s = 0, err_r = 0;
	auto lam_s = [&](double w) { return P.ds(c * (1 + w * w)) * 2 * c * w; };
	auto lam_r = [&](double w) { return P.dr(c * (1 + w * w)) * 2 * c * w; };
	double in_s = -gauss_kronrod<double, 31>::integrate(lam_s, 0.0, 1.0, 15, 1e-14, &err_s);
	double out_r = gauss_kronrod<double, 31>::integrate(lam_r, 0.0, 1.0, 15, 1e-14, &err_r);
	if (err_s > 1e-10 || err_r > 1e-10) throw Error("nonconvergent", "flux quadrature did not converge");
	// identity profile: p = 0 down to q = 0 along the zero section, then
	// p = q back out to f = 2c
	double reference = 2 * c;
	return in_s + out_r - reference;
}

double telescoped_flux(const SurgeryProfile& P)
{
	if (P.identity()) return 0;
	return P.s(P.c) - P.r(P.c);
}

bool ProfileCheck::ok(double tol) const
{
	return boundary <= tol && midpoint <= tol && monotone <= tol && joint_slope <= tol && tail_slope <= tol;
}

ProfileCheck check_profile(const SurgeryProfile& P, int samples)
{
	ProfileCheck out;
	if (P.identity()) return out;
	double c = P.c;
	for (int i = 0; i < samples; ++i) {
		double t = 2 * c + 2 * c * i / (samples - 1);
		out.boundary = std::max({out.boundary, std::abs(P.r(t) - t), std::abs(P.s(t))});
	}
	out.midpoint = std::abs(P.dr(c) - 0.5) + std::abs(P.ds(c) - 0.5);
	double prev_r = P.dr(c), prev_s = P.ds(c);
	for (int i = 1; i < samples; ++i) {
		double t = c + c * i / (samples - 1);
		double a = P.dr(t), b = P.ds(t);
		out.monotone = std::max({out.monotone, prev_r - a, b - prev_s});
		prev_r = a;
		prev_s = b;
	}
	// (t - c) / (y - 1/2) on the r branch just past the joint
	double u = 1e-20;
	out.joint_slope = c * u / (0.5 * P.S(u));
	double t2 = 2 * c * (1 - 1e-12);
	out.tail_slope = std::max(std::abs(P.dr(t2) - 1), std::abs(P.ds(t2)));
	return out;
}

double CobordismProfile::dg(double t) const
{
	double tau = (t + eps) / eps;
	if (tau <= 0) return 0;
	if (tau >= 1) return 1;
	double a = std::exp(-1 / tau), b = std::exp(-1 / (1 - tau));
	return a / (a + b);
}

double CobordismProfile::g(double t) const
{
	if (t <= -eps) return 0;
	double top = std::min(t, 0.0);
	double v = gauss_kronrod<double, 31>::integrate([&](double x) { return dg(x); }, -eps, top, 15, 1e-14);
	return t > 0 ? v + t : v;
}

std::vector<std::pair<double, double>> CobordismProfile::curve(int samples) const
{
	std::vector<std::pair<double, double>> out;
	for (int i = 0; i < samples; ++i) {
		double t = -2 * eps + 3 * eps * i / std::max(1, samples - 1);
		out.emplace_back(t, dg(t));
	}
	return out;
}

CobordismProfile cobordism_profile(double eps)
{
	if (!(eps > 0)) throw Error("invalid_parameter", "cobordism profile needs eps > 0");
	CobordismProfile g;
	g.eps = eps;
	return g;
}

long polygon_moduli_dimension(long n, long k)
{
	if (n < 1 || k < 1) throw Error("invalid_parameter", "polygon index needs n >= 1 and k >= 1");
	return (2 - n) * k - 3 + n;
}

}  // namespace trop
