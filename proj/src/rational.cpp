#include "trop/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace trop {

Q parse_rational(const std::string& s)
{
	std::string t;
	for (char c : s)
		if (c != ' ') t += c;
	if (t.empty()) throw std::invalid_argument("empty rational");
	// accept "p/q", integers, and plain decimals like "0.25"
	auto dot_pos = t.find('.');
	if (dot_pos != std::string::npos) {
		bool neg = t[0] == '-';
		std::string body = neg || t[0] == '+' ? t.substr(1) : t;
		dot_pos = body.find('.');
		std::string ip = body.substr(0, dot_pos), fp = body.substr(dot_pos + 1);
		for (char c : ip + fp)
			if (c < '0' || c > '9') throw std::invalid_argument("bad rational '" + s + "'");
		mpz_class num(ip.empty() ? "0" : ip);
		mpz_class den = 1;
		for (char c : fp) {
			num = num * 10 + (c - '0');
			den *= 10;
		}
		Q q(num, den);
		q.canonicalize();
		return neg ? Q(-q) : q;
	}
	Q q;
	if (t[0] == '+') t = t.substr(1);
	if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
	if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
	q.canonicalize();
	return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

QVec to_qvec(const Exp& v)
{
	QVec r;
	r.reserve(v.size());
	for (long x : v) r.emplace_back(x);
	return r;
}

Q dot(const QVec& a, const QVec& b)
{
	Q s = 0;
	for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
	return s;
}

Q dot(const Exp& a, const QVec& b)
{
	Q s = 0;
	for (size_t i = 0; i < a.size(); ++i) s += Q(a[i]) * b[i];
	return s;
}

QVec sub(const QVec& a, const QVec& b)
{
	QVec r(a.size());
	for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
	return r;
}

QVec add(const QVec& a, const QVec& b)
{
	QVec r(a.size());
	for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
	return r;
}

QVec scale(const QVec& a, const Q& s)
{
	QVec r(a.size());
	for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
	return r;
}

bool is_zero(const QVec& a)
{
	for (auto& x : a)
		if (x != 0) return false;
	return true;
}

std::vector<int> rref(QMat& M, int ncols)
{
	std::vector<int> piv;
	size_t row = 0;
	for (int c = 0; c < ncols && row < M.size(); ++c) {
		size_t p = row;
		while (p < M.size() && M[p][c] == 0) ++p;
		if (p == M.size()) continue;
		std::swap(M[p], M[row]);
		Q inv = 1 / M[row][c];
		for (auto& x : M[row]) x *= inv;
		for (size_t r = 0; r < M.size(); ++r) {
			if (r == row || M[r][c] == 0) continue;
			Q f = M[r][c];
			for (size_t k = 0; k < M[r].size(); ++k) M[r][k] -= f * M[row][k];
		}
		piv.push_back(c);
		++row;
	}
	return piv;
}

int rank(QMat M, int ncols) { return (int)rref(M, ncols).size(); }

QMat nullspace(QMat M, int ncols)
{
	auto piv = rref(M, ncols);
	std::vector<bool> is_piv(ncols, false);
	for (int c : piv) is_piv[c] = true;
	QMat basis;
	for (int f = 0; f < ncols; ++f) {
		if (is_piv[f]) continue;
		QVec x(ncols, Q(0));
		x[f] = 1;
		for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -M[r][f];
		basis.push_back(std::move(x));
	}
	return basis;
}

static std::optional<QVec> solve_impl(const QMat& A, const QVec& b, int ncols, bool unique)
{
	QMat M = A;
	for (size_t i = 0; i < M.size(); ++i) M[i].push_back(b[i]);
	auto piv = rref(M, ncols + 1);
	if (!piv.empty() && piv.back() == ncols) return std::nullopt;
	if (unique && (int)piv.size() < ncols) return std::nullopt;
	QVec x(ncols, Q(0));
	for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M[r][ncols];
	return x;
}

std::optional<QVec> solve_any(const QMat& A, const QVec& b, int ncols)
{
	return solve_impl(A, b, ncols, false);
}

std::optional<QVec> solve_unique(const QMat& A, const QVec& b, int ncols)
{
	return solve_impl(A, b, ncols, true);
}

long gcd_vec(const Exp& v)
{
	long g = 0;
	for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
	return g;
}

bool is_primitive(const Exp& v) { return gcd_vec(v) == 1; }

Exp primitive(const QVec& d)
{
	mpz_class l = 1;
	for (auto& x : d) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
	std::vector<mpz_class> z;
	mpz_class g = 0;
	for (auto& x : d) {
		mpz_class v = x.get_num() * (l / x.get_den());
		z.push_back(v);
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
	}
	if (g == 0) throw std::invalid_argument("primitive of zero vector");
	Exp r;
	for (auto& v : z) r.push_back(mpz_class(v / g).get_si());
	return r;
}

mpz_class det(const std::vector<std::vector<mpz_class>>& M)
{
	// fraction-free elimination over Q is simplest to get right
	size_t n = M.size();
	QMat A(n, QVec(n));
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) A[i][j] = Q(M[i][j]);
	Q d = 1;
	for (size_t c = 0; c < n; ++c) {
		size_t p = c;
		while (p < n && A[p][c] == 0) ++p;
		if (p == n) return 0;
		if (p != c) {
			std::swap(A[p], A[c]);
			d = -d;
		}
		d *= A[c][c];
		for (size_t r = c + 1; r < n; ++r) {
			if (A[r][c] == 0) continue;
			Q f = A[r][c] / A[c][c];
			for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
		}
	}
	return d.get_num();
}

}  // namespace trop
