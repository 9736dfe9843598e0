#pragma once
// Exact rationals (GMP) and the small amount of linear algebra over Q
// the combinatorial code needs.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trop {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;
using Exp = std::vector<long>;

Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

QVec to_qvec(const Exp& v);
Q dot(const QVec& a, const QVec& b);
Q dot(const Exp& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Q& s);
bool is_zero(const QVec& a);

// Row-reduces M in place; returns pivot columns.
std::vector<int> rref(QMat& M, int ncols);
int rank(QMat M, int ncols);
// Basis of {x : M x = 0}.
QMat nullspace(QMat M, int ncols);
// Some solution of A x = b, if consistent.
std::optional<QVec> solve_any(const QMat& A, const QVec& b, int ncols);
// The solution of A x = b if it exists and is unique.
std::optional<QVec> solve_unique(const QMat& A, const QVec& b, int ncols);

// Integer vector with gcd 1 along the rational direction d (d != 0).
Exp primitive(const QVec& d);
long gcd_vec(const Exp& v);
bool is_primitive(const Exp& v);

// Determinant of a square integer matrix, exactly.
mpz_class det(const std::vector<std::vector<mpz_class>>& M);

}  // namespace trop
