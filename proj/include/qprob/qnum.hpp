#pragma once

#include <vector>

#include "qprob/interval.hpp"
#include "qprob/poly.hpp"
#include "qprob/qbase.hpp"
#include "qprob/rational.hpp"

namespace qprob::qnum {

/// q-analog [x] of an integer: the power sum 1 + q + ... + q^{x-1} for
/// x >= 0, extended to negative x by [x] = -q^x [-x]; equals x at q = 1.
Rational bracket(long x, const QBase& q);

/// [0]! = 1, [k]! = [1][2]...[k].  Negative k is a domain error.
Rational q_factorial(long k, const QBase& q);

/// Gaussian binomial [x][x-1]...[x-k+1]/[k]! for k >= 0 (any integer x),
/// 1 at k = 0, 0 for k < 0.  Vanishes when 0 <= x < k.
Rational q_binomial(long x, long k, const QBase& q);

/// q-shifted power: prod_{i=0}^{n-1} (a + q^i b) for n >= 0 (empty product
/// is 1); for n = -beta < 0, 1 / prod_{i=0}^{beta-1} (a + q^{-beta+i} b).
/// A zero factor under a negative exponent is a domain error.
Rational shifted_pow(const Rational& a, const Rational& b, long n, const QBase& q);

/// prod_{i=0}^{n-1} (a + q^i b x) expanded as a polynomial in x, n >= 0.
Poly shifted_pow_linear_poly(const Rational& a, const Rational& b, long n, const QBase& q);

/// Certified enclosure of the infinite product prod_{i>=0} (1 - p q^i),
/// width <= eps.  Requires 0 < q < 1 and 0 <= p < 1.
Interval shifted_pow_infinite(const Rational& p, const QBase& q, const Rational& eps);

/// Coefficients c_j = [m choose j] q^{j(j-1)/2}, j = 0..m, of the expansion
/// prod_{i<m} (x + q^i y) = sum_j c_j x^{m-j} y^j.
std::vector<Rational> euler_coefficients(long m, const QBase& q);

/// Symmetric q-power: sum_k [n choose k] a^k b^{n-k}, n >= 0.
Rational symmetric_pow(const Rational& a, const Rational& b, long n, const QBase& q);

/// Difference quotient (f(qx) - f(x)) / ((q-1)x) on polynomials: sends
/// x^s to [s] x^{s-1}, constants to zero.
Poly q_derivative(const Poly& f, const QBase& q);

/// Termwise antiderivative over [0, upper]: x^s integrates to
/// upper^{s+1} / [s+1].  Exact on polynomials.
Rational jackson_integral(const Poly& f, const Rational& upper, const QBase& q);

/// Coefficients c_k, k = 1..m, of x^k (d/d_qx)^k in the expansion of the
/// m-th power of the operator x d/d_qx.  Requires m >= 1.
std::vector<Rational> euler_operator_coefficients(long m, const QBase& q);

/// Certified enclosure (width <= eps) of the q-exponential series
/// sum_k lambda^k q^{mu*k(k-1)/2} / [k]!.  Requires 0 < q < 1 and mu >= 0;
/// mu = 0 additionally requires |lambda|(1-q) < 1.
Interval q_exponential(long mu, const Rational& lambda, const QBase& q, const Rational& eps);

/// [x] evaluated in the reciprocal base Q = 1/q; satisfies
/// [x]_Q = q^{1-x} [x]_q.
Rational rebase_bracket(long x, const QBase& q);

/// Falling product [x][x-1]...[x-k+1] (k factors, k >= 0).
Rational falling_bracket_product(long x, long k, const QBase& q);

/// k(k-1)/2 as a long; the exponent of the Euler weights.
inline long choose2(long k) { return k * (k - 1) / 2; }

}  // namespace qprob::qnum
