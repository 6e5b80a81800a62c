#include "qprob/qnum.hpp"

#include "qprob/errors.hpp"

namespace qprob::qnum {

Rational bracket(long x, const QBase& q) {
    if (q.is_unit()) return Rational(x);
    if (x == 0) return Rational(0);
    if (x < 0) return -q.pow(x) * bracket(-x, q);
    // power sum avoids the 0/0 of the closed form at q = 1
    Rational acc(0), pw(1);
    for (long i = 0; i < x; ++i) {
        acc += pw;
        pw *= q.value();
    }
    return acc;
}

Rational q_factorial(long k, const QBase& q) {
    if (k < 0) throw DomainError("q_factorial of negative argument");
    Rational acc(1);
    for (long i = 2; i <= k; ++i) acc *= bracket(i, q);
    return acc;
}

Rational falling_bracket_product(long x, long k, const QBase& q) {
    Rational acc(1);
    for (long i = 0; i < k; ++i) acc *= bracket(x - i, q);
    return acc;
}

Rational q_binomial(long x, long k, const QBase& q) {
    if (k < 0) return Rational(0);
    if (k == 0) return Rational(1);
    if (x >= 0 && x < k) return Rational(0);
    return falling_bracket_product(x, k, q) / q_factorial(k, q);
}

Rational shifted_pow(const Rational& a, const Rational& b, long n, const QBase& q) {
    if (n >= 0) {
        Rational acc(1), pw(1);
        for (long i = 0; i < n; ++i) {
            acc *= a + pw * b;
            pw *= q.value();
        }
        return acc;
    }
    long beta = -n;
    Rational acc(1), pw = q.pow(-beta);
    for (long i = 0; i < beta; ++i) {
        Rational factor = a + pw * b;
        if (factor.is_zero()) throw DomainError("zero factor in negative shifted power");
        acc *= factor;
        pw *= q.value();
    }
    return acc.reciprocal();
}

Poly shifted_pow_linear_poly(const Rational& a, const Rational& b, long n, const QBase& q) {
    if (n < 0) throw DomainError("polynomial shifted power needs a nonnegative exponent");
    Poly acc{Rational(1)};
    Rational pw(1);
    for (long i = 0; i < n; ++i) {
        acc = acc * Poly{a, pw * b};
        pw *= q.value();
    }
    return acc;
}

Interval shifted_pow_infinite(const Rational& p, const QBase& q, const Rational& eps) {
    if (!q.sub_unit()) throw DomainError("infinite shifted power needs 0 < q < 1");
    if (p.sign() < 0 || p >= Rational(1)) throw DomainError("infinite shifted power needs 0 <= p < 1");
    if (eps.sign() <= 0) throw DomainError("eps must be positive");
    if (p.is_zero()) return Interval(Rational(1));

    // stop at the smallest N with p q^N / (1-q) < eps/2; the remaining
    // factors lie in [1 - p q^N/(1-q), 1]
    Rational one_minus_q = Rational(1) - q.value();
    Rational half_eps = eps / Rational(2);
    Rational partial(1), pw(1);
    while (p * pw / one_minus_q >= half_eps) {
        partial *= Rational(1) - p * pw;
        pw *= q.value();
    }
    Rational tail = p * pw / one_minus_q;
    return Interval(partial * (Rational(1) - tail), partial);
}

std::vector<Rational> euler_coefficients(long m, const QBase& q) {
    if (m < 0) throw DomainError("euler_coefficients needs m >= 0");
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(m) + 1);
    for (long j = 0; j <= m; ++j) c.push_back(q_binomial(m, j, q) * q.pow(choose2(j)));
    return c;
}

Rational symmetric_pow(const Rational& a, const Rational& b, long n, const QBase& q) {
    if (n < 0) throw DomainError("symmetric_pow needs n >= 0");
    Rational acc(0);
    for (long k = 0; k <= n; ++k) acc += q_binomial(n, k, q) * a.pow(k) * b.pow(n - k);
    return acc;
}

Poly q_derivative(const Poly& f, const QBase& q) {
    if (f.degree() <= 0) return Poly();
    std::vector<Rational> out(static_cast<size_t>(f.degree()));
    for (int s = 1; s <= f.degree(); ++s) out[static_cast<size_t>(s - 1)] = bracket(s, q) * f.coeff(s);
    return Poly(std::move(out));
}

Rational jackson_integral(const Poly& f, const Rational& upper, const QBase& q) {
    Rational acc(0);
    for (int s = 0; s <= f.degree(); ++s)
        acc += f.coeff(s) * upper.pow(s + 1) / bracket(s + 1, q);
    return acc;
}

std::vector<Rational> euler_operator_coefficients(long m, const QBase& q) {
    if (m < 1) throw DomainError("operator expansion needs m >= 1");
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(m));
    for (long k = 1; k <= m; ++k) {
        Rational sum(0);
        for (long s = 0; s < k; ++s) {
            Rational term = q_binomial(k - 1, s, q) * q.pow(choose2(s)) * bracket(k - s, q).pow(m - 1);
            if (s % 2 == 1) term = -term;
            sum += term;
        }
        c.push_back(sum / q_factorial(k - 1, q));
    }
    return c;
}

Interval q_exponential(long mu, const Rational& lambda, const QBase& q, const Rational& eps) {
    if (!q.sub_unit()) throw DomainError("q_exponential needs 0 < q < 1");
    if (mu < 0) throw DomainError("q_exponential series diverges for mu < 0");
    if (eps.sign() <= 0) throw DomainError("eps must be positive");
    if (lambda.is_zero()) return Interval(Rational(1));
    Rational one_minus_q = Rational(1) - q.value();
    if (mu == 0 && lambda.abs() * one_minus_q >= Rational(1))
        throw DomainError("q_exponential with mu = 0 needs |lambda|(1-q) < 1");

    // |t_{k+1}/t_k| = |lambda| q^{mu k} / [k+1] is nonincreasing in k, so
    // once it drops below 1 the remaining terms are geometrically bounded.
    Rational half_eps = eps / Rational(2);
    Rational sum(0), term(1);
    Rational qmu_pow(1);  // q^{mu k}
    for (long k = 0;; ++k) {
        sum += term;
        Rational ratio = lambda.abs() * qmu_pow / bracket(k + 1, q);
        if (ratio < Rational(1)) {
            Rational tail = term.abs() * ratio / (Rational(1) - ratio);
            if (tail <= half_eps) return Interval(sum - tail, sum + tail);
        }
        term = term * lambda * qmu_pow / bracket(k + 1, q);
        qmu_pow *= q.pow(mu);
    }
}

Rational rebase_bracket(long x, const QBase& q) { return bracket(x, q.reciprocal()); }

}  // namespace qprob::qnum
