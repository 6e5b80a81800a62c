#include <doctest.h>

#include <map>
#include <vector>

#include "qprob/errors.hpp"
#include "qprob/qnum.hpp"

using namespace qprob;
using namespace qprob::qnum;

namespace {

const QBase kHalf{Rational(1, 2)};
const QBase kUnit{Rational(1)};

Rational R(long n, long d = 1) { return Rational(n, d); }

/// Independent Pascal-recursion table for Gaussian binomials, built from
/// the k = 0 column using only additions.
Rational pascal_oracle(long x, long k, const QBase& q) {
    std::map<std::pair<long, long>, Rational> table;
    for (long n = 0; n <= x; ++n) {
        for (long j = 0; j <= n; ++j) {
            if (j == 0 || j == n)
                table[{n, j}] = Rational(1);
            else
                table[{n, j}] = table[{n - 1, j}] + q.pow(n - j) * table[{n - 1, j - 1}];
        }
    }
    return table.at({x, k});
}

/// Truncated infinite product with an explicit tail enclosure.
Interval product_oracle(const Rational& p, const QBase& q, long cut) {
    Rational partial(1);
    for (long i = 0; i < cut; ++i) partial *= Rational(1) - p * q.pow(i);
    Rational tail = p * q.pow(cut) / (Rational(1) - q.value());
    return Interval(partial * (Rational(1) - tail), partial);
}

/// Classical Stirling numbers of the second kind.
long stirling2(long n, long k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

}  // namespace

TEST_CASE("bracket: power sum, classical limit, negative arguments") {
    CHECK(bracket(0, kHalf) == R(0));
    // direct power sum 1 + 1/2 + 1/4
    CHECK(bracket(3, kHalf) == R(1) + R(1, 2) + R(1, 4));
    CHECK(bracket(3, kHalf) == R(7, 4));
    for (long n = 0; n <= 9; ++n) CHECK(bracket(n, kUnit) == R(n));
    CHECK(bracket(-2, kHalf) == -kHalf.pow(-2) * bracket(2, kHalf));
}

TEST_CASE("bracket addition law over exhaustive grid") {
    for (const char* qs : {"1/4", "1/2", "2", "3"}) {
        QBase q{Rational::from_string(qs)};
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b)
                CHECK(bracket(a + b, q) == bracket(a, q) + q.pow(a) * bracket(b, q));
    }
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0, kHalf) == R(1));
    // product-of-brackets oracle: 1 * 3/2 * 7/4
    CHECK(q_factorial(3, kHalf) == R(1) * R(3, 2) * R(7, 4));
    CHECK(q_factorial(3, kHalf) == R(21, 8));
    CHECK(q_factorial(5, kUnit) == R(120));
    CHECK_THROWS_AS(q_factorial(-1, kHalf), DomainError);
}

TEST_CASE("q_binomial against the Pascal-recursion oracle") {
    CHECK(q_binomial(5, 0, kHalf) == R(1));
    CHECK(q_binomial(4, 2, kHalf) == pascal_oracle(4, 2, kHalf));
    CHECK(q_binomial(4, 2, kHalf) == R(35, 16));
    CHECK(q_binomial(4, 2, kUnit) == R(6));
    CHECK(q_binomial(3, -1, kHalf) == R(0));
    CHECK(q_binomial(2, 5, kHalf) == R(0));
    for (long x = 0; x <= 8; ++x)
        for (long k = 0; k <= x; ++k) CHECK(q_binomial(x, k, kHalf) == pascal_oracle(x, k, kHalf));
}

TEST_CASE("pascal identity") {
    for (const char* qs : {"1/4", "1/2", "3/4", "1", "2"}) {
        QBase q{Rational::from_string(qs)};
        for (long total = 0; total <= 12; ++total)
            for (long k = 0; k <= total; ++k) {
                long n = total - k;
                CHECK(q_binomial(n + 1 + k, k, q) ==
                      q_binomial(n + k, k, q) + q.pow(n + 1) * q_binomial(n + k, k - 1, q));
            }
    }
}

TEST_CASE("shifted_pow: products, classical case, negative exponents") {
    CHECK(shifted_pow(R(5, 7), R(-1, 3), 0, kHalf) == R(1));
    // two-factor product (1 - 1/2)(1 - 1/4)
    CHECK(shifted_pow(R(1), R(-1, 2), 2, kHalf) == R(1, 2) * R(3, 4));
    CHECK(shifted_pow(R(1), R(-1, 2), 2, kHalf) == R(3, 8));
    CHECK(shifted_pow(R(1), R(-1, 3), 4, kUnit) == R(2, 3).pow(4));
    // reciprocal law: (1 -. x)^{-b} * (1 -. q^{-b} x)^b = 1
    for (long b = 1; b <= 4; ++b) {
        Rational x(1, 5);
        Rational lhs = shifted_pow(R(1), -x, -b, kHalf);
        Rational rhs = shifted_pow(R(1), -(kHalf.pow(-b) * x), b, kHalf);
        CHECK(lhs * rhs == R(1));
    }
    // factor 1 + q^{-1} * (-1/2) vanishes at q = 1/2
    CHECK_THROWS_AS(shifted_pow(R(1), R(-1, 2), -1, kHalf), DomainError);
}

TEST_CASE("shifted_pow splitting law for all integer exponents") {
    for (const char* qs : {"1/2", "3/4", "2"}) {
        QBase q{Rational::from_string(qs)};
        Rational x(1, 5);
        for (long alpha = -4; alpha <= 4; ++alpha)
            for (long beta = -4; beta <= 4; ++beta) {
                Rational lhs, rhs;
                bool ok = true;
                try {
                    lhs = shifted_pow(R(1), -x, alpha + beta, q);
                    rhs = shifted_pow(R(1), -x, alpha, q) *
                          shifted_pow(R(1), -(q.pow(alpha) * x), beta, q);
                } catch (const DomainError&) {
                    ok = false;  // a zero factor under a negative exponent
                }
                if (ok) CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("shifted_pow_linear_poly expands the q-product") {
    Poly expanded = shifted_pow_linear_poly(R(1), R(-1), 3, kHalf);
    for (const char* xs : {"0", "1/5", "1/2", "4/5", "1"}) {
        Rational x = Rational::from_string(xs);
        CHECK(expanded.eval(x) == shifted_pow(R(1), -x, 3, kHalf));
    }
}

TEST_CASE("shifted_pow_infinite: certified enclosure") {
    CHECK(shifted_pow_infinite(R(0), kHalf, Rational::from_string("1e-12")) == Interval(R(1)));

    Rational eps = Rational::from_string("1e-12");
    Interval got = shifted_pow_infinite(R(1, 2), kHalf, eps);
    CHECK(got.width() <= eps);
    Interval oracle = product_oracle(R(1, 2), kHalf, 60);
    CHECK(got.gap(oracle) == R(0));
    // frozen decimal reference for the same product
    Rational ref = Rational::from_string("0.2887880950866");
    CHECK((got.mid() - ref).abs() < Rational::from_string("1e-9"));
    CHECK(got.lo() > R(0));
    CHECK(got.hi() < R(1));

    Interval finer = shifted_pow_infinite(R(1, 2), kHalf, Rational::from_string("1e-18"));
    CHECK(got.contains(finer));

    // nested refinement across a small parameter grid
    for (const char* ps : {"1/5", "1/2", "4/5"})
        for (const char* qs : {"1/4", "1/2", "3/4"}) {
            QBase q{Rational::from_string(qs)};
            Rational p = Rational::from_string(ps);
            Interval coarse = shifted_pow_infinite(p, q, Rational::from_string("1e-12"));
            Interval fine = shifted_pow_infinite(p, q, Rational::from_string("1e-18"));
            CHECK(coarse.width() <= Rational::from_string("1e-12"));
            CHECK(coarse.contains(fine));
        }
    CHECK_THROWS_AS(shifted_pow_infinite(R(1, 2), QBase{R(2)}, eps), DomainError);
    CHECK_THROWS_AS(shifted_pow_infinite(R(3, 2), kHalf, eps), DomainError);
}

TEST_CASE("euler_coefficients") {
    CHECK(euler_coefficients(0, kHalf) == std::vector<Rational>{R(1)});
    // hand expansion of (x + y)(x + qy): [1, 1+q, q]
    std::vector<Rational> m2 = euler_coefficients(2, kHalf);
    CHECK(m2 == std::vector<Rational>{R(1), R(3, 2), R(1, 2)});

    // expansion reproduces the product, m <= 10
    for (const char* qs : {"1/2", "3/4", "2"}) {
        QBase q{Rational::from_string(qs)};
        Rational a(1), b(-1, 2);
        for (long m = 0; m <= 10; ++m) {
            auto c = euler_coefficients(m, q);
            Rational sum(0);
            for (long j = 0; j <= m; ++j) sum += c[static_cast<size_t>(j)] * a.pow(m - j) * b.pow(j);
            CHECK(sum == shifted_pow(a, b, m, q));
        }
    }
}

TEST_CASE("symmetric_pow") {
    CHECK(symmetric_pow(R(2, 3), R(1, 5), 0, kHalf) == R(1));
    CHECK(symmetric_pow(R(2, 3), R(1, 5), 1, kHalf) == R(2, 3) + R(1, 5));
    CHECK(symmetric_pow(R(1), R(1), 2, kHalf) == R(7, 2));
}

TEST_CASE("q_derivative: monomial rule and difference quotient") {
    CHECK(q_derivative(Poly{R(5, 3)}, kHalf).is_zero());
    for (int s = 1; s <= 6; ++s) {
        Poly d = q_derivative(Poly::monomial(s, R(1)), kHalf);
        CHECK(d == Poly::monomial(s - 1, bracket(s, kHalf)));
    }

    // (f(qp) - f(p)) / ((q-1)p) computed structurally on the test set
    auto difference_quotient = [](const Poly& f, const QBase& q) {
        Poly top = f.scale_arg(q.value()) - f;
        std::vector<Rational> shifted;
        for (int s = 1; s <= top.degree(); ++s)
            shifted.push_back(top.coeff(s) / (q.value() - R(1)));
        return Poly(shifted);
    };
    std::vector<Poly> test_set = {
        Poly{R(1), R(2), R(3)},
        Poly{R(0), R(-1, 2), R(0), R(7, 5)},
        shifted_pow_linear_poly(R(1), R(-1), 4, kHalf),
        Poly::monomial(6, R(-3, 4)),
    };
    for (const Poly& f : test_set) CHECK(q_derivative(f, kHalf) == difference_quotient(f, kHalf));

    // derivative of the q-product: D (1 -. p)^n = -[n] (1 -. qp)^{n-1}
    long n = 3;
    Poly lhs = q_derivative(shifted_pow_linear_poly(R(1), R(-1), n, kHalf), kHalf);
    Poly rhs = shifted_pow_linear_poly(R(1), -kHalf.value(), n - 1, kHalf) * (-bracket(n, kHalf));
    CHECK(lhs == rhs);
}

TEST_CASE("jackson_integral termwise rule") {
    CHECK(jackson_integral(Poly{}, R(1, 2), kHalf) == R(0));
    CHECK(jackson_integral(Poly{R(1)}, R(2, 7), kHalf) == R(2, 7));
    // 1 - qx integrated to 1/2: 1/2 - (1/2)(1/4)/(3/2)
    Poly f{R(1), -kHalf.value()};
    CHECK(jackson_integral(f, R(1, 2), kHalf) == R(5, 12));
}

TEST_CASE("euler_operator_coefficients and the operator expansion") {
    CHECK(euler_operator_coefficients(1, kHalf) == std::vector<Rational>{R(1)});
    CHECK(euler_operator_coefficients(2, kHalf) == std::vector<Rational>{R(1), kHalf.value()});
    // classical limit: Stirling numbers of the second kind
    auto classical = euler_operator_coefficients(3, kUnit);
    CHECK(classical == std::vector<Rational>{R(1), R(3), R(1)});
    for (long m = 1; m <= 5; ++m) {
        auto c = euler_operator_coefficients(m, kUnit);
        for (long k = 1; k <= m; ++k) CHECK(c[static_cast<size_t>(k - 1)] == R(stirling2(m, k)));
    }

    // [s]^m = sum_k c_k [s][s-1]...[s-k+1], exact
    for (const char* qs : {"1/2", "3/4", "1", "2"}) {
        QBase q{Rational::from_string(qs)};
        for (long m = 1; m <= 5; ++m) {
            auto c = euler_operator_coefficients(m, q);
            for (long s = 0; s <= m + 3; ++s) {
                Rational rhs(0);
                for (long k = 1; k <= m; ++k)
                    rhs += c[static_cast<size_t>(k - 1)] * falling_bracket_product(s, k, q);
                CHECK(bracket(s, q).pow(m) == rhs);
            }
        }
    }
    CHECK_THROWS_AS(euler_operator_coefficients(0, kHalf), DomainError);
}

TEST_CASE("q_exponential") {
    Rational eps = Rational::from_string("1e-9");
    CHECK(q_exponential(0, R(0), kHalf, eps) == Interval(R(1)));
    CHECK(q_exponential(3, R(0), kHalf, eps) == Interval(R(1)));

    // reciprocal-of-product oracle: E_0(1) = 1 / prod(1 - q^i/2) at q = 1/2
    Interval e0 = q_exponential(0, R(1), kHalf, eps);
    CHECK(e0.width() <= eps);
    Interval oracle = product_oracle(R(1, 2), kHalf, 60).reciprocal();
    CHECK(e0.gap(oracle) == R(0));
    CHECK((e0.mid() - Rational::from_string("3.462746")).abs() < Rational::from_string("1e-5"));

    // mutual reciprocals at opposite arguments
    Rational lam(1, 3);
    Interval prod = q_exponential(0, lam, kHalf, Rational::from_string("1e-12")) *
                    q_exponential(1, -lam, kHalf, Rational::from_string("1e-12"));
    CHECK(prod.contains(R(1)));

    CHECK_THROWS_AS(q_exponential(0, R(3), kHalf, eps), DomainError);   // 3 * (1-q) >= 1
    CHECK_THROWS_AS(q_exponential(-1, R(1, 3), kHalf, eps), DomainError);
    CHECK_THROWS_AS(q_exponential(0, R(1, 3), QBase{R(2)}, eps), DomainError);
}

TEST_CASE("rebase_bracket and reciprocal-base laws") {
    CHECK(rebase_bracket(1, kHalf) == R(1));
    CHECK(bracket(1, kHalf) == R(1));
    // [2] in base 2 is 3 = (1/2)^{-1} * (3/2)
    CHECK(rebase_bracket(2, kHalf) == R(3));
    CHECK(rebase_bracket(2, kHalf) == kHalf.pow(-1) * bracket(2, kHalf));
    // Gaussian binomial rebase: [4 2] at base 2 = q^{2(2-4)} [4 2] at q = 1/2
    CHECK(q_binomial(4, 2, kHalf.reciprocal()) == R(35));
    CHECK(q_binomial(4, 2, kHalf.reciprocal()) == kHalf.pow(2 * (2 - 4)) * q_binomial(4, 2, kHalf));

    for (const char* qs : {"1/3", "1/2", "2/3"}) {
        QBase q{Rational::from_string(qs)};
        QBase Q = q.reciprocal();
        for (long x = -5; x <= 8; ++x) CHECK(bracket(x, Q) == q.pow(1 - x) * bracket(x, q));
        for (long k = 0; k <= 8; ++k)
            CHECK(q_factorial(k, Q) == q.pow(-choose2(k)) * q_factorial(k, q));
        for (long a = -5; a <= 8; ++a)
            for (long b = 0; b <= 8; ++b)
                CHECK(q_binomial(a, b, Q) == q.pow(b * (b - a)) * q_binomial(a, b, q));
    }
}
