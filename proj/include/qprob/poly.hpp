#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qprob/rational.hpp"

namespace qprob {

/// Univariate polynomial with exact rational coefficients, canonical form
/// (trailing zeros trimmed, zero polynomial has degree -1).  Carries the
/// p-dependence of pmfs and moments.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& constant) { c_.push_back(constant); trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, const Rational& coeff) {
        std::vector<Rational> c(static_cast<size_t>(degree) + 1);
        c.back() = coeff;
        return Poly(std::move(c));
    }
    static Poly identity() { return monomial(1, Rational(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int s) const {
        return (s >= 0 && s < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(s)] : Rational(0);
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(x) -> p(c * x)
    Poly scale_arg(const Rational& c) const {
        std::vector<Rational> out(c_.size());
        Rational pw(1);
        for (size_t s = 0; s < c_.size(); ++s) {
            out[s] = c_[s] * pw;
            pw *= c;
        }
        return Poly(std::move(out));
    }

    /// p(x) -> x^k * p(x)
    Poly times_power(int k) const {
        if (is_zero()) return Poly();
        std::vector<Rational> out(c_.size() + static_cast<size_t>(k));
        for (size_t s = 0; s < c_.size(); ++s) out[s + static_cast<size_t>(k)] = c_[s];
        return Poly(std::move(out));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t s = 0; s < o.c_.size(); ++s) c_[s] += o.c_[s];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t s = 0; s < o.c_.size(); ++s) c_[s] -= o.c_[s];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& k) {
        for (auto& c : c_) c *= k;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
    friend Poly operator*(const Rational& k, Poly a) { return a *= k; }
    friend Poly operator-(const Poly& a) { return a * Rational(-1); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int s = degree(); s >= 0; --s) {
            const Rational& c = c_[static_cast<size_t>(s)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c.str();
            if (s > 0) out += "*x^" + std::to_string(s);
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;  // c_[s] multiplies x^s
};

}  // namespace qprob
