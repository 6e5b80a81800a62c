#pragma once

#include "qprob/errors.hpp"
#include "qprob/rational.hpp"

namespace qprob {

/// Closed rational interval [lo, hi].  Carries certified enclosures of
/// infinite products and series; all endpoint arithmetic is exact, so an
/// operation's result is guaranteed to contain the true value whenever the
/// operands do.
class Interval {
  public:
    Interval() = default;
    Interval(const Rational& point) : lo_(point), hi_(point) {}
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) throw DomainError("interval with hi < lo");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool strictly_contains(const Interval& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }

    /// Shortest distance between the two sets (0 when they overlap).
    Rational gap(const Interval& o) const {
        Rational g = max(lo_, o.lo_) - min(hi_, o.hi_);
        return g.sign() > 0 ? g : Rational(0);
    }

    Interval intersect_nonneg() const { return Interval(max(lo_, Rational(0)), max(hi_, Rational(0))); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
    }
    /// Requires 0 outside b.
    friend Interval operator/(const Interval& a, const Interval& b) { return a * b.reciprocal(); }

    Interval reciprocal() const {
        if (lo_.sign() <= 0 && hi_.sign() >= 0) throw DomainError("reciprocal of interval containing zero");
        return Interval(hi_.reciprocal(), lo_.reciprocal());
    }

    friend Interval operator+(const Interval& a, const Rational& b) { return a + Interval(b); }
    friend Interval operator+(const Rational& a, const Interval& b) { return Interval(a) + b; }
    friend Interval operator-(const Interval& a, const Rational& b) { return a - Interval(b); }
    friend Interval operator-(const Rational& a, const Interval& b) { return Interval(a) - b; }
    friend Interval operator*(const Interval& a, const Rational& b) { return a * Interval(b); }
    friend Interval operator*(const Rational& a, const Interval& b) { return Interval(a) * b; }
    friend Interval operator/(const Interval& a, const Rational& b) { return a / Interval(b); }
    friend Interval operator/(const Rational& a, const Interval& b) { return Interval(a) / b; }

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

    static Interval hull(const Interval& a, const Interval& b) {
        return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
    }

  private:
    Rational lo_, hi_;
};

}  // namespace qprob
