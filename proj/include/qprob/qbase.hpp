#pragma once

#include "qprob/errors.hpp"
#include "qprob/rational.hpp"

namespace qprob {

/// Which side of 1 the deformation base sits on; several results hold in
/// only one regime.
enum class Regime { SubUnit, Unit, SuperUnit };

/// The deformation base q > 0 with its regime tag kept consistent by
/// construction.
class QBase {
  public:
    explicit QBase(Rational value) : value_(std::move(value)) {
        if (value_.sign() <= 0) throw DomainError("deformation base must be positive");
        regime_ = value_ < Rational(1) ? Regime::SubUnit
                : value_ == Rational(1) ? Regime::Unit
                                        : Regime::SuperUnit;
    }
    static QBase from_string(std::string_view s) { return QBase(Rational::from_string(s)); }

    const Rational& value() const { return value_; }
    Regime regime() const { return regime_; }
    bool is_unit() const { return regime_ == Regime::Unit; }
    bool sub_unit() const { return regime_ == Regime::SubUnit; }
    bool super_unit() const { return regime_ == Regime::SuperUnit; }

    /// q^e for any integer e.
    Rational pow(long e) const { return value_.pow(e); }

    QBase reciprocal() const { return QBase(value_.reciprocal()); }
    /// The base q^e (e.g. q^{-s} or q^n); e = 0 gives the classical base 1.
    QBase to_power(long e) const { return QBase(value_.pow(e)); }

    friend bool operator==(const QBase& a, const QBase& b) { return a.value_ == b.value_; }

  private:
    Rational value_;
    Regime regime_;
};

}  // namespace qprob
