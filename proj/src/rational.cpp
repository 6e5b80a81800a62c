#include "qprob/rational.hpp"

#include <cctype>
#include <ostream>

#include "qprob/errors.hpp"

namespace qprob {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r(*this);
    if (r.sign() < 0) r.v_ = -r.v_;
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw DomainError("negative power of zero");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    return invert ? Rational(d, n) : Rational(n, d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

mpz_class parse_integer(std::string_view s, const char* context) {
    if (s.empty()) throw ParseError(std::string("empty integer in ") + context);
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), std::string(s).c_str(), 10) != 0)
        throw ParseError("bad integer '" + std::string(s) + "' in " + context);
    return z;
}

mpz_class pow10(unsigned long k) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 10, k);
    return z;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class n = parse_integer(text.substr(0, slash), "numerator");
        mpz_class d = parse_integer(text.substr(slash + 1), "denominator");
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(n, d);
    }

    auto epos = text.find_first_of("eE");
    long exp10 = 0;
    std::string_view mantissa = text;
    if (epos != std::string_view::npos) {
        mpz_class e = parse_integer(text.substr(epos + 1), "exponent");
        if (!e.fits_slong_p()) throw ParseError("exponent out of range in '" + std::string(text) + "'");
        exp10 = e.get_si();
        mantissa = text.substr(0, epos);
    }

    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
        frac_digits = static_cast<long>(mantissa.size() - dot - 1);
        if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad decimal '" + std::string(text) + "'");
    } else {
        digits = std::string(mantissa);
    }

    mpz_class num = parse_integer(digits, "mantissa");
    mpz_class den = 1;
    long net = exp10 - frac_digits;
    if (net > 0)
        num *= pow10(static_cast<unsigned long>(net));
    else if (net < 0)
        den = pow10(static_cast<unsigned long>(-net));
    return Rational(num, den);
}

std::uint64_t to_u64_fraction(const Rational& x) {
    if (x.sign() <= 0) return 0;
    if (x >= Rational(1)) return ~0ull;
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), x.num().get_mpz_t(), 64);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
    std::uint64_t out = 0;
    mpz_class rem = q;
    for (int limb = 0; limb < 64; limb += 32) {
        mpz_class low = rem & mpz_class(0xffffffffu);
        out |= static_cast<std::uint64_t>(low.get_ui()) << limb;
        rem >>= 32;
    }
    return out;
}

}  // namespace qprob
