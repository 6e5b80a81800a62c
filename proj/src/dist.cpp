#include "qprob/dist.hpp"

#include <functional>
#include <stdexcept>

#include "qprob/errors.hpp"

namespace qprob::qdist {

using qnum::bracket;
using qnum::choose2;
using qnum::falling_bracket_product;
using qnum::q_binomial;
using qnum::q_factorial;
using qnum::shifted_pow;
using qnum::shifted_pow_infinite;
using qnum::shifted_pow_linear_poly;
using qnum::symmetric_pow;

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

void check_probability(const Rational& p, const char* name) {
    if (p.sign() < 0 || p > Rational(1)) throw DomainError(std::string(name) + " must lie in [0, 1]");
}

void check_regime_at_most_unit(const QBase& q) {
    if (q.super_unit()) throw DomainError("probability regime requires 0 < q <= 1");
}

}  // namespace

bool Pmf::all_exact() const {
    if (!is_exact(defect)) return false;
    for (const auto& [k, p] : entries)
        if (!is_exact(p)) return false;
    return true;
}

Rational Pmf::exact_total() const {
    if (!all_exact()) throw DomainError("pmf has interval-valued entries");
    Rational acc = as_exact(defect);
    for (const auto& [k, p] : entries) acc += as_exact(p);
    return acc;
}

Rational Pmf::tv_distance(const Pmf& other) const {
    Rational acc(0);
    auto value_of = [](const Pmf& pmf, long k) {
        auto it = pmf.entries.find(k);
        return it == pmf.entries.end() ? Rational(0) : as_exact(it->second);
    };
    for (const auto& [k, p] : entries) acc += (as_exact(p) - value_of(other, k)).abs();
    for (const auto& [k, p] : other.entries)
        if (!entries.count(k)) acc += as_exact(p).abs();
    return acc / Rational(2);
}

MomentReport moments_from_pmf(const Pmf& pmf) {
    Rational mean(0), second(0);
    for (const auto& [k, p] : pmf.entries) {
        const Rational& v = pmf.values.at(k);
        const Rational& w = as_exact(p);
        mean += v * w;
        second += v * v * w;
    }
    return {mean, second, second - mean * mean};
}

// ---- validation -----------------------------------------------------------

void validate(const BernoulliSpec& s, ParamMode mode) {
    require(s.n >= 0, "trial count must be nonnegative");
    if (mode == ParamMode::Probability) {
        check_probability(s.p, "p");
        check_regime_at_most_unit(s.q);
    }
}

void validate(const BernoulliInfiniteSpec& s, ParamMode) {
    require(s.q.sub_unit(), "infinite-trials family needs 0 < q < 1");
    require(s.p.sign() >= 0 && s.p < Rational(1), "p must lie in [0, 1)");
}

void validate(const GeometricSpec& s, ParamMode) {
    require(s.q.sub_unit(), "waiting-time family needs 0 < q < 1");
    require(s.p.sign() > 0 && s.p < Rational(1), "p must lie in (0, 1)");
}

void validate(const NegBinomialSpec& s, ParamMode) {
    require(s.r >= 1, "target nonzero count must be >= 1");
    require(s.q.sub_unit(), "waiting-time family needs 0 < q < 1");
    require(s.p.sign() > 0 && s.p < Rational(1), "p must lie in (0, 1)");
}

void validate(const PoissonSpec& s, ParamMode mode) {
    require(s.lambda.sign() >= 0, "lambda must be nonnegative");
    if (s.q.is_unit()) throw DomainError("Poisson family needs q < 1 or q > 1");
    if (s.q.sub_unit()) {
        require(s.lambda * (Rational(1) - s.q.value()) < Rational(1), "need lambda (1-q) < 1");
    } else if (mode == ParamMode::Probability) {
        require(s.lambda < s.q.value(), "SuperUnit regime needs lambda < q");
    }
}

void validate(const HypergeomSpec& s, ParamMode mode) {
    require(s.m >= 0 && s.u >= 0, "urn counts must be nonnegative");
    require(s.n >= 0 && s.n <= s.m + s.u, "draw count must satisfy 0 <= n <= m + u");
    if (mode == ParamMode::Probability) check_regime_at_most_unit(s.q);
}

void validate(const ContagiousSpec& s, ParamMode mode) {
    require(s.m >= 1 && s.u >= 1, "urn counts must be positive");
    require(s.n >= 0, "draw count must be nonnegative");
    for (long i = 0; i < s.n; ++i) {
        require(s.m + i * s.s > 0, "marked-ball factor must stay positive");
        require(s.u + i * s.s > 0, "unmarked-ball factor must stay positive");
        require(s.m + s.u + i * s.s > 0, "urn-total factor must stay positive");
    }
    if (mode == ParamMode::Probability) check_regime_at_most_unit(s.q);
}

void validate(const UniformSpec& s, ParamMode mode) {
    require(s.M >= 0, "support maximum must be nonnegative");
    if (mode == ParamMode::Probability) check_regime_at_most_unit(s.q);
}

// ---- binomial family --------------------------------------------------------

Pmf bernoulli_pmf(const BernoulliSpec& spec, ParamMode mode) {
    validate(spec, mode);
    Pmf pmf;
    for (long k = 0; k <= spec.n; ++k) {
        pmf.entries[k] = q_binomial(spec.n, k, spec.q) * spec.p.pow(k) *
                         shifted_pow(Rational(1), -spec.p, spec.n - k, spec.q);
        pmf.values[k] = bracket(k, spec.q);
    }
    return pmf;
}

namespace {

/// Certified tail of sum_{k > kappa_max} coeff(k) * scale for a positive
/// series whose term ratio coeff(k+1)/coeff(k) is nonincreasing.
Interval series_tail(const std::vector<Rational>& coeffs, long kappa_max,
                     const std::function<Rational(long)>& next_coeff,
                     const std::function<Rational(long)>& ratio_bound, const Interval& scale) {
    Rational extra(0);
    Rational coeff = coeffs.back();
    long k = kappa_max;
    while (true) {
        Rational rho = ratio_bound(k);
        if (rho < Rational(1)) {
            Rational bound = extra + coeff * rho / (Rational(1) - rho);
            Rational lo = next_coeff(kappa_max) * scale.lo();
            Rational hi = bound * scale.hi();
            return Interval(min(lo, hi), max(lo, hi)).intersect_nonneg();
        }
        coeff = next_coeff(k);
        extra += coeff;
        ++k;
    }
}

}  // namespace

Pmf bernoulli_inf_pmf(const BernoulliInfiniteSpec& spec, long kappa_max, const Rational& eps) {
    validate(spec);
    require(kappa_max >= 0, "kappa_max must be nonnegative");
    require(eps.sign() > 0, "eps must be positive");
    Pmf pmf;
    if (spec.p.is_zero()) {
        pmf.entries[0] = Interval(Rational(1));
        pmf.values[0] = Rational(0);
        pmf.defect = Interval(Rational(0));
        return pmf;
    }
    Interval product = shifted_pow_infinite(spec.p, spec.q, eps);
    Rational base = spec.p / (Rational(1) - spec.q.value());
    std::vector<Rational> coeffs{Rational(1)};
    for (long k = 1; k <= kappa_max; ++k) coeffs.push_back(coeffs.back() * base / bracket(k, spec.q));
    for (long k = 0; k <= kappa_max; ++k) {
        pmf.entries[k] = coeffs[static_cast<size_t>(k)] * product;
        pmf.values[k] = bracket(k, spec.q);
    }
    // independent tail enclosure; the term ratio base/[k+1] is nonincreasing
    auto next_coeff = [&](long k) {
        Rational c = coeffs.back();
        for (long j = kappa_max; j < k + 1; ++j) c = c * base / bracket(j + 1, spec.q);
        return c;
    };
    auto ratio = [&](long k) { return base / bracket(k + 1, spec.q); };
    pmf.defect = series_tail(coeffs, kappa_max, next_coeff, ratio, product);
    return pmf;
}

MomentReport bernoulli_moments(const BernoulliSpec& spec) {
    validate(spec);
    Rational n_br = bracket(spec.n, spec.q);
    Rational mean = n_br * spec.p;
    Rational second = mean + spec.q.value() * spec.p * spec.p * n_br * bracket(spec.n - 1, spec.q);
    return {mean, second, n_br * spec.p * (Rational(1) - spec.p)};
}

MomentReport bernoulli_inf_moments(const BernoulliInfiniteSpec& spec) {
    validate(spec);
    Rational scale = (Rational(1) - spec.q.value()).reciprocal();
    Rational mean = spec.p * scale;
    Rational second = mean + spec.q.value() * mean * mean;
    return {mean, second, spec.p * (Rational(1) - spec.p) * scale};
}

Rational bernoulli_zero_tail(const BernoulliSpec& spec, long kappa) {
    validate(spec);
    require(kappa >= 0 && kappa < spec.n, "zero-count bound must satisfy 0 <= kappa < n");
    Rational acc(0);
    for (long i = 0; i <= kappa; ++i)
        acc += q_binomial(spec.n, i, spec.q) * spec.p.pow(spec.n - i) *
               shifted_pow(Rational(1), -spec.p, i, spec.q);
    return acc;
}

Rational bernoulli_nonzero_tail(const BernoulliSpec& spec, long ell) {
    validate(spec);
    require(ell >= 0 && ell < spec.n, "nonzero-count bound must satisfy 0 <= ell < n");
    Rational acc(0);
    for (long i = 0; i <= ell; ++i)
        acc += q_binomial(spec.n, i, spec.q) * spec.p.pow(i) *
               shifted_pow(Rational(1), -spec.p, spec.n - i, spec.q);
    return acc;
}

Interval bernoulli_nonzero_tail_infinite(const Rational& p, const QBase& q, long ell, const Rational& eps) {
    validate(BernoulliInfiniteSpec{p, q});
    require(ell >= 0, "nonzero-count bound must be nonnegative");
    Rational base = p / (Rational(1) - q.value());
    Rational coeff_sum(0), coeff(1);
    for (long i = 0; i <= ell; ++i) {
        if (i > 0) coeff = coeff * base / bracket(i, q);
        coeff_sum += coeff;
    }
    if (coeff_sum.is_zero()) return Interval(Rational(1));
    Interval product = shifted_pow_infinite(p, q, eps / max(coeff_sum, Rational(1)));
    return coeff_sum * product;
}

Rational factorial_moment(const BernoulliSpec& spec, long r) {
    validate(spec);
    require(r >= 1, "factorial moment order must be >= 1");
    Pmf pmf = bernoulli_pmf(spec);
    Rational acc(0);
    for (const auto& [k, p] : pmf.entries) {
        Rational prod(1);
        for (long i = 0; i < r; ++i)
            prod *= spec.q.pow(-i) * (pmf.values.at(k) - bracket(i, spec.q));
        acc += as_exact(p) * prod;
    }
    return acc;
}

Poly raw_moment(long n, const QBase& q, long r) {
    require(n >= 0, "trial count must be nonnegative");
    require(r >= 0, "moment order must be nonnegative");
    Poly mu{Rational(1)};
    Poly p_times_one_minus_p{Rational(0), Rational(1), Rational(-1)};
    Rational n_br = bracket(n, q);
    for (long step = 0; step < r; ++step)
        mu = mu.times_power(1) * n_br + p_times_one_minus_p * qnum::q_derivative(mu, q);
    return mu;
}

Rational central_moment(const BernoulliSpec& spec, long r, long s) {
    validate(spec);
    require(r >= 0, "moment order must be nonnegative");
    Pmf pmf = bernoulli_pmf(spec);
    Rational mean = bracket(spec.n, spec.q) * spec.p;
    Rational acc(0);
    for (const auto& [k, p] : pmf.entries) {
        Rational prod(1);
        for (long i = 0; i < r; ++i) prod *= pmf.values.at(k) - spec.q.pow(s + i) * mean;
        acc += as_exact(p) * prod;
    }
    return acc;
}

Poly central_moment_poly(long n, const QBase& q, long r, long s) {
    require(n >= 0 && r >= 0, "orders must be nonnegative");
    Poly acc;
    Rational n_br = bracket(n, q);
    for (long k = 0; k <= n; ++k) {
        Poly weight = shifted_pow_linear_poly(Rational(1), Rational(-1), n - k, q)
                          .times_power(static_cast<int>(k)) *
                      q_binomial(n, k, q);
        Poly factor{Rational(1)};
        for (long i = 0; i < r; ++i)
            factor = factor * Poly{bracket(k, q), -q.pow(s + i) * n_br};
        acc += weight * factor;
    }
    return acc;
}

Rational central_moment_symmetric(const BernoulliSpec& spec, long r) {
    validate(spec);
    require(r >= 0, "moment order must be nonnegative");
    Pmf pmf = bernoulli_pmf(spec);
    Rational mean = bracket(spec.n, spec.q) * spec.p;
    Rational acc(0);
    for (const auto& [k, p] : pmf.entries)
        acc += as_exact(p) * symmetric_pow(pmf.values.at(k), -mean, r, spec.q);
    return acc;
}

Rational bernoulli_pgf(const BernoulliSpec& spec, const Rational& z) {
    Pmf pmf = bernoulli_pmf(spec);
    Rational acc(0);
    for (const auto& [k, p] : pmf.entries) acc += z.pow(k) * as_exact(p);
    return acc;
}

Rational bernoulli_pgf_closed(const BernoulliSpec& spec, const Rational& z) {
    validate(spec);
    Rational acc(0);
    for (long k = 0; k <= spec.n; ++k)
        acc += q_binomial(spec.n, k, spec.q) * spec.p.pow(k) * shifted_pow(z, Rational(-1), k, spec.q);
    return acc;
}

// ---- waiting-time family -------------------------------------------------

Interval geometric_never_mass(const GeometricSpec& spec, const Rational& eps) {
    validate(spec);
    return shifted_pow_infinite(spec.p, spec.q, eps);
}

Pmf geometric_pmf(const GeometricSpec& spec, long j_max, const Rational& eps) {
    validate(spec);
    require(j_max >= 1, "j_max must be >= 1");
    Pmf pmf;
    std::map<long, Rational> raw;
    for (long j = 1; j <= j_max; ++j) {
        raw[j] = shifted_pow(Rational(1), -spec.p, j - 1, spec.q) * spec.q.pow(j - 1) * spec.p;
        pmf.values[j] = bracket(j, spec.q);
    }
    Rational truncated = shifted_pow(Rational(1), -spec.p, j_max, spec.q);  // 1 - sum(raw)
    if (!spec.rescaled) {
        for (const auto& [j, w] : raw) pmf.entries[j] = w;
        pmf.defect = truncated;
        return pmf;
    }
    Interval never = geometric_never_mass(spec, eps);
    Interval scale = (Rational(1) - never).reciprocal();
    for (const auto& [j, w] : raw) pmf.entries[j] = w * scale;
    pmf.defect = ((truncated - never) * scale).intersect_nonneg();
    return pmf;
}

Pmf negbinomial_pmf(const NegBinomialSpec& spec, long j_max) {
    validate(spec);
    require(j_max >= spec.r, "j_max must be at least r");
    Pmf pmf;
    Rational sum(0);
    for (long j = spec.r; j <= j_max; ++j) {
        Rational w = shifted_pow(Rational(1), -spec.p, j - spec.r, spec.q) * spec.q.pow(j - spec.r) *
                     spec.p.pow(spec.r) * q_binomial(j - 1, spec.r - 1, spec.q);
        pmf.entries[j] = w;
        pmf.values[j] = bracket(j, spec.q);
        sum += w;
    }
    pmf.defect = Rational(1) - sum;
    return pmf;
}

Interval negbinomial_never_mass(const NegBinomialSpec& spec, const Rational& eps) {
    validate(spec);
    Rational base = spec.p / (Rational(1) - spec.q.value());
    Rational coeff_sum(0), coeff(1);
    for (long l = 0; l < spec.r; ++l) {
        if (l > 0) coeff = coeff * base / bracket(l, spec.q);
        coeff_sum += coeff;
    }
    Interval product = shifted_pow_infinite(spec.p, spec.q, eps / max(coeff_sum, Rational(1)));
    return coeff_sum * product;
}

std::pair<Rational, Rational> parties_probabilities(long a, long b, const Rational& p, const QBase& q) {
    require(a >= 1 && b >= 1, "both targets must be >= 1");
    check_probability(p, "p");
    Rational p1(0);
    for (long l = 0; l < b; ++l)
        p1 += q_binomial(a + l - 1, a - 1, q) * shifted_pow(Rational(1), -p, l, q) * q.pow(l);
    p1 *= p.pow(a);
    Rational p2(0);
    for (long l = 0; l < a; ++l) p2 += q_binomial(b + l - 1, b - 1, q) * p.pow(l);
    p2 *= shifted_pow(Rational(1), -p, b, q);
    return {p1, p2};
}

Rational parties_p1_alt(long a, long b, const Rational& p, const QBase& q) {
    require(a >= 1 && b >= 1, "both targets must be >= 1");
    Rational acc(0);
    for (long s = 0; s < b; ++s)
        acc += q_binomial(a + b - 1, a + s, q) * p.pow(a + s) *
               shifted_pow(Rational(1), -p, b - 1 - s, q);
    return acc;
}

// ---- Poisson family ---------------------------------------------------------

namespace {

Rational poisson_superunit_coeff(const Rational& lambda, const QBase& q, long k) {
    // q^{-C(k,2)} lambda^k (1 -. lambda)^{-k} / [k]!
    return q.pow(-choose2(k)) * lambda.pow(k) * shifted_pow(Rational(1), -lambda, -k, q) /
           q_factorial(k, q);
}

}  // namespace

Interval poisson_superunit_series(const Rational& lambda, const QBase& q, const Rational& eps) {
    require(q.super_unit(), "normalization series needs q > 1");
    require(eps.sign() > 0, "eps must be positive");
    require(lambda.sign() >= 0 && lambda < q.value(), "series needs 0 <= lambda < q");
    if (lambda.is_zero()) return Interval(Rational(1));
    // coeff_k <= q^{-2 C(k,2)} A^k with A = lambda / (1 - lambda/q), since
    // [k]! >= q^{C(k,2)} and every shifted-power factor is >= 1 - lambda/q
    Rational a_bound = lambda / (Rational(1) - lambda / q.value());
    Rational sum(0);
    long k = 0;
    while (true) {
        sum += poisson_superunit_coeff(lambda, q, k);
        Rational g = a_bound * q.pow(-2 * (k + 1));
        if (g < Rational(1)) {
            Rational next_bound = a_bound.pow(k + 1) * q.pow(-2 * choose2(k + 1));
            Rational tail = next_bound / (Rational(1) - g);
            if (tail <= eps) return Interval(sum, sum + tail);
        }
        ++k;
    }
}

Pmf poisson_pmf(const PoissonSpec& spec, long kappa_max, const Rational& eps) {
    validate(spec);
    require(kappa_max >= 0, "kappa_max must be nonnegative");
    require(eps.sign() > 0, "eps must be positive");
    Pmf pmf;
    if (spec.lambda.is_zero()) {
        pmf.entries[0] = Interval(Rational(1));
        pmf.values[0] = Rational(0);
        pmf.defect = Interval(Rational(0));
        return pmf;
    }
    if (spec.q.sub_unit()) {
        Rational x = spec.lambda * (Rational(1) - spec.q.value());
        Interval product = shifted_pow_infinite(x, spec.q, eps);
        std::vector<Rational> coeffs{Rational(1)};
        for (long k = 1; k <= kappa_max; ++k)
            coeffs.push_back(coeffs.back() * spec.lambda / bracket(k, spec.q));
        for (long k = 0; k <= kappa_max; ++k) {
            pmf.entries[k] = coeffs[static_cast<size_t>(k)] * product;
            pmf.values[k] = bracket(k, spec.q);
        }
        auto next_coeff = [&](long k) {
            Rational c = coeffs.back();
            for (long j = kappa_max; j < k + 1; ++j) c = c * spec.lambda / bracket(j + 1, spec.q);
            return c;
        };
        auto ratio = [&](long k) { return spec.lambda / bracket(k + 1, spec.q); };
        pmf.defect = series_tail(coeffs, kappa_max, next_coeff, ratio, product);
        return pmf;
    }
    // SuperUnit regime
    Interval series = poisson_superunit_series(spec.lambda, spec.q, eps);
    Interval norm = series.reciprocal();
    Rational partial(0);
    for (long k = 0; k <= kappa_max; ++k) {
        Rational coeff = poisson_superunit_coeff(spec.lambda, spec.q, k);
        partial += coeff;
        pmf.entries[k] = coeff * norm;
        pmf.values[k] = bracket(k, spec.q);
    }
    // independent tail bound on the remaining coefficients
    Rational a_bound = spec.lambda / (Rational(1) - spec.lambda / spec.q.value());
    long k = kappa_max + 1;
    Rational extra(0);
    while (a_bound * spec.q.pow(-2 * k) >= Rational(1)) {
        extra += poisson_superunit_coeff(spec.lambda, spec.q, k);
        ++k;
    }
    Rational g = a_bound * spec.q.pow(-2 * k);
    Rational tail = extra + a_bound.pow(k) * spec.q.pow(-2 * choose2(k)) / (Rational(1) - g);
    pmf.defect = Interval(Rational(0), tail * norm.hi());
    return pmf;
}

MomentReport poisson_moments(const PoissonSpec& spec) {
    require(spec.q.sub_unit(), "moments hold in the 0 < q < 1 regime");
    require(spec.lambda.sign() >= 0, "lambda must be nonnegative");
    require(spec.lambda * (Rational(1) - spec.q.value()) <= Rational(1), "need lambda (1-q) <= 1");
    Rational variance = spec.lambda * (Rational(1) - (Rational(1) - spec.q.value()) * spec.lambda);
    return {spec.lambda, variance + spec.lambda * spec.lambda, variance};
}

// ---- urn families -----------------------------------------------------------

Pmf hypergeom_pmf(const HypergeomSpec& spec, ParamMode mode) {
    validate(spec, mode);
    Pmf pmf;
    Rational denom = q_binomial(spec.m + spec.u, spec.n, spec.q);
    for (long k = 0; k <= spec.n; ++k) {
        pmf.entries[k] = q_binomial(spec.m, k, spec.q) * q_binomial(spec.u, spec.n - k, spec.q) *
                         spec.q.pow((spec.m - k) * (spec.n - k)) / denom;
        pmf.values[k] = bracket(k, spec.q);
    }
    return pmf;
}

Rational hypergeom_dual(const HypergeomSpec& spec, long kappa) {
    validate(spec, ParamMode::Identity);
    require(kappa >= 0 && kappa <= spec.n, "kappa must lie in 0..n");
    HypergeomSpec dual_spec{spec.m, spec.u, spec.n, spec.q.reciprocal()};
    Pmf dual = hypergeom_pmf(dual_spec, ParamMode::Identity);
    HypergeomSpec swapped{spec.u, spec.m, spec.n, spec.q};
    Pmf direct = hypergeom_pmf(swapped, ParamMode::Identity);
    Rational lhs = as_exact(dual.entries.at(kappa));
    Rational rhs = as_exact(direct.entries.at(spec.n - kappa));
    if (lhs != rhs) throw std::logic_error("reciprocal-base symmetry violated");
    return lhs;
}

Pmf contagious_pmf(const ContagiousSpec& spec, ParamMode mode) {
    validate(spec, mode);
    Pmf pmf;
    QBase inv_base = spec.q.to_power(-spec.s);
    Rational denom(1);
    for (long g = 0; g < spec.n; ++g) denom *= bracket(spec.m + spec.u + g * spec.s, spec.q);
    for (long k = 0; k <= spec.n; ++k) {
        Rational numer = q_binomial(spec.n, k, inv_base) *
                         spec.q.pow((spec.m + spec.s * k) * (spec.n - k));
        for (long a = 0; a < k; ++a) numer *= bracket(spec.m + a * spec.s, spec.q);
        for (long b = 0; b < spec.n - k; ++b) numer *= bracket(spec.u + b * spec.s, spec.q);
        pmf.entries[k] = numer / denom;
        pmf.values[k] = bracket(k, spec.q);
    }
    return pmf;
}

// ---- uniform family and range ------------------------------------------------

Pmf uniform_pmf(const UniformSpec& spec, ParamMode mode) {
    validate(spec, mode);
    Pmf pmf;
    Rational denom = bracket(spec.M + 1, spec.q);
    for (long i = 0; i <= spec.M; ++i) {
        pmf.entries[i] = spec.q.pow(i) / denom;
        pmf.values[i] = bracket(i, spec.q);
    }
    return pmf;
}

MomentReport uniform_moments(const UniformSpec& spec, ParamMode mode) {
    validate(spec, mode);
    const Rational& q = spec.q.value();
    Rational br_m = bracket(spec.M, spec.q);
    Rational br2 = bracket(2, spec.q);
    Rational br3 = bracket(3, spec.q);
    Rational mean = q * br_m / br2;
    Rational second = q * br_m * (q * br2 * br_m + Rational(1)) / (br2 * br3);
    Rational variance = q * br_m * (q * q * br_m + br2) / (br2 * br2 * br3);
    return {mean, second, variance};
}

Pmf range_pmf(long M, long n, const QBase& q) {
    require(M >= 0, "support maximum must be nonnegative");
    require(n >= 1, "draw count must be >= 1");
    QBase qn = q.to_power(n);
    Rational denom = bracket(M + 1, q).pow(n);
    Pmf pmf;
    pmf.entries[0] = bracket(M + 1, qn) / denom;
    pmf.values[0] = Rational(0);
    for (long l = 1; l <= M; ++l) {
        Rational weight = bracket(l + 1, q).pow(n) - bracket(2, qn) * bracket(l, q).pow(n) +
                          q.pow(n) * bracket(l - 1, q).pow(n);
        pmf.entries[l] = bracket(M + 1 - l, qn) / denom * weight;
        pmf.values[l] = bracket(l, q);
    }
    return pmf;
}

Pmf range_pmf_alt_n2(long M, const QBase& q) {
    require(M >= 0, "support maximum must be nonnegative");
    Rational denom = bracket(M + 1, q);
    Pmf pmf;
    pmf.entries[0] = denom.reciprocal();
    pmf.values[0] = Rational(0);
    for (long l = 1; l <= M; ++l) {
        pmf.entries[l] =
            bracket(2, q) / denom * (Rational(1) - bracket(l, q) / denom) * q.pow(M + 1 - 2 * l);
        pmf.values[l] = bracket(l, q);
    }
    return pmf;
}

}  // namespace qprob::qdist
