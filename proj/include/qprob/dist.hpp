#pragma once

#include <map>
#include <utility>
#include <variant>

#include "qprob/interval.hpp"
#include "qprob/poly.hpp"
#include "qprob/qbase.hpp"
#include "qprob/qnum.hpp"
#include "qprob/rational.hpp"

namespace qprob::qdist {

/// A probability is exact for finite-support families and a certified
/// enclosure for infinite-support ones.
using Prob = std::variant<Rational, Interval>;

inline bool is_exact(const Prob& p) { return std::holds_alternative<Rational>(p); }
inline const Rational& as_exact(const Prob& p) { return std::get<Rational>(p); }
inline Interval as_interval(const Prob& p) {
    return is_exact(p) ? Interval(std::get<Rational>(p)) : std::get<Interval>(p);
}
inline Prob prob_add(const Prob& a, const Prob& b) {
    if (is_exact(a) && is_exact(b)) return as_exact(a) + as_exact(b);
    return as_interval(a) + as_interval(b);
}

/// Finite map outcome-index k -> probability, with the q-value [k] carried
/// separately and any mass not captured by the listed entries held in
/// `defect`.  Expectations are always taken over the values [k].
struct Pmf {
    std::map<long, Prob> entries;
    std::map<long, Rational> values;
    Prob defect = Rational(0);

    Prob total_mass() const {
        Prob acc = defect;
        for (const auto& [k, p] : entries) acc = prob_add(acc, p);
        return acc;
    }
    /// Sum of entries + defect for a fully exact pmf; throws otherwise.
    Rational exact_total() const;
    bool all_exact() const;
    /// Half the L1 distance to another fully exact pmf over the union of keys.
    Rational tv_distance(const Pmf& other) const;
};

struct MomentReport {
    Rational mean;
    Rational second_moment;
    Rational variance;
};

/// Expectations of [k] and [k]^2 under an exact pmf.
MomentReport moments_from_pmf(const Pmf& pmf);

/// Validation context: Probability mode enforces the probability regime
/// (0 < q <= 1 where applicable, p in [0,1]); Identity mode admits any
/// positive base so limit statements can be evaluated outside it.
enum class ParamMode { Probability, Identity };

struct BernoulliSpec {
    long n;
    Rational p;
    QBase q;
};
struct BernoulliInfiniteSpec {
    Rational p;
    QBase q;
};
struct GeometricSpec {
    Rational p;
    QBase q;
    bool rescaled = false;
};
struct NegBinomialSpec {
    long r;
    Rational p;
    QBase q;
};
struct PoissonSpec {
    Rational lambda;
    QBase q;
};
struct HypergeomSpec {
    long m, u, n;
    QBase q;
};
struct ContagiousSpec {
    long m, u, s, n;
    QBase q;
};
struct UniformSpec {
    long M;
    QBase q;
};

using DistSpec = std::variant<BernoulliSpec, BernoulliInfiniteSpec, GeometricSpec, NegBinomialSpec,
                              PoissonSpec, HypergeomSpec, ContagiousSpec, UniformSpec>;

void validate(const BernoulliSpec&, ParamMode mode = ParamMode::Probability);
void validate(const BernoulliInfiniteSpec&, ParamMode mode = ParamMode::Probability);
void validate(const GeometricSpec&, ParamMode mode = ParamMode::Probability);
void validate(const NegBinomialSpec&, ParamMode mode = ParamMode::Probability);
void validate(const PoissonSpec&, ParamMode mode = ParamMode::Probability);
void validate(const HypergeomSpec&, ParamMode mode = ParamMode::Probability);
void validate(const ContagiousSpec&, ParamMode mode = ParamMode::Probability);
void validate(const UniformSpec&, ParamMode mode = ParamMode::Probability);

// ---- binomial family -------------------------------------------------

/// Entry k = [n choose k] p^k prod_{i<n-k}(1 - q^i p), k = 0..n; exact.
Pmf bernoulli_pmf(const BernoulliSpec& spec, ParamMode mode = ParamMode::Probability);

/// Infinite-trials limit: entry k = (1/[k]!) (p/(1-q))^k prod_{i>=0}(1-q^i p)
/// for k <= kappa_max, with an independently certified tail as defect.
Pmf bernoulli_inf_pmf(const BernoulliInfiniteSpec& spec, long kappa_max, const Rational& eps);

/// mean [n]p, second moment [n]p + q p^2 [n][n-1], variance [n]p(1-p).
MomentReport bernoulli_moments(const BernoulliSpec& spec);

/// Infinite-trials moments: mean p/(1-q), variance p(1-p)/(1-q).
MomentReport bernoulli_inf_moments(const BernoulliInfiniteSpec& spec);

/// P(at most kappa zeros in n trials), 0 <= kappa < n; exact.
Rational bernoulli_zero_tail(const BernoulliSpec& spec, long kappa);

/// P(at most ell nonzeros in n trials), 0 <= ell < n; exact.
Rational bernoulli_nonzero_tail(const BernoulliSpec& spec, long ell);

/// Infinite-trials variant of the nonzero tail, as a certified enclosure.
Interval bernoulli_nonzero_tail_infinite(const Rational& p, const QBase& q, long ell, const Rational& eps);

/// E( prod_{i<r} q^{-i} (X - [i]) ) from the pmf; equals p^r [n][n-1]...[n-r+1].
Rational factorial_moment(const BernoulliSpec& spec, long r);

/// r-th raw moment of the n-trial family as a polynomial in p, built by the
/// recursion m_{r+1} = ([n] p + p(1-p) d/d_qp) m_r with m_0 = 1.
Poly raw_moment(long n, const QBase& q, long r);

/// Central-moment variants: shifted-product definition
/// E( prod_{i<r} (X - q^{s+i} <X>) ), exact from the pmf.
Rational central_moment(const BernoulliSpec& spec, long r, long s);
/// Same quantity as a polynomial in p (the pmf entries are polynomials).
Poly central_moment_poly(long n, const QBase& q, long r, long s);
/// Symmetric-power definition E( (X -q <X>)^r ) with the symmetric q-power.
Rational central_moment_symmetric(const BernoulliSpec& spec, long r);

/// Probability generating function sum_k z^k P(X = [k]): direct pmf sum and
/// the closed form sum_k [n choose k] p^k prod_{i<k}(z - q^i).
Rational bernoulli_pgf(const BernoulliSpec& spec, const Rational& z);
Rational bernoulli_pgf_closed(const BernoulliSpec& spec, const Rational& z);

// ---- waiting-time family ----------------------------------------------

/// Entry j = prod_{i<j-1}(1-q^i p) q^{j-1} p for j = 1..j_max.  The exact
/// defect 1 - sum(entries) covers both the truncated tail and the intrinsic
/// never-a-nonzero mass; with `rescaled` every entry is divided by
/// (1 - that intrinsic mass), making entries certified enclosures.
Pmf geometric_pmf(const GeometricSpec& spec, long j_max, const Rational& eps = Rational(1, 1000000000000L));

/// The intrinsic defect prod_{i>=0}(1 - q^i p) of the unrescaled family.
Interval geometric_never_mass(const GeometricSpec& spec, const Rational& eps);

/// Entry j = prod(1-q^i p)^{j-r} q^{j-r} p^r [j-1 choose r-1], j = r..j_max;
/// exact, with exact defect 1 - sum(entries).
Pmf negbinomial_pmf(const NegBinomialSpec& spec, long j_max);

/// Mass of seeing fewer than r nonzeros in an infinite trial sequence.
Interval negbinomial_never_mass(const NegBinomialSpec& spec, const Rational& eps);

/// Division-of-stakes probabilities: P1 = a nonzeros appear before b zeros,
/// P2 = the complement; P1 + P2 = 1 exactly.
std::pair<Rational, Rational> parties_probabilities(long a, long b, const Rational& p, const QBase& q);
/// Alternative closed form for P1 (sum over final tallies); equals P1.
Rational parties_p1_alt(long a, long b, const Rational& p, const QBase& q);

// ---- Poisson family ----------------------------------------------------

/// SubUnit regime: entry k = (lambda^k/[k]!) prod(1 - q^i lambda(1-q));
/// SuperUnit regime: entry k = (q^{-k(k-1)/2}/[k]!) lambda^k / prod_{i<k}
/// (1 - q^{i-k} lambda), normalized by the certified reciprocal series.
Pmf poisson_pmf(const PoissonSpec& spec, long kappa_max, const Rational& eps);

/// mean lambda, variance lambda (1 - (1-q) lambda); SubUnit regime.
MomentReport poisson_moments(const PoissonSpec& spec);

/// The SuperUnit normalization series sum_k q^{-k(k-1)/2} lambda^k
/// (1 - ...)^{-k} / [k]!, as a certified enclosure.
Interval poisson_superunit_series(const Rational& lambda, const QBase& q, const Rational& eps);

// ---- urn families --------------------------------------------------------

/// Entry k = [m choose k][u choose n-k] q^{(m-k)(n-k)} / [m+u choose n]; exact.
Pmf hypergeom_pmf(const HypergeomSpec& spec, ParamMode mode = ParamMode::Probability);

/// Value of the reciprocal-base pmf at kappa; checks that it equals the
/// base-q pmf at n-kappa with the marked/unmarked roles swapped.
Rational hypergeom_dual(const HypergeomSpec& spec, long kappa);

/// Entry k = [n choose k]_{q^{-s}} q^{(m+sk)(n-k)} prod [m+as] prod [u+bs]
/// / prod [m+u+gs]; exact.  s = -1 is the draw-without-replacement urn,
/// s = 0 the classical binomial with p = [m]/[m+u].
Pmf contagious_pmf(const ContagiousSpec& spec, ParamMode mode = ParamMode::Probability);

// ---- uniform family and its range statistic -----------------------------

/// Entry i = q^i / [M+1], i = 0..M; exact.
Pmf uniform_pmf(const UniformSpec& spec, ParamMode mode = ParamMode::Probability);

/// mean q[M]/[2], second moment q[M](q[2][M]+1)/([2][3]),
/// variance q[M](q^2[M]+[2])/([2]^2[3]); all equal to the pmf expectations.
MomentReport uniform_moments(const UniformSpec& spec, ParamMode mode = ParamMode::Probability);

/// Distribution of max - min of n independent draws from the q-uniform law
/// on indices 0..M; exact, sums to 1.
Pmf range_pmf(long M, long n, const QBase& q);

/// The alternative two-draw range law; exact, sums to 1.
Pmf range_pmf_alt_n2(long M, const QBase& q);

}  // namespace qprob::qdist
