#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "qprob/dist.hpp"
#include "qprob/interval.hpp"
#include "qprob/qbase.hpp"
#include "qprob/rational.hpp"

namespace qprob::qprocess {

/// Composition a(0), ..., a(kappa) of zero-run lengths between successive
/// nonzeros: a(0) zeros, a nonzero, a(1) zeros, a nonzero, ..., a(kappa)
/// trailing zeros.  kappa = runs.size() - 1 nonzeros; total trials
/// kappa + sum(runs).  With `terminal_infinite` the final run is an
/// endless tail of zeros and the stored a(kappa) must be 0.
struct PathPattern {
    std::vector<long> runs;
    bool terminal_infinite = false;

    long kappa() const { return static_cast<long>(runs.size()) - 1; }
    long total_zeros() const;
    long trials() const { return kappa() + total_zeros(); }
};

/// Running tally of a sequential trial process.
struct ProcessState {
    long draws = 0;
    long nonzeros = 0;
    long zeros() const { return draws - nonzeros; }
};

/// Per-trial sequential laws.  Bernoulli: nonzero probability q^r p after
/// r zeros.  Hypergeom: draw-without-replacement urn.  Contagious: urn
/// returning s+1 copies of each drawn ball.
struct BernoulliProcess {
    Rational p;
    QBase q;
};
struct HypergeomProcess {
    long m, u;
    QBase q;
};
struct ContagiousProcess {
    long m, u, s;
    QBase q;
};
using ProcessFamily = std::variant<BernoulliProcess, HypergeomProcess, ContagiousProcess>;

/// Joint probability of one fully specified trial pattern.  Exact for
/// finite patterns; a certified enclosure for Bernoulli patterns ending in
/// an infinite run of zeros (the only family where that event has meaning).
qdist::Prob pattern_probability(const PathPattern& pattern, const ProcessFamily& family,
                                const Rational& eps = Rational(1, 1000000000000L));

/// (P(next trial zero), P(next trial nonzero)) given the current tally;
/// the two always add to 1 exactly.
std::pair<Rational, Rational> step_conditionals(const ProcessState& state, const ProcessFamily& family);

/// All compositions a(0..kappa) with sum = n - kappa, each exactly once.
std::vector<PathPattern> enumerate_patterns(long n, long kappa);

/// Exhaustive-path pmf: sums pattern probabilities over every pattern with
/// each nonzero count.  The brute-force oracle for the closed-form pmfs.
/// Guarded at n <= 16.
qdist::Pmf aggregate(const ProcessFamily& family, long n);

/// Deterministic seeded simulation of n-trial paths.
struct SampleReport {
    long n = 0;
    long n_samples = 0;
    std::uint64_t seed = 0;
    std::map<long, long> counts;         // nonzero count -> occurrences
    std::map<long, Rational> empirical;  // nonzero count -> frequency
    Rational tv_distance;                // to the analytic pmf
};

/// Draws n_samples independent paths with a counter-based generator;
/// per-path streams are derived from (seed, path index), so the report is
/// identical for identical seeds regardless of scheduling.
SampleReport sample_paths(const ProcessFamily& family, long n, long n_samples, std::uint64_t seed);

/// Analytic pmf matching the process family at n trials.
qdist::Pmf analytic_pmf(const ProcessFamily& family, long n);

/// Counter-based word generator: a pure function of (seed, stream, counter).
std::uint64_t rng_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace qprob::qprocess
