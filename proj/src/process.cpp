#include "qprob/process.hpp"

#include <algorithm>

#include "qprob/errors.hpp"
#include "qprob/qnum.hpp"

namespace qprob::qprocess {

using qdist::Pmf;
using qdist::Prob;
using qnum::bracket;
using qnum::shifted_pow;
using qnum::shifted_pow_infinite;

long PathPattern::total_zeros() const {
    long acc = 0;
    for (long r : runs) {
        if (r < 0) throw DomainError("pattern runs must be nonnegative");
        acc += r;
    }
    return acc;
}

namespace {

const QBase& base_of(const ProcessFamily& family) {
    return std::visit([](const auto& f) -> const QBase& { return f.q; }, family);
}

void check_pattern(const PathPattern& pattern, const ProcessFamily& family) {
    if (pattern.runs.empty()) throw DomainError("pattern must contain at least one run");
    pattern.total_zeros();  // validates nonnegativity
    if (pattern.terminal_infinite) {
        if (pattern.runs.back() != 0)
            throw DomainError("stored terminal run must be 0 when the tail is infinite");
        if (!std::holds_alternative<BernoulliProcess>(family))
            throw DomainError("infinite tails are priced only for the Bernoulli process");
    }
    if (const auto* h = std::get_if<HypergeomProcess>(&family)) {
        // over-drawing one kind is a probability-zero event, not an error;
        // only exhausting the whole urn is infeasible
        if (pattern.trials() > h->m + h->u) throw DomainError("pattern exhausts the urn");
    }
    if (const auto* c = std::get_if<ContagiousProcess>(&family)) {
        qdist::validate(
            qdist::ContagiousSpec{c->m, c->u, c->s, pattern.trials(), c->q},
            qdist::ParamMode::Identity);
    }
}

}  // namespace

Prob pattern_probability(const PathPattern& pattern, const ProcessFamily& family, const Rational& eps) {
    check_pattern(pattern, family);
    long kappa = pattern.kappa();

    if (const auto* b = std::get_if<BernoulliProcess>(&family)) {
        // q-power sum_{i<kappa} |a(i)| over the partial sums of the runs
        long exponent = 0, partial = 0;
        for (long i = 0; i < kappa; ++i) {
            partial += pattern.runs[static_cast<size_t>(i)];
            exponent += partial;
        }
        Rational finite = b->p.pow(kappa) * b->q.pow(exponent);
        if (pattern.terminal_infinite)
            return finite * shifted_pow_infinite(b->p, b->q, eps);
        return finite * shifted_pow(Rational(1), -b->p, pattern.total_zeros(), b->q);
    }

    if (const auto* h = std::get_if<HypergeomProcess>(&family)) {
        long n = pattern.trials();
        if (n > h->m + h->u) throw DomainError("pattern exhausts the urn");
        long exponent = 0;
        for (long s = 0; s <= kappa; ++s) exponent += (h->m - s) * pattern.runs[static_cast<size_t>(s)];
        Rational numer = h->q.pow(exponent);
        for (long i = 0; i < kappa; ++i) numer *= bracket(h->m - i, h->q);
        for (long j = 0; j < n - kappa; ++j) numer *= bracket(h->u - j, h->q);
        Rational denom(1);
        for (long g = 0; g < n; ++g) denom *= bracket(h->m + h->u - g, h->q);
        return numer / denom;
    }

    const auto& c = std::get<ContagiousProcess>(family);
    long n = pattern.trials();
    long exponent_coeffs = 0;
    Rational numer(1);
    {
        long exponent = 0;
        for (long i = 0; i <= kappa; ++i) exponent += (c.m + c.s * i) * pattern.runs[static_cast<size_t>(i)];
        exponent_coeffs = exponent;
    }
    numer = c.q.pow(exponent_coeffs);
    for (long a = 0; a < kappa; ++a) numer *= bracket(c.m + a * c.s, c.q);
    for (long b2 = 0; b2 < n - kappa; ++b2) numer *= bracket(c.u + b2 * c.s, c.q);
    Rational denom(1);
    for (long g = 0; g < n; ++g) denom *= bracket(c.m + c.u + g * c.s, c.q);
    return numer / denom;
}

std::pair<Rational, Rational> step_conditionals(const ProcessState& state, const ProcessFamily& family) {
    if (state.draws < 0 || state.nonzeros < 0 || state.nonzeros > state.draws)
        throw DomainError("infeasible process state");

    if (const auto* b = std::get_if<BernoulliProcess>(&family)) {
        Rational p_nonzero = b->q.pow(state.zeros()) * b->p;
        return {Rational(1) - p_nonzero, p_nonzero};
    }

    if (const auto* h = std::get_if<HypergeomProcess>(&family)) {
        long marked = h->m - state.nonzeros;
        long unmarked = h->u - state.zeros();
        if (marked < 0 || unmarked < 0 || marked + unmarked == 0)
            throw DomainError("urn exhausted");
        Rational denom = bracket(marked + unmarked, h->q);
        Rational p_nonzero = bracket(marked, h->q) / denom;
        Rational p_zero = h->q.pow(marked) * bracket(unmarked, h->q) / denom;
        return {p_zero, p_nonzero};
    }

    const auto& c = std::get<ContagiousProcess>(family);
    long i = state.nonzeros, g = state.draws;
    long marked = c.m + i * c.s;
    long unmarked = c.u + (g - i) * c.s;
    long total = c.m + c.u + g * c.s;
    if (marked <= 0 || unmarked <= 0 || total <= 0)
        throw DomainError("urn factors must stay positive");
    Rational denom = bracket(total, c.q);
    Rational p_nonzero = bracket(marked, c.q) / denom;
    Rational p_zero = c.q.pow(marked) * bracket(unmarked, c.q) / denom;
    return {p_zero, p_nonzero};
}

std::vector<PathPattern> enumerate_patterns(long n, long kappa) {
    if (kappa < 0 || kappa > n) throw DomainError("need 0 <= kappa <= n");
    std::vector<PathPattern> out;
    std::vector<long> runs(static_cast<size_t>(kappa) + 1, 0);
    // lexicographic recursion over compositions of n - kappa into kappa+1 parts
    auto emit = [&](auto&& self, long slot, long remaining) -> void {
        if (slot == kappa) {
            runs[static_cast<size_t>(slot)] = remaining;
            out.push_back(PathPattern{runs, false});
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            runs[static_cast<size_t>(slot)] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    emit(emit, 0, n - kappa);
    return out;
}

Pmf analytic_pmf(const ProcessFamily& family, long n) {
    if (const auto* b = std::get_if<BernoulliProcess>(&family))
        return qdist::bernoulli_pmf({n, b->p, b->q}, qdist::ParamMode::Identity);
    if (const auto* h = std::get_if<HypergeomProcess>(&family))
        return qdist::hypergeom_pmf({h->m, h->u, n, h->q}, qdist::ParamMode::Identity);
    const auto& c = std::get<ContagiousProcess>(family);
    return qdist::contagious_pmf({c.m, c.u, c.s, n, c.q}, qdist::ParamMode::Identity);
}

Pmf aggregate(const ProcessFamily& family, long n) {
    if (n < 0) throw DomainError("trial count must be nonnegative");
    if (n > 16) throw ResourceError("exhaustive enumeration is guarded at n <= 16");
    Pmf pmf;
    const QBase& q = base_of(family);
    for (long kappa = 0; kappa <= n; ++kappa) {
        Rational mass(0);
        for (const PathPattern& pattern : enumerate_patterns(n, kappa))
            mass += std::get<Rational>(pattern_probability(pattern, family));
        pmf.entries[kappa] = mass;
        pmf.values[kappa] = bracket(kappa, q);
    }
    return pmf;
}

std::uint64_t rng_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
    auto finalize = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    std::uint64_t h = finalize(seed + kGamma * (stream + 1));
    return finalize(h + kGamma * (counter + 1));
}

SampleReport sample_paths(const ProcessFamily& family, long n, long n_samples, std::uint64_t seed) {
    if (n < 0) throw DomainError("trial count must be nonnegative");
    if (n_samples < 1) throw DomainError("need at least one sample");
    // probability-regime check on the analytic side
    if (const auto* b = std::get_if<BernoulliProcess>(&family))
        qdist::validate(qdist::BernoulliSpec{n, b->p, b->q});
    if (const auto* h = std::get_if<HypergeomProcess>(&family))
        qdist::validate(qdist::HypergeomSpec{h->m, h->u, n, h->q});
    if (const auto* c = std::get_if<ContagiousProcess>(&family))
        qdist::validate(qdist::ContagiousSpec{c->m, c->u, c->s, n, c->q});

    // per-state nonzero thresholds as 64-bit binary fractions
    std::vector<std::vector<std::uint64_t>> threshold(static_cast<size_t>(n));
    for (long draws = 0; draws < n; ++draws) {
        threshold[static_cast<size_t>(draws)].resize(static_cast<size_t>(draws) + 1);
        for (long nz = 0; nz <= draws; ++nz) {
            try {
                auto [p_zero, p_nonzero] = step_conditionals({draws, nz}, family);
                threshold[static_cast<size_t>(draws)][static_cast<size_t>(nz)] = to_u64_fraction(p_nonzero);
            } catch (const DomainError&) {
                // unreachable tally (a zero-probability step would have to occur first)
                threshold[static_cast<size_t>(draws)][static_cast<size_t>(nz)] = 0;
            }
        }
    }

    SampleReport report;
    report.n = n;
    report.n_samples = n_samples;
    report.seed = seed;
    for (long path = 0; path < n_samples; ++path) {
        long nz = 0;
        for (long t = 0; t < n; ++t) {
            std::uint64_t w = rng_word(seed, static_cast<std::uint64_t>(path), static_cast<std::uint64_t>(t));
            if (w < threshold[static_cast<size_t>(t)][static_cast<size_t>(nz)]) ++nz;
        }
        ++report.counts[nz];
    }
    for (const auto& [k, c] : report.counts) report.empirical[k] = Rational(c, n_samples);

    Pmf analytic = analytic_pmf(family, n);
    Rational acc(0);
    for (const auto& [k, p] : analytic.entries) {
        Rational emp = report.empirical.count(k) ? report.empirical.at(k) : Rational(0);
        acc += (qdist::as_exact(p) - emp).abs();
    }
    for (const auto& [k, emp] : report.empirical)
        if (!analytic.entries.count(k)) acc += emp;
    report.tv_distance = acc / Rational(2);
    return report;
}

}  // namespace qprob::qprocess
