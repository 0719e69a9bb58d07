#pragma once

// Randomized monotonicity sweep. Pairs are generated majorization-ordered
// by construction: the target populations are sampled uniformly on the
// simplex, and the source is obtained by mixing the target with a short
// chain of random pairwise-averaging (T-transform) steps, which can only
// move a vector downward in the majorization order. Phases are randomized
// independently since they cannot affect populations.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cohlab/core.hpp"
#include "cohlab/errors.hpp"
#include "cohlab/majorization.hpp"
#include "cohlab/quantifiers.hpp"

namespace cohlab {

struct SweepOptions {
    std::uint64_t seed = 42;
    std::uint64_t cases_per_dim = 10000;
    int min_dim = 2;
    int max_dim = 8;
    // Test hook: negate every verdict's consistency bit so the reporting
    // path can be exercised. Never set outside the suite.
    bool invert_verdicts = false;
};

struct SweepFailure {
    int dim;
    std::uint64_t case_index;
    std::vector<double> source_populations;
    std::vector<double> target_populations;
    double c_source;
    double c_target;
};

struct SweepReport {
    std::uint64_t cases_run = 0;
    std::vector<SweepFailure> failures;
    bool ok() const { return failures.empty(); }
};

namespace detail {

// Uniform sample from the probability simplex (normalized exponentials).
inline std::vector<double> random_simplex_point(int dim, std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(static_cast<std::size_t>(dim));
    double sum = 0.0;
    for (double& v : p) {
        v = expo(rng);
        sum += v;
    }
    for (double& v : p) {
        v /= sum;
    }
    return p;
}

// One T-transform: replace (p_i, p_j) by their partial averages. The
// result is majorized by the input.
inline void t_transform(std::vector<double>& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(p.size()) - 1);
    int i = pick(rng);
    int j = pick(rng);
    while (j == i) {
        j = pick(rng);
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double t = unit(rng);
    const double pi = p[static_cast<std::size_t>(i)];
    const double pj = p[static_cast<std::size_t>(j)];
    p[static_cast<std::size_t>(i)] = t * pi + (1.0 - t) * pj;
    p[static_cast<std::size_t>(j)] = (1.0 - t) * pi + t * pj;
}

inline StateVector state_with_populations(const std::vector<double>& pops,
                                          std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    Vector amps(static_cast<Eigen::Index>(pops.size()));
    for (std::size_t i = 0; i < pops.size(); ++i) {
        amps(static_cast<Eigen::Index>(i)) =
            std::polar(std::sqrt(pops[i]), angle(rng));
    }
    return StateVector::normalized(std::move(amps));
}

}  // namespace detail

inline SweepReport run_monotonicity_sweep(const SweepOptions& opts) {
    if (opts.min_dim < 2 || opts.max_dim < opts.min_dim) {
        throw InvalidState("run_monotonicity_sweep: need 2 <= min_dim <= max_dim");
    }
    std::mt19937_64 rng(opts.seed);
    SweepReport report;
    for (int dim = opts.min_dim; dim <= opts.max_dim; ++dim) {
        for (std::uint64_t c = 0; c < opts.cases_per_dim; ++c) {
            std::vector<double> target = detail::random_simplex_point(dim, rng);
            std::vector<double> source = target;
            std::uniform_int_distribution<int> chain_len(1, 3);
            const int chain = chain_len(rng);
            for (int k = 0; k < chain; ++k) {
                detail::t_transform(source, rng);
            }
            const StateVector psi1 = detail::state_with_populations(source, rng);
            const StateVector psi2 = detail::state_with_populations(target, rng);
            MonotonicityVerdict verdict = check_monotonicity(psi1, psi2);
            if (opts.invert_verdicts) {
                verdict.consistent = !verdict.consistent;
            }
            ++report.cases_run;
            if (!verdict.consistent) {
                report.failures.push_back(SweepFailure{
                    dim, c, source, target,
                    verdict.c_source.value, verdict.c_target.value});
            }
        }
    }
    return report;
}

}  // namespace cohlab
