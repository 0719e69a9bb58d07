#pragma once

// Majorization order on population vectors and the monotonicity verdict:
// if psi1 can be turned into psi2 by an incoherent operation, psi1 must
// score at least as much coherence. Transformability of pure states is
// decided entirely by majorization of their populations.

#include <algorithm>
#include <cmath>
#include <vector>

#include "cohlab/core.hpp"
#include "cohlab/errors.hpp"
#include "cohlab/quantifiers.hpp"

namespace cohlab {

// Slack for cumulative-sum comparisons; random populations near exact
// ties must not flip verdicts.
inline constexpr double kMajorizationTol = 1e-12;

// True iff every leading partial sum of q's descending sort weakly
// dominates p's.
inline bool majorizes(const PopulationVector& q, const PopulationVector& p) {
    if (q.dim() != p.dim()) {
        throw DimensionMismatch("majorizes: vectors have different lengths");
    }
    std::vector<double> qs = q.values();
    std::vector<double> ps = p.values();
    std::sort(qs.begin(), qs.end(), std::greater<double>());
    std::sort(ps.begin(), ps.end(), std::greater<double>());
    double q_cum = 0.0;
    double p_cum = 0.0;
    for (std::size_t l = 0; l < qs.size(); ++l) {
        q_cum += qs[l];
        p_cum += ps[l];
        if (q_cum < p_cum - kMajorizationTol) {
            return false;
        }
    }
    return true;
}

// Populations |psi_i|^2 of a pure state.
inline PopulationVector populations_of(const StateVector& psi) {
    std::vector<double> p(static_cast<std::size_t>(psi.dim()));
    for (int i = 0; i < psi.dim(); ++i) {
        p[static_cast<std::size_t>(i)] = std::norm(psi.amplitude(i));
    }
    return PopulationVector(std::move(p));
}

struct MonotonicityVerdict {
    bool transformable;        // psi1 -> psi2 possible under incoherent operations
    CoherenceValue c_source;
    CoherenceValue c_target;
    bool consistent;           // !transformable || c_source >= c_target - 1e-12
};

// Evaluates the monotonicity requirement on one candidate pair. A verdict
// with consistent == false is a counterexample to the measure itself.
inline MonotonicityVerdict check_monotonicity(const StateVector& psi1,
                                              const StateVector& psi2) {
    if (psi1.dim() != psi2.dim()) {
        throw DimensionMismatch("check_monotonicity: states have different dimensions");
    }
    const bool transformable = majorizes(populations_of(psi2), populations_of(psi1));
    const CoherenceValue c_source = c_pdd(state_to_density(psi1));
    const CoherenceValue c_target = c_pdd(state_to_density(psi2));
    const bool consistent =
        !transformable || c_source.value >= c_target.value - kMajorizationTol;
    return MonotonicityVerdict{transformable, c_source, c_target, consistent};
}

}  // namespace cohlab
