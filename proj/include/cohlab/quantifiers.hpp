#pragma once

// The three coherence quantifiers, the distance to the nearest maximally
// coherent state, and the pure-state guard that fences c_pdd off from
// mixed inputs. Two-state mixtures get their own helpers because equal
// diagonals can hide very different off-diagonal structure, which is
// exactly why the guard exists.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cohlab/core.hpp"
#include "cohlab/errors.hpp"

namespace cohlab {

enum class Quantifier { PDD, L1, RE };

inline const char* quantifier_name(Quantifier q) {
    switch (q) {
        case Quantifier::PDD: return "pdd";
        case Quantifier::L1: return "l1";
        case Quantifier::RE: return "re";
    }
    return "?";
}

// A coherence score in [0,1] tagged with the quantifier that produced it.
// Small negative rounding residue is clamped; anything clearly outside
// [0,1] indicates a bug upstream and is rejected.
struct CoherenceValue {
    double value;
    Quantifier quantifier;
    int dim;

    CoherenceValue(double v, Quantifier q, int n) : value(v), quantifier(q), dim(n) {
        if (!std::isfinite(value) || value < -1e-9 || value > 1.0 + 1e-9) {
            throw InvalidState("CoherenceValue: " + std::string(quantifier_name(q)) +
                               " = " + std::to_string(value) + " outside [0, 1]");
        }
        if (value < 0.0) {
            value = 0.0;
        }
    }
};

// Throws NotPureState unless trace(rho^2) >= 1 - tol. Every c_pdd call
// routes through here.
inline void assert_pure(const DensityMatrix& rho, double tol = kPurityTol) {
    const double p = purity(rho);
    if (p < 1.0 - tol) {
        throw NotPureState(p);
    }
}

namespace detail {

// Sum of |p_i - p_j| over ordered pairs i != j, divided by 2(N-1).
// Shared by c_pdd and distance_to_max so that the two are exact
// complements bit for bit.
inline double normalized_diag_spread(const PopulationVector& p) {
    const int n = p.dim();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                sum += std::abs(p[i] - p[j]);
            }
        }
    }
    return sum / (2.0 * (n - 1));
}

}  // namespace detail

// Principal-diagonal-difference coherence: 1 minus the normalized spread
// of the populations. Defined for pure states only; equal diagonal
// entries no longer pin down the off-diagonals once the state is mixed.
inline CoherenceValue c_pdd(const DensityMatrix& rho) {
    assert_pure(rho);
    const double spread = detail::normalized_diag_spread(diagonal(rho));
    return CoherenceValue(1.0 - spread, Quantifier::PDD, rho.dim());
}

// Normalized distance from the nearest maximally coherent state, i.e.
// the spread itself. c_pdd(rho) + distance_to_max(rho) == 1 exactly.
inline double distance_to_max(const DensityMatrix& rho) {
    assert_pure(rho);
    return detail::normalized_diag_spread(diagonal(rho));
}

// l1-norm quantifier: sum of |rho_ij| over i != j, divided by N-1 so the
// maximally coherent state scores exactly 1. Valid for mixed states.
inline CoherenceValue c_l1_normalized(const DensityMatrix& rho) {
    const int n = rho.dim();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                sum += std::abs(rho(i, j));
            }
        }
    }
    return CoherenceValue(sum / (n - 1), Quantifier::L1, n);
}

// Relative entropy of coherence, normalized by log2 N: entropy gained by
// deleting the off-diagonals. Valid for mixed states.
inline CoherenceValue c_re_normalized(const DensityMatrix& rho) {
    const double s_diag = shannon_entropy(diagonal(rho));
    const double s_rho = von_neumann_entropy(rho);
    return CoherenceValue((s_diag - s_rho) / std::log2(double(rho.dim())),
                          Quantifier::RE, rho.dim());
}

// A probabilistic mixture of two pure states given in polar form:
// component m has amplitudes amps_m[i] * exp(i * phases_m[i]).
class MixtureSpec {
public:
    MixtureSpec(double p1, double p2,
                std::vector<double> amps1, std::vector<double> phases1,
                std::vector<double> amps2, std::vector<double> phases2)
        : p1_(p1), p2_(p2),
          amps1_(std::move(amps1)), phases1_(std::move(phases1)),
          amps2_(std::move(amps2)), phases2_(std::move(phases2)) {
        if (!(p1_ >= 0.0 && p1_ <= 1.0) || !(p2_ >= 0.0 && p2_ <= 1.0) ||
            std::abs(p1_ + p2_ - 1.0) > kNormTol) {
            throw InvalidState("MixtureSpec: probabilities must lie in [0,1] and sum to 1");
        }
        const std::size_t n = amps1_.size();
        if (n < 2 || phases1_.size() != n || amps2_.size() != n || phases2_.size() != n) {
            throw InvalidState("MixtureSpec: component vectors must share a length >= 2");
        }
        for (std::size_t m = 0; m < 2; ++m) {
            const std::vector<double>& a = m == 0 ? amps1_ : amps2_;
            double norm_sq = 0.0;
            for (double v : a) {
                if (!std::isfinite(v) || v < 0.0) {
                    throw InvalidState("MixtureSpec: magnitudes must be finite and >= 0");
                }
                norm_sq += v * v;
            }
            if (std::abs(norm_sq - 1.0) > kNormTol) {
                throw InvalidState("MixtureSpec: component " + std::to_string(m + 1) +
                                   " magnitudes are not normalized");
            }
        }
    }

    int dim() const { return static_cast<int>(amps1_.size()); }
    double p1() const { return p1_; }
    double p2() const { return p2_; }

    // Component m in {1, 2} as a complex amplitude vector.
    Vector component(int m) const {
        const std::vector<double>& a = m == 1 ? amps1_ : amps2_;
        const std::vector<double>& ph = m == 1 ? phases1_ : phases2_;
        Vector v(dim());
        for (int i = 0; i < dim(); ++i) {
            v(i) = std::polar(a[static_cast<std::size_t>(i)],
                              ph[static_cast<std::size_t>(i)]);
        }
        return v;
    }

    double amp(int m, int i) const {
        return (m == 1 ? amps1_ : amps2_)[static_cast<std::size_t>(i)];
    }
    double phase(int m, int i) const {
        return (m == 1 ? phases1_ : phases2_)[static_cast<std::size_t>(i)];
    }

private:
    double p1_, p2_;
    std::vector<double> amps1_, phases1_;
    std::vector<double> amps2_, phases2_;
};

// rho = p1 |psi1><psi1| + p2 |psi2><psi2|.
inline DensityMatrix build_two_state_mixture(const MixtureSpec& spec) {
    const Vector v1 = spec.component(1);
    const Vector v2 = spec.component(2);
    Matrix rho = spec.p1() * (v1 * v1.adjoint()) + spec.p2() * (v2 * v2.adjoint());
    return DensityMatrix(std::move(rho));
}

// |rho_{ij}| of the mixture in closed form:
//   sqrt(p1^2 a^2 + p2^2 b^2 + 2 p1 p2 a b f)
// with a = |psi1_i||psi1_j|, b = |psi2_i||psi2_j| and f the cosine of the
// difference of the two phase differences. The f-dependence is the whole
// point: it shows |rho_ij| is not a function of the diagonal alone.
inline double mixed_offdiag_magnitude(const MixtureSpec& spec, int i, int j) {
    if (i < 0 || j < 0 || i >= spec.dim() || j >= spec.dim()) {
        throw IndexOutOfRange("mixed_offdiag_magnitude: index outside [0, " +
                              std::to_string(spec.dim()) + ")");
    }
    if (i == j) {
        throw IndexOutOfRange("mixed_offdiag_magnitude: requires i != j");
    }
    const double a = spec.amp(1, i) * spec.amp(1, j);
    const double b = spec.amp(2, i) * spec.amp(2, j);
    const double dphi1 = spec.phase(1, i) - spec.phase(1, j);
    const double dphi2 = spec.phase(2, i) - spec.phase(2, j);
    const double f = std::cos(dphi1) * std::cos(dphi2) + std::sin(dphi1) * std::sin(dphi2);
    const double sq = spec.p1() * spec.p1() * a * a + spec.p2() * spec.p2() * b * b +
                      2.0 * spec.p1() * spec.p2() * a * b * f;
    return std::sqrt(std::max(sq, 0.0));
}

}  // namespace cohlab
