#pragma once

// Two-qubit square-pulse dynamics in the rotating frame: constant
// Hamiltonians built from per-qubit detuning and Rabi frequency, evolved
// under the Liouville equation with fixed-step RK4 in the pulse-area
// variable. With a square pulse of unit Rabi frequency, pulse area and
// time coincide, so trajectories are parameterized by area directly.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cohlab/core.hpp"
#include "cohlab/errors.hpp"
#include "cohlab/quantifiers.hpp"

namespace cohlab {

// Purity may wander this far from 1 before a trajectory is rejected as
// under-resolved. Looser than the pure-state guard on purpose: it is a
// step-size alarm, not a mixedness test.
inline constexpr double kPurityBandTol = 1e-7;

struct QubitParams {
    double detuning = 0.0;   // units of the Rabi frequency
    Complex rabi = 1.0;
};

// Coupled mode: Product is the bare tensor product of the two one-qubit
// Hamiltonians; Sum adds that product term on top of the non-interacting
// Kronecker sum.
enum class InteractionMode { Product, Sum };

// Basis order: |00>, |01>, |10>, |11> at indices 0..3, qubit 1 as the
// left tensor factor, label bit 0 meaning the detuned (upper) level.
// |11> is the shared ground level and the incoherent starting point.
struct PulseConfig {
    QubitParams qubit1;
    QubitParams qubit2;
    bool interacting = false;
    InteractionMode interaction = InteractionMode::Product;
    double area_max = 4.0 * 3.14159265358979323846;
    int steps = 4000;
    StateVector initial_state = basis_state(4, 3);
};

inline void validate_config(const PulseConfig& cfg) {
    if (std::abs(cfg.qubit1.rabi) <= 0.0 || std::abs(cfg.qubit2.rabi) <= 0.0) {
        throw InvalidState("PulseConfig: Rabi frequency must be nonzero");
    }
    if (!std::isfinite(cfg.qubit1.detuning) || !std::isfinite(cfg.qubit2.detuning)) {
        throw InvalidState("PulseConfig: detunings must be finite");
    }
    if (!(cfg.area_max > 0.0) || !std::isfinite(cfg.area_max)) {
        throw InvalidState("PulseConfig: area_max must be positive");
    }
    if (cfg.steps < 1) {
        throw InvalidState("PulseConfig: steps must be >= 1");
    }
    if (cfg.initial_state.dim() != 4) {
        throw InvalidState("PulseConfig: initial state must have dimension 4");
    }
}

// [[Delta, Omega/2], [conj(Omega)/2, 0]]: upper level carries the
// detuning shift, the drive sits on the off-diagonal.
inline Matrix single_qubit_hamiltonian(const QubitParams& q) {
    if (std::abs(q.rabi) <= 0.0) {
        throw InvalidState("single_qubit_hamiltonian: Rabi frequency must be nonzero");
    }
    Matrix h(2, 2);
    h(0, 0) = q.detuning;
    h(0, 1) = q.rabi / 2.0;
    h(1, 0) = std::conj(q.rabi) / 2.0;
    h(1, 1) = 0.0;
    return h;
}

inline Matrix two_qubit_hamiltonian(const PulseConfig& cfg) {
    const Matrix h1 = single_qubit_hamiltonian(cfg.qubit1);
    const Matrix h2 = single_qubit_hamiltonian(cfg.qubit2);
    const Matrix eye = Matrix::Identity(2, 2);
    if (!cfg.interacting) {
        return kron(h1, eye) + kron(eye, h2);
    }
    if (cfg.interaction == InteractionMode::Product) {
        return kron(h2, h1);
    }
    return kron(h1, eye) + kron(eye, h2) + kron(h2, h1);
}

namespace detail {

// d(rho)/dt = i(rho H - H rho), hbar = 1. Raw-matrix form for integrator
// internals, whose intermediate stages are not density matrices.
inline Matrix liouville_rhs_raw(const Matrix& rho, const Matrix& h) {
    return Complex(0.0, 1.0) * (rho * h - h * rho);
}

}  // namespace detail

inline Matrix liouville_rhs(const DensityMatrix& rho, const Matrix& h) {
    if (h.rows() != h.cols() || h.rows() != rho.dim()) {
        throw DimensionMismatch("liouville_rhs: state and Hamiltonian dimensions differ");
    }
    return detail::liouville_rhs_raw(rho.entries(), h);
}

// Classical RK4 over t in [0, t_max] with a constant Hamiltonian. The
// observer fires at every grid point including t = 0; grid times are
// computed as t_max * step / steps so the endpoint is exact. No validity
// checks are applied to the evolving matrix here; callers own those.
inline void integrate_liouville(
    const Matrix& rho0, const Matrix& h, double t_max, int steps,
    const std::function<void(int step, double t, const Matrix& rho)>& observe) {
    if (rho0.rows() != rho0.cols() || h.rows() != h.cols() || rho0.rows() != h.rows()) {
        throw DimensionMismatch("integrate_liouville: matrix dimensions differ");
    }
    if (!(t_max > 0.0) || steps < 1) {
        throw InvalidState("integrate_liouville: need t_max > 0 and steps >= 1");
    }
    const double dt = t_max / steps;
    Matrix rho = rho0;
    observe(0, 0.0, rho);
    for (int s = 1; s <= steps; ++s) {
        const Matrix k1 = detail::liouville_rhs_raw(rho, h);
        const Matrix k2 = detail::liouville_rhs_raw(rho + (0.5 * dt) * k1, h);
        const Matrix k3 = detail::liouville_rhs_raw(rho + (0.5 * dt) * k2, h);
        const Matrix k4 = detail::liouville_rhs_raw(rho + dt * k3, h);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        observe(s, t_max * s / steps, rho);
    }
}

struct BasisPopulations {
    double pop00;
    double pop01;
    double pop10;
    double pop11;
};

inline BasisPopulations populations(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        throw DimensionMismatch("populations: expected a two-qubit (4x4) state");
    }
    const PopulationVector d = diagonal(rho);
    return BasisPopulations{d[0], d[1], d[2], d[3]};
}

struct TrajectorySample {
    double area;
    double pop00, pop01, pop10, pop11;
    double c_pdd, c_l1, c_re;
    double purity;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
};

// Integrates the configured system and records populations, all three
// quantifiers and the purity at every grid point. Purity leaving the
// +-1e-7 band aborts the run with PurityDrift: the step is too coarse
// for the requested span.
inline Trajectory evolve(const PulseConfig& cfg) {
    validate_config(cfg);
    const Matrix h = two_qubit_hamiltonian(cfg);
    const Vector& a = cfg.initial_state.amplitudes();
    const Matrix rho0 = a * a.adjoint();
    Trajectory traj;
    traj.samples.reserve(static_cast<std::size_t>(cfg.steps) + 1);
    integrate_liouville(rho0, h, cfg.area_max, cfg.steps,
                        [&](int, double area, const Matrix& raw) {
        const double p = detail::purity_of(raw);
        if (!(std::abs(p - 1.0) <= kPurityBandTol)) {
            throw PurityDrift(p, area);
        }
        const DensityMatrix rho(raw);
        const BasisPopulations pops = populations(rho);
        traj.samples.push_back(TrajectorySample{
            area,
            pops.pop00, pops.pop01, pops.pop10, pops.pop11,
            c_pdd(rho).value,
            c_l1_normalized(rho).value,
            c_re_normalized(rho).value,
            p});
    });
    return traj;
}

}  // namespace cohlab
