#pragma once

// Dense complex linear algebra for small Hilbert spaces (N <= 64) plus the
// entropy primitives the coherence quantifiers are built from. All types
// validate their physical invariants at construction and are immutable
// afterwards, so values are freely shareable between threads.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cohlab/errors.hpp"

namespace cohlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Numerical tolerances. Construction-time checks use 1e-12; eigenvalue
// clamping uses 1e-10; the pure-state gate uses 1e-9 (loose enough to
// absorb RK4 drift, tight enough to reject 1%-contaminated mixtures).
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueTol = 1e-10;
inline constexpr double kPurityTol = 1e-9;

namespace detail {

inline void check_finite(const Vector& v, const char* who) {
    if (!v.allFinite()) {
        throw InvalidState(std::string(who) + ": entries must be finite");
    }
}

inline void check_finite(const Matrix& m, const char* who) {
    if (!m.allFinite()) {
        throw InvalidState(std::string(who) + ": entries must be finite");
    }
}

}  // namespace detail

// Normalized complex amplitude vector over the computational basis.
// Dimension 1 is rejected outright: every downstream formula divides by
// N - 1, so the library never has to special-case it.
class StateVector {
public:
    explicit StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
        if (amps_.size() < 2) {
            throw InvalidState("StateVector: basis dimension must be >= 2");
        }
        detail::check_finite(amps_, "StateVector");
        const double norm_sq = amps_.squaredNorm();
        if (std::abs(norm_sq - 1.0) > kNormTol) {
            throw InvalidState("StateVector: |psi|^2 = " + std::to_string(norm_sq) +
                               ", expected 1 within 1e-12");
        }
    }

    // Rescales an arbitrary nonzero vector onto the unit sphere.
    static StateVector normalized(Vector amplitudes) {
        detail::check_finite(amplitudes, "StateVector");
        const double norm = amplitudes.norm();
        if (norm <= 0.0) {
            throw InvalidState("StateVector: cannot normalize the zero vector");
        }
        return StateVector(amplitudes / norm);
    }

    int dim() const { return static_cast<int>(amps_.size()); }
    const Vector& amplitudes() const { return amps_; }
    Complex amplitude(int i) const { return amps_(i); }

private:
    Vector amps_;
};

// |index> in an N-dimensional space.
inline StateVector basis_state(int dim, int index) {
    if (dim < 2) {
        throw InvalidState("basis_state: dimension must be >= 2");
    }
    if (index < 0 || index >= dim) {
        throw IndexOutOfRange("basis_state: index " + std::to_string(index) +
                              " outside [0, " + std::to_string(dim) + ")");
    }
    Vector amps = Vector::Zero(dim);
    amps(index) = Complex(1.0, 0.0);
    return StateVector(std::move(amps));
}

// (1/sqrt(N)) sum_i |i>, the equal-weight superposition.
inline StateVector maximally_coherent_state(int dim) {
    if (dim < 2) {
        throw InvalidState("maximally_coherent_state: dimension must be >= 2");
    }
    Vector amps = Vector::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
    return StateVector(std::move(amps));
}

// Real probability weights over the basis: entries in [0,1], summing to 1.
class PopulationVector {
public:
    explicit PopulationVector(std::vector<double> populations)
        : p_(std::move(populations)) {
        double sum = 0.0;
        for (double& v : p_) {
            if (!std::isfinite(v) || v < -kNormTol || v > 1.0 + kNormTol) {
                throw InvalidState("PopulationVector: entry " + std::to_string(v) +
                                   " outside [0, 1]");
            }
            v = std::min(std::max(v, 0.0), 1.0);
            sum += v;
        }
        if (std::abs(sum - 1.0) > kNormTol) {
            throw InvalidState("PopulationVector: sum = " + std::to_string(sum) +
                               ", expected 1 within 1e-12");
        }
    }

    int dim() const { return static_cast<int>(p_.size()); }
    double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return p_; }

private:
    std::vector<double> p_;
};

// Hermitian, unit-trace, positive-semidefinite complex matrix; the object
// every quantifier consumes. Positivity is checked at tolerance -1e-10 on
// the spectrum.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix entries) : m_(std::move(entries)) {
        if (m_.rows() != m_.cols()) {
            throw InvalidState("DensityMatrix: matrix must be square");
        }
        if (m_.rows() < 2) {
            throw InvalidState("DensityMatrix: basis dimension must be >= 2");
        }
        detail::check_finite(m_, "DensityMatrix");
        const double herm_defect = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
        if (herm_defect > 2.0 * kHermTol) {
            throw InvalidState("DensityMatrix: hermiticity defect " +
                               std::to_string(herm_defect) + " exceeds tolerance");
        }
        const double trace = m_.trace().real();
        if (std::abs(trace - 1.0) > kTraceTol) {
            throw InvalidState("DensityMatrix: trace = " + std::to_string(trace) +
                               ", expected 1 within 1e-12");
        }
        Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw EigendecompositionFailure("DensityMatrix: eigensolver failed");
        }
        if (solver.eigenvalues().minCoeff() < -kEigenvalueTol) {
            throw InvalidState("DensityMatrix: smallest eigenvalue " +
                               std::to_string(solver.eigenvalues().minCoeff()) +
                               " below -1e-10");
        }
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& entries() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

private:
    Matrix m_;
};

// rho = |psi><psi|; rank one, purity exactly 1 up to rounding.
inline DensityMatrix state_to_density(const StateVector& psi) {
    const Vector& a = psi.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

// The set {rho_ii} as a PopulationVector. Diagonal entries of a valid
// density matrix are real; any imaginary residue beyond tolerance is a
// hermiticity violation.
inline PopulationVector diagonal(const DensityMatrix& rho) {
    const int n = rho.dim();
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Complex d = rho(i, i);
        if (std::abs(d.imag()) > kHermTol) {
            throw HermiticityViolation("diagonal: entry " + std::to_string(i) +
                                       " has imaginary part " +
                                       std::to_string(d.imag()));
        }
        p[static_cast<std::size_t>(i)] = d.real();
    }
    return PopulationVector(std::move(p));
}

namespace detail {

// trace(rho^2) on a raw matrix; shared with the integrator, which checks
// purity before its intermediate states qualify as DensityMatrix values.
inline double purity_of(const Matrix& rho) {
    return (rho * rho).trace().real();
}

}  // namespace detail

// trace(rho^2): 1 for pure states, 1/N for the maximally mixed state.
inline double purity(const DensityMatrix& rho) {
    return detail::purity_of(rho.entries());
}

// -sum p_i log2 p_i with the convention 0 log 0 = 0. Base 2 throughout,
// so the n-qubit maximum is exactly n bits.
inline double shannon_entropy(const PopulationVector& p) {
    double s = 0.0;
    for (double pi : p.values()) {
        if (pi > 0.0) {
            s -= pi * std::log2(pi);
        }
    }
    return s == 0.0 ? 0.0 : s;  // avoid -0
}

// -sum lambda_i log2 lambda_i over the spectrum of rho. Eigenvalues in
// [-1e-10, 0) are clamped to zero.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw EigendecompositionFailure("von_neumann_entropy: eigensolver failed");
    }
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s == 0.0 ? 0.0 : s;
}

// Kronecker product: block (i,j) of the result is a(i,j) * b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace cohlab
