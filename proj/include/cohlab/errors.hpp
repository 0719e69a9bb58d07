#pragma once

#include <stdexcept>
#include <string>

namespace cohlab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A constructor argument violates a physical invariant (normalization,
// hermiticity, trace, positivity, dimension bounds).
class InvalidState : public Error {
public:
    using Error::Error;
};

// Two operands live in Hilbert spaces of different dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A diagonal entry carries an imaginary part beyond tolerance.
class HermiticityViolation : public Error {
public:
    using Error::Error;
};

// The Hermitian eigensolver did not converge.
class EigendecompositionFailure : public Error {
public:
    using Error::Error;
};

// A pure-state-only operation was handed a mixed state. Carries the
// measured purity so callers can report how far off the input was.
class NotPureState : public Error {
public:
    explicit NotPureState(double purity)
        : Error("state is not pure: purity = " + std::to_string(purity)),
          purity_(purity) {}

    double purity() const { return purity_; }

private:
    double purity_;
};

// An index lies outside the matrix, or an off-diagonal accessor was
// pointed at the diagonal.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Integration left the allowed purity band; the step size is too coarse.
class PurityDrift : public Error {
public:
    PurityDrift(double purity, double area)
        : Error("purity drifted to " + std::to_string(purity) +
                " at pulse area " + std::to_string(area) +
                "; decrease the step size"),
          purity_(purity),
          area_(area) {}

    double purity() const { return purity_; }
    double area() const { return area_; }

private:
    double purity_;
    double area_;
};

}  // namespace cohlab
