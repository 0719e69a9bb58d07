#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "cohlab/pulsesim.hpp"
#include "oracles.hpp"

using namespace cohlab;

namespace {

constexpr double kPi = oracles::kPi;

Matrix resonant2x2() {
    Matrix h(2, 2);
    h << 0.0, 0.5, 0.5, 0.0;
    return h;
}

int count_interior_maxima(const Trajectory& traj,
                          double TrajectorySample::*field) {
    int count = 0;
    for (std::size_t i = 1; i + 1 < traj.samples.size(); ++i) {
        const double prev = traj.samples[i - 1].*field;
        const double here = traj.samples[i].*field;
        const double next = traj.samples[i + 1].*field;
        if (here > prev && here > next) {
            ++count;
        }
    }
    return count;
}

struct ConservationDefects {
    double trace = 0.0;
    double purity = 0.0;
    double hermiticity = 0.0;
    double energy = 0.0;
};

ConservationDefects measure_defects(const PulseConfig& cfg) {
    const Matrix h = two_qubit_hamiltonian(cfg);
    const Vector& a = cfg.initial_state.amplitudes();
    const Matrix rho0 = a * a.adjoint();
    const double e0 = (rho0 * h).trace().real();
    ConservationDefects d;
    integrate_liouville(rho0, h, cfg.area_max, cfg.steps,
                        [&](int, double, const Matrix& rho) {
        d.trace = std::max(d.trace, std::abs(rho.trace().real() - 1.0));
        d.purity = std::max(d.purity, std::abs((rho * rho).trace().real() - 1.0));
        d.hermiticity =
            std::max(d.hermiticity, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
        d.energy = std::max(d.energy, std::abs((rho * h).trace().real() - e0));
    });
    return d;
}

}  // namespace

TEST_CASE("single_qubit_hamiltonian") {
    const Matrix resonant = single_qubit_hamiltonian(QubitParams{0.0, 1.0});
    REQUIRE((resonant - resonant2x2()).cwiseAbs().maxCoeff() == 0.0);

    const Matrix detuned = single_qubit_hamiltonian(QubitParams{0.5, 1.0});
    REQUIRE(detuned(0, 0) == Complex(0.5, 0.0));
    REQUIRE(detuned(0, 1) == Complex(0.5, 0.0));
    REQUIRE(detuned(1, 0) == Complex(0.5, 0.0));
    REQUIRE(detuned(1, 1) == Complex(0.0, 0.0));

    const Matrix imag_drive = single_qubit_hamiltonian(QubitParams{0.0, Complex(0.0, 1.0)});
    REQUIRE(imag_drive(0, 1) == Complex(0.0, 0.5));
    REQUIRE(imag_drive(1, 0) == Complex(0.0, -0.5));
    REQUIRE((imag_drive - imag_drive.adjoint()).cwiseAbs().maxCoeff() == 0.0);

    REQUIRE_THROWS_AS(single_qubit_hamiltonian(QubitParams{0.0, 0.0}), InvalidState);
}

TEST_CASE("two_qubit_hamiltonian composes the one-qubit blocks") {
    PulseConfig cfg;

    SECTION("non-interacting resonant case couples single flips at 0.5") {
        const Matrix h = two_qubit_hamiltonian(cfg);
        Matrix expected(4, 4);
        expected << 0.0, 0.5, 0.5, 0.0,
                    0.5, 0.0, 0.0, 0.5,
                    0.5, 0.0, 0.0, 0.5,
                    0.0, 0.5, 0.5, 0.0;
        REQUIRE((h - expected).cwiseAbs().maxCoeff() < 1e-15);
    }

    SECTION("non-interacting equals the Kronecker sum for random parameters") {
        std::mt19937_64 rng(41);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int rep = 0; rep < 20; ++rep) {
            cfg.qubit1 = QubitParams{gauss(rng), Complex(gauss(rng), gauss(rng))};
            cfg.qubit2 = QubitParams{gauss(rng), Complex(gauss(rng), gauss(rng))};
            if (std::abs(cfg.qubit1.rabi) == 0.0 || std::abs(cfg.qubit2.rabi) == 0.0) {
                continue;
            }
            const Matrix h1 = single_qubit_hamiltonian(cfg.qubit1);
            const Matrix h2 = single_qubit_hamiltonian(cfg.qubit2);
            const Matrix eye = Matrix::Identity(2, 2);
            const Matrix expected =
                oracles::naive_kron(h1, eye) + oracles::naive_kron(eye, h2);
            cfg.interacting = false;
            REQUIRE((two_qubit_hamiltonian(cfg) - expected).cwiseAbs().maxCoeff() < 1e-15);
            REQUIRE((two_qubit_hamiltonian(cfg) -
                     two_qubit_hamiltonian(cfg).adjoint()).cwiseAbs().maxCoeff() < 1e-15);
        }
    }

    SECTION("interacting resonant case is the 0.25 anti-diagonal") {
        cfg.interacting = true;
        const Matrix h = two_qubit_hamiltonian(cfg);
        Matrix expected = Matrix::Zero(4, 4);
        expected(0, 3) = 0.25;
        expected(1, 2) = 0.25;
        expected(2, 1) = 0.25;
        expected(3, 0) = 0.25;
        REQUIRE((h - expected).cwiseAbs().maxCoeff() < 1e-15);
        REQUIRE((h - oracles::naive_kron(resonant2x2(), resonant2x2()))
                    .cwiseAbs().maxCoeff() < 1e-15);
    }

    SECTION("product mode is the bare product, sum mode adds the free part") {
        cfg.qubit1.detuning = 0.5;
        cfg.qubit2.detuning = 1.0;
        cfg.interacting = true;
        const Matrix h1 = single_qubit_hamiltonian(cfg.qubit1);
        const Matrix h2 = single_qubit_hamiltonian(cfg.qubit2);
        const Matrix eye = Matrix::Identity(2, 2);
        const Matrix free = oracles::naive_kron(h1, eye) + oracles::naive_kron(eye, h2);
        const Matrix product = oracles::naive_kron(h2, h1);

        cfg.interaction = InteractionMode::Product;
        REQUIRE((two_qubit_hamiltonian(cfg) - product).cwiseAbs().maxCoeff() < 1e-15);
        cfg.interaction = InteractionMode::Sum;
        REQUIRE((two_qubit_hamiltonian(cfg) - (free + product)).cwiseAbs().maxCoeff() <
                1e-15);
    }
}

TEST_CASE("liouville_rhs") {
    SECTION("commuting inputs give zero") {
        Matrix diag_rho(2, 2);
        diag_rho << 0.3, 0.0, 0.0, 0.7;
        Matrix diag_h(2, 2);
        diag_h << 1.0, 0.0, 0.0, 2.0;
        REQUIRE(liouville_rhs(DensityMatrix(diag_rho), diag_h).cwiseAbs().maxCoeff() ==
                0.0);
    }

    SECTION("resonant drive from the ground level") {
        const Matrix rhs =
            liouville_rhs(state_to_density(basis_state(2, 1)), resonant2x2());
        REQUIRE(rhs(0, 0) == Complex(0.0, 0.0));
        REQUIRE(rhs(1, 1) == Complex(0.0, 0.0));
        REQUIRE(rhs(0, 1) == Complex(0.0, -0.5));
        REQUIRE(rhs(1, 0) == Complex(0.0, 0.5));
    }

    SECTION("traceless and Hermitian on random inputs") {
        std::mt19937_64 rng(42);
        for (int rep = 0; rep < 50; ++rep) {
            const DensityMatrix rho = oracles::random_density(4, rng);
            PulseConfig cfg;
            std::normal_distribution<double> gauss(0.0, 1.0);
            cfg.qubit1.detuning = gauss(rng);
            cfg.qubit2.detuning = gauss(rng);
            cfg.interacting = rep % 2 == 0;
            const Matrix h = two_qubit_hamiltonian(cfg);
            const Matrix rhs = liouville_rhs(rho, h);
            REQUIRE(std::abs(rhs.trace()) < 1e-14);
            REQUIRE((rhs - rhs.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
        }
    }

    SECTION("dimension guard") {
        REQUIRE_THROWS_AS(
            liouville_rhs(state_to_density(basis_state(4, 0)), resonant2x2()),
            DimensionMismatch);
    }
}

TEST_CASE("integrate_liouville reproduces resonant Rabi flopping") {
    Matrix rho0 = Matrix::Zero(2, 2);
    rho0(1, 1) = 1.0;  // ground level of the Eq-style 2x2 block

    double max_err = 0.0;
    integrate_liouville(rho0, resonant2x2(), 4.0 * kPi, 4000,
                        [&](int, double theta, const Matrix& rho) {
        max_err = std::max(max_err, std::abs(rho(0, 0).real() -
                                             oracles::resonant_excited_population(theta)));
    });
    REQUIRE(max_err < 1e-6);
}

TEST_CASE("RK4 endpoint error scales like a fourth-order method") {
    Matrix rho0 = Matrix::Zero(2, 2);
    rho0(1, 1) = 1.0;

    // After pulse area 4*pi (two full cycles) the exact solution returns
    // to the initial state, so the endpoint defect is pure solver error.
    const auto endpoint_error = [&](int steps) {
        double err = 0.0;
        integrate_liouville(rho0, resonant2x2(), 4.0 * kPi, steps,
                            [&](int step, double, const Matrix& rho) {
            if (step == steps) {
                err = (rho - rho0).cwiseAbs().maxCoeff();
            }
        });
        return err;
    };

    const double fine = endpoint_error(4000);
    const double coarse = endpoint_error(2000);
    REQUIRE(fine > 0.0);
    REQUIRE(coarse / fine >= 12.0);
}

TEST_CASE("integrate_liouville input guards") {
    Matrix rho0 = Matrix::Zero(2, 2);
    rho0(0, 0) = 1.0;
    const auto nop = [](int, double, const Matrix&) {};
    REQUIRE_THROWS_AS(integrate_liouville(rho0, Matrix::Identity(4, 4), 1.0, 10, nop),
                      DimensionMismatch);
    REQUIRE_THROWS_AS(integrate_liouville(rho0, resonant2x2(), 0.0, 10, nop), InvalidState);
    REQUIRE_THROWS_AS(integrate_liouville(rho0, resonant2x2(), 1.0, 0, nop), InvalidState);
}

TEST_CASE("populations unpack the two-qubit diagonal") {
    const BasisPopulations ground = populations(state_to_density(basis_state(4, 3)));
    REQUIRE(ground.pop00 == 0.0);
    REQUIRE(ground.pop01 == 0.0);
    REQUIRE(ground.pop10 == 0.0);
    REQUIRE(ground.pop11 == 1.0);

    const BasisPopulations flat = populations(state_to_density(maximally_coherent_state(4)));
    REQUIRE(flat.pop00 == Catch::Approx(0.25).margin(1e-12));
    REQUIRE(flat.pop11 == Catch::Approx(0.25).margin(1e-12));

    // Product state bookkeeping: qubit 1 is the left tensor factor and
    // label bit 0 is the excited level.
    const double s1 = 0.3;
    const double s2 = 0.8;
    Vector q1(2), q2(2);
    q1 << std::sqrt(s1), std::sqrt(1.0 - s1);
    q2 << std::sqrt(s2), std::sqrt(1.0 - s2);
    Vector prod(4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            prod(2 * i + j) = q1(i) * q2(j);
        }
    }
    const BasisPopulations p = populations(state_to_density(StateVector(prod)));
    REQUIRE(p.pop00 == Catch::Approx(s1 * s2).margin(1e-12));
    REQUIRE(p.pop01 == Catch::Approx(s1 * (1.0 - s2)).margin(1e-12));
    REQUIRE(p.pop10 == Catch::Approx((1.0 - s1) * s2).margin(1e-12));
    REQUIRE(p.pop11 == Catch::Approx((1.0 - s1) * (1.0 - s2)).margin(1e-12));

    REQUIRE_THROWS_AS(populations(state_to_density(basis_state(2, 0))),
                      DimensionMismatch);
}

TEST_CASE("config validation") {
    PulseConfig cfg;
    REQUIRE_NOTHROW(validate_config(cfg));
    cfg.steps = 0;
    REQUIRE_THROWS_AS(validate_config(cfg), InvalidState);
    cfg.steps = 4000;
    cfg.area_max = 0.0;
    REQUIRE_THROWS_AS(validate_config(cfg), InvalidState);
    cfg.area_max = 1.0;
    cfg.qubit2.rabi = 0.0;
    REQUIRE_THROWS_AS(validate_config(cfg), InvalidState);
    cfg.qubit2.rabi = 1.0;
    cfg.initial_state = basis_state(2, 0);
    REQUIRE_THROWS_AS(validate_config(cfg), InvalidState);
}

TEST_CASE("resonant non-interacting evolution from |11>") {
    const PulseConfig cfg;  // defaults are exactly this scenario
    const Trajectory traj = evolve(cfg);
    REQUIRE(traj.samples.size() == 4001);

    const TrajectorySample& first = traj.samples.front();
    REQUIRE(first.area == 0.0);
    REQUIRE(first.pop11 == 1.0);
    REQUIRE(first.pop00 == 0.0);
    REQUIRE(first.c_pdd == 0.0);
    REQUIRE(first.c_l1 == 0.0);
    REQUIRE(first.c_re == 0.0);
    REQUIRE(first.purity == Catch::Approx(1.0).margin(1e-15));

    // theta = pi/2 lands on grid index 500: equal populations, full
    // coherence on all three quantifiers.
    const TrajectorySample& quarter = traj.samples[500];
    REQUIRE(quarter.area == Catch::Approx(kPi / 2.0).margin(1e-12));
    for (double pop : {quarter.pop00, quarter.pop01, quarter.pop10, quarter.pop11}) {
        REQUIRE(pop == Catch::Approx(0.25).margin(1e-6));
    }
    REQUIRE(quarter.c_pdd == Catch::Approx(1.0).margin(1e-3));
    REQUIRE(quarter.c_l1 == Catch::Approx(1.0).margin(1e-3));
    REQUIRE(quarter.c_re == Catch::Approx(1.0).margin(1e-3));

    // theta = 2*pi lands on grid index 2000: back to the incoherent start.
    const TrajectorySample& cycle = traj.samples[2000];
    REQUIRE(cycle.pop11 == Catch::Approx(1.0).margin(1e-6));
    REQUIRE(cycle.c_pdd == Catch::Approx(0.0).margin(1e-3));
    REQUIRE(cycle.c_l1 == Catch::Approx(0.0).margin(1e-3));
    REQUIRE(cycle.c_re == Catch::Approx(0.0).margin(1e-3));

    double max_err = 0.0;
    for (const TrajectorySample& s : traj.samples) {
        const double c = std::cos(s.area / 2.0);
        max_err = std::max(max_err, std::abs(s.pop11 - c * c * c * c));
        REQUIRE(std::abs(s.pop00 + s.pop01 + s.pop10 + s.pop11 - 1.0) < 1e-9);
        REQUIRE(std::abs(s.purity - 1.0) < 1e-7);
        for (double v : {s.c_pdd, s.c_l1, s.c_re}) {
            REQUIRE(v >= 0.0);
            REQUIRE(v <= 1.0 + 1e-12);
        }
    }
    REQUIRE(max_err < 1e-6);
}

TEST_CASE("interacting evolution never reaches maximal coherence") {
    PulseConfig cfg;
    cfg.interacting = true;
    const Trajectory traj = evolve(cfg);

    double max_cpdd = 0.0;
    double max_pop_err = 0.0;
    for (const TrajectorySample& s : traj.samples) {
        max_cpdd = std::max(max_cpdd, s.c_pdd);
        const double c = std::cos(s.area / 4.0);
        max_pop_err = std::max(max_pop_err, std::abs(s.pop11 - c * c));
    }
    REQUIRE(max_pop_err < 1e-6);
    REQUIRE(max_cpdd < 1.0 - 1e-3);
    REQUIRE(max_cpdd == Catch::Approx(1.0 / 3.0).margin(1e-6));

    // The population oscillates at a different rate than the free case.
    const Trajectory free_traj = evolve(PulseConfig{});
    const int free_maxima = count_interior_maxima(free_traj, &TrajectorySample::pop11);
    const int coupled_maxima = count_interior_maxima(traj, &TrajectorySample::pop11);
    REQUIRE(free_maxima == 1);
    REQUIRE(coupled_maxima == 0);
    REQUIRE(free_maxima != coupled_maxima);
}

TEST_CASE("conservation laws hold along all four preset-style runs") {
    for (const bool interacting : {false, true}) {
        for (const bool detuned : {false, true}) {
            PulseConfig cfg;
            cfg.interacting = interacting;
            if (detuned) {
                cfg.qubit1.detuning = 0.5;
                cfg.qubit2.detuning = 1.0;
            }
            const ConservationDefects d = measure_defects(cfg);
            INFO("interacting=" << interacting << " detuned=" << detuned);
            REQUIRE(d.trace < 1e-9);
            REQUIRE(d.purity < 1e-7);
            REQUIRE(d.hermiticity < 1e-9);
            REQUIRE(d.energy < 1e-9);
        }
    }
}

TEST_CASE("coarse stepping is rejected as purity drift") {
    PulseConfig cfg;
    cfg.steps = 1;
    try {
        evolve(cfg);
        FAIL("expected PurityDrift");
    } catch (const PurityDrift& e) {
        REQUIRE(e.area() == Catch::Approx(cfg.area_max).margin(1e-12));
        REQUIRE(std::abs(e.purity() - 1.0) > kPurityBandTol);
    }
}
