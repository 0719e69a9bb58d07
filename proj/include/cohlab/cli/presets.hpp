#pragma once

// The four shipped run configurations. Presets are frozen: a RunManifest
// may carry a named preset only while its config matches these values
// bit for bit, otherwise it must be demoted to Custom.

#include <cmath>
#include <string>

#include "cohlab/errors.hpp"
#include "cohlab/pulsesim.hpp"

namespace cohlab::cli {

enum class Preset { Fig1a, Fig1b, Fig2a, Fig2b, Custom };

inline const char* preset_name(Preset p) {
    switch (p) {
        case Preset::Fig1a: return "fig1a";
        case Preset::Fig1b: return "fig1b";
        case Preset::Fig2a: return "fig2a";
        case Preset::Fig2b: return "fig2b";
        case Preset::Custom: return "custom";
    }
    return "?";
}

inline Preset parse_preset(const std::string& name) {
    if (name == "fig1a") return Preset::Fig1a;
    if (name == "fig1b") return Preset::Fig1b;
    if (name == "fig2a") return Preset::Fig2a;
    if (name == "fig2b") return Preset::Fig2b;
    if (name == "custom") return Preset::Custom;
    throw InvalidState("unknown preset '" + name +
                       "' (expected fig1a, fig1b, fig2a or fig2b)");
}

// fig1a/fig1b: both qubits resonant; fig2a/fig2b: detunings 0.5 and 1.0
// in Rabi units. The b variants couple the qubits through the product
// Hamiltonian. Everything starts in |11> and spans two resonant Rabi
// cycles at 4000 steps.
inline PulseConfig preset_config(Preset p) {
    PulseConfig cfg;
    switch (p) {
        case Preset::Fig1a:
            break;
        case Preset::Fig1b:
            cfg.interacting = true;
            break;
        case Preset::Fig2a:
            cfg.qubit1.detuning = 0.5;
            cfg.qubit2.detuning = 1.0;
            break;
        case Preset::Fig2b:
            cfg.qubit1.detuning = 0.5;
            cfg.qubit2.detuning = 1.0;
            cfg.interacting = true;
            break;
        case Preset::Custom:
            throw InvalidState("preset_config: custom has no frozen parameters");
    }
    return cfg;
}

inline bool config_matches_preset(const PulseConfig& cfg, Preset p) {
    if (p == Preset::Custom) {
        return true;
    }
    const PulseConfig ref = preset_config(p);
    return cfg.qubit1.detuning == ref.qubit1.detuning &&
           cfg.qubit1.rabi == ref.qubit1.rabi &&
           cfg.qubit2.detuning == ref.qubit2.detuning &&
           cfg.qubit2.rabi == ref.qubit2.rabi &&
           cfg.interacting == ref.interacting &&
           cfg.interaction == ref.interaction &&
           cfg.area_max == ref.area_max &&
           cfg.steps == ref.steps &&
           cfg.initial_state.amplitudes() == ref.initial_state.amplitudes();
}

struct RunManifest {
    Preset preset = Preset::Custom;
    PulseConfig config;
    std::string output_path;
    std::uint64_t seed = 42;

    RunManifest() = default;
    RunManifest(Preset p, PulseConfig cfg, std::string out, std::uint64_t s)
        : preset(p), config(std::move(cfg)), output_path(std::move(out)), seed(s) {
        if (!config_matches_preset(config, preset)) {
            preset = Preset::Custom;
        }
    }
};

}  // namespace cohlab::cli
