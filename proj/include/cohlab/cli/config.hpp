#pragma once

// Flat key=value run configuration files and the complex-literal parser
// shared with the quantify subcommand. '#' starts a comment; blank lines
// are skipped; later assignments win. Unknown keys are parse errors so
// typos cannot silently fall back to defaults.

#include <cctype>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "cohlab/core.hpp"
#include "cohlab/errors.hpp"
#include "cohlab/pulsesim.hpp"

namespace cohlab::cli {

// Malformed textual input: config files, CSV, complex literals.
class ParseError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_double(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    if (t.empty()) {
        throw ParseError(what + ": empty number");
    }
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) {
        throw ParseError(what + ": cannot parse '" + text + "' as a number");
    }
    return v;
}

inline int parse_int(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size() || v < INT_MIN || v > INT_MAX) {
        throw ParseError(what + ": cannot parse '" + text + "' as an integer");
    }
    return static_cast<int>(v);
}

inline bool parse_bool(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    if (t == "true" || t == "1") return true;
    if (t == "false" || t == "0") return false;
    throw ParseError(what + ": expected true or false, got '" + text + "'");
}

}  // namespace detail

// Accepts real literals ("0.5", "-2e-3"), pure imaginary ones ("i",
// "-0.3i", "2j") and the combined form "a+bi" / "a-bi".
inline Complex parse_complex(const std::string& text) {
    std::string t = detail::trim(text);
    if (t.empty()) {
        throw ParseError("empty complex literal");
    }
    const char tail = t.back();
    const bool imaginary = tail == 'i' || tail == 'j';
    if (imaginary) {
        t.pop_back();
    }
    // Split on the last +/- that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (!imaginary) {
        return Complex(detail::parse_double(t, "complex literal"), 0.0);
    }
    std::string re = "0";
    std::string im = t;
    if (split != std::string::npos) {
        re = t.substr(0, split);
        im = t.substr(split);
    }
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return Complex(split == std::string::npos ? 0.0
                                              : detail::parse_double(re, "complex literal"),
                   detail::parse_double(im, "complex literal"));
}

// Initial-state values are either a two-bit basis label ("11") or four
// comma-separated complex amplitudes, renormalized on load.
inline StateVector parse_initial_state(const std::string& text) {
    const std::string t = detail::trim(text);
    if (t.size() == 2 && (t[0] == '0' || t[0] == '1') && (t[1] == '0' || t[1] == '1')) {
        return basis_state(4, 2 * (t[0] - '0') + (t[1] - '0'));
    }
    std::vector<Complex> amps;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        const std::size_t comma = t.find(',', pos);
        const std::string field =
            t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        amps.push_back(parse_complex(field));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (amps.size() != 4) {
        throw ParseError("initial_state: expected a basis label or 4 amplitudes, got " +
                         std::to_string(amps.size()));
    }
    Vector v(4);
    for (int i = 0; i < 4; ++i) {
        v(i) = amps[static_cast<std::size_t>(i)];
    }
    try {
        return StateVector::normalized(std::move(v));
    } catch (const InvalidState& e) {
        throw ParseError(std::string("initial_state: ") + e.what());
    }
}

inline void apply_config_line(const std::string& key, const std::string& value,
                              PulseConfig& cfg) {
    if (key == "qubit1.detuning") {
        cfg.qubit1.detuning = detail::parse_double(value, key);
    } else if (key == "qubit2.detuning") {
        cfg.qubit2.detuning = detail::parse_double(value, key);
    } else if (key == "qubit1.rabi") {
        cfg.qubit1.rabi = parse_complex(value);
    } else if (key == "qubit2.rabi") {
        cfg.qubit2.rabi = parse_complex(value);
    } else if (key == "interacting") {
        cfg.interacting = detail::parse_bool(value, key);
    } else if (key == "interaction") {
        const std::string v = detail::trim(value);
        if (v == "product") {
            cfg.interaction = InteractionMode::Product;
        } else if (v == "sum") {
            cfg.interaction = InteractionMode::Sum;
        } else {
            throw ParseError("interaction: expected product or sum, got '" + value + "'");
        }
    } else if (key == "area_max") {
        cfg.area_max = detail::parse_double(value, key);
    } else if (key == "steps") {
        cfg.steps = detail::parse_int(value, key);
    } else if (key == "initial_state") {
        cfg.initial_state = parse_initial_state(value);
    } else {
        throw ParseError("unknown config key '" + key + "'");
    }
}

inline void apply_config_stream(std::istream& in, PulseConfig& cfg) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string stripped = detail::trim(line);
        if (stripped.empty()) {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError("config line " + std::to_string(lineno) +
                             ": expected key=value, got '" + stripped + "'");
        }
        try {
            apply_config_line(detail::trim(stripped.substr(0, eq)),
                              detail::trim(stripped.substr(eq + 1)), cfg);
        } catch (const ParseError& e) {
            throw ParseError("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

inline void load_config_file(const std::string& path, PulseConfig& cfg) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'");
    }
    apply_config_stream(in, cfg);
}

}  // namespace cohlab::cli
