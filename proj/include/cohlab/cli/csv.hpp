#pragma once

// Trajectory CSV: fixed header, one row per sample, 17 significant
// digits so values round-trip bit for bit through text.

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "cohlab/cli/config.hpp"
#include "cohlab/pulsesim.hpp"

namespace cohlab::cli {

inline constexpr const char* kCsvHeader =
    "area,pop00,pop01,pop10,pop11,c_pdd,c_l1,c_re,purity";

namespace detail {

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << kCsvHeader << '\n';
    for (const TrajectorySample& s : traj.samples) {
        out << detail::format_g17(s.area) << ',' << detail::format_g17(s.pop00) << ','
            << detail::format_g17(s.pop01) << ',' << detail::format_g17(s.pop10) << ','
            << detail::format_g17(s.pop11) << ',' << detail::format_g17(s.c_pdd) << ','
            << detail::format_g17(s.c_l1) << ',' << detail::format_g17(s.c_re) << ','
            << detail::format_g17(s.purity) << '\n';
    }
}

inline Trajectory read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("csv line 1: empty file, expected header '" +
                         std::string(kCsvHeader) + "'");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        throw ParseError("csv line 1: bad header '" + line + "'");
    }
    Trajectory traj;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (detail::trim(line).empty()) {
            continue;
        }
        double field[9];
        std::size_t pos = 0;
        for (int k = 0; k < 9; ++k) {
            const std::size_t comma = line.find(',', pos);
            if ((k < 8) != (comma != std::string::npos)) {
                throw ParseError("csv line " + std::to_string(lineno) +
                                 ": expected 9 comma-separated values");
            }
            const std::string cell = line.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            field[k] = detail::parse_double(
                cell, "csv line " + std::to_string(lineno) + " column " +
                          std::to_string(k + 1));
            pos = comma + 1;
        }
        traj.samples.push_back(TrajectorySample{field[0], field[1], field[2], field[3],
                                                field[4], field[5], field[6], field[7],
                                                field[8]});
    }
    if (traj.samples.empty()) {
        throw ParseError("csv line " + std::to_string(lineno) +
                         ": no data rows after header");
    }
    return traj;
}

}  // namespace cohlab::cli
