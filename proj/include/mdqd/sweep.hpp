// sweep.hpp: Regime and performance maps over a (strength, epsilon) grid
//
// Cells are stored row-major with epsilon as the outer index:
//     cells[i_eps * strength.steps + i_str]
// Each cell is a pure function of (spec, i_eps, i_str), so the serial
// reference kernel and the OpenMP kernel produce identical results.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mdqd/regimes.hpp"

namespace mdqd {

struct Axis {
    double min{0.0};
    double max{1.0};
    std::size_t steps{201};

    // Inclusive linear spacing; at(steps - 1) == max exactly.
    double at(std::size_t i) const;
};

struct GridSpec {
    Branch branch{Branch::Engine};
    Axis strength{0.0, 1.0, 201};
    Axis epsilon{0.1, 3.0, 201};
    double temperature{1.0};
    double tau{0.0};
    double zero_tol{kDefaultZeroTol};

    // Throws std::domain_error on steps < 2, min >= max, epsilon.min <= 0,
    // strength outside [0, 1], T <= 0, negative zero_tol.
    void validate() const;

    std::size_t cell_count() const { return strength.steps * epsilon.steps; }
};

struct SweepCell {
    double strength{0.0};
    double epsilon{0.0};
    Mode mode{Mode::Undefined};
    std::optional<double> performance;
    double Qh{0.0};
    double Qc{0.0};
    double W{0.0};
};

struct ModeSummary {
    std::array<std::size_t, kModeCount> counts{};
    std::size_t total{0};

    std::size_t count(Mode m) const { return counts[static_cast<std::size_t>(m)]; }
    double fraction(Mode m) const;
};

struct SweepResult {
    GridSpec spec;
    std::vector<SweepCell> cells;
    ModeSummary summary;
};

SweepCell evaluate_cell(const GridSpec& spec, std::size_t i_eps, std::size_t i_str);

ModeSummary summarize(const std::vector<SweepCell>& cells);

// Single-threaded reference kernel.
SweepResult run_sweep_serial(const GridSpec& spec);

// OpenMP kernel; threads <= 0 uses the OpenMP default team size.
SweepResult run_sweep_parallel(const GridSpec& spec, int threads = 0);

// Default entry point (parallel).
SweepResult run_sweep(const GridSpec& spec);

// Fractions of cells per mode; only modes that occur are present.
std::map<Mode, double> mode_area_fractions(const SweepResult& result);

} // namespace mdqd
