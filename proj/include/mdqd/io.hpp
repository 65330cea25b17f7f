// io.hpp: CSV / JSON serialization of ledgers, classifications and sweeps

#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mdqd/regimes.hpp"
#include "mdqd/sweep.hpp"
#include "mdqd/thermo.hpp"

namespace mdqd::io {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kSweepCsvHeader = "strength,epsilon,mode,performance,Qh,Qc,W";

// Locale-independent scientific notation with 17 significant digits, which
// round-trips every double exactly.
std::string format_number(double x);

// "min:max:steps"; throws std::invalid_argument when malformed.
Axis parse_axis(std::string_view text);

nlohmann::json to_json(const GridSpec& spec);
nlohmann::json to_json(const StrokeLedger& ledger);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const SweepResult& result);

void write_sweep_csv(std::ostream& os, const SweepResult& result);
std::string sweep_csv(const SweepResult& result);

// Rows: matrix path, closed form, and |difference| per field.
void write_cycle_csv(std::ostream& os, const StrokeLedger& matrix,
                     const StrokeLedger& closed_form);

} // namespace mdqd::io
