#include "mdqd/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mdqd::io {

namespace {

nlohmann::json matrix_json(const Mat2& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 2; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 2; ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json optional_number(const std::optional<double>& x)
{
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

nlohmann::json axis_json(const Axis& a)
{
    return {{"min", a.min}, {"max", a.max}, {"steps", a.steps}};
}

double parse_double(std::string_view s)
{
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    return x;
}

} // namespace

std::string format_number(double x)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::scientific, 16);
    if (ec != std::errc())
        throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), ptr);
}

Axis parse_axis(std::string_view text)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
        throw std::invalid_argument("axis must be min:max:steps, got '" + std::string(text) + "'");

    Axis axis;
    axis.min = parse_double(text.substr(0, c1));
    axis.max = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    const std::string_view steps = text.substr(c2 + 1);
    const auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), axis.steps);
    if (ec != std::errc() || ptr != steps.data() + steps.size())
        throw std::invalid_argument("axis steps must be a non-negative integer, got '" +
                                    std::string(steps) + "'");
    return axis;
}

nlohmann::json to_json(const GridSpec& spec)
{
    return {{"branch", to_string(spec.branch)},
            {"strength_axis", axis_json(spec.strength)},
            {"epsilon_axis", axis_json(spec.epsilon)},
            {"temperature", spec.temperature},
            {"tau", spec.tau},
            {"zero_tol", spec.zero_tol}};
}

nlohmann::json to_json(const StrokeLedger& l)
{
    return {{"dU", {l.dU1, l.dU2, l.dU3}},
            {"dS", {l.dS1, l.dS2, l.dS3}},
            {"rho1", matrix_json(l.rho1.matrix())},
            {"rho2", matrix_json(l.rho2.matrix())},
            {"rho3", matrix_json(l.rho3.matrix())}};
}

nlohmann::json to_json(const Classification& c)
{
    return {{"mode", to_string(c.mode)},
            {"Qh", c.heat.Qh},
            {"Qc", c.heat.Qc},
            {"W", c.heat.W},
            {"performance", optional_number(c.performance)},
            {"performance_kind", c.mode == Mode::Engine      ? "eta"
                                 : c.mode == Mode::Undefined ? "none"
                                                             : "kappa"},
            {"raw_cop", optional_number(c.raw_cop)},
            {"note", c.note}};
}

nlohmann::json to_json(const SweepResult& result)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const SweepCell& c : result.cells)
        cells.push_back({{"strength", c.strength},
                         {"epsilon", c.epsilon},
                         {"mode", to_string(c.mode)},
                         {"performance", optional_number(c.performance)},
                         {"Qh", c.Qh},
                         {"Qc", c.Qc},
                         {"W", c.W}});

    nlohmann::json counts = nlohmann::json::object();
    nlohmann::json fractions = nlohmann::json::object();
    for (int m = 0; m < kModeCount; ++m) {
        const auto mode = static_cast<Mode>(m);
        counts[std::string(to_string(mode))] = result.summary.count(mode);
        fractions[std::string(to_string(mode))] = result.summary.fraction(mode);
    }

    return {{"schema", kSchemaVersion},
            {"spec", to_json(result.spec)},
            {"metadata",
             {{"ordering", "row-major, epsilon outer, strength inner"},
              {"performance", "eta for engine cells, kappa = COP/(1+COP) otherwise, null when undefined"}}},
            {"cells", std::move(cells)},
            {"summary", {{"counts", counts}, {"fractions", fractions}}}};
}

void write_sweep_csv(std::ostream& os, const SweepResult& result)
{
    os << kSweepCsvHeader << '\n';
    for (const SweepCell& c : result.cells) {
        os << format_number(c.strength) << ',' << format_number(c.epsilon) << ','
           << to_string(c.mode) << ',';
        if (c.performance)
            os << format_number(*c.performance);
        os << ',' << format_number(c.Qh) << ',' << format_number(c.Qc) << ','
           << format_number(c.W) << '\n';
    }
}

std::string sweep_csv(const SweepResult& result)
{
    std::ostringstream os;
    write_sweep_csv(os, result);
    return os.str();
}

void write_cycle_csv(std::ostream& os, const StrokeLedger& matrix,
                     const StrokeLedger& closed_form)
{
    auto row = [&os](std::string_view name, const std::array<double, 6>& v) {
        os << name;
        for (double x : v)
            os << ',' << format_number(x);
        os << '\n';
    };
    auto fields = [](const StrokeLedger& l) {
        return std::array<double, 6>{l.dU1, l.dU2, l.dU3, l.dS1, l.dS2, l.dS3};
    };

    os << "path,dU1,dU2,dU3,dS1,dS2,dS3\n";
    const auto m = fields(matrix);
    const auto c = fields(closed_form);
    std::array<double, 6> diff{};
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = std::abs(m[i] - c[i]);
    row("matrix", m);
    row("closed_form", c);
    row("abs_difference", diff);
}

} // namespace mdqd::io
