// mdqd: command-line front end for the measurement-driven double-quantum-dot cycle
//
//   mdqd spectrum  --epsilon 1 --tau 0.5 --temperature 2
//   mdqd cycle     --epsilon 1 --temperature 1 --a 0.7 --b 0.7 --format json
//   mdqd classify  --branch refrigerator-plus --epsilon 1 --temperature 3 --b 0.9
//   mdqd sweep     --branch engine --grid-strength 0:1:201 --grid-epsilon 0.1:3:201 --output map.csv
//   mdqd verify    --seed 42 --trials 1000
//
// Options may also come from a `key = value` file given with --config;
// command-line flags take precedence. Exit codes: 0 success, 1 verification
// failure, 2 input/domain error, 3 I/O error.

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "mdqd/io.hpp"
#include "mdqd/qdot_core.hpp"
#include "mdqd/regimes.hpp"
#include "mdqd/sweep.hpp"
#include "mdqd/thermo.hpp"
#include "mdqd/verify.hpp"

namespace {

using namespace mdqd;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

struct RunConfig {
    double epsilon{1.0};
    double tau{0.0};
    double temperature{1.0};
    double a{0.5};
    double b{0.5};
    std::string branch{"engine"};
    std::string grid_strength{"0:1:201"};
    std::string grid_epsilon{"0.1:3:201"};
    double zero_tol{kDefaultZeroTol};
    std::string format; // empty: text for reports, csv for sweeps
    std::string output;
    std::uint64_t seed{42};
    std::size_t trials{1000};
    int threads{0};
    bool corrupt_kraus{false};

    DotParams params() const { return {epsilon, tau}; }

    Format resolved_format(Format fallback) const
    {
        if (format.empty())
            return fallback;
        return format == "json" ? Format::Json : Format::Csv;
    }
};

std::string human(double x)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                         std::chars_format::general, 12);
    return ec == std::errc() ? std::string(buf.data(), ptr) : std::string("?");
}

// Ordered key/value report rendered as text, CSV or JSON.
class Report {
public:
    void add(std::string key, double value) { rows_.emplace_back(std::move(key), json(value)); }
    void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), json(std::move(value))); }
    void add(std::string key, bool value) { rows_.emplace_back(std::move(key), json(value)); }
    void add(std::string key, const std::optional<double>& value)
    {
        rows_.emplace_back(std::move(key), value ? json(*value) : json(nullptr));
    }

    std::string render(Format f) const
    {
        std::ostringstream os;
        if (f == Format::Json) {
            json obj = json::object();
            obj["schema"] = io::kSchemaVersion;
            for (const auto& [k, v] : rows_)
                obj[k] = v;
            os << obj.dump(2) << '\n';
            return os.str();
        }
        if (f == Format::Csv)
            os << "key,value\n";
        for (const auto& [k, v] : rows_) {
            os << k << (f == Format::Csv ? "," : " = ");
            if (v.is_number_float())
                os << (f == Format::Csv ? io::format_number(v.get<double>()) : human(v.get<double>()));
            else if (v.is_string())
                os << v.get<std::string>();
            else
                os << v.dump();
            os << '\n';
        }
        return os.str();
    }

private:
    std::vector<std::pair<std::string, json>> rows_;
};

// Writes via a sibling temporary file so a failed run never leaves a partial output.
void emit(const RunConfig& cfg, const std::string& payload)
{
    if (cfg.output.empty()) {
        std::cout << payload;
        return;
    }
    const std::filesystem::path target(cfg.output);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        out << payload;
        out.close();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into '" + target.string() + "'");
    }
}

int cmd_spectrum(const RunConfig& cfg)
{
    const DotParams p = cfg.params();
    const Spectrum s = spectrum(p);
    const ThermalPopulations pop = thermal_populations(p, cfg.temperature);

    Report r;
    r.add("epsilon", cfg.epsilon);
    r.add("tau", cfg.tau);
    r.add("temperature", cfg.temperature);
    r.add("E", s.gap);
    r.add("theta", s.theta);
    r.add("E1", s.eigenvalues[0]);
    r.add("E2", s.eigenvalues[1]);
    r.add("degenerate", s.degenerate);
    r.add("partition_function", partition_function(p, cfg.temperature));
    r.add("population_ground", pop.ground);
    r.add("population_excited", pop.excited);
    emit(cfg, r.render(cfg.resolved_format(Format::Text)));
    return kExitOk;
}

int cmd_cycle(const RunConfig& cfg)
{
    CycleInputs in;
    in.params = cfg.params();
    in.temperature = cfg.temperature;
    in.a = cfg.a;
    in.b = cfg.b;
    const StrokeLedger matrix = run_cycle_matrix(in);
    const StrokeLedger closed = run_cycle_closed_form(in);
    const double discrepancy = ledger_discrepancy(matrix, closed);

    std::ostringstream os;
    const Format f = cfg.resolved_format(Format::Text);
    if (f == Format::Json) {
        json doc = {{"schema", io::kSchemaVersion},
                    {"inputs",
                     {{"epsilon", cfg.epsilon},
                      {"tau", cfg.tau},
                      {"temperature", cfg.temperature},
                      {"a", cfg.a},
                      {"b", cfg.b}}},
                    {"matrix", io::to_json(matrix)},
                    {"closed_form", io::to_json(closed)},
                    {"max_discrepancy", discrepancy}};
        os << doc.dump(2) << '\n';
    } else {
        io::write_cycle_csv(os, matrix, closed);
        if (f == Format::Text)
            os << "max_discrepancy = " << human(discrepancy) << '\n';
    }
    emit(cfg, os.str());
    return kExitOk;
}

int cmd_classify(const RunConfig& cfg)
{
    const Branch branch = parse_branch(cfg.branch);
    const DotParams p = cfg.params();
    const double strength = branch == Branch::Engine ? cfg.a : cfg.b;
    const Classification c = classify(branch, p, cfg.temperature, strength, cfg.zero_tol);

    Report r;
    r.add("branch", std::string(to_string(branch)));
    r.add("epsilon", cfg.epsilon);
    r.add("tau", cfg.tau);
    r.add("temperature", cfg.temperature);
    r.add("a", constrained_a(branch, p, cfg.temperature, strength));
    r.add("b", branch == Branch::Engine ? strength : cfg.b);
    r.add("mode", std::string(to_string(c.mode)));
    r.add("Qh", c.heat.Qh);
    r.add("Qc", c.heat.Qc);
    r.add("W", c.heat.W);
    r.add("performance", c.performance);
    r.add("performance_kind", std::string(c.mode == Mode::Engine      ? "eta"
                                          : c.mode == Mode::Undefined ? "none"
                                                                      : "kappa"));
    r.add("raw_cop", c.raw_cop);
    if (branch == Branch::Engine) {
        const EngineThresholds t = engine_branch_thresholds(p, cfg.temperature);
        r.add("a_heater_max", t.a_heater_max);
        r.add("a_engine_min", t.a_engine_min);
        r.add("a_engine_max", t.a_engine_max);
    } else {
        const auto sign = branch == Branch::RefrigeratorPlus ? RefrigeratorSign::Plus
                                                             : RefrigeratorSign::Minus;
        const RefrigeratorThresholds t = refrigerator_branch_thresholds(p, cfg.temperature, sign);
        r.add("b_accel_max", t.b_accel_max);
        r.add("b_refrig_min", t.b_refrig_min);
    }
    if (!c.note.empty())
        r.add("note", c.note);
    emit(cfg, r.render(cfg.resolved_format(Format::Text)));
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg)
{
    GridSpec spec;
    spec.branch = parse_branch(cfg.branch);
    spec.strength = io::parse_axis(cfg.grid_strength);
    spec.epsilon = io::parse_axis(cfg.grid_epsilon);
    spec.temperature = cfg.temperature;
    spec.tau = cfg.tau;
    spec.zero_tol = cfg.zero_tol;
    spec.validate();

    const SweepResult result = run_sweep_parallel(spec, cfg.threads);
    const std::string payload = cfg.resolved_format(Format::Csv) == Format::Json
                                    ? io::to_json(result).dump(1) + "\n"
                                    : io::sweep_csv(result);
    emit(cfg, payload);

    // Data on stdout when no file is given, so the summary goes to stderr then.
    std::ostream& summary = cfg.output.empty() ? std::cerr : std::cout;
    for (const auto& [mode, fraction] : mode_area_fractions(result))
        summary << to_string(mode) << " " << human(fraction) << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg)
{
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.trials = cfg.trials;
    opt.corrupt_kraus = cfg.corrupt_kraus;
    const VerifyReport report = run_verification(opt);
    std::ostringstream os;
    report.print(os);
    emit(cfg, os.str());
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Measurement-driven double-quantum-dot thermal machine"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key = value file (flags override it)");

    RunConfig cfg;
    app.add_option("--epsilon", cfg.epsilon, "Detuning")->capture_default_str();
    app.add_option("--tau", cfg.tau, "Interdot tunneling amplitude")->capture_default_str();
    app.add_option("--temperature", cfg.temperature, "Bath temperature (k_B = 1)")->capture_default_str();
    app.add_option("--a", cfg.a, "Strength of measurement channel A")->capture_default_str();
    app.add_option("--b", cfg.b, "Strength of measurement channel B")->capture_default_str();
    app.add_option("--branch", cfg.branch, "Constrained branch")
        ->check(CLI::IsMember({"engine", "refrigerator-plus", "refrigerator-minus"}))
        ->capture_default_str();
    app.add_option("--grid-strength", cfg.grid_strength, "Strength axis min:max:steps")->capture_default_str();
    app.add_option("--grid-epsilon", cfg.grid_epsilon, "Detuning axis min:max:steps")->capture_default_str();
    app.add_option("--zero-tol", cfg.zero_tol, "Magnitude treated as zero when classifying")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", cfg.output, "Output path (default: standard output)");
    app.add_option("--seed", cfg.seed, "Seed for verify")->capture_default_str();
    app.add_option("--trials", cfg.trials, "Random trials per verify suite")->capture_default_str();
    app.add_option("--threads", cfg.threads, "OpenMP threads for sweep (0: runtime default)")->capture_default_str();
    app.add_flag("--corrupt-kraus", cfg.corrupt_kraus, "Negative control for verify")->group("");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Energy gap, mixing angle and Gibbs populations");
    auto* cycle_cmd = app.add_subcommand("cycle", "Stroke ledger from both computation paths");
    auto* classify_cmd = app.add_subcommand("classify", "Operational mode on a constrained branch");
    auto* sweep_cmd = app.add_subcommand("sweep", "Regime/performance map over (strength, epsilon)");
    auto* verify_cmd = app.add_subcommand("verify", "Run the randomized self-verification suites");
    for (auto* sub : {spectrum_cmd, cycle_cmd, classify_cmd, sweep_cmd, verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*spectrum_cmd)
            return cmd_spectrum(cfg);
        if (*cycle_cmd)
            return cmd_cycle(cfg);
        if (*classify_cmd)
            return cmd_classify(cfg);
        if (*sweep_cmd)
            return cmd_sweep(cfg);
        return cmd_verify(cfg);
    } catch (const IoError& e) {
        std::cerr << "mdqd: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "mdqd: " << e.what() << '\n';
        return kExitInput;
    }
}
