#include <doctest.h>

#include <charconv>
#include <clocale>
#include <cmath>
#include <sstream>
#include <string>

#include "mdqd/io.hpp"
#include "support/oracles.hpp"

using namespace mdqd;

namespace {

std::size_t significant_digits(const std::string& s)
{
    const std::string mantissa = s.substr(0, s.find('e'));
    std::size_t n = 0;
    for (char ch : mantissa)
        n += (ch >= '0' && ch <= '9');
    return n;
}

std::size_t count_lines(const std::string& s)
{
    std::size_t n = 0;
    for (char ch : s)
        n += ch == '\n';
    return n;
}

} // namespace

TEST_CASE("format_number round-trips with at least 12 significant digits")
{
    testing::Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.normal() * std::pow(10.0, rng.uniform(-20, 20));
        const std::string s = io::format_number(x);
        REQUIRE(s.find(',') == std::string::npos);
        REQUIRE(significant_digits(s) >= 12);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(back == x);
    }
    CHECK(io::format_number(0.5) == "5.0000000000000000e-01");
}

TEST_CASE("format_number ignores the C locale")
{
    const std::string before = io::format_number(1.25);
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
        CHECK(io::format_number(1.25) == before);
        std::setlocale(LC_NUMERIC, "C");
    }
    CHECK(before.find('.') != std::string::npos);
}

TEST_CASE("parse_axis")
{
    const Axis a = io::parse_axis("0.1:3:201");
    CHECK(a.min == 0.1);
    CHECK(a.max == 3.0);
    CHECK(a.steps == 201);
    CHECK(io::parse_axis("-1e-3:2.5e0:2").min == -1e-3);
    for (const char* bad : {"", "0:1", "0:1:2:3", "a:1:2", "0:1:x", "0:1:-3", "0:1:2.5", " 0:1:3"})
        CHECK_THROWS_AS(io::parse_axis(bad), std::invalid_argument);
}

TEST_CASE("sweep CSV layout")
{
    GridSpec s;
    s.branch = Branch::RefrigeratorMinus;
    s.strength = {0.0, 1.0, 2};
    s.epsilon = {0.5, 1.0, 2};
    s.tau = 0.0;
    const std::string csv = io::sweep_csv(run_sweep(s));
    CHECK(csv.rfind("strength,epsilon,mode,performance,Qh,Qc,W\n", 0) == 0);
    CHECK(count_lines(csv) == 5);

    // Undefined cells carry an empty performance field.
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        CHECK(line.find(",undefined,,") != std::string::npos);
    }
}

TEST_CASE("sweep JSON document")
{
    GridSpec s;
    s.branch = Branch::Engine;
    s.strength = {0.0, 1.0, 5};
    s.epsilon = {0.5, 1.0, 3};
    const auto doc = io::to_json(run_sweep(s));
    CHECK(doc["schema"] == 1);
    CHECK(doc["spec"]["branch"] == "engine");
    CHECK(doc["spec"]["strength_axis"]["steps"] == 5);
    CHECK(doc["cells"].size() == 15);
    CHECK(doc["cells"][2]["mode"] == "undefined"); // a = 0.5 sits on W = 0
    CHECK(doc["cells"][2]["performance"].is_null());
    double total = 0.0;
    for (const auto& [k, v] : doc["summary"]["fractions"].items())
        total += v.get<double>();
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("cycle CSV has matrix, closed-form and difference rows")
{
    const CycleInputs in{{1.0, 0.0}, 1.0, 0.7, 0.7};
    std::ostringstream os;
    io::write_cycle_csv(os, run_cycle_matrix(in), run_cycle_closed_form(in));
    const std::string s = os.str();
    CHECK(s.rfind("path,dU1,dU2,dU3,dS1,dS2,dS3\nmatrix,", 0) == 0);
    CHECK(s.find("\nclosed_form,") != std::string::npos);
    CHECK(s.find("\nabs_difference,") != std::string::npos);
}

TEST_CASE("classification JSON")
{
    const auto j = io::to_json(classify(Branch::Engine, {1, 0}, 1, 0.7));
    CHECK(j["mode"] == "engine");
    CHECK(j["performance_kind"] == "eta");
    CHECK(j["raw_cop"].is_null());
}
