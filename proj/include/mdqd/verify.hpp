// verify.hpp: Seeded self-verification suites behind `mdqd verify`

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mdqd {

struct VerifyOptions {
    std::uint64_t seed{42};
    std::size_t trials{1000};
    // Negative control: zero out M4 of every Kraus set the channel suites use.
    bool corrupt_kraus{false};
};

struct SuiteResult {
    std::string name;
    double max_residual{0.0};
    double tolerance{0.0};
    bool passed{true};
    std::string failing_case; // full inputs of the first failure
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool passed() const;
    void print(std::ostream& os) const;
};

// Throws std::invalid_argument when trials == 0.
VerifyReport run_verification(const VerifyOptions& options);

} // namespace mdqd
