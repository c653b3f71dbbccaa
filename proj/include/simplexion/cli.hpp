#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simplexion/complex.hpp"
#include "simplexion/io.hpp"

namespace simplexion {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitResource = 3 };

// Default exact-size cap, overridden by the SIMPLEXION_CAP environment
// variable.
int default_cap();

struct VerifyOptions {
    int cap = 3000;
    std::uint64_t seed = 1;
    std::int64_t trials = 20;
};

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail" or "skipped:<reason>"
    Json witness = Json::object();
    double wall_ms = 0.0;
};

struct VerificationReport {
    std::string complex_id;
    std::vector<CheckResult> checks;
    bool passed() const;
};

const std::vector<std::string>& suite_names();
// Accepts "all" or a comma separated list of suite names.
std::vector<std::string> parse_suite(const std::string& spec);
VerificationReport run_verify(const Complex& g, const std::string& id, const std::vector<std::string>& suite,
                              const VerifyOptions& opt);
Json report_to_json(const VerificationReport& r, bool meta);

// Monte Carlo statistics for the random model next to the exact formulas.
Json random_statistics(int n, double p, std::int64_t trials, std::uint64_t seed);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplexion
