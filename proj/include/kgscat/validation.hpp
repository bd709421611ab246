#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kgscat/specfun.hpp"

// Acceptance checks, grouped into suites. Each criterion bundles one or more
// measured checks; it passes when all of them do.
namespace kgscat::validation {

enum class Suite { Specfun, Oracle, Spectra, All };
const char* to_string(Suite suite) noexcept;
// DomainError for unknown names.
Suite parse_suite(std::string_view name);

constexpr int kCriterionCount = 9;

struct Check {
    std::string name;
    bool passed = false;
    std::string measured;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool passed() const noexcept;
    // Short summary of the failed checks, or of all checks when none failed.
    std::string summary() const;
};

std::vector<int> suite_criteria(Suite suite);
// DomainError for ids outside 1..9.
std::string criterion_title(int id);
CriterionResult run_criterion(int id);

/// log Gamma from the Weierstrass product, summed in long double,
///
///   -gamma z - log z + sum_{k <= N} [z/k - log(1 + z/k)] + tail(N),
///
/// with the tail from Euler-Maclaurin. Independent of specfun::log_gamma and
/// only meant as a slow reference for |z| up to a few tens.
Complex reference_log_gamma(Complex z, int terms = 2000);

} // namespace kgscat::validation
