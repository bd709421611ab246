#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Command-line front end. Everything except process setup lives here so the
// commands can be driven from tests with string streams.
namespace kgscat::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kNumericDomain = 2,
    kInvariantFailure = 3,
    kConvergence = 4,
};

// Bad flags, bad job files, inconsistent sweep definitions.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepDef {
    std::string var;               // beta, b, a or energy
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    std::string spacing = "linear"; // or log
};

/// One phase-shift case: a potential, kinematics, a list of l and an
/// optional sweep. The JSON job keys are these field names.
struct PhaseShiftJob {
    std::string potential;
    std::string mode = "rel";
    double a = 0.0;
    double b = 0.0;
    std::optional<double> beta;
    std::optional<double> mass; // M, or mu in nr mode
    double hbar = 1.0;
    std::optional<double> energy;
    std::vector<int> l{0};
    std::optional<SweepDef> sweep;
    std::string convention = "principal";
    bool skip_degenerate = false;
};

// UsageError when required values are missing or the sweep is inconsistent.
void validate(const PhaseShiftJob& job);

// Values of the swept variable; a single point without a sweep.
std::vector<double> sweep_values(const SweepDef& sweep);

/// Parse a job file: either an array of case objects or an object with a
/// "cases" array. Unknown keys are rejected. UsageError on any problem.
std::vector<PhaseShiftJob> parse_job_json(std::string_view text);

// Presets reproducing the curves behind the published figures ("1a".."3d").
std::vector<std::string> figure_names();
std::vector<PhaseShiftJob> figure_preset(std::string_view name);

struct RunOptions {
    bool color = false; // ANSI colors in text reports
};

/// Run one command line (without the program name). Data goes to out,
/// diagnostics and usage text to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunOptions& options = {});

} // namespace kgscat::cli
