#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgscat/model.hpp"
#include "kgscat/specfun.hpp"

// Published phase-shift tables embedded verbatim, plus a harness that
// recomputes every entry and classifies the agreement. The tables are a
// report, not a gate: only the analytically forced structural invariants are
// pass/fail.
namespace kgscat::published {

using model::Mode;
using model::PotentialKind;
using specfun::ArgConvention;

enum class SweepVar { Beta, B };
const char* to_string(SweepVar var) noexcept;

constexpr int kTableCount = 6;

/// Fixed parameters of one table. The swept variable's fixed value is unused.
struct TableSpec {
    int id = 0;
    Mode mode = Mode::Relativistic;
    SweepVar sweep = SweepVar::Beta;
    double a = 0.0;
    double b = 0.0;
    double beta = 0.0;
    double energy = 0.0;
    double mass = 0.0; // M or mu
    double hbar = 1.0;
    std::vector<PotentialKind> columns;
    std::string caption;
};

struct TableEntry {
    int table_id = 0;
    PotentialKind kind = PotentialKind::Varshni;
    Mode mode = Mode::Relativistic;
    int l = 0;
    SweepVar sweep = SweepVar::Beta;
    double sweep_value = 0.0;
    double a = 0.0;
    double b = 0.0;
    double beta = 0.0;
    double energy = 0.0;
    double mass = 0.0;
    double hbar = 1.0;
    double delta = 0.0;
    std::string printed; // the digits exactly as published
    bool coincidence = false; // parenthesized a = b = 0 rows

    // Potential and kinematics this entry was tabulated for. Varshni-Shukla
    // has no a, so its columns are evaluated with a = 0.
    model::PotentialSpec potential() const;
    model::Kinematics kinematics() const;
};

// DomainError for ids outside 1..6.
const TableSpec& table_spec(int id);
const std::vector<TableEntry>& table_entries(int id);
// All six tables in order.
std::vector<TableEntry> all_entries();

/// One line per entry under a fixed header; the published digits are
/// written back unchanged, so parse_csv(serialize_csv(x)) serializes to the
/// same bytes.
std::string serialize_csv(std::span<const TableEntry> entries);
// DomainError on malformed input.
std::vector<TableEntry> parse_csv(std::string_view text);

enum class EntryStatus { Match, WrapMatch, Mismatch, Degenerate, Pole, Undefined };
const char* to_string(EntryStatus status) noexcept;

constexpr double kMatchTolerance = 1e-3;

struct ComparisonRow {
    TableEntry entry;
    std::optional<double> computed;
    double abs_diff = 0.0;      // NaN without a computed value
    double circle_diff = 0.0;   // distance modulo 2 pi, NaN without a value
    EntryStatus status = EntryStatus::Mismatch;
    bool below_threshold = false;
    std::string note;
};

struct ComparisonReport {
    int table_id = 0;
    ArgConvention convention = ArgConvention::PrincipalLogGamma;
    std::vector<ComparisonRow> rows;

    std::size_t count(EntryStatus status) const noexcept;
};

/// Recompute every entry of a table. Degenerate channels (k = 0), Gamma
/// poles and complex Varshni-Shukla indices are recorded, never raised.
ComparisonReport compare_table(int id, ArgConvention conv);

struct InvariantCheck {
    std::string name;
    bool passed = false;
    double spread = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

// Varshni delta at a = 0 is the same for every b in values.
InvariantCheck varshni_b_independence(Mode mode, double beta, double energy, double mass,
                                      double hbar, int l, std::span<const double> b_values);
// All three potentials agree at a = b = 0.
InvariantCheck free_coincidence(Mode mode, double beta, double energy, double mass, double hbar,
                                int l);
/// Relativistic Varshni-Shukla delta at E = M is the same for every beta.
/// Channels with k = 0 at every beta count as uniformly degenerate; a mix of
/// degenerate and regular channels fails.
InvariantCheck vsp_beta_independence(double mass, double b, int l,
                                     std::span<const double> beta_values,
                                     ArgConvention conv = ArgConvention::PrincipalLogGamma);

// The analytically forced invariants that a table's parameter set exhibits.
std::vector<InvariantCheck> structural_invariants(int id);

} // namespace kgscat::published
