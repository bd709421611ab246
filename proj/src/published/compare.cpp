#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kgscat/errors.hpp"
#include "kgscat/published.hpp"
#include "kgscat/scattering.hpp"

namespace kgscat::published {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double circle_diff(double x, double y) {
    double d = std::fmod(x - y, kTwoPi);
    if (d < 0.0)
        d += kTwoPi;
    return std::min(d, kTwoPi - d);
}

model::Kinematics make_kin(Mode mode, double energy, double mass, double hbar) {
    return mode == Mode::Relativistic ? model::Kinematics::relativistic(mass, energy)
                                      : model::Kinematics::non_relativistic(mass, energy, hbar);
}

// nullopt for a degenerate (k = 0) channel.
std::optional<double> delta_or_degenerate(const model::PotentialSpec& spec,
                                          const model::Kinematics& kin, int l,
                                          ArgConvention conv) {
    try {
        return scattering::phase_shift(spec, kin, l, conv).delta;
    } catch (const DegenerateChannelError&) {
        return std::nullopt;
    }
}

InvariantCheck spread_check(std::string name, const std::vector<std::optional<double>>& values,
                            double tol) {
    InvariantCheck check;
    check.name = std::move(name);
    check.tolerance = tol;
    const auto degenerate = static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [](const auto& v) { return !v; }));
    if (degenerate == values.size()) {
        check.passed = true;
        check.detail = "degenerate (k = 0) at every point";
        return check;
    }
    if (degenerate > 0) {
        check.passed = false;
        check.spread = std::numeric_limits<double>::infinity();
        check.detail = "degenerate at some points only";
        return check;
    }
    double lo = *values.front();
    double hi = lo;
    for (const auto& v : values) {
        lo = std::min(lo, *v);
        hi = std::max(hi, *v);
    }
    check.spread = hi - lo;
    check.passed = check.spread < tol;
    std::ostringstream os;
    os.precision(9);
    os << "delta = " << lo << ", spread " << check.spread;
    check.detail = os.str();
    return check;
}

std::string mode_label(Mode mode) { return model::to_string(mode); }

} // namespace

const char* to_string(EntryStatus status) noexcept {
    switch (status) {
    case EntryStatus::Match: return "match";
    case EntryStatus::WrapMatch: return "wrap_match";
    case EntryStatus::Mismatch: return "mismatch";
    case EntryStatus::Degenerate: return "degenerate";
    case EntryStatus::Pole: return "pole";
    case EntryStatus::Undefined: return "undefined";
    }
    return "?";
}

std::size_t ComparisonReport::count(EntryStatus status) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [status](const ComparisonRow& r) { return r.status == status; }));
}

ComparisonReport compare_table(int id, ArgConvention conv) {
    ComparisonReport report;
    report.table_id = id;
    report.convention = conv;
    for (const TableEntry& e : table_entries(id)) {
        ComparisonRow row;
        row.entry = e;
        row.abs_diff = kNaN;
        row.circle_diff = kNaN;
        try {
            row.below_threshold = model::k_squared(e.potential(), e.kinematics(), e.l) < 0.0;
            const auto rec = scattering::phase_shift(e.potential(), e.kinematics(), e.l, conv);
            row.computed = rec.delta;
            row.abs_diff = std::abs(rec.delta - e.delta);
            row.circle_diff = circle_diff(rec.delta, e.delta);
            if (row.abs_diff < kMatchTolerance)
                row.status = EntryStatus::Match;
            else if (row.circle_diff < kMatchTolerance)
                row.status = EntryStatus::WrapMatch;
            else
                row.status = EntryStatus::Mismatch;
        } catch (const DegenerateChannelError&) {
            row.status = EntryStatus::Degenerate;
            row.note = "k = 0";
        } catch (const PoleError& err) {
            row.status = EntryStatus::Pole;
            row.note = err.what();
        } catch (const Error& err) {
            row.status = EntryStatus::Undefined;
            row.note = err.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

InvariantCheck varshni_b_independence(Mode mode, double beta, double energy, double mass,
                                      double hbar, int l, std::span<const double> b_values) {
    const auto kin = make_kin(mode, energy, mass, hbar);
    std::vector<std::optional<double>> values;
    for (double b : b_values)
        values.push_back(delta_or_degenerate({PotentialKind::Varshni, 0.0, b, beta}, kin, l,
                                             ArgConvention::PrincipalLogGamma));
    return spread_check("varshni b-independence at a = 0 (" + mode_label(mode) +
                            ", l = " + std::to_string(l) + ")",
                        values, 1e-12);
}

InvariantCheck free_coincidence(Mode mode, double beta, double energy, double mass, double hbar,
                                int l) {
    const auto kin = make_kin(mode, energy, mass, hbar);
    std::vector<std::optional<double>> values;
    for (PotentialKind kind :
         {PotentialKind::Varshni, PotentialKind::Hellmann, PotentialKind::VarshniShukla})
        values.push_back(delta_or_degenerate({kind, 0.0, 0.0, beta}, kin, l,
                                             ArgConvention::PrincipalLogGamma));
    return spread_check("three-potential coincidence at a = b = 0 (" + mode_label(mode) +
                            ", l = " + std::to_string(l) + ")",
                        values, 1e-12);
}

InvariantCheck vsp_beta_independence(double mass, double b, int l,
                                     std::span<const double> beta_values, ArgConvention conv) {
    const auto kin = model::Kinematics::relativistic(mass, mass);
    std::vector<std::optional<double>> values;
    for (double beta : beta_values)
        values.push_back(
            delta_or_degenerate({PotentialKind::VarshniShukla, 0.0, b, beta}, kin, l, conv));
    return spread_check("varshni-shukla beta-independence at E = M (l = " + std::to_string(l) +
                            ")",
                        values, 1e-9);
}

std::vector<InvariantCheck> structural_invariants(int id) {
    const TableSpec& spec = table_spec(id);
    std::vector<double> sweep_values;
    for (const TableEntry& e : table_entries(id))
        if (e.l == 0 && e.kind == spec.columns.front())
            sweep_values.push_back(e.sweep_value);

    std::vector<InvariantCheck> checks;
    for (int l = 0; l <= 3; ++l) {
        if (spec.sweep == SweepVar::B && spec.a == 0.0) {
            checks.push_back(varshni_b_independence(spec.mode, spec.beta, spec.energy, spec.mass,
                                                    spec.hbar, l, sweep_values));
            checks.push_back(
                free_coincidence(spec.mode, spec.beta, spec.energy, spec.mass, spec.hbar, l));
        }
        const bool has_vsp = std::find(spec.columns.begin(), spec.columns.end(),
                                       PotentialKind::VarshniShukla) != spec.columns.end();
        if (spec.sweep == SweepVar::Beta && spec.mode == Mode::Relativistic && has_vsp &&
            spec.energy == spec.mass)
            checks.push_back(vsp_beta_independence(spec.mass, spec.b, l, sweep_values));
    }
    return checks;
}

} // namespace kgscat::published
