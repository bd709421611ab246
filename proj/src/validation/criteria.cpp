#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "kgscat/errors.hpp"
#include "kgscat/oracle.hpp"
#include "kgscat/published.hpp"
#include "kgscat/scattering.hpp"
#include "kgscat/spectra.hpp"
#include "kgscat/validation.hpp"

namespace kgscat::validation {

namespace {

using model::Kinematics;
using model::PotentialKind;
using model::PotentialSpec;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
constexpr PotentialKind kKinds[] = {PotentialKind::Varshni, PotentialKind::Hellmann,
                                    PotentialKind::VarshniShukla};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Check check(std::string name, bool passed, std::string measured) {
    return {std::move(name), passed, std::move(measured)};
}

// Errors inside a check are failures with the message as the measurement.
template <class F>
void guarded(std::vector<Check>& out, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        out.push_back(check(name, false, e.what()));
    }
}

std::vector<Check> free_particle_identity() {
    std::vector<Check> out;
    const auto kin = Kinematics::relativistic(1.0, 2.0);
    for (double beta : {0.2, 0.5, 1.0}) {
        const std::string name = fmt("free l=0 beta=%g", beta);
        guarded(out, name, [&] {
            const PotentialSpec spec(PotentialKind::Varshni, 0.0, 0.0, beta);
            constexpr int reps = 100;
            double delta = 0.0;
            const auto t0 = Clock::now();
            for (int i = 0; i < reps; ++i)
                delta = scattering::phase_shift(spec, kin, 0).delta;
            const double per_call = seconds_since(t0) / reps;
            out.push_back(check(name, std::abs(delta) < 1e-10 && per_call < 1e-3,
                                fmt("|delta| = %.3g, %.3g ms per call", std::abs(delta),
                                    per_call * 1e3)));
        });
    }
    return out;
}

std::vector<Check> structural_invariants() {
    std::vector<Check> out;
    const auto add = [&](const published::InvariantCheck& inv) {
        out.push_back(check(inv.name, inv.passed,
                            inv.detail + fmt(" (tolerance %.0e)", inv.tolerance)));
    };
    const double b_values[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
    for (auto mode : {model::Mode::Relativistic, model::Mode::NonRelativistic}) {
        for (int l = 0; l <= 3; ++l) {
            guarded(out, "varshni b-independence", [&] {
                add(published::varshni_b_independence(mode, 0.2, 1.0, 1.0, 1.0, l, b_values));
            });
            guarded(out, "free coincidence",
                    [&] { add(published::free_coincidence(mode, 0.2, 1.0, 1.0, 1.0, l)); });
        }
    }
    const double betas[] = {0.2, 0.4, 0.6, 0.8, 1.0};
    for (int l : {0, 1})
        guarded(out, "varshni-shukla beta-independence",
                [&] { add(published::vsp_beta_independence(1.0, 1.0, l, betas)); });
    return out;
}

std::vector<Check> differential_oracle() {
    std::vector<Check> out;
    const auto kin = Kinematics::relativistic(1.0, 2.0);
    for (PotentialKind kind : kKinds) {
        for (double a : {0.0, 0.5}) {
            if (kind == PotentialKind::VarshniShukla && a != 0.0)
                continue;
            for (int l = 0; l <= 2; ++l) {
                const std::string name =
                    fmt("%s a=%g b=1 beta=0.3 l=%d", model::to_string(kind), a, l);
                guarded(out, name, [&] {
                    const PotentialSpec spec(kind, a, 1.0, 0.3);
                    const auto t0 = Clock::now();
                    const double analytic = scattering::phase_shift(spec, kin, l).delta;
                    const auto numeric = oracle::numeric_phase_shift(spec, kin, l);
                    const double dt = seconds_since(t0);
                    const double d = oracle::circle_distance(analytic, numeric.delta_numeric, kPi);
                    out.push_back(check(name, d < 1e-3 && dt < 1.0,
                                        fmt("|delta - delta_numeric| mod pi = %.3g, %.3g s", d,
                                            dt)));
                });
            }
        }
    }
    return out;
}

std::vector<Check> coulomb_limit() {
    std::vector<Check> out;
    guarded(out, "coulomb limit", [&] {
        const auto error = [](double beta) {
            return std::abs(
                spectra::nr_energy({PotentialKind::Hellmann, 1.0, 0.0, beta}, 1.0, 1.0, 0, 0) +
                0.5);
        };
        const double e3 = error(1e-3);
        const double e4 = error(1e-4);
        const double ratio = e3 / e4;
        out.push_back(check("beta=1e-3", e3 < 2e-3, fmt("|E + 1/2| = %.4g", e3)));
        out.push_back(check("beta=1e-4", e4 < 2e-4, fmt("|E + 1/2| = %.4g", e4)));
        out.push_back(check("first-order ratio", ratio >= 8.0 && ratio <= 12.0,
                            fmt("err(1e-3)/err(1e-4) = %.4f", ratio)));
    });
    return out;
}

std::vector<Check> shooting_vs_closed_form() {
    std::vector<Check> out;
    const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.2);
    const auto kin = Kinematics::non_relativistic(1.0, 0.0);
    const auto t0 = Clock::now();
    for (auto [n, l] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}}) {
        const std::string name = fmt("n=%d l=%d", n, l);
        guarded(out, name, [&] {
            // Window from the threshold alone, independent of the closed form.
            const double k2_at_zero = model::k_squared(spec, kin, l);
            const double threshold = -k2_at_zero / (2.0 * kin.mass() / (kin.hbar() * kin.hbar()));
            const spectra::EnergyWindow window{threshold - 5.0, threshold - 1e-3};
            const double closed = spectra::nr_energy(spec, 1.0, 1.0, l, n);
            const double shot = oracle::shoot_bound_state(spec, kin, l, window, n).E;
            const double diff = std::abs(closed - shot);
            out.push_back(check(name, diff < 1e-6,
                                fmt("closed %.10f, shooting %.10f, diff %.3g", closed, shot,
                                    diff)));
        });
    }
    const double total = seconds_since(t0);
    out.push_back(check("total time", total < 10.0, fmt("%.3g s", total)));
    return out;
}

double rel_ground_state(const PotentialSpec& spec, double mass) {
    // The pole condition also has a root near E = -M; the level continuous
    // with the non-relativistic one is the largest root.
    const auto levels = spectra::solve_rel_levels(spec, mass, 0, 0);
    if (levels.empty())
        throw NoRootError("no relativistic n=0 level");
    return levels.back().E;
}

std::vector<Check> nonrelativistic_limit() {
    std::vector<Check> out;
    for (PotentialKind kind : kKinds) {
        const std::string name = model::to_string(kind);
        guarded(out, name, [&] {
            const double a = kind == PotentialKind::VarshniShukla ? 0.0 : 0.5;
            const PotentialSpec spec(kind, a, 1.0, 0.1);
            double gap[2];
            int i = 0;
            for (double mass : {50.0, 100.0}) {
                const double rel = rel_ground_state(spec, mass) - mass;
                gap[i++] = std::abs(rel - spectra::nr_energy(spec, mass, 1.0, 0, 0));
            }
            const double ratio = gap[1] / gap[0];
            out.push_back(check(name, ratio >= 0.3 && ratio <= 0.7,
                                fmt("g(50) = %.6g, g(100) = %.6g, g(100)/g(50) = %.4f", gap[0],
                                    gap[1], ratio)));
        });
    }
    return out;
}

std::vector<Check> wavefunction_residual() {
    std::vector<Check> out;
    std::vector<double> r;
    for (int i = 0; i <= 9900; ++i)
        r.push_back(0.1 + 1e-3 * i);
    const auto kin = Kinematics::relativistic(1.0, 2.0);
    for (PotentialKind kind : kKinds) {
        const std::string name = model::to_string(kind);
        guarded(out, name, [&] {
            const double a = kind == PotentialKind::VarshniShukla ? 0.0 : 0.5;
            const PotentialSpec spec(kind, a, 1.0, 0.3);
            const auto samples = scattering::radial_wavefunction(spec, kin, 1, r);
            const double res = oracle::wavefunction_ode_residual(spec, kin, 1, samples);
            out.push_back(check(name + " a=" + fmt("%g", a) + " b=1 beta=0.3 l=1", res < 1e-6,
                                fmt("relative residual %.3g", res)));
        });
    }
    return out;
}

std::vector<Check> specfun_accuracy() {
    std::vector<Check> out;
    guarded(out, "log_gamma vs series", [&] {
        std::mt19937_64 rng(20240607);
        std::uniform_real_distribution<double> radius(0.0, 1.0);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        double worst = 0.0;
        Complex worst_z;
        int count = 0;
        while (count < 100) {
            const Complex z = std::polar(20.0 * std::sqrt(radius(rng)), angle(rng));
            // stay off the cut and away from the poles on it
            if (std::abs(z) < 0.05 || (z.real() < 0.5 && std::abs(z.imag()) < 0.05))
                continue;
            const Complex ref = reference_log_gamma(z);
            const double rel = std::abs(specfun::log_gamma(z) - ref) / std::abs(ref);
            if (rel > worst) {
                worst = rel;
                worst_z = z;
            }
            ++count;
        }
        out.push_back(check("log_gamma vs series at 100 random points", worst < 1e-10,
                            fmt("max relative error %.3g at z = %.4f%+.4fi", worst,
                                worst_z.real(), worst_z.imag())));
    });
    guarded(out, "reflection", [&] {
        double worst = 0.0;
        for (double y : {0.5, 1.0, 2.0, 5.0}) {
            const double lhs = std::exp(2.0 * specfun::log_gamma({0.0, y}).real());
            const double rhs = kPi / (y * std::sinh(kPi * y));
            worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        }
        out.push_back(check("|Gamma(iy)|^2 = pi/(y sinh(pi y)), y in {0.5,1,2,5}", worst < 1e-10,
                            fmt("max relative error %.3g", worst)));
    });
    return out;
}

std::vector<Check> reproduction_report() {
    std::vector<Check> out;
    for (int id = 1; id <= published::kTableCount; ++id) {
        const std::string name = fmt("table %d", id);
        guarded(out, name, [&] {
            std::size_t entries = 0;
            std::size_t unflagged_degenerate = 0;
            std::string counts;
            for (auto conv : {specfun::ArgConvention::PrincipalLogGamma,
                              specfun::ArgConvention::WrappedArg}) {
                const auto report = published::compare_table(id, conv);
                entries = report.rows.size();
                for (const auto& row : report.rows) {
                    const auto& e = row.entry;
                    const bool k_zero = model::k_squared(e.potential(), e.kinematics(), e.l) == 0.0;
                    if (k_zero && row.status != published::EntryStatus::Degenerate)
                        ++unflagged_degenerate;
                }
                counts += fmt(" %s: match %zu wrap %zu mismatch %zu degenerate %zu pole %zu "
                              "undefined %zu;",
                              specfun::to_string(conv), report.count(published::EntryStatus::Match),
                              report.count(published::EntryStatus::WrapMatch),
                              report.count(published::EntryStatus::Mismatch),
                              report.count(published::EntryStatus::Degenerate),
                              report.count(published::EntryStatus::Pole),
                              report.count(published::EntryStatus::Undefined));
            }
            const auto invariants = published::structural_invariants(id);
            const bool invariants_ok =
                std::all_of(invariants.begin(), invariants.end(),
                            [](const auto& inv) { return inv.passed; });
            const bool complete = entries == published::table_entries(id).size();
            out.push_back(check(name, complete && unflagged_degenerate == 0 && invariants_ok,
                                fmt("%zu entries,", entries) + counts +
                                    fmt(" invariants %s", invariants_ok ? "hold" : "FAIL")));
        });
    }
    return out;
}

struct Criterion {
    const char* title;
    std::vector<Check> (*run)();
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"free-particle identity", free_particle_identity},
    {"structural table invariants", structural_invariants},
    {"differential oracle", differential_oracle},
    {"Coulomb limit", coulomb_limit},
    {"closed form vs shooting", shooting_vs_closed_form},
    {"relativistic to non-relativistic limit", nonrelativistic_limit},
    {"wavefunction residual", wavefunction_residual},
    {"specfun accuracy", specfun_accuracy},
    {"reproduction report", reproduction_report},
};

void check_id(int id) {
    if (id < 1 || id > kCriterionCount)
        throw DomainError(fmt("criterion id must be in 1..%d, got %d", kCriterionCount, id));
}

} // namespace

const char* to_string(Suite suite) noexcept {
    switch (suite) {
    case Suite::Specfun: return "specfun";
    case Suite::Oracle: return "oracle";
    case Suite::Spectra: return "spectra";
    case Suite::All: return "all";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    for (Suite s : {Suite::Specfun, Suite::Oracle, Suite::Spectra, Suite::All})
        if (name == to_string(s))
            return s;
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

bool CriterionResult::passed() const noexcept {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string CriterionResult::summary() const {
    std::string out;
    const bool ok = passed();
    for (const Check& c : checks) {
        if (ok || !c.passed)
            out += (out.empty() ? "" : "; ") + c.name + ": " + c.measured;
    }
    return out;
}

std::vector<int> suite_criteria(Suite suite) {
    switch (suite) {
    case Suite::Specfun: return {1, 2, 8};
    case Suite::Oracle: return {3, 7};
    case Suite::Spectra: return {4, 5, 6};
    case Suite::All: return {1, 2, 3, 4, 5, 6, 7, 8, 9};
    }
    return {};
}

std::string criterion_title(int id) {
    check_id(id);
    return kCriteria[id - 1].title;
}

CriterionResult run_criterion(int id) {
    check_id(id);
    CriterionResult result;
    result.id = id;
    result.title = kCriteria[id - 1].title;
    const auto t0 = Clock::now();
    result.checks = kCriteria[id - 1].run();
    result.seconds = seconds_since(t0);
    return result;
}

} // namespace kgscat::validation
