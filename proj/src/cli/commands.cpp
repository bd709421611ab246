#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "kgscat/cli.hpp"
#include "kgscat/errors.hpp"
#include "kgscat/published.hpp"
#include "kgscat/scattering.hpp"
#include "kgscat/spectra.hpp"
#include "kgscat/validation.hpp"
#include "output.hpp"

namespace kgscat::cli {

namespace {

using model::Kinematics;
using model::PotentialSpec;
using specfun::ArgConvention;

// ---------------------------------------------------------------- helpers

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Csv; }

ArgConvention parse_convention(const std::string& s) {
    return s == "wrapped" ? ArgConvention::WrappedArg : ArgConvention::PrincipalLogGamma;
}

model::PotentialKind parse_kind(const std::string& s) {
    try {
        return model::parse_potential_kind(s);
    } catch (const DomainError&) {
        throw UsageError("unknown potential '" + s + "' (varshni, hellmann, varshni-shukla)");
    }
}

Kinematics make_kin(const std::string& mode, double mass, double energy, double hbar) {
    return mode == "nr" ? Kinematics::non_relativistic(mass, energy, hbar)
                        : Kinematics::relativistic(mass, energy);
}

std::string utc_stamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string paint(const std::string& s, bool ok, bool color) {
    if (!color)
        return s;
    return (ok ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
}

const char* reason_of(const Error& e) {
    if (dynamic_cast<const DegenerateChannelError*>(&e))
        return "degenerate";
    if (dynamic_cast<const PoleError*>(&e))
        return "pole";
    if (dynamic_cast<const ComplexIndexError*>(&e))
        return "complex_index";
    return "domain";
}

// Flags shared by the commands that take a potential and kinematics.
void add_physics_flags(CLI::App* sub, PhaseShiftJob& job, bool with_energy) {
    sub->add_option("--potential", job.potential, "varshni | hellmann | varshni-shukla");
    sub->add_option("--mode", job.mode, "rel | nr")->capture_default_str();
    sub->add_option("--a", job.a, "strength a (must be 0 for varshni-shukla)")
        ->capture_default_str();
    sub->add_option("--b", job.b, "strength b")->capture_default_str();
    sub->add_option("--beta", job.beta, "screening parameter, > 0");
    sub->add_option("--mass,--mu", job.mass, "M (rel) or mu (nr)");
    sub->add_option("--hbar", job.hbar, "hbar (nr only)")->capture_default_str();
    if (with_energy)
        sub->add_option("--energy", job.energy, "energy E");
}

void add_format_flag(CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

// ---------------------------------------------------------------- phase-shift

std::vector<std::string> phase_shift_columns(bool with_reason) {
    std::vector<std::string> cols = {"potential", "mode",     "l",     "a",
                                     "b",         "beta",     "mass_or_mu", "energy",
                                     "k_re",      "k_im",     "below_threshold", "delta",
                                     "convention"};
    if (with_reason)
        cols.push_back("reason");
    return cols;
}

void phase_shift_rows(const PhaseShiftJob& job, bool with_reason, RowWriter& writer) {
    validate(job);
    const auto kind = parse_kind(job.potential);
    const auto conv = parse_convention(job.convention);
    const std::vector<double> values =
        job.sweep ? sweep_values(*job.sweep) : std::vector<double>{0.0};

    for (int l : job.l) {
        for (double v : values) {
            double a = job.a, b = job.b;
            double beta = job.beta.value_or(0.0), energy = job.energy.value_or(0.0);
            if (job.sweep) {
                const std::string& var = job.sweep->var;
                (var == "a" ? a : var == "b" ? b : var == "beta" ? beta : energy) = v;
            }
            std::vector<Field> row = {std::string(model::to_string(kind)),
                                      job.mode,
                                      std::int64_t{l},
                                      a,
                                      b,
                                      beta,
                                      *job.mass,
                                      energy};
            try {
                const PotentialSpec spec(kind, a, b, beta);
                const Kinematics kin = make_kin(job.mode, *job.mass, energy, job.hbar);
                const double k2 = model::k_squared(spec, kin, l);
                const double k_abs = std::sqrt(std::abs(k2));
                row.push_back(k2 > 0.0 ? k_abs : 0.0);
                row.push_back(k2 < 0.0 ? k_abs : 0.0);
                row.push_back(k2 < 0.0);
                try {
                    row.push_back(scattering::phase_shift(spec, kin, l, conv).delta);
                    row.push_back(job.convention);
                    if (with_reason)
                        row.push_back(std::monostate{});
                } catch (const Error& e) {
                    if (!job.skip_degenerate || e.category() != Error::Category::Domain)
                        throw;
                    row.push_back(std::monostate{});
                    row.push_back(job.convention);
                    row.push_back(std::string(reason_of(e)));
                }
            } catch (const Error& e) {
                if (!job.skip_degenerate || e.category() != Error::Category::Domain ||
                    row.size() > 8)
                    throw;
                // invalid potential or kinematics at this sweep point
                row.resize(8);
                row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{},
                                       std::monostate{}, job.convention,
                                       std::string(reason_of(e))});
            }
            writer.add(std::move(row));
        }
    }
}

int emit_phase_shifts(const std::vector<PhaseShiftJob>& jobs, Format format, std::ostream& out) {
    bool with_reason = false;
    for (const auto& job : jobs)
        with_reason = with_reason || job.skip_degenerate;
    RowWriter writer(phase_shift_columns(with_reason));
    for (const auto& job : jobs)
        phase_shift_rows(job, with_reason, writer);
    writer.write(out, format);
    return kSuccess;
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
    PhaseShiftJob physics;
    int n_max = 0;
    std::optional<double> e_min;
    std::optional<double> e_max;
    std::string format = "csv";
};

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
    const PhaseShiftJob& p = args.physics;
    if (p.potential.empty())
        throw UsageError("--potential is required");
    if (!p.beta)
        throw UsageError("--beta is required");
    if (!p.mass)
        throw UsageError("--mass is required");
    if (p.mode != "rel" && p.mode != "nr")
        throw UsageError("--mode must be rel or nr");
    if (args.n_max < 0)
        throw UsageError("--n-max must be nonnegative");
    const PotentialSpec spec(parse_kind(p.potential), p.a, p.b, *p.beta);

    RowWriter writer({"potential", "mode", "n", "l", "E", "residual", "suspect_redundant"});
    std::optional<spectra::EnergyWindow> window;
    if (p.mode == "rel") {
        window = spectra::default_rel_window(spec, *p.mass);
        if (args.e_min)
            window->lo = *args.e_min;
        if (args.e_max)
            window->hi = *args.e_max;
        err << "note: relativistic energy window [" << format_number(window->lo) << ", "
            << format_number(window->hi) << "]\n";
    } else if (args.e_min || args.e_max) {
        throw UsageError("--e-min/--e-max apply to rel mode only");
    }

    for (int l : p.l) {
        if (l < 0)
            throw UsageError("l must be nonnegative");
        const auto levels = p.mode == "rel"
                                ? spectra::solve_rel_levels(spec, *p.mass, l, args.n_max, window)
                                : spectra::nr_levels(spec, *p.mass, p.hbar, l, args.n_max);
        for (const auto& lv : levels)
            writer.add({std::string(model::to_string(spec.kind())), p.mode, std::int64_t{lv.n},
                        std::int64_t{lv.l}, lv.E, lv.residual, lv.suspect_redundant});
    }
    writer.write(out, parse_format(args.format));
    return kSuccess;
}

// ---------------------------------------------------------------- wavefunction

struct WaveArgs {
    PhaseShiftJob physics;
    int l = 0;
    double r_max = 20.0;
    int samples = 200;
    std::string format = "csv";
};

int cmd_wavefunction(WaveArgs args, std::ostream& out) {
    args.physics.l = {args.l};
    validate(args.physics);
    if (!(args.r_max > 0.0))
        throw UsageError("--rmax must be positive");
    if (args.samples < 1)
        throw UsageError("--samples must be at least 1");
    const PhaseShiftJob& p = args.physics;
    const PotentialSpec spec(parse_kind(p.potential), p.a, p.b, *p.beta);
    const Kinematics kin = make_kin(p.mode, *p.mass, *p.energy, p.hbar);

    std::vector<double> r;
    for (int i = 1; i <= args.samples; ++i)
        r.push_back(args.r_max * i / args.samples);
    const auto samples = scattering::radial_wavefunction(spec, kin, args.l, r);

    RowWriter writer({"r", "u_re", "u_im"});
    for (const auto& s : samples)
        writer.add({s.r, s.u.real(), s.u.imag()});
    writer.write(out, parse_format(args.format));
    return kSuccess;
}

// ---------------------------------------------------------------- table

struct TableArgs {
    int id = 0;
    std::string convention = "both";
    std::string format = "csv";
    bool stamp = false;
};

std::vector<ArgConvention> table_conventions(const std::string& s) {
    if (s == "both")
        return {ArgConvention::PrincipalLogGamma, ArgConvention::WrappedArg};
    return {parse_convention(s)};
}

Field optional_number(double x) {
    if (std::isnan(x))
        return std::monostate{};
    return x;
}

std::string summary_line(const published::ComparisonReport& r) {
    using published::EntryStatus;
    std::ostringstream os;
    os << "summary " << specfun::to_string(r.convention) << ": " << r.rows.size() << " entries";
    for (auto s : {EntryStatus::Match, EntryStatus::WrapMatch, EntryStatus::Mismatch,
                   EntryStatus::Degenerate, EntryStatus::Pole, EntryStatus::Undefined})
        os << ", " << published::to_string(s) << " " << r.count(s);
    return os.str();
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width)
        s.insert(0, width - s.size(), ' ');
    return s;
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err, bool color) {
    const published::TableSpec& spec = published::table_spec(args.id);
    std::vector<published::ComparisonReport> reports;
    for (auto conv : table_conventions(args.convention))
        reports.push_back(published::compare_table(args.id, conv));
    const auto invariants = published::structural_invariants(args.id);
    bool invariants_ok = true;
    for (const auto& inv : invariants)
        invariants_ok = invariants_ok && inv.passed;

    const bool text = args.format == "text";
    std::ostream& report_os = text ? out : err;
    const bool paint_report = color && text;
    report_os << "table " << args.id << ": " << spec.caption << '\n';
    if (args.stamp)
        report_os << "generated " << utc_stamp() << '\n';

    if (text) {
        out << pad("l", 2) << pad(published::to_string(spec.sweep), 7) << "  "
            << pad("potential", 15) << pad("convention", 11) << pad("published", 12)
            << pad("computed", 16) << pad("circle_diff", 13) << "  status\n";
        for (const auto& rep : reports) {
            for (const auto& row : rep.rows) {
                const auto& e = row.entry;
                out << pad(std::to_string(e.l), 2) << pad(format_number(e.sweep_value), 7) << "  "
                    << pad(model::to_string(e.kind), 15)
                    << pad(specfun::to_string(rep.convention), 11)
                    << pad((e.coincidence ? "(" + e.printed + ")" : e.printed), 12)
                    << pad(row.computed ? format_number(*row.computed) : "-", 16)
                    << pad(std::isnan(row.circle_diff) ? "-" : format_number(row.circle_diff), 13)
                    << "  " << published::to_string(row.status)
                    << (row.below_threshold ? " (below threshold)" : "")
                    << (row.note.empty() ? "" : " [" + row.note + "]") << '\n';
            }
        }
    } else {
        RowWriter writer({"table_id", "potential", "mode", "l", "sweep_var", "sweep_value",
                          "delta_published", "coincidence", "convention", "delta_computed",
                          "abs_diff", "circle_diff_mod_2pi", "status", "below_threshold",
                          "note"});
        for (const auto& rep : reports) {
            for (const auto& row : rep.rows) {
                const auto& e = row.entry;
                writer.add({std::int64_t{e.table_id}, std::string(model::to_string(e.kind)),
                            std::string(model::to_string(e.mode)), std::int64_t{e.l},
                            std::string(published::to_string(e.sweep)), e.sweep_value, e.delta,
                            e.coincidence, std::string(specfun::to_string(rep.convention)),
                            row.computed ? Field(*row.computed) : Field(std::monostate{}),
                            optional_number(row.abs_diff), optional_number(row.circle_diff),
                            std::string(published::to_string(row.status)), row.below_threshold,
                            row.note});
            }
        }
        writer.write(out, parse_format(args.format));
    }

    for (const auto& rep : reports)
        report_os << summary_line(rep) << '\n';
    for (const auto& inv : invariants)
        report_os << paint(inv.passed ? "PASS" : "FAIL", inv.passed, paint_report)
                  << " invariant " << inv.name << ": " << inv.detail << '\n';
    return invariants_ok ? kSuccess : kInvariantFailure;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& suite_name, bool stamp, std::ostream& out, bool color) {
    validation::Suite suite;
    try {
        suite = validation::parse_suite(suite_name);
    } catch (const DomainError&) {
        throw UsageError("--suite must be specfun, oracle, spectra or all");
    }
    out << "validation suite " << validation::to_string(suite) << '\n';
    if (stamp)
        out << "generated " << utc_stamp() << '\n';
    int passed = 0;
    const auto ids = validation::suite_criteria(suite);
    for (int id : ids) {
        const auto r = validation::run_criterion(id);
        passed += r.passed();
        char head[160];
        std::snprintf(head, sizeof head, " criterion %d (%s) [%.2f s]\n", r.id, r.title.c_str(),
                      r.seconds);
        out << paint(r.passed() ? "PASS" : "FAIL", r.passed(), color) << head;
        for (const auto& c : r.checks)
            out << "  " << paint(c.passed ? "pass" : "FAIL", c.passed, color) << ' ' << c.name
                << ": " << c.measured << '\n';
    }
    out << passed << '/' << ids.size() << " criteria passed\n";
    return passed == static_cast<int>(ids.size()) ? kSuccess : kInvariantFailure;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
    PhaseShiftJob physics;
    std::optional<std::string> figure;
    std::optional<std::string> job_path;
    std::string format = "csv";
};

int cmd_sweep(SweepArgs args, std::ostream& out) {
    const int sources = args.figure.has_value() + args.job_path.has_value();
    if (sources > 1)
        throw UsageError("give at most one of --figure and --job");
    std::vector<PhaseShiftJob> jobs;
    if (args.figure) {
        jobs = figure_preset(*args.figure);
        for (auto& j : jobs)
            j.convention = args.physics.convention;
    } else if (args.job_path) {
        std::ifstream in(*args.job_path);
        if (!in)
            throw UsageError("cannot read job file '" + *args.job_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        jobs = parse_job_json(buf.str());
    } else {
        if (!args.physics.sweep)
            throw UsageError("sweep needs --sweep, --figure or --job");
        jobs = {args.physics};
    }
    return emit_phase_shifts(jobs, parse_format(args.format), out);
}

// ---------------------------------------------------------------- dispatch

struct SweepFlags {
    std::optional<std::string> var;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    std::string spacing = "linear";
};

void add_sweep_flags(CLI::App* sub, SweepFlags& s) {
    sub->add_option("--sweep", s.var, "swept variable: beta | b | a | energy");
    sub->add_option("--start", s.start, "first sweep value");
    sub->add_option("--stop", s.stop, "last sweep value");
    sub->add_option("--count", s.count, "number of sweep points")->capture_default_str();
    sub->add_option("--spacing", s.spacing, "linear | log")->capture_default_str();
}

void apply_sweep(const SweepFlags& s, PhaseShiftJob& job) {
    if (s.var)
        job.sweep = SweepDef{*s.var, s.start, s.stop, s.count, s.spacing};
}

void add_convention_flag(CLI::App* sub, std::string& conv) {
    sub->add_option("--convention", conv, "principal | wrapped")
        ->check(CLI::IsMember({"principal", "wrapped"}))
        ->capture_default_str();
}

CLI::App* parsed_subcommand(CLI::App& app) {
    for (CLI::App* sub : app.get_subcommands({}))
        if (sub->parsed())
            return sub;
    return nullptr;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunOptions& options) {
    CLI::App app{"Partial-wave phase shifts, bound states and wave functions for the Varshni, "
                 "Hellmann and Varshni-Shukla potentials.",
                 "kgscat"};
    app.require_subcommand(1);
    app.fallthrough(false);

    PhaseShiftJob ps;
    SweepFlags ps_sweep;
    std::string ps_format = "csv";
    auto* phase = app.add_subcommand("phase-shift", "analytic phase shifts");
    add_physics_flags(phase, ps, true);
    phase->add_option("--l", ps.l, "angular momenta, comma separated")->delimiter(',');
    add_convention_flag(phase, ps.convention);
    add_format_flag(phase, ps_format);
    add_sweep_flags(phase, ps_sweep);
    phase->add_flag("--skip-degenerate", ps.skip_degenerate,
                    "emit k = 0 and pole points with an empty delta instead of failing");

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "bound-state energies");
    add_physics_flags(bound, bound_args.physics, false);
    bound->add_option("--l", bound_args.physics.l, "angular momenta, comma separated")
        ->delimiter(',');
    bound->add_option("--n-max", bound_args.n_max, "largest radial quantum number")
        ->capture_default_str();
    bound->add_option("--e-min", bound_args.e_min, "lower end of the rel energy window");
    bound->add_option("--e-max", bound_args.e_max, "upper end of the rel energy window");
    add_format_flag(bound, bound_args.format);

    WaveArgs wave_args;
    auto* wave = app.add_subcommand("wavefunction", "radial wave function samples");
    add_physics_flags(wave, wave_args.physics, true);
    wave->add_option("--l", wave_args.l, "angular momentum")->capture_default_str();
    wave->add_option("--rmax", wave_args.r_max, "largest radius")->capture_default_str();
    wave->add_option("--samples", wave_args.samples, "number of radii in (0, rmax]")
        ->capture_default_str();
    add_format_flag(wave, wave_args.format);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "reproduction report for a published table");
    table->add_option("--id", table_args.id, "table 1..6")->required()->check(
        CLI::Range(1, published::kTableCount));
    table->add_option("--convention", table_args.convention, "principal | wrapped | both")
        ->check(CLI::IsMember({"principal", "wrapped", "both"}))
        ->capture_default_str();
    table->add_option("--format", table_args.format, "csv | json | text")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
    table->add_flag("--stamp", table_args.stamp, "put a UTC timestamp in the report header");

    std::string suite = "all";
    bool validate_stamp = false;
    auto* validate_cmd = app.add_subcommand("validate", "run the acceptance checks");
    validate_cmd->add_option("--suite", suite, "specfun | oracle | spectra | all")
        ->capture_default_str();
    validate_cmd->add_flag("--stamp", validate_stamp, "put a UTC timestamp in the header");

    SweepArgs sweep_args;
    SweepFlags sw_sweep;
    auto* sweep = app.add_subcommand("sweep", "phase-shift curves over beta, b, a or energy");
    add_physics_flags(sweep, sweep_args.physics, true);
    sweep->add_option("--l", sweep_args.physics.l, "angular momenta, comma separated")
        ->delimiter(',');
    add_convention_flag(sweep, sweep_args.physics.convention);
    add_format_flag(sweep, sweep_args.format);
    add_sweep_flags(sweep, sw_sweep);
    sweep->add_flag("--skip-degenerate", sweep_args.physics.skip_degenerate,
                    "emit k = 0 and pole points with an empty delta instead of failing");
    sweep->add_option("--figure", sweep_args.figure, "preset: 1a..1f, 2a..2f, 3a..3d");
    sweep->add_option("--job", sweep_args.job_path, "JSON job file with one or more cases");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* sub = parsed_subcommand(app);
        out << (sub ? sub->help() : app.help());
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        const CLI::App* sub = parsed_subcommand(app);
        err << "error: " << e.what() << "\n\n" << (sub ? sub->help() : app.help());
        return kUsage;
    }

    CLI::App* used = parsed_subcommand(app);
    try {
        if (used == phase) {
            apply_sweep(ps_sweep, ps);
            return emit_phase_shifts({ps}, parse_format(ps_format), out);
        }
        if (used == bound)
            return cmd_bound(bound_args, out, err);
        if (used == wave)
            return cmd_wavefunction(wave_args, out);
        if (used == table)
            return cmd_table(table_args, out, err, options.color);
        if (used == validate_cmd)
            return cmd_validate(suite, validate_stamp, out, options.color);
        if (used == sweep) {
            apply_sweep(sw_sweep, sweep_args.physics);
            return cmd_sweep(sweep_args, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << (used ? used->help() : app.help());
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.category() == Error::Category::Domain ? kNumericDomain : kConvergence;
    }
    err << app.help();
    return kUsage;
}

} // namespace kgscat::cli
