#include <cmath>
#include <set>

#include "json.hpp"
#include "kgscat/cli.hpp"

namespace kgscat::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kSweepVars = {"beta", "b", "a", "energy"};

double number(const json& v, const std::string& key) {
    if (!v.is_number())
        throw UsageError("job key '" + key + "' must be a number");
    return v.get<double>();
}

std::string text(const json& v, const std::string& key) {
    if (!v.is_string())
        throw UsageError("job key '" + key + "' must be a string");
    return v.get<std::string>();
}

int integer(const json& v, const std::string& key) {
    if (!v.is_number_integer())
        throw UsageError("job key '" + key + "' must be an integer");
    return v.get<int>();
}

PhaseShiftJob parse_case(const json& obj) {
    if (!obj.is_object())
        throw UsageError("each job case must be a JSON object");
    PhaseShiftJob job;
    SweepDef sweep;
    bool has_sweep = false;
    bool has_mass = false;
    for (const auto& [key, v] : obj.items()) {
        if (key == "command") {
            const auto cmd = text(v, key);
            if (cmd != "phase-shift" && cmd != "sweep")
                throw UsageError("job command must be phase-shift or sweep, got '" + cmd + "'");
        } else if (key == "potential") {
            job.potential = text(v, key);
        } else if (key == "mode") {
            job.mode = text(v, key);
        } else if (key == "a") {
            job.a = number(v, key);
        } else if (key == "b") {
            job.b = number(v, key);
        } else if (key == "beta") {
            job.beta = number(v, key);
        } else if (key == "mass" || key == "mu") {
            if (has_mass)
                throw UsageError("give only one of 'mass' and 'mu'");
            has_mass = true;
            job.mass = number(v, key);
        } else if (key == "hbar") {
            job.hbar = number(v, key);
        } else if (key == "energy") {
            job.energy = number(v, key);
        } else if (key == "l") {
            job.l.clear();
            if (v.is_array()) {
                for (const auto& x : v)
                    job.l.push_back(integer(x, key));
            } else {
                job.l.push_back(integer(v, key));
            }
        } else if (key == "sweep") {
            sweep.var = text(v, key);
            has_sweep = true;
        } else if (key == "start") {
            sweep.start = number(v, key);
        } else if (key == "stop") {
            sweep.stop = number(v, key);
        } else if (key == "count") {
            sweep.count = integer(v, key);
        } else if (key == "spacing") {
            sweep.spacing = text(v, key);
        } else if (key == "convention") {
            job.convention = text(v, key);
        } else if (key == "skip_degenerate") {
            if (!v.is_boolean())
                throw UsageError("job key 'skip_degenerate' must be true or false");
            job.skip_degenerate = v.get<bool>();
        } else {
            throw UsageError("unknown job key '" + key + "'");
        }
    }
    if (has_sweep)
        job.sweep = sweep;
    validate(job);
    return job;
}

PhaseShiftJob preset(const char* potential, const char* mode, double a, double b, double beta,
                     SweepDef sweep) {
    PhaseShiftJob job;
    job.potential = potential;
    job.mode = mode;
    job.a = a;
    job.b = b;
    job.beta = beta;
    job.mass = 1.0;
    job.energy = 1.0;
    job.l = {0, 1, 2, 3};
    job.sweep = std::move(sweep);
    job.skip_degenerate = true;
    return job;
}

} // namespace

void validate(const PhaseShiftJob& job) {
    if (job.potential.empty())
        throw UsageError("potential is required");
    if (job.mode != "rel" && job.mode != "nr")
        throw UsageError("mode must be rel or nr, got '" + job.mode + "'");
    if (job.convention != "principal" && job.convention != "wrapped")
        throw UsageError("convention must be principal or wrapped, got '" + job.convention + "'");
    if (job.l.empty())
        throw UsageError("at least one l is required");
    for (int l : job.l)
        if (l < 0)
            throw UsageError("l must be nonnegative");

    const bool swept = job.sweep.has_value();
    const auto needs = [&](const std::optional<double>& v, const char* name) {
        if (!v && !(swept && job.sweep->var == name))
            throw UsageError(std::string(name) + " is required");
    };
    needs(job.beta, "beta");
    needs(job.energy, "energy");
    if (!job.mass)
        throw UsageError("mass is required");

    if (swept) {
        const SweepDef& s = *job.sweep;
        if (!kSweepVars.contains(s.var))
            throw UsageError("sweep variable must be beta, b, a or energy, got '" + s.var + "'");
        if (s.count < 1)
            throw UsageError("sweep count must be at least 1");
        if (s.count > 1 && !(s.start < s.stop))
            throw UsageError("sweep needs start < stop when count > 1");
        if (s.spacing != "linear" && s.spacing != "log")
            throw UsageError("sweep spacing must be linear or log");
        if (s.spacing == "log" && !(s.start > 0.0))
            throw UsageError("log spacing needs a positive start");
    }
}

std::vector<double> sweep_values(const SweepDef& s) {
    std::vector<double> values;
    if (s.count == 1)
        return {s.start};
    for (int i = 0; i < s.count; ++i) {
        const double t = static_cast<double>(i) / (s.count - 1);
        if (i == s.count - 1)
            values.push_back(s.stop);
        else if (s.spacing == "log")
            values.push_back(s.start * std::pow(s.stop / s.start, t));
        else
            values.push_back(s.start + (s.stop - s.start) * t);
    }
    return values;
}

std::vector<PhaseShiftJob> parse_job_json(std::string_view text_in) {
    json doc;
    try {
        doc = json::parse(text_in);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("job file is not valid JSON: ") + e.what());
    }
    const json* cases = &doc;
    if (doc.is_object()) {
        if (doc.size() != 1 || !doc.contains("cases"))
            throw UsageError("job object must have exactly one key, 'cases'");
        cases = &doc["cases"];
    }
    if (!cases->is_array() || cases->empty())
        throw UsageError("job file needs a non-empty array of cases");
    std::vector<PhaseShiftJob> jobs;
    for (const auto& c : *cases)
        jobs.push_back(parse_case(c));
    return jobs;
}

std::vector<std::string> figure_names() {
    return {"1a", "1b", "1c", "1d", "1e", "1f", "2a", "2b", "2c",
            "2d", "2e", "2f", "3a", "3b", "3c", "3d"};
}

std::vector<PhaseShiftJob> figure_preset(std::string_view name) {
    const SweepDef beta_sweep{"beta", 0.2, 1.0, 81, "linear"};
    const SweepDef b_sweep{"b", -2.0, 2.0, 81, "linear"};
    if (name.size() == 2 && (name[0] == '1' || name[0] == '2')) {
        const char* pot = name[0] == '1' ? "hellmann" : "varshni";
        switch (name[1]) {
        case 'a': return {preset(pot, "rel", 2.0, 1.0, 0.2, beta_sweep)};
        case 'b': return {preset(pot, "rel", 2.0, 0.0, 0.2, b_sweep)};
        case 'c': return {preset(pot, "rel", 0.0, 0.0, 0.2, b_sweep)};
        case 'd': return {preset(pot, "nr", 2.0, 1.0, 0.2, beta_sweep)};
        case 'e': return {preset(pot, "nr", 2.0, 0.0, 0.2, b_sweep)};
        case 'f': return {preset(pot, "nr", 0.0, 0.0, 0.2, b_sweep)};
        default: break;
        }
    } else if (name.size() == 2 && name[0] == '3') {
        const char* pot = "varshni-shukla";
        switch (name[1]) {
        case 'a': return {preset(pot, "rel", 0.0, 1.0, 0.2, beta_sweep)};
        case 'b': return {preset(pot, "rel", 0.0, 0.0, 0.2, b_sweep)};
        case 'c': return {preset(pot, "nr", 0.0, 1.0, 0.2, beta_sweep)};
        case 'd': return {preset(pot, "nr", 0.0, 0.0, 0.2, b_sweep)};
        default: break;
        }
    }
    throw UsageError("unknown figure '" + std::string(name) + "'");
}

} // namespace kgscat::cli
