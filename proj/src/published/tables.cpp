#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "kgscat/errors.hpp"
#include "kgscat/published.hpp"

namespace kgscat::published {

namespace {

// Rows as printed: l (on the first row of each group), the swept value, then
// one column per potential. Parenthesized values are the a = b = 0 rows.
constexpr std::string_view kTable1 = R"(
0   0.2    -56.42013    -18.28023      1.57080
    0.4    -13.97716     -8.70939      1.57080
    0.6     -3.67443     -5.10888      1.57080
    0.8      0.29281     -3.19714      1.57080
    1.0      2.15222     -2.00889      1.57080
1   0.2    -59.03413    -17.45706      0.01257
    0.4    -17.09669     -7.33489      0.01257
    0.6     -7.10043     -3.38560      0.01257
    0.8     -3.31511     -1.21715      0.01257
    1.0     -1.55237      0.17432      0.01257
2   0.2    -62.66555    -14.10380     -4.62092
    0.4    -21.63335     -2.49275     -4.62092
    0.6    -12.09103      2.95692     -4.62092
    0.8     -8.51103      4.58274     -4.62092
    1.0     -6.82200      3.84423      1.05839
3   0.2    -67.26676     -7.47923    -10.98016
    0.4    -27.38963      5.41503    -10.98016
    0.6    -18.31684      3.06727    -10.98016
    0.8    -14.91997      1.98887    -10.98016
    1.0    -13.30400      1.36681     -0.97221
)";

constexpr std::string_view kTable2 = R"(
0    -2    -61.22712    -11.93829
     -1    -59.56242    -13.77770
      0    -57.96276    -15.84454
      1    -56.42013    -18.28023
      2    -54.92814    -21.28685
1    -2    -63.77592    -11.44881
     -1    -62.13658    -13.27676
      0    -60.55831    -15.28066
      1    -59.03413    -17.45706
      2    -57.55828    -19.58049
2    -2    -67.28155     -8.68290
     -1    -65.69075    -10.48117
      0    -64.15387    -12.33642
      1    -62.66555    -14.10380
      2    -61.22121    -15.59596
3    -2    -71.70483     -2.99836
     -1    -70.18205     -4.71752
      0    -68.70381     -6.25399
      1    -67.26676     -7.47923
      2    -65.86776     -8.41824
)";

constexpr std::string_view kTable3 = R"(
0    -2      1.57080     14.13717      2.84043
     -1      1.57080     10.99557      3.41057
      0    (1.57080)    (1.57080)    (1.57080)
      1      1.57080      1.57080      1.57080
      2      1.57080      1.57080      1.57080
1    -2      0.76042      7.47286      2.20500
     -1      0.76042      4.42150      2.67105
      0    (0.76042)    (0.76042)    (0.76042)
      1      0.76042      2.27344      0.01257
      2      0.76042      2.27344     -0.47054
2    -2     -4.07243      0.31859     -2.30028
     -1     -4.07243     -1.89586     -3.35509
      0   (-4.07243)   (-4.07243)   (-4.07243)
      1     -4.07243      1.05839     -4.62092
      2     -4.07243      1.05839     -5.06634
3    -2    -10.56258     -7.45813     -9.52555
     -1    -10.56258     -9.05505    -10.08485
      0  (-10.56258)  (-10.56258)  (-10.56258)
      1    -10.56258     -0.97221    -10.98016
      2    -10.56258     -0.97221    -11.35140
)";

constexpr std::string_view kTable4 = R"(
0   0.2    -29.25966    -58.79700    -48.13367
    0.4     -4.19045    -22.19149    -14.92677
    0.6      1.42510    -11.95690     -6.51696
    0.8      3.38203     -7.36428     -3.10662
    1.0      4.17896     -4.81609     -1.39647
1   0.2    -32.12819    -58.22093    -46.13639
    0.4     -7.61506    -21.05682    -12.16825
    0.6     -2.28690    -10.44818     -3.15922
    0.8     -0.45903     -5.57535      0.78843
    1.0      0.30661     -2.80362      3.14159
2   0.2    -36.23320    -56.05511    -43.01706
    0.4    -12.61881    -17.55281     -6.96689
    0.6     -7.61456     -5.84922      4.94071
    0.8     -5.86275      0.13296      4.20160
    1.0     -5.07798      4.71239      2.40269
3   0.2    -41.46929    -52.29246    -38.27221
    0.4    -18.86863    -11.08846      4.15755
    0.6    -14.13656      5.15002      2.34222
    0.8    -12.45038      4.06066      0.83600
    1.0    -11.67725      2.62919      0.17027
)";

constexpr std::string_view kTable5 = R"(
0    -2    -36.23205    -53.86816
     -1    -33.71126    -55.34788
      0    -31.40448    -56.97214
      1    -29.25966    -58.79700
      2    -27.24356    -60.81170
1    -2    -38.89140    -53.90060
     -1    -36.46611    -55.28560
      0    -34.22453    -56.73434
      1    -32.12818    -58.22093
      2    -30.15019    -59.68508
2    -2    -42.61406    -52.36346
     -1    -40.35832    -53.60324
      0    -38.23766    -54.84292
      1    -36.23320    -56.05511
      2    -34.32834    -57.21097
3    -2    -47.35474    -49.17259
     -1    -45.30924    -50.25108
      0    -43.34815    -51.29595
      1    -41.46929    -52.29246
      2    -39.66651    -53.23022
)";

constexpr std::string_view kTable6 = R"(
0    -2    -46.63347    -42.38521    -50.47872
     -1    -46.63347    -44.37636    -48.50130
      0  (-46.63347)  (-46.63347)  (-46.63347)
      1    -46.63347    -48.72610    -48.13366
      2    -46.63347    -50.36426    -48.94539
1    -2    -45.36959    -42.09189    -47.58161
     -1    -45.36959    -43.74554    -44.01201
      0  (-45.36959)  (-45.36959)  (-45.36959)
      1    -45.36959    -46.85068    -46.13639
      2    -45.36959    -48.13969    -46.72717
2    -2    -42.56397    -39.96959    -41.35359
     -1    -42.56397    -41.30953    -42.02978
      0  (-42.56397)  (-42.56397)  (-42.56397)
      1    -42.56397    -43.70317    -43.01706
      2    -42.56397    -44.72157    -43.41567
3    -2    -37.98095    -35.91976    -37.31654
     -1    -37.98095    -36.99512    -37.66459
      0  (-37.98095)  (-37.98095)  (-37.98095)
      1    -37.98095    -38.87475    -38.27222
      2    -37.98095    -39.68215    -38.54296
)";

constexpr std::string_view kRawTables[kTableCount] = {kTable1, kTable2, kTable3,
                                                      kTable4, kTable5, kTable6};

constexpr PotentialKind V = PotentialKind::Varshni;
constexpr PotentialKind H = PotentialKind::Hellmann;
constexpr PotentialKind S = PotentialKind::VarshniShukla;

std::vector<TableSpec> make_specs() {
    const auto rel = Mode::Relativistic;
    const auto nr = Mode::NonRelativistic;
    return {
        {1, rel, SweepVar::Beta, 2.0, 1.0, 0.0, 1.0, 1.0, 1.0, {V, H, S},
         "Relativistic phase shifts versus beta, a = 2, E = M = b = 1"},
        {2, rel, SweepVar::B, 2.0, 0.0, 0.2, 1.0, 1.0, 1.0, {V, H},
         "Relativistic phase shifts versus b, a = 2, beta = 0.2, E = M = 1"},
        {3, rel, SweepVar::B, 0.0, 0.0, 0.2, 1.0, 1.0, 1.0, {V, H, S},
         "Relativistic phase shifts versus b, a = 0, beta = 0.2, E = M = 1"},
        {4, nr, SweepVar::Beta, 2.0, 1.0, 0.0, 1.0, 1.0, 1.0, {V, H, S},
         "Non-relativistic phase shifts versus beta, a = 2, E = mu = hbar = b = 1"},
        {5, nr, SweepVar::B, 2.0, 0.0, 0.2, 1.0, 1.0, 1.0, {V, H},
         "Non-relativistic phase shifts versus b, a = 2, beta = 0.2, E = mu = hbar = 1"},
        {6, nr, SweepVar::B, 0.0, 0.0, 0.2, 1.0, 1.0, 1.0, {V, H, S},
         "Non-relativistic phase shifts versus b, a = 0, beta = 0.2, E = mu = hbar = 1"},
    };
}

const std::vector<TableSpec>& specs() {
    static const std::vector<TableSpec> all = make_specs();
    return all;
}

void check_id(int id) {
    if (id < 1 || id > kTableCount) {
        std::ostringstream os;
        os << "table id must be in 1.." << kTableCount << ", got " << id;
        throw DomainError(os.str());
    }
}

double to_double(std::string_view token) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw DomainError("not a number: '" + std::string(token) + "'");
    return value;
}

int to_int(std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw DomainError("not an integer: '" + std::string(token) + "'");
    return value;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    for (std::string t; is >> t;)
        tokens.push_back(t);
    return tokens;
}

std::vector<TableEntry> parse_table(const TableSpec& spec, std::string_view raw) {
    std::vector<TableEntry> out;
    std::istringstream is{std::string(raw)};
    int l = -1;
    const std::size_t ncols = spec.columns.size();
    for (std::string line; std::getline(is, line);) {
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;
        if (tokens.size() == ncols + 2) {
            l = to_int(tokens.front());
            tokens.erase(tokens.begin());
        } else if (tokens.size() != ncols + 1 || l < 0) {
            throw DomainError("malformed embedded table row: " + line);
        }
        const double sweep_value = to_double(tokens[0]);
        for (std::size_t c = 0; c < ncols; ++c) {
            std::string printed = tokens[c + 1];
            TableEntry e;
            e.coincidence = printed.front() == '(' && printed.back() == ')';
            if (e.coincidence)
                printed = printed.substr(1, printed.size() - 2);
            e.table_id = spec.id;
            e.kind = spec.columns[c];
            e.mode = spec.mode;
            e.l = l;
            e.sweep = spec.sweep;
            e.sweep_value = sweep_value;
            e.a = spec.a;
            e.b = spec.sweep == SweepVar::B ? sweep_value : spec.b;
            e.beta = spec.sweep == SweepVar::Beta ? sweep_value : spec.beta;
            e.energy = spec.energy;
            e.mass = spec.mass;
            e.hbar = spec.hbar;
            e.delta = to_double(printed);
            e.printed = printed;
            out.push_back(std::move(e));
        }
    }
    return out;
}

const std::vector<std::vector<TableEntry>>& parsed() {
    static const std::vector<std::vector<TableEntry>> all = [] {
        std::vector<std::vector<TableEntry>> t;
        for (int id = 1; id <= kTableCount; ++id)
            t.push_back(parse_table(specs()[id - 1], kRawTables[id - 1]));
        return t;
    }();
    return all;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

constexpr std::string_view kCsvHeader =
    "table_id,potential,mode,l,sweep_var,sweep_value,a,b,beta,energy,mass_or_mu,hbar,"
    "delta_published,coincidence";

std::vector<std::string> split_commas(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        fields.emplace_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return fields;
}

Mode parse_mode(std::string_view s) {
    if (s == "rel")
        return Mode::Relativistic;
    if (s == "nr")
        return Mode::NonRelativistic;
    throw DomainError("unknown mode '" + std::string(s) + "'");
}

SweepVar parse_sweep(std::string_view s) {
    if (s == "beta")
        return SweepVar::Beta;
    if (s == "b")
        return SweepVar::B;
    throw DomainError("unknown sweep variable '" + std::string(s) + "'");
}

} // namespace

const char* to_string(SweepVar var) noexcept { return var == SweepVar::Beta ? "beta" : "b"; }

model::PotentialSpec TableEntry::potential() const {
    const double a_eff = kind == PotentialKind::VarshniShukla ? 0.0 : a;
    return {kind, a_eff, b, beta};
}

model::Kinematics TableEntry::kinematics() const {
    return mode == Mode::Relativistic ? model::Kinematics::relativistic(mass, energy)
                                      : model::Kinematics::non_relativistic(mass, energy, hbar);
}

const TableSpec& table_spec(int id) {
    check_id(id);
    return specs()[id - 1];
}

const std::vector<TableEntry>& table_entries(int id) {
    check_id(id);
    return parsed()[id - 1];
}

std::vector<TableEntry> all_entries() {
    std::vector<TableEntry> out;
    for (const auto& t : parsed())
        out.insert(out.end(), t.begin(), t.end());
    return out;
}

std::string serialize_csv(std::span<const TableEntry> entries) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const TableEntry& e : entries) {
        out += std::to_string(e.table_id) + ',' + model::to_string(e.kind) + ',' +
               model::to_string(e.mode) + ',' + std::to_string(e.l) + ',' + to_string(e.sweep) +
               ',' + fmt(e.sweep_value) + ',' + fmt(e.a) + ',' + fmt(e.b) + ',' + fmt(e.beta) +
               ',' + fmt(e.energy) + ',' + fmt(e.mass) + ',' + fmt(e.hbar) + ',' + e.printed +
               ',' + (e.coincidence ? "true" : "false") + '\n';
    }
    return out;
}

std::vector<TableEntry> parse_csv(std::string_view text) {
    std::vector<TableEntry> out;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (header) {
            if (line != kCsvHeader)
                throw DomainError("unexpected table CSV header");
            header = false;
            continue;
        }
        const auto f = split_commas(line);
        if (f.size() != 14)
            throw DomainError("table CSV row needs 14 fields: " + std::string(line));
        TableEntry e;
        e.table_id = to_int(f[0]);
        e.kind = model::parse_potential_kind(f[1]);
        e.mode = parse_mode(f[2]);
        e.l = to_int(f[3]);
        e.sweep = parse_sweep(f[4]);
        e.sweep_value = to_double(f[5]);
        e.a = to_double(f[6]);
        e.b = to_double(f[7]);
        e.beta = to_double(f[8]);
        e.energy = to_double(f[9]);
        e.mass = to_double(f[10]);
        e.hbar = to_double(f[11]);
        e.delta = to_double(f[12]);
        e.printed = f[12];
        if (f[13] != "true" && f[13] != "false")
            throw DomainError("coincidence flag must be true or false");
        e.coincidence = f[13] == "true";
        out.push_back(std::move(e));
    }
    if (header)
        throw DomainError("empty table CSV");
    return out;
}

} // namespace kgscat::published
