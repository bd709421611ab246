#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "doctest.h"
#include "kgscat/errors.hpp"
#include "kgscat/published.hpp"

using namespace kgscat;
using namespace kgscat::published;

TEST_SUITE("published") {

TEST_CASE("entry counts") {
    const std::size_t expected[kTableCount] = {60, 40, 60, 60, 40, 60};
    std::size_t total = 0;
    for (int id = 1; id <= kTableCount; ++id) {
        CHECK(table_entries(id).size() == expected[id - 1]);
        CHECK(table_entries(id).size() == table_spec(id).columns.size() * 4 * 5);
        total += table_entries(id).size();
    }
    CHECK(all_entries().size() == total);
    CHECK_THROWS_AS(table_spec(0), DomainError);
    CHECK_THROWS_AS(table_entries(7), DomainError);
}

TEST_CASE("coincidence rows") {
    for (int id = 1; id <= kTableCount; ++id) {
        std::size_t flagged = 0;
        for (const TableEntry& e : table_entries(id)) {
            if (!e.coincidence)
                continue;
            ++flagged;
            CHECK(e.a == 0.0);
            CHECK(e.b == 0.0);
        }
        CHECK(flagged == (id == 3 || id == 6 ? 12u : 0u));
    }
}

TEST_CASE("a known entry") {
    const auto& entries = table_entries(1);
    const TableEntry* found = nullptr;
    for (const TableEntry& e : entries)
        if (e.kind == PotentialKind::Hellmann && e.l == 0 && e.sweep_value == 0.2)
            found = &e;
    REQUIRE(found != nullptr);
    CHECK(found->printed == "-18.28023");
    CHECK(found->delta == -18.28023);
    CHECK(found->mode == Mode::Relativistic);
    CHECK(found->sweep == SweepVar::Beta);
    CHECK(found->beta == 0.2);
    CHECK(found->a == 2.0);
    CHECK(found->b == 1.0);
    CHECK(found->energy == 1.0);
    CHECK(found->mass == 1.0);
}

TEST_CASE("Varshni-Shukla entries are evaluated without a") {
    for (const TableEntry& e : table_entries(1)) {
        if (e.kind != PotentialKind::VarshniShukla)
            continue;
        CHECK(e.potential().a() == 0.0);
        CHECK(e.potential().b() == e.b);
    }
}

TEST_CASE("CSV round trip is byte identical") {
    const std::vector<TableEntry> entries = all_entries();
    const std::string csv = serialize_csv(entries);
    const std::vector<TableEntry> back = parse_csv(csv);
    REQUIRE(back.size() == entries.size());
    CHECK(serialize_csv(back) == csv);
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].printed == entries[i].printed);
        CHECK(back[i].delta == entries[i].delta);
        CHECK(back[i].coincidence == entries[i].coincidence);
    }
    CHECK(csv.rfind("table_id,potential,mode,l,sweep_var,sweep_value", 0) == 0);
}

TEST_CASE("malformed CSV is rejected") {
    const std::string csv = serialize_csv(table_entries(2));
    const std::string header = csv.substr(0, csv.find('\n') + 1);
    CHECK_THROWS_AS(parse_csv("not,a,table\n"), DomainError);
    CHECK_THROWS_AS(parse_csv(header + "2,varshni,rel,0,b,-2\n"), DomainError);
    std::string bad_number = csv;
    bad_number.replace(bad_number.find("-61.22712"), 9, "-61.2x712");
    CHECK_THROWS_AS(parse_csv(bad_number), DomainError);
    std::string bad_kind = csv;
    bad_kind.replace(bad_kind.find("varshni"), 7, "yukawa!");
    CHECK_THROWS_AS(parse_csv(bad_kind), DomainError);
    CHECK(parse_csv(header).empty());
}

TEST_CASE("published structure") {
    SUBCASE("Varshni column of the a = 0 relativistic table is flat in b") {
        std::map<int, std::set<std::string>> per_l;
        for (const TableEntry& e : table_entries(3))
            if (e.kind == PotentialKind::Varshni)
                per_l[e.l].insert(e.printed);
        REQUIRE(per_l.size() == 4);
        for (const auto& [l, values] : per_l)
            CHECK(values.size() == 1);
    }
    SUBCASE("a = b = 0 rows agree across potentials") {
        for (int id : {3, 6}) {
            std::map<int, std::set<std::string>> per_l;
            for (const TableEntry& e : table_entries(id))
                if (e.coincidence)
                    per_l[e.l].insert(e.printed);
            for (const auto& [l, values] : per_l)
                CHECK(values.size() == 1);
        }
    }
}

TEST_CASE("every entry is classified") {
    for (int id = 1; id <= kTableCount; ++id) {
        for (const ArgConvention conv :
             {ArgConvention::PrincipalLogGamma, ArgConvention::WrappedArg}) {
            const ComparisonReport report = compare_table(id, conv);
            CHECK(report.table_id == id);
            CHECK(report.convention == conv);
            REQUIRE(report.rows.size() == table_entries(id).size());
            std::size_t counted = 0;
            for (const EntryStatus s :
                 {EntryStatus::Match, EntryStatus::WrapMatch, EntryStatus::Mismatch,
                  EntryStatus::Degenerate, EntryStatus::Pole, EntryStatus::Undefined})
                counted += report.count(s);
            CHECK(counted == report.rows.size());

            for (const ComparisonRow& row : report.rows) {
                const TableEntry& e = row.entry;
                double k2 = NAN;
                try {
                    k2 = model::k_squared(e.potential(), e.kinematics(), e.l);
                } catch (const Error&) {
                }
                CHECK((row.status == EntryStatus::Degenerate) == (k2 == 0.0));
                if (std::isfinite(k2))
                    CHECK(row.below_threshold == (k2 < 0.0));
                if (row.computed) {
                    CHECK(std::isfinite(*row.computed));
                    CHECK(row.abs_diff == doctest::Approx(std::abs(*row.computed - e.delta)));
                    CHECK(row.circle_diff <= std::numbers::pi + 1e-12);
                    if (row.status == EntryStatus::Match)
                        CHECK(row.abs_diff <= kMatchTolerance);
                    if (row.status == EntryStatus::WrapMatch)
                        CHECK(row.circle_diff <= kMatchTolerance);
                } else {
                    CHECK(std::isnan(row.abs_diff));
                    CHECK(std::isnan(row.circle_diff));
                    CHECK(row.status != EntryStatus::Match);
                    CHECK(row.status != EntryStatus::Mismatch);
                }
            }
        }
    }
}

TEST_CASE("structural invariants hold") {
    for (int id = 1; id <= kTableCount; ++id)
        for (const InvariantCheck& inv : structural_invariants(id)) {
            INFO(inv.name, ": ", inv.detail);
            CHECK(inv.passed);
            CHECK(inv.spread <= inv.tolerance);
        }
    CHECK(structural_invariants(3).size() == 8);
    CHECK(structural_invariants(6).size() == 8);
    CHECK(structural_invariants(1).size() == 4);
}

TEST_CASE("invariant helpers away from the tabulated parameters") {
    const double bs[] = {-1.0, 0.0, 2.0};
    CHECK(varshni_b_independence(Mode::NonRelativistic, 0.35, 1.0, 1.0, 1.0, 2, bs).passed);
    CHECK(varshni_b_independence(Mode::Relativistic, 0.35, 1.7, 1.0, 1.0, 1, bs).passed);
    for (int l = 0; l < 4; ++l)
        CHECK(free_coincidence(Mode::Relativistic, 0.3, 1.5, 1.0, 1.0, l).passed);
    const double betas[] = {0.3, 0.5, 0.7};
    CHECK(vsp_beta_independence(2.0, 0.5, 1, betas).passed);
}

} // TEST_SUITE
