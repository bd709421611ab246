#include <cmath>
#include <random>

#include "doctest.h"
#include "kgscat/errors.hpp"
#include "kgscat/validation.hpp"

using namespace kgscat;
using namespace kgscat::validation;

TEST_SUITE("validation") {

TEST_CASE("reference log Gamma agrees with lgamma on the real axis") {
    for (double x : {0.3, 1.0, 2.5, 7.0, 15.5}) {
        const Complex ref = reference_log_gamma({x, 0.0});
        CHECK(ref.real() == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
        CHECK(std::abs(ref.imag()) < 1e-14);
    }
}

TEST_CASE("reference log Gamma is conjugation symmetric and satisfies the recurrence") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> re(0.2, 10.0), im(-10.0, 10.0);
    for (int i = 0; i < 20; ++i) {
        const Complex z(re(rng), im(rng));
        const Complex a = reference_log_gamma(z);
        CHECK(std::abs(reference_log_gamma(std::conj(z)) - std::conj(a)) < 1e-12 * std::abs(a));
        // log Gamma(z + 1) = log Gamma(z) + log z up to whole turns
        const Complex d = reference_log_gamma(z + 1.0) - a - std::log(z);
        CHECK(std::abs(d.real()) < 1e-11);
        const double turns = d.imag() / (2.0 * std::acos(-1.0));
        CHECK(std::abs(turns - std::round(turns)) < 1e-11);
    }
}

TEST_CASE("suites") {
    CHECK(suite_criteria(Suite::Specfun) == std::vector<int>{1, 2, 8});
    CHECK(suite_criteria(Suite::Oracle) == std::vector<int>{3, 7});
    CHECK(suite_criteria(Suite::Spectra) == std::vector<int>{4, 5, 6});
    CHECK(suite_criteria(Suite::All).size() == static_cast<std::size_t>(kCriterionCount));
    CHECK(parse_suite("specfun") == Suite::Specfun);
    CHECK(parse_suite("all") == Suite::All);
    CHECK_THROWS_AS(parse_suite("most"), DomainError);
    for (const Suite s : {Suite::Specfun, Suite::Oracle, Suite::Spectra, Suite::All})
        CHECK(parse_suite(to_string(s)) == s);
}

TEST_CASE("criterion titles") {
    for (int id = 1; id <= kCriterionCount; ++id)
        CHECK_FALSE(criterion_title(id).empty());
    CHECK_THROWS_AS(criterion_title(0), DomainError);
    CHECK_THROWS_AS(criterion_title(kCriterionCount + 1), DomainError);
    CHECK_THROWS_AS(run_criterion(kCriterionCount + 1), DomainError);
}

TEST_CASE("a criterion result summarizes its checks") {
    CriterionResult r;
    r.checks = {{"first", true, "1e-9"}, {"second", false, "0.5"}};
    CHECK_FALSE(r.passed());
    CHECK(r.summary().find("second") != std::string::npos);
    r.checks[1].passed = true;
    CHECK(r.passed());
    CHECK(run_criterion(8).passed());
}

} // TEST_SUITE
