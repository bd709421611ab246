#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "kgscat/validation.hpp"

namespace v = kgscat::validation;

// Prints one PASS/FAIL line per acceptance criterion. With --criterion N only
// that criterion runs; --verbose adds the individual checks.
int main(int argc, char** argv) {
    std::vector<int> ids;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            ids.push_back(std::atoi(argv[++i]));
        } else if (arg == "--verbose") {
            verbose = true;
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]... [--verbose]\n", argv[0]);
            return 1;
        }
    }
    if (ids.empty())
        ids = v::suite_criteria(v::Suite::All);

    bool all = true;
    for (int id : ids) {
        const v::CriterionResult r = v::run_criterion(id);
        all = all && r.passed();
        std::printf("%s criterion %d (%s): %s [%.2f s]\n", r.passed() ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.summary().c_str(), r.seconds);
        if (verbose)
            for (const auto& c : r.checks)
                std::printf("    %s %s: %s\n", c.passed ? "pass" : "FAIL", c.name.c_str(),
                            c.measured.c_str());
    }
    return all ? 0 : 1;
}
