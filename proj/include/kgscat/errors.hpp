#pragma once

#include <stdexcept>
#include <string>

namespace kgscat {

// Base of every numeric failure raised by the library. The category decides
// the CLI exit code: domain failures map to 2, convergence failures to 4.
class Error : public std::runtime_error {
public:
    enum class Category { Domain, Convergence };

    Error(Category category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    Category category() const noexcept { return category_; }

private:
    Category category_;
};

#define KGSCAT_DOMAIN_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what)                                 \
            : Error(Category::Domain, std::string(#Name ": ") + what) {}       \
    }

#define KGSCAT_CONVERGENCE_ERROR(Name)                                         \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what)                                 \
            : Error(Category::Convergence, std::string(#Name ": ") + what) {}  \
    }

KGSCAT_DOMAIN_ERROR(DomainError);
KGSCAT_DOMAIN_ERROR(PoleError);
KGSCAT_DOMAIN_ERROR(DegenerateParameterError);
KGSCAT_DOMAIN_ERROR(DegenerateChannelError);
KGSCAT_DOMAIN_ERROR(ComplexIndexError);
KGSCAT_DOMAIN_ERROR(BelowThresholdError);

KGSCAT_CONVERGENCE_ERROR(ConvergenceError);
KGSCAT_CONVERGENCE_ERROR(OverflowError);
KGSCAT_CONVERGENCE_ERROR(MatchError);
KGSCAT_CONVERGENCE_ERROR(NoRootError);
KGSCAT_CONVERGENCE_ERROR(NodeCountError);

#undef KGSCAT_DOMAIN_ERROR
#undef KGSCAT_CONVERGENCE_ERROR

} // namespace kgscat
