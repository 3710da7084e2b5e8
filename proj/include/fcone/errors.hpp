#ifndef FCONE_ERRORS_HPP
#define FCONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fcone {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FCONE_DEFINE_ERROR(NAME)                                          \
    struct NAME : Error {                                                 \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
    }

FCONE_DEFINE_ERROR(DomainError);
FCONE_DEFINE_ERROR(PoleAtNonpositiveInteger);
FCONE_DEFINE_ERROR(PoleError);
FCONE_DEFINE_ERROR(OverflowError);
FCONE_DEFINE_ERROR(NonConvergent);
FCONE_DEFINE_ERROR(IntegerDifference);
FCONE_DEFINE_ERROR(ContourInvalid);
FCONE_DEFINE_ERROR(OutOfRegime);
FCONE_DEFINE_ERROR(InsufficientSmoothness);
FCONE_DEFINE_ERROR(QuadratureFailure);
FCONE_DEFINE_ERROR(GridTooCoarse);
FCONE_DEFINE_ERROR(AliasingDetected);
FCONE_DEFINE_ERROR(ResamplingError);
FCONE_DEFINE_ERROR(ParameterOutOfRange);
FCONE_DEFINE_ERROR(ParameterError);
FCONE_DEFINE_ERROR(ArityMismatch);
FCONE_DEFINE_ERROR(IndexOutOfRange);
FCONE_DEFINE_ERROR(SpecParseError);
FCONE_DEFINE_ERROR(ConfigError);
FCONE_DEFINE_ERROR(OnSingularSupport);

#undef FCONE_DEFINE_ERROR

} // namespace fcone

#endif
