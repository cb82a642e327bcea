#pragma once

#include <stdexcept>
#include <string>

namespace malcev {

// Every domain error carries a stable code string so the CLI can emit
// machine-readable error records and map codes to exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define MALCEV_DEFINE_ERROR(NAME)                                          \
    struct NAME : Error {                                                  \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}     \
    }

MALCEV_DEFINE_ERROR(DivisionByZero);
MALCEV_DEFINE_ERROR(ParseError);
MALCEV_DEFINE_ERROR(ShapeMismatch);
MALCEV_DEFINE_ERROR(ArityMismatch);
MALCEV_DEFINE_ERROR(ValuationZero);
MALCEV_DEFINE_ERROR(ValuationZeroArgument);
MALCEV_DEFINE_ERROR(EmptyWord);
MALCEV_DEFINE_ERROR(SingleLetter);
MALCEV_DEFINE_ERROR(DegreeExceedsTruncation);
MALCEV_DEFINE_ERROR(DegreeOutOfRange);
MALCEV_DEFINE_ERROR(NotLieElement);
MALCEV_DEFINE_ERROR(NotGroupLike);
MALCEV_DEFINE_ERROR(TruncationTooSmall);
MALCEV_DEFINE_ERROR(JacobiViolation);
MALCEV_DEFINE_ERROR(NotNilpotent);
MALCEV_DEFINE_ERROR(ReconstructionMismatch);
MALCEV_DEFINE_ERROR(SingularEquation);
MALCEV_DEFINE_ERROR(NonConvergence);

#undef MALCEV_DEFINE_ERROR

}  // namespace malcev
