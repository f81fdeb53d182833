#pragma once

#include <stdexcept>
#include <string>

namespace coh {

// Exit codes of the command-line front end.
enum class ExitCode : int { Ok = 0, ValidationFailure = 1, ParseFailure = 2, Hypothesis = 3 };

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
    virtual ExitCode exit_code() const noexcept { return ExitCode::Hypothesis; }
};

#define COH_DEFINE_ERROR(Name, Code)                                              \
    class Name : public Error {                                                   \
    public:                                                                       \
        using Error::Error;                                                       \
        const char* kind() const noexcept override { return #Name; }              \
        ExitCode exit_code() const noexcept override { return ExitCode::Code; }   \
    };

COH_DEFINE_ERROR(ParseError, ParseFailure)
COH_DEFINE_ERROR(DegreeError, Hypothesis)
COH_DEFINE_ERROR(MissingDataError, Hypothesis)
COH_DEFINE_ERROR(DataError, Hypothesis)
COH_DEFINE_ERROR(ContainmentError, Hypothesis)
COH_DEFINE_ERROR(WellDefinednessError, Hypothesis)
COH_DEFINE_ERROR(PreconditionError, Hypothesis)
COH_DEFINE_ERROR(HypothesisError, Hypothesis)
COH_DEFINE_ERROR(DispatchError, Hypothesis)
COH_DEFINE_ERROR(TagError, Hypothesis)
COH_DEFINE_ERROR(RangeError, Hypothesis)
COH_DEFINE_ERROR(InconsistentInputError, Hypothesis)
COH_DEFINE_ERROR(ValidationError, ValidationFailure)

#undef COH_DEFINE_ERROR

}  // namespace coh
