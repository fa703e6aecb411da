#ifndef FOCK_ERRORS_HPP
#define FOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fock {

// Every failure mode of the library maps to one of these codes. The CLI
// translates input-validation codes to exit status 2 and keeps check
// failures at exit status 1.
enum class ErrorCode {
    NonHermitianState,
    ModeOutOfRange,
    ZeroTrace,
    NotFixedN,
    EmptyState,
    BadSubsetSize,
    ModeMismatch,
    UnbalancedIndex,
    ZeroIntensity,
    DegenerateNormalization,
    BadEta,
    NonUnitary,
    TooManyPhotons,
    TooLarge,
    NotSymmetric,
    EmptyTensor,
    DimensionCap,
    NotPure,
    WrongModeCount,
    ParseError,
    InternalConsistency,
};

const char* error_code_name(ErrorCode code);

class FockError : public std::runtime_error {
public:
    FockError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw FockError(code, message);
}

}  // namespace fock

#endif
