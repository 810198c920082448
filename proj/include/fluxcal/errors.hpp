// errors.hpp — Typed error taxonomy shared by the library and the CLI

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fluxcal {

// Base of all library errors. `code` is a stable machine-readable identifier
// and `exit_code` is what the CLI process returns when the error escapes.
class Error : public std::runtime_error {
public:
    Error(std::string code, int exit_code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), exit_code_(exit_code) {}

    const std::string& code() const noexcept { return code_; }
    int exit_code() const noexcept { return exit_code_; }

private:
    std::string code_;
    int exit_code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse_error", 2, msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension_mismatch", 3, msg) {}
};

// Requested frequency is outside the reachable band of a qubit.
// `qubit_index` is -1 when the failing qubit is unknown to the thrower.
struct TargetUnreachable : Error {
    explicit TargetUnreachable(const std::string& msg, int qubit = -1)
        : Error("target_unreachable", 4, msg), qubit_index(qubit) {}
    int qubit_index;
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error("singular_matrix", 5, msg) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& msg) : Error("not_hermitian", 6, msg) {}
};

struct ZeroDetuning : Error {
    explicit ZeroDetuning(const std::string& msg) : Error("zero_detuning", 7, msg) {}
};

struct InvalidRange : Error {
    explicit InvalidRange(const std::string& msg) : Error("invalid_range", 8, msg) {}
};

struct InsufficientData : Error {
    explicit InsufficientData(const std::string& msg) : Error("insufficient_data", 9, msg) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error("no_convergence", 10, msg) {}
};

struct ZeroMutual : Error {
    explicit ZeroMutual(const std::string& msg) : Error("zero_mutual", 11, msg) {}
};

struct NoResonanceFound : Error {
    explicit NoResonanceFound(const std::string& msg) : Error("no_resonance_found", 12, msg) {}
};

struct EmptyMap : Error {
    explicit EmptyMap(const std::string& msg) : Error("empty_map", 13, msg) {}
};

struct AmbiguousTracking : Error {
    explicit AmbiguousTracking(const std::string& msg) : Error("ambiguous_tracking", 14, msg) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error("invalid_argument", 15, msg) {}
};

} // namespace fluxcal
