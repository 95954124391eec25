#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace madelung {

enum class ErrorKind {
    parameter,
    sizing,
    domain,
    precondition,
    solver,
    degenerate,
    resolution,
    io,
};

const char* to_string(ErrorKind kind) noexcept;

// Base of every error raised by the library. Diagnostics are name/value pairs
// that the CLI forwards verbatim into its JSON error report.
class Error : public std::runtime_error {
public:
    using Diagnostics = std::vector<std::pair<std::string, double>>;

    Error(ErrorKind kind, const std::string& message, Diagnostics diagnostics = {})
        : std::runtime_error(message), kind_(kind), diagnostics_(std::move(diagnostics)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
    ErrorKind kind_;
    Diagnostics diagnostics_;
};

struct ParameterError : Error {
    explicit ParameterError(const std::string& m, Diagnostics d = {}) : Error(ErrorKind::parameter, m, std::move(d)) {}
};
struct SizingError : Error {
    explicit SizingError(const std::string& m, Diagnostics d = {}) : Error(ErrorKind::sizing, m, std::move(d)) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& m, Diagnostics d = {}) : Error(ErrorKind::domain, m, std::move(d)) {}
};
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& m, Diagnostics d = {}) : Error(ErrorKind::precondition, m, std::move(d)) {}
};
struct SolverError : Error {
    explicit SolverError(const std::string& m, Diagnostics d = {}) : Error(ErrorKind::solver, m, std::move(d)) {}
};
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& m, Diagnostics d = {}) : Error(ErrorKind::degenerate, m, std::move(d)) {}
};
struct ResolutionError : Error {
    explicit ResolutionError(const std::string& m, Diagnostics d = {}) : Error(ErrorKind::resolution, m, std::move(d)) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m, Diagnostics d = {}) : Error(ErrorKind::io, m, std::move(d)) {}
};

}  // namespace madelung
