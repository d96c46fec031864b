#pragma once

#include <stdexcept>
#include <string>

namespace dhom {

enum class ErrorKind {
    NonAdmissible,
    InfiniteDimensional,
    ExceedsBound,
    NotRepresentationFinite,
    NotStrong,
    ConstructionFailed,
    NotHomologicalEpi,
    UnsupportedAlgebraClass,
    Disagreement,
    NoFactorization,
    AnomalyDetected,
    ParseError,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Outcome of an exact check: `pass` plus a human-readable witness when it fails.
struct Certificate {
    bool pass = true;
    std::string witness;

    static Certificate ok() { return {}; }
    static Certificate fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return pass; }
};

}  // namespace dhom
