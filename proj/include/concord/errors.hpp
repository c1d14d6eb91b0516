#pragma once
// Error taxonomy for the concord library.  Every throwing operation uses one
// of these types; the CLI maps them onto its exit-code scheme.

#include <stdexcept>
#include <string>

namespace concord {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

// Hermitian form is singular because the angle hits an Alexander root.
struct SingularAtRoot : Error {
    explicit SingularAtRoot(const std::string& msg) : Error(msg) {}
};

struct AngleOne : Error {
    explicit AngleOne(const std::string& msg) : Error(msg) {}
};

struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

struct NonzeroWinding : Error {
    explicit NonzeroWinding(const std::string& msg) : Error(msg) {}
};

struct SingularCover : Error {
    explicit SingularCover(const std::string& msg) : Error(msg) {}
};

struct UnknownCurve : Error {
    explicit UnknownCurve(const std::string& msg) : Error(msg) {}
};

struct ZeroQ : Error {
    explicit ZeroQ(const std::string& msg) : Error(msg) {}
};

struct NotAlexanderOne : Error {
    explicit NotAlexanderOne(const std::string& msg) : Error(msg) {}
};

struct InvalidTorusParams : Error {
    explicit InvalidTorusParams(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct NonNegativeL : Error {
    explicit NonNegativeL(const std::string& msg) : Error(msg) {}
};

struct ZeroLinking : Error {
    explicit ZeroLinking(const std::string& msg) : Error(msg) {}
};

struct MissingTau : Error {
    std::string key;
    explicit MissingTau(const std::string& k)
        : Error("tau oracle has no bound for key \"" + k + "\""), key(k) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace concord
