#pragma once

#include <stdexcept>
#include <string>

namespace lieclass {

// Error categories map 1:1 onto CLI exit codes (see tools/main.cpp).
enum class ErrorKind {
    Internal = 1,
    MalformedInput = 2,
    UnsupportedDiscriminant = 3,
    ConflictingDiscriminant = 4,
    NoPolynomialParticularSolution = 5,
    NotCommuting = 6,
    SingularP = 7,
    InternalInconsistency = 8,
    NonFiniteState = 9,
    NonMonotoneReparametrization = 10,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error malformed_input(const std::string& msg) {
    return Error(ErrorKind::MalformedInput, "malformed input: " + msg);
}
inline Error unsupported_discriminant(const std::string& msg) {
    return Error(ErrorKind::UnsupportedDiscriminant, "unsupported discriminant: " + msg);
}
inline Error conflicting_discriminant(const std::string& msg) {
    return Error(ErrorKind::ConflictingDiscriminant, "conflicting discriminant: " + msg);
}
inline Error internal_inconsistency(const std::string& msg) {
    return Error(ErrorKind::InternalInconsistency, "internal inconsistency: " + msg);
}

} // namespace lieclass
