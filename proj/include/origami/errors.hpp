#pragma once

#include <stdexcept>
#include <string>

namespace origami {

// Base class for all library errors. The CLI prints what() verbatim, so every
// message starts with the error name.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string tag(const char* name, const std::string& msg) {
    return std::string(name) + ": " + msg;
}
} // namespace detail

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& m) : Error(detail::tag("DegreeMismatch", m)) {}
};
struct NotConnected : Error {
    explicit NotConnected(const std::string& m) : Error(detail::tag("NotConnected", m)) {}
};
struct ParityError : Error {
    explicit ParityError(const std::string& m) : Error(detail::tag("ParityError", m)) {}
};
struct BadParams : Error {
    explicit BadParams(const std::string& m) : Error(detail::tag("BadParams", m)) {}
};
struct NoInvolution : Error {
    explicit NoInvolution(const std::string& m) : Error(detail::tag("NoInvolution", m)) {}
};
struct AmbiguousInvolution : Error {
    explicit AmbiguousInvolution(const std::string& m)
        : Error(detail::tag("AmbiguousInvolution", m)) {}
};
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& m) : Error(detail::tag("CapExceeded", m)) {}
};
struct NotMinusISymmetric : Error {
    explicit NotMinusISymmetric(const std::string& m)
        : Error(detail::tag("NotMinusISymmetric", m)) {}
};
struct NonIntegralGenus : Error {
    explicit NonIntegralGenus(const std::string& m) : Error(detail::tag("NonIntegralGenus", m)) {}
};
struct InvalidDiscriminant : Error {
    explicit InvalidDiscriminant(const std::string& m)
        : Error(detail::tag("InvalidDiscriminant", m)) {}
};
struct NonIntegral : Error {
    explicit NonIntegral(const std::string& m) : Error(detail::tag("NonIntegral", m)) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(detail::tag("ParseError", m)) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(detail::tag("IoError", m)) {}
};

} // namespace origami
