#pragma once

#include <stdexcept>
#include <string>

namespace gainsw {

// Malformed input, mismatched groups, bad shapes, parse failures.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operations outside the tool's supported feature set (e.g. enumerating an
// infinite group, switching-isomorphism over U(H)).
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// A numerical guarantee failed (e.g. odd multiplicity when pairing the
// doubled spectrum of a complex adjoint).
struct NumericalError : Error {
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }
[[noreturn]] inline void fail_unsupported(const std::string& msg) { throw UnsupportedError(msg); }

}  // namespace gainsw
