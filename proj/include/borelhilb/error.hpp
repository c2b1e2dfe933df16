#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace borel {

/// Base for every error raised by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller
/// (non-Borel input where Borel is required, dimension mismatch, ...).
class ContractError : public Error {
public:
  using Error::Error;
};

/// The polynomial is not the Hilbert polynomial of any subscheme, or lies
/// outside the degree range an operation supports.
class InadmissibleError : public Error {
public:
  using Error::Error;
};

/// A configured size limit would be exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

} // namespace borel
