#ifndef BP_ERRORS_HPP
#define BP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bp {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Malformed textual input (cycle notation, group/graph files).
class ParseError : public Error {
public:
  explicit ParseError(const std::string &what) : Error(what) {}
};

/// An operation's stated precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string &what) : Error(what) {}
};

/// A configured resource cap (enumeration size, graph size, tuple memory)
/// would be exceeded.
class CapError : public Error {
public:
  explicit CapError(const std::string &what) : Error(what) {}
};

/// An internal consistency check failed.  Seeing this means the library has
/// a bug, not that the input was bad.
class InternalError : public Error {
public:
  explicit InternalError(const std::string &what) : Error(what) {}
};

} // namespace bp

#endif
