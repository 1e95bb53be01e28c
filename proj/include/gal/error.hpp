#pragma once

#include <stdexcept>
#include <string>

namespace gal {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error
{
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed graph text or bad argument values.
class ParseError : public Error
{
  public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const { return line_; }

  private:
    int line_;
};

/// A size guard refused to run an exact solver on an instance that is too large.
class GuardError : public Error
{
  public:
    explicit GuardError(const std::string& what) : Error(what) {}
};

/// A numerical solver did not reach an acceptable certificate.
class SolverError : public Error
{
  public:
    explicit SolverError(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error
{
  public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

} // namespace gal
