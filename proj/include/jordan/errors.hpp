#ifndef JORDAN_ERRORS_HPP
#define JORDAN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordan {

enum class ErrorKind {
  InvalidParams,
  DegenerateExponent,
  ResourceExceeded,
  UnknownSporadic,
  MissingData,
  OutOfRange,
  CapExceeded,
  Inconsistent,
  DataFormat,
};

inline std::string_view to_string(ErrorKind k)
{
  switch (k) {
  case ErrorKind::InvalidParams: return "InvalidParams";
  case ErrorKind::DegenerateExponent: return "DegenerateExponent";
  case ErrorKind::ResourceExceeded: return "ResourceExceeded";
  case ErrorKind::UnknownSporadic: return "UnknownSporadic";
  case ErrorKind::MissingData: return "MissingData";
  case ErrorKind::OutOfRange: return "OutOfRange";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::Inconsistent: return "Inconsistent";
  case ErrorKind::DataFormat: return "DataFormat";
  }
  return "Unknown";
}

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace jordan

#endif // JORDAN_ERRORS_HPP
