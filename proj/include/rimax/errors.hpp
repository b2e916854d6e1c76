#ifndef RIMAX_ERRORS_HPP
#define RIMAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rimax {

// Content-level failures: bad words, malformed lines, out-of-range values.
// Mapped to exit code 1 by the CLI.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failures: missing or unreadable files.
// Mapped to exit code 2 by the CLI.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rimax

#endif  // RIMAX_ERRORS_HPP
