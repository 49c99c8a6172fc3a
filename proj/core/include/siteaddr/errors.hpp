#ifndef SITEADDR_ERRORS_HPP
#define SITEADDR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace siteaddr {

// Invalid physical input (non-positive length, near-resonant line, ...).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine failed to reach its requested accuracy. Carries the
// error estimate it did achieve so callers can decide whether to proceed.
class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error_(achieved) {}

  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

// Malformed configuration or data file.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace siteaddr

#endif
