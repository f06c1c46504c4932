#ifndef ROOKFFT_ERRORS_HPP_
#define ROOKFFT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rookfft {

// Mismatched ambient sizes, out-of-range symbols, bad block shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input (cycle-link, flat mappings, CSV, JSON).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Arithmetic requested across incompatible bases or families.
class BasisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rookfft

#endif  // ROOKFFT_ERRORS_HPP_
