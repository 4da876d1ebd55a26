#ifndef ENERGYCH_ERRORS_HPP
#define ENERGYCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace energych {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when an exact search would exceed its configured node cap.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace energych

#endif  // ENERGYCH_ERRORS_HPP
