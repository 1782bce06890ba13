#ifndef SZX_ERRORS_HPP
#define SZX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace szx {

// Malformed graph6 input. Carries the byte offset of the offending byte.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Requested work exceeds an enumerator's combinatorial budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace szx

#endif  // SZX_ERRORS_HPP
