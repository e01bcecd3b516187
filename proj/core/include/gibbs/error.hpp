#ifndef GIBBS_ERROR_HPP_
#define GIBBS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gibbs {

enum class ErrorKind {
  domain,               // parameter outside its admissible set
  pole,                 // Gamma evaluated at 0, -1, -2, ...
  not_divisible,        // exact division by (x - r) with P(r) != 0
  no_root_found,        // no sign change inside the scan window
  multiple_roots,       // a bracket could not be reduced to a single root
  precision_exhausted,  // Newton refinement failed to re-certify
  ill_conditioned,      // relative error requested near a zero
  degenerate,           // degree too small for the requested pipeline
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gibbs

#endif  // GIBBS_ERROR_HPP_
