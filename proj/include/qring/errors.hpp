#ifndef QRING_ERRORS_HPP
#define QRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qring {

/// Bad input: violated precondition, malformed file, invalid parameter combo.
/// CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-posed computation failed: eigensolver non-convergence, divergent
/// iteration, inconclusive probe. CLI maps this to exit code 1.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qring

#endif
