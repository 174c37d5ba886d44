#pragma once

#include <stdexcept>
#include <string>

namespace alexandria {

// Malformed input: bad schema, unparsable text, out-of-range argument.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold for otherwise well-formed input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivisionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An operation requiring a torsion module received one with free rank.
class NotTorsionError : public PreconditionError {
 public:
  explicit NotTorsionError(long free_rank)
      : PreconditionError("module is not torsion: free rank " +
                          std::to_string(free_rank)),
        free_rank_(free_rank) {}
  long free_rank() const { return free_rank_; }

 private:
  long free_rank_;
};

// Documented restriction: the operation is only defined on a smaller class
// of inputs than the argument types admit.
class UnsupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace alexandria
