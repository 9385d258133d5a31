#ifndef BINMMS_ERRORS_HPP
#define BINMMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace binmms {

/// Root of every error the library throws on its own behalf.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size outside (0, 1], or a malformed instance.
class InvalidSizeError : public Error {
 public:
  using Error::Error;
};

/// Exact search refused because the input exceeds the configured cap.
class CapacityExceededError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the arguments does not hold.
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

/// A witness partition or scaling group is malformed.
class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

/// An allocation is not a partition of the item set.
class InvalidAllocationError : public Error {
 public:
  using Error::Error;
};

/// A constructive step whose feasibility is a proven lemma failed.
class LemmaViolationError : public Error {
 public:
  using Error::Error;
};

/// The cardinal covering loop produced an empty envy-free matching.
class AlgorithmStuckError : public Error {
 public:
  using Error::Error;
};

/// A per-agent guarantee was not met by the construction.
class TheoremViolationError : public Error {
 public:
  using Error::Error;
};

/// Internal bookkeeping went wrong (e.g. items left over after the last round).
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace binmms

#endif  // BINMMS_ERRORS_HPP
