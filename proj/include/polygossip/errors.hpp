#pragma once

#include <stdexcept>
#include <string>

namespace polygossip {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph or experiment specification.
class SpecificationError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition (e.g. non-regular graph).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a configured capability (dense size limit).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Not enough usable samples to estimate or fit a quantity.
class EstimationError : public Error {
 public:
  using Error::Error;
};

/// File I/O failure; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace polygossip
