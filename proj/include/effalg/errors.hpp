#ifndef EFFALG_ERRORS_HPP
#define EFFALG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace effalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad shape, bad table, bad JSON).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its materialization cap. Carries the exact
/// size of the space as a decimal string.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::string exact_count)
      : Error(what), count_(std::move(exact_count)) {}
  const std::string& count() const noexcept { return count_; }

 private:
  std::string count_;
};

/// A carrier above the desk-scale limit was requested.
class CarrierTooLarge : public Error {
 public:
  using Error::Error;
};

/// A result contradicting a proven structural fact (should never fire).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace effalg

#endif  // EFFALG_ERRORS_HPP
