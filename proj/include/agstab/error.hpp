#pragma once

#include <stdexcept>
#include <string>

namespace agstab {

/// Base of every error raised by the library. The CLI maps the three
/// categories below onto its exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, violated preconditions.
class InputError : public Error {
public:
  using Error::Error;
};

/// A size or node budget was exhausted.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// A recomputed value disagrees with a declared or embedded one.
class MismatchError : public Error {
public:
  using Error::Error;
};

class ZeroConstantTerm : public InputError {
public:
  ZeroConstantTerm() : InputError("series has zero constant term") {}
};

class NonzeroConstant : public InputError {
public:
  NonzeroConstant() : InputError("Exp requires a series with zero constant term") {}
};

class NonIntegralCoefficient : public InputError {
public:
  explicit NonIntegralCoefficient(const std::string &what) : InputError(what) {}
};

class DegreeMismatch : public InputError {
public:
  explicit DegreeMismatch(const std::string &what) : InputError(what) {}
};

class PartitionMismatch : public InputError {
public:
  explicit PartitionMismatch(const std::string &what) : InputError(what) {}
};

class CapExceeded : public BudgetError {
public:
  explicit CapExceeded(const std::string &what) : BudgetError(what) {}
};

class SearchBudgetExceeded : public BudgetError {
public:
  explicit SearchBudgetExceeded(const std::string &what) : BudgetError(what) {}
};

class VerificationFailed : public MismatchError {
public:
  explicit VerificationFailed(const std::string &what) : MismatchError(what) {}
};

class InconsistentAction : public MismatchError {
public:
  explicit InconsistentAction(const std::string &what) : MismatchError(what) {}
};

class FixtureMismatch : public MismatchError {
public:
  explicit FixtureMismatch(const std::string &what) : MismatchError(what) {}
};

} // namespace agstab
