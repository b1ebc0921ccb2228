#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qf {

// Exit-code taxonomy shared with the CLI.
enum class ErrorClass : int {
  Argument = 1,
  Parse = 2,
  Budget = 3,
  Inconclusive = 4,
  Internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const noexcept { return cls_; }
  int exit_code() const noexcept { return static_cast<int>(cls_); }

 private:
  ErrorClass cls_;
};

/// Bad arguments: mismatched coefficient domains, wrong shapes, violated preconditions.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorClass::Argument, what) {}
};

/// The question is outside the supported decision procedures (e.g. norms from Q(sqrt m), m != -1).
class NotDecidable : public DomainError {
 public:
  explicit NotDecidable(const std::string& what) : DomainError("not decidable: " + what) {}
};

class NotInvertible : public DomainError {
 public:
  explicit NotInvertible(const std::string& what) : DomainError("not invertible: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorClass::Parse, what) {}
};

class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, double estimate)
      : Error(ErrorClass::Budget, what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// A randomized search ran out of attempts. Never used to report a negative answer.
class InconclusiveError : public Error {
 public:
  InconclusiveError(const std::string& what, std::uint64_t seed)
      : Error(ErrorClass::Inconclusive, what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// A mathematical invariant that must hold by theory failed; indicates a bug.
class InternalInvariantError : public Error {
 public:
  explicit InternalInvariantError(const std::string& what)
      : Error(ErrorClass::Internal, "internal invariant violated: " + what) {}
};

}  // namespace qf
