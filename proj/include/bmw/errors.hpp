#pragma once

#include <stdexcept>
#include <string>

namespace bmw {

// Root of every error the library throws on purpose. Anything else escaping
// the library (std::bad_alloc, ...) is a bug or a resource failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: permutations, graphs, data files, CLI labels.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid VH-datum files. All of them are parse errors for the CLI.
class BadInverse : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicatePair : public ParseError {
 public:
  using ParseError::ParseError;
};

class IncompleteDatum : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonBijectiveLink : public ParseError {
 public:
  using ParseError::ParseError;
};

// An enumeration or construction would exceed the configured cap.
class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold on the input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ActionNotFree : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotNormal : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NonSymmetricSet : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotInE : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotPrimePower : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

// A mathematical invariant that must hold on every valid input was observed
// to fail. Raised instead of silently returning a wrong answer.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bmw
