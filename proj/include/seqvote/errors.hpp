#pragma once

#include <stdexcept>
#include <string>

namespace seqvote {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A set of strict comparisons cannot be extended to a total order.
class CycleError : public Error {
public:
  using Error::Error;
};

class UnknownCandidateError : public Error {
public:
  using Error::Error;
};

/// Structural problems with a profile: weights out of range, votes over the
/// wrong candidate set, malformed candidate names.
class InvalidProfileError : public Error {
public:
  using Error::Error;
};

/// Total vote weight must be odd so that pairwise contests never tie.
class EvenTotalWeightError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  using Error::Error;
};

class DuplicateLeafError : public Error {
public:
  using Error::Error;
};

class MissingCandidateError : public Error {
public:
  using Error::Error;
};

/// A pairwise contest was consulted whose outcome is not determined.
class IncompleteGraphError : public Error {
public:
  using Error::Error;
};

/// The estimated search size exceeds the configured budget.
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

/// A partition instance needs an even sum.
class OddSumError : public Error {
public:
  using Error::Error;
};

} // namespace seqvote
