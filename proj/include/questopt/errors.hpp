#pragma once

#include <stdexcept>
#include <string>

namespace questopt {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid instance: dimension mismatch, bad counts,
/// non-positive cost, negative probability, senseless question row,
/// duplicate labels, or an unparsable file.
class MalformedError : public Error {
public:
  using Error::Error;
};

/// Splitting on a question whose outcome side is empty (the question was
/// senseless on the table, which violates the table invariant).
class SenselessSplitError : public Error {
public:
  using Error::Error;
};

/// Questionnaire does not match the table it is evaluated against.
class InconsistentQuestionnaireError : public Error {
public:
  using Error::Error;
};

/// A real-valued function was requested where it has no value
/// (entropy of an all-zero mass, characteristic functions of a leaf table).
class UndefinedValueError : public Error {
public:
  using Error::Error;
};

/// The table cannot support a complete questionnaire.
class IncompleteTableError : public Error {
public:
  using Error::Error;
};

/// The instance admits no solution (uncovered universe element,
/// too few questions to separate the requested number of events).
class InfeasibleError : public Error {
public:
  using Error::Error;
};

/// An exact solver was asked to exceed its configured size cap.
class CapExceededError : public Error {
public:
  using Error::Error;
};

/// A condition the code maintains by construction was observed broken.
class InternalInvariantError : public Error {
public:
  using Error::Error;
};

} // namespace questopt
