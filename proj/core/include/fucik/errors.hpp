#pragma once

#include <stdexcept>
#include <string>

namespace fucik {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A problem definition violates a construction invariant (p not positive,
/// q negative, a weight identically zero, bad interval, ...).  The message
/// names the offending field.
class InvalidProblem : public Error {
 public:
  using Error::Error;
};

/// The shooting start point lies outside the problem interval.
class InvalidStart : public Error {
 public:
  using Error::Error;
};

/// The integrator state stopped being finite (or the step size collapsed).
class NonFiniteState : public Error {
 public:
  using Error::Error;
};

/// A weight is numerically indistinguishable from zero where a sign
/// decomposition was requested.
class DegenerateWeight : public Error {
 public:
  using Error::Error;
};

/// The pointwise coefficient ordering required by the zero comparison
/// does not hold.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

/// The requested eigenvalue branch has no eigenvalues (the weight never
/// attains the branch sign).
class BranchEmpty : public Error {
 public:
  using Error::Error;
};

/// The eigenvalue scan hit its parameter bound before finding the
/// requested number of eigenvalues.
class ScanExhausted : public Error {
 public:
  using Error::Error;
};

/// Extended-real subtraction of two like-signed infinities: the residual
/// carries no sign information.
class NoInformation : public Error {
 public:
  using Error::Error;
};

/// A monotone bracket could not be established or refined.
class BracketFailure : public Error {
 public:
  using Error::Error;
};

/// Curve index k outside the supported range (k >= 1).
class InvalidK : public Error {
 public:
  using Error::Error;
};

/// An asymptote constant is undefined because the weight lacks the
/// required sign part or the target is out of range.
class UndefinedAsymptote : public Error {
 public:
  using Error::Error;
};

/// Configuration file parsing/validation failure.  The message carries the
/// offending field path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fucik
