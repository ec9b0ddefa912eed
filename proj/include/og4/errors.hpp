#pragma once

#include <stdexcept>
#include <string>

namespace og4 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Breadth-first closure grew past the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

// Group order exceeds the bound configured for exhaustive enumeration.
struct BoundExceeded : Error {
  using Error::Error;
};

// A partition is not invariant under the acting group.
struct NotInvariant : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

// The per-orbit edge multiplicity failed to be constant.
struct InconsistentEll : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

// The group has a single orbit on arcs, so no orientation can be chosen.
struct ArcTransitive : Error {
  using Error::Error;
};

struct BadParam : Error {
  using Error::Error;
};

struct Disconnected : Error {
  using Error::Error;
};

struct NotGenerating : Error {
  using Error::Error;
};

struct NotInverseClosed : Error {
  using Error::Error;
};

struct NotAutomorphism : Error {
  using Error::Error;
};

// Inputs to a quotient-action signature are not cycle quotients with full kernels.
struct NotKernel : Error {
  using Error::Error;
};

// A reduction step expected a quotient that keeps full valency and did not get one.
struct NotACover : Error {
  using Error::Error;
};

// A classified pair matched no catalogue line, or the witness search failed.
struct NoMatch : Error {
  using Error::Error;
};

struct AssertionFailed : Error {
  using Error::Error;
};

// An internal cross-check contradicted a structural fact the code relies on.
struct TheoremViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace og4
