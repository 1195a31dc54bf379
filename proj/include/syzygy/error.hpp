#pragma once

#include <stdexcept>
#include <string>

namespace syzygy {

/// Base class for every library error. What() carries a human-readable
/// description including the offending values where cheap to produce.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input is syntactically or structurally invalid (bad JSON, bad CLI value).
struct BadInput : Error {
    using Error::Error;
};

/// A geometric precondition failed (degenerate configuration).
struct DegenerateInput : Error {
    using Error::Error;
};

struct IdenticalLines : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
struct IdenticalPoints : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
struct DegenerateConic : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
struct PointsNotOnConic : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
struct SingularPoint : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
struct LineInsideCurve : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
/// Random draw produced an inadmissible configuration; caller resamples.
struct DegenerateChoice : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
struct DegenerateArrangement : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
struct NotGeneric : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};
struct EmptyViewport : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};

/// Polynomial-arithmetic contract violations.
struct DegreeMismatch : Error {
    using Error::Error;
};
struct NotDivisible : Error {
    using Error::Error;
};
struct DegreeTooLow : Error {
    using Error::Error;
};

/// Curve-fitting outcomes that contradict a requested uniqueness.
struct NoCurve : Error {
    using Error::Error;
};
struct NotUnique : Error {
    using Error::Error;
};
struct BadPartition : Error {
    using Error::Error;
};
struct BadOnConicCount : Error {
    using Error::Error;
};

/// A verified classical statement failed on valid input. This is never
/// expected; callers surface it as a hard failure, not a usage error.
struct TheoremViolation : Error {
    using Error::Error;
};

}  // namespace syzygy
