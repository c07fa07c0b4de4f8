#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphphys {

enum class ErrorCode {
    OutOfRange,
    DuplicateEdgeInSimpleGraph,
    SelfLoopInSimpleGraph,
    DirectedUnsupported,
    Disconnected,
    DifferentComponents,
    NotBipartite,
    OddNodeCount,
    Acyclic,
    FormulaNotApplicable,
    NotSymmetric,
    NoConvergence,
    SingularResolvent,
    NoSuchEdge,
    BridgeOrLoop,
    NoExternalLegs,
    TooLarge,
    KTooSmall,
    EtaTooSmall,
    BadProbability,
    BadK,
    BadParams,
    DegenerateFit,
    EmptyGraph,
    DegenerateEnsemble,
    BadEpsilon,
    BadInitialState,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/**
 * Single exception type raised by the library. The code identifies the
 * failed precondition so callers (and the CLI) can report it structurally.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &what);

} // namespace graphphys
