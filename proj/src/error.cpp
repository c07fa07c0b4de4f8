#include <graphphys/error.hpp>

namespace graphphys {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DuplicateEdgeInSimpleGraph: return "DuplicateEdgeInSimpleGraph";
    case ErrorCode::SelfLoopInSimpleGraph: return "SelfLoopInSimpleGraph";
    case ErrorCode::DirectedUnsupported: return "DirectedUnsupported";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DifferentComponents: return "DifferentComponents";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::OddNodeCount: return "OddNodeCount";
    case ErrorCode::Acyclic: return "Acyclic";
    case ErrorCode::FormulaNotApplicable: return "FormulaNotApplicable";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularResolvent: return "SingularResolvent";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::BridgeOrLoop: return "BridgeOrLoop";
    case ErrorCode::NoExternalLegs: return "NoExternalLegs";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::EtaTooSmall: return "EtaTooSmall";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::DegenerateEnsemble: return "DegenerateEnsemble";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::BadInitialState: return "BadInitialState";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

} // namespace graphphys
