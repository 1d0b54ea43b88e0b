#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::UncoveredVertex: return "UncoveredVertex";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::MissingCoordinateFacet: return "MissingCoordinateFacet";
    case ErrorCode::MissingCoverFacet: return "MissingCoverFacet";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::LeadingTermMismatch: return "LeadingTermMismatch";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::NotQuasiForest: return "NotQuasiForest";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InfeasibleConfig: return "InfeasibleConfig";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace toric
