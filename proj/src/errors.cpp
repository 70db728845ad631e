#include "weaver/errors.hpp"

namespace weaver {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::provider_unavailable: return "ProviderUnavailable";
    case ErrorCode::empty_completion: return "EmptyCompletion";
    case ErrorCode::cassette_miss: return "CassetteMiss";
    case ErrorCode::no_results: return "NoResults";
    case ErrorCode::unparseable_plan: return "UnparseablePlan";
    case ErrorCode::empty_outline: return "EmptyOutline";
    case ErrorCode::invalid_text: return "InvalidText";
    case ErrorCode::too_few_documents: return "TooFewDocuments";
    case ErrorCode::file_not_found: return "FileNotFound";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::internal: return "InternalError";
  }
  return "Error";
}

}  // namespace weaver
