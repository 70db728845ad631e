#pragma once

#include <stdexcept>
#include <string>

namespace weaver {

enum class ErrorCode {
  config,
  provider_unavailable,
  empty_completion,
  cassette_miss,
  no_results,
  unparseable_plan,
  empty_outline,
  invalid_text,
  too_few_documents,
  file_not_found,
  parse,
  internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

  // A retryable error may succeed on a later attempt against the same provider.
  bool retryable() const {
    return code_ == ErrorCode::provider_unavailable || code_ == ErrorCode::empty_completion;
  }

 private:
  ErrorCode code_;
};

}  // namespace weaver
