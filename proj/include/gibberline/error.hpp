#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gibberline {

enum class ErrorCode {
  kDocumentTooShort,
  kEmptyBody,
  kDegenerateVocabulary,
  kEmptyTrainingSet,
  kKTooLarge,
  kInsufficientPoints,
  kMissingDirectory,
  kCorruptModelFile,
  kInvalidArgument,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI, corpus scoring) can route on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gibberline
