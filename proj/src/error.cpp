#include "gibberline/error.hpp"

namespace gibberline {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDocumentTooShort: return "document too short";
    case ErrorCode::kEmptyBody: return "empty body";
    case ErrorCode::kDegenerateVocabulary: return "degenerate vocabulary";
    case ErrorCode::kEmptyTrainingSet: return "empty training set";
    case ErrorCode::kKTooLarge: return "k too large";
    case ErrorCode::kInsufficientPoints: return "insufficient points";
    case ErrorCode::kMissingDirectory: return "missing directory";
    case ErrorCode::kCorruptModelFile: return "corrupt model file";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

}  // namespace gibberline
