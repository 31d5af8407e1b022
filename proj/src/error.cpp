#include "drgmd/error.hpp"

namespace drg {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooMany: return "TooMany";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::VertexNotInGraph: return "VertexNotInGraph";
    case ErrorCode::TooLargeForFormat: return "TooLargeForFormat";
    case ErrorCode::Malformed: return "Malformed";
  }
  return "Unknown";
}

}  // namespace drg
