#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace localcert {

using VertexId = std::uint64_t;

// Every failure mode callers might want to branch on gets its own code.
// The CLI maps these to exit status 1 (bad input / reject) vs 2 (usage).
enum class ErrorCode {
  kDuplicateId,
  kUnknownEndpoint,
  kSelfLoop,
  kDisconnected,
  kUnknownVertex,
  kMissingCertificate,
  kMissingPoint,
  kNotTriangleFree,
  kInvalidEmbedding,
  kCoincidentPoints,
  kBrokenPath,
  kBadIndex,
  kNoValidOrdering,
  kInfeasibleParameters,
  kTooShortCorridor,
  kNotMember,
  kSpliceMismatch,
  kUnexpectedRejection,
  kFormatError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace localcert
