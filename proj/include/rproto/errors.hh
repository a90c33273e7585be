#ifndef RPROTO_ERRORS_HH_
#define RPROTO_ERRORS_HH_

#include <stdexcept>
#include <string>

namespace rproto {

enum class ErrorCode {
  ParseError,         // malformed protocol source
  UndeclaredSymbol,   // unknown location or datum
  DuplicateSymbol,    // redeclared location or datum
  DeadlockLocation,   // location without outgoing transition
  IncompleteReads,    // read-totality violated under the strict policy
  AtomicUnsupported,  // operation requires a non-atomic protocol
  ResourceLimit,      // node or basis cap exceeded
  UncertifiedVerdict, // bounds requested from an uncertified verdict
  UnknownLocation,    // trace is not over the expected location set
  UnsupportedParameter,
  Usage,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace rproto

#endif
