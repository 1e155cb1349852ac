#pragma once

#include <stdexcept>
#include <string>

namespace bt1 {

// Stable error codes so callers (CLI, tests) can branch without parsing
// messages.  Names describe the precondition that was violated.
enum class Errc {
  EmptyWord,
  NotMixed,
  NotPrimitive,
  ParseError,
  UnknownElement,
  ChainNotTotal,
  InvalidCanonicalType,
  NotSelfDual,
  NotPrimitiveMultiset,
  InconsistentMultiplicities,
  NotCoprime,
  NotPrime,
  UseP2Module,
  RationalCurve,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bt1
