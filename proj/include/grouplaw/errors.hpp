#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grouplaw {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure in a law / word / group-spec string.  pos is the 0-based
// byte offset of the offending character.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos_)
      : Error(what + " at position " + std::to_string(pos_)), pos(pos_) {}
  std::size_t pos;
};

struct ArityMismatchError : Error {
  using Error::Error;
};

struct NotNormalError : Error {
  using Error::Error;
};

struct NotSolvableError : Error {
  using Error::Error;
};

struct NotNilpotentError : Error {
  using Error::Error;
};

struct InvalidActionError : Error {
  using Error::Error;
};

struct NotCoprimeError : Error {
  using Error::Error;
};

struct NotCentralError : Error {
  using Error::Error;
};

struct UnsupportedAlphabetError : Error {
  using Error::Error;
};

struct PreconditionViolatedError : Error {
  using Error::Error;
};

// A bounded search ran out of room without finding its target.
struct SearchExhaustedError : Error {
  using Error::Error;
};

}  // namespace grouplaw
