#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Base of every error the library throws. The CLI maps the subclasses onto
// exit codes (usage = 2, resource cap = 3, everything else = 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

class ConductorError : public Error {
 public:
  using Error::Error;
};

class NotACharacterError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; this would falsify a mathematical
// identity the code relies on, so it is never swallowed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SearchFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
