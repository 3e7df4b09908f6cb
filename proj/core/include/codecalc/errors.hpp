#pragma once

#include <stdexcept>
#include <string>

namespace codecalc {

/// Malformed textual input (bad integer token, letter outside {R,L,U}).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside an operation's domain (negative part, i < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A word that does not encode a composition (negative row, dangling L, ...).
class InvalidCodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not. Always a bug in this library.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace codecalc
