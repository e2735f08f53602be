#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by every text front end (trees, terms, theory tokens, Rpt documents).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// hstar/hplus oracles only answer on hereditary permutations.
class OutsideInputClass : public Error {
 public:
  using Error::Error;
};

}  // namespace ptlab
