#pragma once

#include <stdexcept>
#include <string>

namespace tlgram {

/// A size parameter is outside the supported desk-scale range.
class GuardError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Text or JSON input does not describe a valid object.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tlgram
