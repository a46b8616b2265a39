#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qmull/pbw.hpp"

namespace qmull {

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument("column " + std::to_string(pos + 1) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Whitespace-separated letters:
//   E(a,b,M)  K(a,e)  K2(a,b,e)  KB(a,c,t)  KB2(a,b,c,t)
// with optional spaces inside the parentheses.
// An empty string is the empty word.  Indices are checked against the split.
Word parse_word(const std::string& text, const Split& split);

std::string format_word(const Word& w);

}  // namespace qmull
