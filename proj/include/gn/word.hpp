#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gn/group.hpp"

namespace gn {

/// One factor of a generator word: a generator letter with an integer
/// exponent.  Letters are 's' (sigma), 't' (tau), 'r' (rho).
struct WordFactor {
  char gen = 's';
  int64_t exp = 1;

  friend bool operator==(const WordFactor&, const WordFactor&) = default;
};

/// A word over the generators; the empty word denotes the identity.
struct ElementWord {
  std::vector<WordFactor> factors;

  friend bool operator==(const ElementWord&, const ElementWord&) = default;
};

/// Parse failure with the byte offset of the offending position.
class WordParseError : public std::runtime_error {
 public:
  WordParseError(std::string message, size_t offset)
      : std::runtime_error(std::move(message)), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Parses "s*t^3"-style words: factors joined by '*', each a letter from
/// {s,t,r} with an optional integer exponent after '^' (negative allowed).
/// Whitespace is ignored.  Throws WordParseError with position info on
/// unknown letters, malformed exponents, or empty operands.
ElementWord parse_element_word(const std::string& text);

/// Inverse of parse_element_word for display; the empty word renders as "".
std::string render_word(const ElementWord& w);

/// Same word with sigma/tau/rho letters, for human-facing output.
std::string render_word_unicode(const ElementWord& w);

/// Fold over mul/pow.
Element eval_word(const GroupParams& g, const ElementWord& w);

/// Normal form of x written as a word (exponent-zero factors dropped).
ElementWord element_to_word(Element x);

/// Helpers for building fixture words in code; ws("s^2*t^2") etc.
ElementWord word(const std::string& text);

}  // namespace gn
