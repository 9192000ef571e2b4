#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "quasi/text.hpp"

namespace quasi {

/// bytes: one letter per byte, letter = byte + 1 (a single trailing newline
/// is ignored). ints: whitespace-separated decimal letters >= 1.
enum class Format { kBytes, kInts };

Format parse_format(std::string_view name);

/// Pulls letters one at a time; the input is read exactly once.
class LetterReader {
 public:
  LetterReader(std::istream& in, Format format);

  /// Next letter, or nullopt at end of input. Throws ParameterError on a
  /// malformed integer token.
  std::optional<Letter> next();

 private:
  std::istream& in_;
  Format format_;
};

/// Reads a whole text. For ints, sigma defaults to the largest letter seen.
Text read_text(std::istream& in, Format format, Letter sigma = 0);

/// Parses a pattern given on the command line in the same format.
Text parse_text(std::string_view s, Format format, Letter sigma = 0);

/// bytes: alphabets of size <= 26 are rendered as 'a', 'b', ...; larger
/// ones as raw bytes (letter - 1). ints: one space-separated line.
void write_text(std::ostream& out, const Text& t, Format format);

}  // namespace quasi
