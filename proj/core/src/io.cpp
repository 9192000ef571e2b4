#include "quasi/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "quasi/errors.hpp"

namespace quasi {

Format parse_format(std::string_view name) {
  if (name == "bytes") return Format::kBytes;
  if (name == "ints") return Format::kInts;
  throw ParameterError("unknown format '" + std::string(name) +
                       "' (expected bytes or ints)");
}

LetterReader::LetterReader(std::istream& in, Format format)
    : in_(in), format_(format) {}

std::optional<Letter> LetterReader::next() {
  if (format_ == Format::kBytes) {
    const int c = in_.get();
    if (c == std::char_traits<char>::eof()) return std::nullopt;
    if (c == '\n' && in_.peek() == std::char_traits<char>::eof()) {
      return std::nullopt;
    }
    return static_cast<Letter>(static_cast<unsigned char>(c)) + 1;
  }
  std::string token;
  if (!(in_ >> token)) return std::nullopt;
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 1 || value > 0xffffffffUL) {
    throw ParameterError("malformed letter token '" + token + "'");
  }
  return static_cast<Letter>(value);
}

Text read_text(std::istream& in, Format format, Letter sigma) {
  LetterReader reader(in, format);
  std::vector<Letter> letters;
  while (auto l = reader.next()) letters.push_back(*l);
  if (format == Format::kBytes) return Text(std::move(letters), 256);
  Letter top = 1;
  for (Letter l : letters) top = std::max(top, l);
  return Text(std::move(letters), sigma == 0 ? top : sigma);
}

Text parse_text(std::string_view s, Format format, Letter sigma) {
  std::istringstream in{std::string(s)};
  return read_text(in, format, sigma);
}

void write_text(std::ostream& out, const Text& t, Format format) {
  if (format == Format::kInts) {
    out << t.to_ints() << '\n';
    return;
  }
  if (t.sigma() <= 26) {
    out << t.to_alpha();
  } else {
    out << t.to_bytes();
  }
}

}  // namespace quasi
