#include "quasi/text.hpp"

#include <algorithm>
#include <string>

#include "quasi/errors.hpp"

namespace quasi {

Text::Text(std::vector<Letter> letters, Letter sigma)
    : letters_(std::move(letters)), sigma_(sigma) {
  if (sigma_ < 1) throw ParameterError("alphabet size must be at least 1");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > sigma_) {
      throw ParameterError("letter " + std::to_string(letters_[i]) +
                           " at index " + std::to_string(i) +
                           " outside [1, " + std::to_string(sigma_) + "]");
    }
  }
}

Text Text::from_bytes(std::string_view bytes) {
  std::vector<Letter> letters(bytes.size());
  std::transform(bytes.begin(), bytes.end(), letters.begin(), [](char c) {
    return static_cast<Letter>(static_cast<unsigned char>(c)) + 1;
  });
  return Text(std::move(letters), 256);
}

Text Text::from_alpha(std::string_view s, Letter sigma) {
  std::vector<Letter> letters;
  letters.reserve(s.size());
  Letter top = 1;
  for (char c : s) {
    if (c < 'a' || c > 'z') {
      throw ParameterError(std::string("not a lowercase letter: '") + c + "'");
    }
    letters.push_back(static_cast<Letter>(c - 'a' + 1));
    top = std::max(top, letters.back());
  }
  return Text(std::move(letters), sigma == 0 ? top : sigma);
}

Text Text::substr(std::size_t offset, std::size_t length) const {
  if (offset > size() || length > size() - offset) {
    throw ParameterError("substring out of range");
  }
  Text out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(offset),
                      letters_.begin() +
                          static_cast<std::ptrdiff_t>(offset + length));
  out.sigma_ = sigma_;
  return out;
}

std::string Text::to_alpha() const {
  if (sigma_ > 26) throw ParameterError("alphabet too large for to_alpha");
  std::string s(size(), ' ');
  std::transform(begin(), end(), s.begin(),
                 [](Letter l) { return static_cast<char>('a' + l - 1); });
  return s;
}

std::string Text::to_bytes() const {
  if (sigma_ > 256) throw ParameterError("alphabet too large for bytes");
  std::string s(size(), '\0');
  std::transform(begin(), end(), s.begin(), [](Letter l) {
    return static_cast<char>(static_cast<unsigned char>(l - 1));
  });
  return s;
}

std::string Text::to_ints() const {
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters_[i]);
  }
  return s;
}

std::size_t hamming(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) throw ParameterError("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace quasi
