#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quasi {

using Letter = std::uint32_t;

/// Reserved symbol outside every alphabet [1, sigma].
inline constexpr Letter kSentinel = 0;

/// Immutable string over the integer alphabet [1, sigma].
///
/// Indexing through operator[] is 0-based. Positions that appear in the
/// public API of the algorithms (occurrence lists, fragment starts) are
/// 1-based and called "positions" to keep the two apart.
class Text {
 public:
  Text() = default;

  /// Throws ParameterError if a letter falls outside [1, sigma].
  Text(std::vector<Letter> letters, Letter sigma);

  /// Raw bytes; byte value b becomes letter b + 1 and sigma is 256.
  static Text from_bytes(std::string_view bytes);

  /// Lowercase ASCII; 'a' becomes 1, 'b' becomes 2, ... If sigma is 0 it
  /// defaults to the largest letter used (at least 1).
  static Text from_alpha(std::string_view s, Letter sigma = 0);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter sigma() const noexcept { return sigma_; }

  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  operator std::span<const Letter>() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// The 0-based substring [offset, offset + length).
  Text substr(std::size_t offset, std::size_t length) const;
  Text prefix(std::size_t length) const { return substr(0, length); }
  Text suffix(std::size_t length) const {
    return substr(size() - length, length);
  }

  /// Inverse of from_alpha; requires sigma <= 26.
  std::string to_alpha() const;
  /// Inverse of from_bytes; requires sigma <= 256.
  std::string to_bytes() const;
  /// Letters as space-separated decimals.
  std::string to_ints() const;

  friend bool operator==(const Text&, const Text&) = default;
  friend auto operator<=>(const Text& a, const Text& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Letter sigma_ = 1;
};

/// Number of positions where two equal-length letter sequences differ.
std::size_t hamming(std::span<const Letter> a, std::span<const Letter> b);

}  // namespace quasi
