#include "quasi/streaming.hpp"

#include <algorithm>
#include <string>

#include "quasi/errors.hpp"
#include "quasi/exact.hpp"

namespace quasi {

CoverStream::CoverStream(std::size_t q) : q_(q) {
  if (q == 0) throw ParameterError("q must be at least 1");
  prefix_.reserve(q);
  window_.reserve(4 * q);
  alive_.assign(q + 1, true);
  alive_[0] = false;
}

void CoverStream::push(Letter letter) {
  if (finalized_) throw UsageError("push after finalize");
  ++seen_;
  if (dead_) return;

  Letter mapped;
  if (auto it = letter_table_.find(letter); it != letter_table_.end()) {
    mapped = it->second;
  } else if (seen_ <= q_) {
    mapped = static_cast<Letter>(letter_table_.size() + 1);
    letter_table_.emplace(letter, mapped);
  } else {
    // Not a letter of the prefix: no prefix can cover the stream.
    dead_ = true;
    std::fill(alive_.begin(), alive_.end(), false);
    window_.clear();
    window_.shrink_to_fit();
    return;
  }

  if (seen_ <= q_) prefix_.push_back(mapped);
  window_.push_back(mapped);
  peak_ = std::max(peak_, buffered());
  if (buffered() > 5 * q_) {
    throw InternalError("stream buffer exceeded 5q letters");
  }
  if (window_.size() == 4 * q_) {
    check_fragment();
    last_checked_end_ = seen_;
    window_.erase(window_.begin(),
                  window_.begin() + static_cast<std::ptrdiff_t>(2 * q_));
  }
}

void CoverStream::check_fragment() {
  ++fragments_checked_;
  const std::span<const Letter> prefix(prefix_);
  for (std::size_t c = 1; c <= q_; ++c) {
    if (alive_[c] && !is_seed(prefix.first(c), window_)) alive_[c] = false;
  }
}

std::optional<std::size_t> CoverStream::finalize() {
  if (finalized_) throw UsageError("stream already finalized");
  if (seen_ < q_) {
    throw ParameterError("stream shorter than q (" + std::to_string(seen_) +
                         " < " + std::to_string(q_) + ")");
  }
  finalized_ = true;
  if (dead_) return std::nullopt;

  // Trailing fragment: from the start of the last unfinished fragment to
  // the end of the stream, at least 2q letters unless the stream is shorter.
  if (seen_ > last_checked_end_) check_fragment();

  // Borders of P $ L, L the last q letters; the sentinel keeps them <= q.
  std::vector<Letter> joined(prefix_);
  joined.push_back(kSentinel);
  joined.insert(joined.end(), window_.end() - static_cast<std::ptrdiff_t>(q_),
                window_.end());
  const auto fail = prefix_function(joined);
  std::vector<bool> border(q_ + 1, false);
  for (std::size_t b = fail.back(); b > 0; b = fail[b - 1]) border[b] = true;
  for (std::size_t c = 1; c <= q_; ++c) {
    if (!border[c]) alive_[c] = false;
  }

  for (std::size_t c = 1; c <= q_; ++c) {
    if (alive_[c]) return c;
  }
  return std::nullopt;
}

std::vector<std::size_t> CoverStream::survivors() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 1; c <= q_; ++c) {
    if (alive_[c]) out.push_back(c);
  }
  return out;
}

std::optional<std::size_t> stream_shortest_cover(std::span<const Letter> s,
                                                 std::size_t q) {
  CoverStream stream(q);
  for (Letter l : s) stream.push(l);
  return stream.finalize();
}

}  // namespace quasi
