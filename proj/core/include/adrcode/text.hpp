#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace adrcode {

/// Set of normalized words (stop words, negation cues...).
using WordSet = std::unordered_set<std::string>;

struct NormalizeOptions {
  /// Map accented Latin letters to their ASCII base ("è" -> "e").
  bool fold_accents = false;
};

/// Byte range [begin, end) into the original UTF-8 text.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct RawToken {
  std::string text;  // lowercased, never contains punctuation
  CharSpan span;
};

/// Splits on whitespace and punctuation, lowercasing every token. Works on
/// UTF-8 input; invalid sequences are replaced by U+FFFD.
std::vector<RawToken> tokenize(std::string_view text, const NormalizeOptions& options = {});

/// Lowercase, punctuation to spaces, whitespace collapsed, trimmed.
std::string normalize(std::string_view text, const NormalizeOptions& options = {});

/// Number of code points in a UTF-8 string.
std::size_t codepoint_count(std::string_view text);

std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(std::u32string_view text);

/// Reads a word list: one entry per line, `#` starts a comment. Entries are
/// normalized; a line that normalizes to several words contributes each.
WordSet load_word_list(const std::filesystem::path& path, const NormalizeOptions& options = {});

}  // namespace adrcode
