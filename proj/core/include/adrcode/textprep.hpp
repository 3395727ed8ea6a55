#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "adrcode/stemmer.hpp"
#include "adrcode/text.hpp"

namespace adrcode {

/// A kept (non stop-word) token of a description.
struct CleanToken {
  std::size_t index = 0;  // position among kept tokens
  std::string surface;    // normalized word
  std::string stem;
  CharSpan span;          // into the original text
};

/// Occurrence of a negation cue. Cues are looked up before stop-word removal,
/// so `raw_index` counts every token of the description.
struct NegationMark {
  std::size_t raw_index = 0;
  std::string word;
  CharSpan span;
};

/// The cleaned description the voting scan runs on.
struct CleanText {
  std::vector<CleanToken> tokens;
  std::vector<NegationMark> negations;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  bool negation_alert() const noexcept { return !negations.empty(); }
};

/// Drops stop words, preserving order; survivors are re-indexed from 0.
std::vector<CleanToken> remove_stop_words(const std::vector<RawToken>& tokens,
                                          const WordSet& stop_words);

struct PreprocessOptions {
  const WordSet* stop_words = nullptr;
  const WordSet* negation_cues = nullptr;
  const Stemmer* stemmer = nullptr;  // no stemmer: stem == surface
  NormalizeOptions normalize;
};

CleanText preprocess(std::string_view text, const PreprocessOptions& options);

/// Built-in negation lexicon.
WordSet default_negation_cues();

}  // namespace adrcode
