#include "adrcode/textprep.hpp"

namespace adrcode {

std::vector<CleanToken> remove_stop_words(const std::vector<RawToken>& tokens,
                                          const WordSet& stop_words) {
  std::vector<CleanToken> kept;
  kept.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (stop_words.contains(token.text)) continue;
    kept.push_back({kept.size(), token.text, token.text, token.span});
  }
  return kept;
}

CleanText preprocess(std::string_view text, const PreprocessOptions& options) {
  static const WordSet kNone;
  const auto raw = tokenize(text, options.normalize);

  CleanText clean;
  if (options.negation_cues != nullptr) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (options.negation_cues->contains(raw[i].text)) {
        clean.negations.push_back({i, raw[i].text, raw[i].span});
      }
    }
  }

  clean.tokens = remove_stop_words(raw, options.stop_words ? *options.stop_words : kNone);
  if (options.stemmer != nullptr) {
    for (auto& token : clean.tokens) token.stem = options.stemmer->stem(token.surface);
  }
  return clean;
}

WordSet default_negation_cues() { return {"non", "senza"}; }

}  // namespace adrcode
