#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "adrcode/engine.hpp"

namespace adrcode {

/// Everything needed to stand up an Engine. Read from a `key: value` file:
///
///     dictionary: data/toy_it.csv
///     stop_words: data/stopwords_it.txt
///     negation_lexicon: data/negations_it.txt
///     synonym_lexicon: data/pseudo_it.csv
///     generate_variants: true
///     stemmer: light            # light | aggressive
///     fold_accents: false
///     max_terms: 6
///     c3_threshold: 0.5
///     c4_threshold: 3
///     enable_c5: false
///
/// Relative paths are resolved against the config file's directory.
struct EngineConfig {
  std::optional<std::filesystem::path> dictionary;
  std::optional<std::filesystem::path> stop_words;
  std::optional<std::filesystem::path> negation_lexicon;
  std::optional<std::filesystem::path> synonym_lexicon;
  bool generate_variants = false;
  std::string stemmer = "light";
  bool fold_accents = false;
  SelectionConfig selection;
};

/// Throws Error on unknown keys or ill-typed values.
EngineConfig load_config(const std::filesystem::path& path);

/// Loads terminology, word lists and pseudo terms, then builds the indexes.
Engine build_engine(const EngineConfig& config);

}  // namespace adrcode
