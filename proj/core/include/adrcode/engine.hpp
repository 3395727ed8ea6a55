#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "adrcode/scoring.hpp"
#include "adrcode/selection.hpp"
#include "adrcode/stemmer.hpp"
#include "adrcode/terminology.hpp"
#include "adrcode/textprep.hpp"
#include "adrcode/voting.hpp"

namespace adrcode {

struct EngineOptions {
  WordSet stop_words;
  WordSet negation_cues = default_negation_cues();
  std::string stemmer = "light";
  NormalizeOptions normalize;
  SelectionConfig selection;
};

/// Every intermediate stage of one encode, for inspection and tests. The
/// ScoredTerm lists point into `voted`, so a trace is move-only.
struct EncodeTrace {
  CleanText clean;
  VotedSet voted;
  VoteStats stats;
  std::vector<ScoredTerm> scored;    // all voted terms
  std::vector<ScoredTerm> phrases;   // after the ordered-phrases filter
  std::vector<ScoredTerm> sorted;
  std::vector<ScoredTerm> selected;
  std::vector<ScoredTerm> final_terms;  // after the maximal-voters filter
  EncodingResult result;

  EncodeTrace() = default;
  EncodeTrace(EncodeTrace&&) = default;
  EncodeTrace& operator=(EncodeTrace&&) = default;
  EncodeTrace(const EncodeTrace&) = delete;
  EncodeTrace& operator=(const EncodeTrace&) = delete;
};

/// Owns a terminology and its two meta-dictionaries. Immutable once built;
/// encode() may be called concurrently.
class Engine {
 public:
  Engine(Terminology terminology, EngineOptions options);

  EncodingResult encode(std::string_view text) const;
  EncodingResult encode(std::string_view text, const SelectionConfig& selection) const;
  EncodeTrace trace(std::string_view text) const;
  EncodeTrace trace(std::string_view text, const SelectionConfig& selection) const;

  CleanText preprocess(std::string_view text) const;

  const Terminology& terminology() const noexcept { return terminology_; }
  const MetaDictionary& exact_index() const noexcept { return exact_; }
  const MetaDictionary& stemmed_index() const noexcept { return stemmed_; }
  const EngineOptions& options() const noexcept { return options_; }
  const Stemmer& stemmer() const noexcept { return *stemmer_; }

 private:
  Terminology terminology_;
  EngineOptions options_;
  std::unique_ptr<Stemmer> stemmer_;
  MetaDictionary exact_;
  MetaDictionary stemmed_;
};

}  // namespace adrcode
