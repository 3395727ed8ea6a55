#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adrcode/scoring.hpp"
#include "adrcode/textprep.hpp"

namespace adrcode {

struct SelectionConfig {
  std::size_t max_terms = 6;
  double c3_threshold = 0.5;  // select only when pair distance is below
  double c4_threshold = 3.0;  // select only when density is below
  /// Rank by C5 as well and admit partially covered terms.
  bool enable_c5 = false;
};

/// Where a winner came from when it was reached through a pseudo-LLT.
struct SynonymOrigin {
  std::string pseudo_id;
  std::string pseudo_text;
};

struct Winner {
  std::string llt_id;
  std::string llt_text;
  std::string pt_id;
  std::string pt_text;
  WeightVector weights;
  std::vector<std::size_t> voters;
  std::vector<CharSpan> spans;  // spans of the voter words in the input
  bool stem_used = false;
  std::optional<SynonymOrigin> via_synonym;
};

struct EncodingResult {
  std::vector<Winner> winners;
  std::vector<NegationMark> negations;
  /// Candidates surviving every filter (after synonym merging), before the
  /// result was cut to max_terms.
  std::size_t candidate_count = 0;

  bool negation_alert() const noexcept { return !negations.empty(); }
};

/// Orders llt ids numerically when both are digit strings, lexically otherwise.
bool llt_id_less(std::string_view a, std::string_view b);

/// Drops a term when one of its voters also voted another term and its voters,
/// read in text order, match the term words out of order.
std::vector<ScoredTerm> ordered_phrases_filter(std::span<const ScoredTerm> voted);

/// Ascending on (C1, C2, C3, C4[, C5]); ties by llt_id.
void multi_sort(std::vector<ScoredTerm>& terms, bool use_distribution = false);

/// Walks the sorted list and keeps the terms that cover the description. See
/// README for the exact conditions.
std::vector<ScoredTerm> select_winners(std::span<const ScoredTerm> sorted,
                                       std::size_t description_length,
                                       const SelectionConfig& config = {});

/// Removes terms whose voter set is contained in another kept term's voter
/// set. With equal sets the earlier term wins.
std::vector<ScoredTerm> maximal_voters_filter(std::span<const ScoredTerm> selected);

template <typename T>
std::vector<T> win(std::vector<T> final_list, std::size_t n) {
  if (final_list.size() > n) final_list.resize(n);
  return final_list;
}

}  // namespace adrcode
