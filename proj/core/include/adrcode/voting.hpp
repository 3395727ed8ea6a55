#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "adrcode/terminology.hpp"
#include "adrcode/textprep.hpp"

namespace adrcode {

/// What the scan learned about one term. `voters[k]` (a description index)
/// matched the term word at `voted[k]`; `via_stem[k]` tells whether that match
/// came from the stemmed dictionary.
struct VoteRecord {
  TermIndex term = 0;
  std::vector<std::size_t> voters;
  std::vector<std::uint32_t> voted;
  std::vector<bool> via_stem;
  bool stem_used = false;

  std::size_t pair_count() const noexcept { return voters.size(); }
  std::vector<std::pair<std::size_t, std::uint32_t>> pairs() const;
  /// Number of distinct term positions matched.
  std::size_t distinct_voted() const;
};

/// Terms voted by at least one description word, in first-vote order.
class VotedSet {
 public:
  const VoteRecord* find(TermIndex term) const;
  std::span<const VoteRecord> records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// Record for `term`, created on first use.
  VoteRecord& at(TermIndex term);

 private:
  std::vector<VoteRecord> records_;
  std::vector<std::uint32_t> slot_;  // by term index, 0 = not voted, else record + 1
};

struct VoteStats {
  std::size_t postings_visited = 0;
};

/// Single left-to-right pass. Each kept word is looked up once in the exact
/// index and once (by its stem) in the stemmed index. A stemmed hit on a term
/// is ignored when the same word already voted that term exactly.
VotedSet vote(const CleanText& clean, const MetaDictionary& exact,
              const MetaDictionary* stemmed = nullptr, VoteStats* stats = nullptr);

}  // namespace adrcode
