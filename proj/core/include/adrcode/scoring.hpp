#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "adrcode/terminology.hpp"
#include "adrcode/textprep.hpp"
#include "adrcode/voting.hpp"

namespace adrcode {

/// Exact non-negative ratio; compares without rounding.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
    return a.num * b.den <=> b.num * a.den;
  }
};

/// Ranking criteria of a voted term. The first three are best at 0, density
/// is best at 1.
struct WeightVector {
  Fraction coverage;        // C1: share of term words not matched
  int stem_flag = 0;        // C2: 1 if any match needed stemming
  Fraction pair_distance;   // C3: bigram distance term vs. its voters
  Fraction density;         // C4: voter spread per matched position
  std::optional<std::int64_t> distribution;  // C5: sum of matched positions
};

/// Bigram (Dice) distance: 1 - 2|B(a) ∩ B(b)| / (|B(a)| + |B(b)|) where B is
/// the multiset of adjacent character pairs taken inside each word. Inputs are
/// normalized first. Two strings without bigrams are at distance 0 when equal
/// and 1 otherwise.
Fraction pair_distance(std::string_view a, std::string_view b);

Fraction coverage(const TermEntry& term, const VoteRecord& record);
int coverage_type(const VoteRecord& record);
/// Pair distance between the term and its voter surfaces joined in voter order.
Fraction coverage_distance(const TermEntry& term, const VoteRecord& record,
                           const CleanText& clean);
Fraction coverage_density(const VoteRecord& record);
std::int64_t coverage_distribution(const VoteRecord& record);

/// A voted term with its weights; borrows from the VotedSet and Terminology.
struct ScoredTerm {
  const TermEntry* term = nullptr;
  const VoteRecord* record = nullptr;
  WeightVector weights;
};

WeightVector compute_weights(const TermEntry& term, const VoteRecord& record,
                             const CleanText& clean, bool with_distribution = false);

/// One entry per voted term, in VotedSet order.
std::vector<ScoredTerm> compute_weights(const VotedSet& voted, const Terminology& terminology,
                                        const CleanText& clean, bool with_distribution = false);

}  // namespace adrcode
