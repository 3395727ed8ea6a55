#include "adrcode/scoring.hpp"

#include <algorithm>
#include <numeric>

#include "adrcode/text.hpp"

namespace adrcode {
namespace {

std::vector<std::uint64_t> word_bigrams(std::string_view normalized) {
  std::vector<std::uint64_t> out;
  const std::u32string cps = utf8_decode(normalized);
  for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
    if (cps[i] == U' ' || cps[i + 1] == U' ') continue;
    out.push_back((static_cast<std::uint64_t>(cps[i]) << 32) | cps[i + 1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t multiset_intersection(const std::vector<std::uint64_t>& a,
                                  const std::vector<std::uint64_t>& b) {
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return common;
}

}  // namespace

Fraction pair_distance(std::string_view a, std::string_view b) {
  const std::string na = normalize(a);
  const std::string nb = normalize(b);
  const auto ba = word_bigrams(na);
  const auto bb = word_bigrams(nb);
  const auto total = static_cast<std::int64_t>(ba.size() + bb.size());
  if (total == 0) return {na == nb ? 0 : 1, 1};
  const auto common = static_cast<std::int64_t>(multiset_intersection(ba, bb));
  return {total - 2 * common, total};
}

Fraction coverage(const TermEntry& term, const VoteRecord& record) {
  const auto size = static_cast<std::int64_t>(term.size());
  return {size - static_cast<std::int64_t>(record.distinct_voted()), size};
}

int coverage_type(const VoteRecord& record) { return record.stem_used ? 1 : 0; }

Fraction coverage_distance(const TermEntry& term, const VoteRecord& record,
                           const CleanText& clean) {
  std::string rebuilt;
  for (const auto voter : record.voters) {
    if (!rebuilt.empty()) rebuilt.push_back(' ');
    rebuilt += clean.tokens[voter].surface;
  }
  return pair_distance(term.normalized, rebuilt);
}

Fraction coverage_density(const VoteRecord& record) {
  const auto [lo, hi] = std::minmax_element(record.voters.begin(), record.voters.end());
  return {static_cast<std::int64_t>(*hi - *lo + 1),
          static_cast<std::int64_t>(record.distinct_voted())};
}

std::int64_t coverage_distribution(const VoteRecord& record) {
  return std::accumulate(record.voted.begin(), record.voted.end(), std::int64_t{0});
}

WeightVector compute_weights(const TermEntry& term, const VoteRecord& record,
                             const CleanText& clean, bool with_distribution) {
  WeightVector w;
  w.coverage = coverage(term, record);
  w.stem_flag = coverage_type(record);
  w.pair_distance = coverage_distance(term, record, clean);
  w.density = coverage_density(record);
  if (with_distribution) w.distribution = coverage_distribution(record);
  return w;
}

std::vector<ScoredTerm> compute_weights(const VotedSet& voted, const Terminology& terminology,
                                        const CleanText& clean, bool with_distribution) {
  std::vector<ScoredTerm> out;
  out.reserve(voted.size());
  for (const auto& record : voted.records()) {
    const auto& term = terminology[record.term];
    out.push_back({&term, &record, compute_weights(term, record, clean, with_distribution)});
  }
  return out;
}

}  // namespace adrcode
