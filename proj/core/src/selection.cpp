#include "adrcode/selection.hpp"

#include <algorithm>
#include <unordered_map>

namespace adrcode {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

std::vector<std::size_t> voter_set(const VoteRecord& record) {
  std::vector<std::size_t> set = record.voters;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace

bool llt_id_less(std::string_view a, std::string_view b) {
  if (all_digits(a) && all_digits(b)) {
    const auto sa = strip_zeros(a);
    const auto sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

std::vector<ScoredTerm> ordered_phrases_filter(std::span<const ScoredTerm> voted) {
  std::unordered_map<std::size_t, std::size_t> terms_per_voter;
  for (const auto& st : voted) {
    for (const auto v : voter_set(*st.record)) ++terms_per_voter[v];
  }

  std::vector<ScoredTerm> kept;
  kept.reserve(voted.size());
  for (const auto& st : voted) {
    const auto& rec = *st.record;
    const bool shared = std::any_of(rec.voters.begin(), rec.voters.end(),
                                    [&](std::size_t v) { return terms_per_voter[v] > 1; });
    if (shared) {
      auto pairs = rec.pairs();
      std::stable_sort(pairs.begin(), pairs.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      const bool in_order = std::is_sorted(
          pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
      if (!in_order) continue;
    }
    kept.push_back(st);
  }
  return kept;
}

void multi_sort(std::vector<ScoredTerm>& terms, bool use_distribution) {
  std::sort(terms.begin(), terms.end(), [use_distribution](const ScoredTerm& a, const ScoredTerm& b) {
    const auto& wa = a.weights;
    const auto& wb = b.weights;
    if (wa.coverage != wb.coverage) return wa.coverage < wb.coverage;
    if (wa.stem_flag != wb.stem_flag) return wa.stem_flag < wb.stem_flag;
    if (wa.pair_distance != wb.pair_distance) return wa.pair_distance < wb.pair_distance;
    if (wa.density != wb.density) return wa.density < wb.density;
    if (use_distribution && wa.distribution != wb.distribution) {
      return wa.distribution.value_or(0) < wb.distribution.value_or(0);
    }
    return llt_id_less(a.term->llt_id, b.term->llt_id);
  });
}

std::vector<ScoredTerm> select_winners(std::span<const ScoredTerm> sorted,
                                       std::size_t description_length,
                                       const SelectionConfig& config) {
  std::vector<bool> marked(description_length, false);
  std::vector<ScoredTerm> selected;

  for (const auto& st : sorted) {
    const auto& w = st.weights;
    if (!config.enable_c5 && w.coverage.num != 0) continue;
    if (!(w.pair_distance.value() < config.c3_threshold)) continue;
    if (!(w.density.value() < config.c4_threshold)) continue;

    const auto& text = st.term->normalized;
    const bool already = std::any_of(selected.begin(), selected.end(), [&](const ScoredTerm& s) {
      return s.term == st.term || s.term->normalized.starts_with(text);
    });
    if (already) continue;

    const auto& voters = st.record->voters;
    if (st.record->stem_used &&
        std::all_of(voters.begin(), voters.end(), [&](std::size_t v) { return marked[v]; })) {
      continue;
    }

    for (const auto v : voters) marked[v] = true;
    std::erase_if(selected, [&](const ScoredTerm& s) { return text.starts_with(s.term->normalized); });
    selected.push_back(st);
  }
  return selected;
}

std::vector<ScoredTerm> maximal_voters_filter(std::span<const ScoredTerm> selected) {
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(selected.size());
  for (const auto& st : selected) sets.push_back(voter_set(*st.record));

  std::vector<ScoredTerm> kept;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < selected.size() && !dominated; ++j) {
      if (i == j) continue;
      if (!std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) continue;
      dominated = sets[i].size() < sets[j].size() || j < i;
    }
    if (!dominated) kept.push_back(selected[i]);
  }
  return kept;
}

}  // namespace adrcode
