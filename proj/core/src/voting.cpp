#include "adrcode/voting.hpp"

#include <algorithm>
#include <cstdint>

namespace adrcode {

std::vector<std::pair<std::size_t, std::uint32_t>> VoteRecord::pairs() const {
  std::vector<std::pair<std::size_t, std::uint32_t>> out;
  out.reserve(voters.size());
  for (std::size_t k = 0; k < voters.size(); ++k) out.emplace_back(voters[k], voted[k]);
  return out;
}

std::size_t VoteRecord::distinct_voted() const {
  std::vector<std::uint32_t> positions = voted;
  std::sort(positions.begin(), positions.end());
  return static_cast<std::size_t>(std::unique(positions.begin(), positions.end()) -
                                  positions.begin());
}

const VoteRecord* VotedSet::find(TermIndex term) const {
  if (term >= slot_.size() || slot_[term] == 0) return nullptr;
  return &records_[slot_[term] - 1];
}

VoteRecord& VotedSet::at(TermIndex term) {
  if (term >= slot_.size()) slot_.resize(std::max<std::size_t>(term + 1, 2 * slot_.size()), 0);
  auto& slot = slot_[term];
  if (slot == 0) {
    records_.emplace_back();
    records_.back().term = term;
    slot = static_cast<std::uint32_t>(records_.size());
  }
  return records_[slot - 1];
}

VotedSet vote(const CleanText& clean, const MetaDictionary& exact, const MetaDictionary* stemmed,
              VoteStats* stats) {
  // Hits go to one flat log during the scan; records are filled at the end
  // with exact sizes. The buffers are reused by later calls on this thread.
  struct Hit {
    std::uint32_t record;
    std::uint32_t position;
    std::uint32_t voter;
    bool via_stem;
  };
  struct Scratch {
    std::vector<Hit> hits;
    std::vector<TermIndex> order;
    std::vector<std::size_t> last_voter;
    std::vector<std::uint32_t> count;
    std::vector<std::uint32_t> slot;  // by term, 0 = not voted, else record + 1
  };
  thread_local Scratch scratch;
  auto& [hits, order, last_voter, count, slot] = scratch;
  hits.clear();
  order.clear();
  last_voter.clear();
  std::size_t visited = 0;

  const auto record_of = [&](TermIndex term) {
    if (term >= slot.size()) slot.resize(std::max<std::size_t>(term + 1, 2 * slot.size()), 0);
    if (slot[term] == 0) {
      order.push_back(term);
      last_voter.push_back(SIZE_MAX);
      slot[term] = static_cast<std::uint32_t>(order.size());
    }
    return slot[term] - 1;
  };

  for (const auto& token : clean.tokens) {
    const std::size_t i = token.index;

    const auto exact_hits = exact.lookup(token.surface);
    visited += exact_hits.size();
    for (const auto& posting : exact_hits) {
      const auto r = record_of(posting.term);
      hits.push_back({r, posting.position, static_cast<std::uint32_t>(i), false});
      last_voter[r] = i;
    }

    if (stemmed == nullptr) continue;
    const auto stem_hits = stemmed->lookup(token.stem);
    visited += stem_hits.size();
    for (const auto& posting : stem_hits) {
      const auto r = record_of(posting.term);
      if (last_voter[r] == i) continue;
      hits.push_back({r, posting.position, static_cast<std::uint32_t>(i), true});
      last_voter[r] = i;
    }
  }

  count.assign(order.size(), 0);
  for (const auto& h : hits) ++count[h.record];
  VotedSet voted;
  for (std::size_t r = 0; r < order.size(); ++r) {
    auto& rec = voted.at(order[r]);
    rec.voters.reserve(count[r]);
    rec.voted.reserve(count[r]);
    rec.via_stem.reserve(count[r]);
  }
  for (const auto& h : hits) {
    auto& rec = voted.at(order[h.record]);
    rec.voters.push_back(h.voter);
    rec.voted.push_back(h.position);
    rec.via_stem.push_back(h.via_stem);
    rec.stem_used = rec.stem_used || h.via_stem;
  }
  for (const auto term : order) slot[term] = 0;

  if (stats != nullptr) stats->postings_visited = visited;
  return voted;
}

}  // namespace adrcode
