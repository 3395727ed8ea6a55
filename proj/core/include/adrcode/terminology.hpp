#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "adrcode/stemmer.hpp"
#include "adrcode/text.hpp"

namespace adrcode {

/// Dense handle of a term inside its Terminology.
using TermIndex = std::uint32_t;

struct Hierarchy {
  std::string hlt;
  std::string hlgt;
  std::string soc;
};

/// One LLT (or a pseudo-LLT standing in for one).
struct TermEntry {
  std::string llt_id;
  std::string llt_text;
  /// Normalized, stop-word-free words in term order. Never empty.
  std::vector<std::string> words;
  /// `words` joined by single spaces; used for prefix tests and pair distance.
  std::string normalized;
  std::string pt_id;
  std::string pt_text;
  Hierarchy hierarchy;
  /// Set on pseudo-LLTs: the official llt_id this locution resolves to.
  std::optional<std::string> pseudo_target;

  std::size_t size() const noexcept { return words.size(); }
  bool is_pseudo() const noexcept { return pseudo_target.has_value(); }
};

/// Builds a TermEntry from raw text. Throws LoadError if no word survives
/// stop-word removal.
TermEntry make_term(std::string llt_id, std::string llt_text, const WordSet& stop_words,
                    const NormalizeOptions& options = {});

struct TerminologyStats {
  std::size_t term_count = 0;      // m
  std::size_t distinct_words = 0;  // m'
  std::size_t max_term_size = 0;   // k
};

class Terminology {
 public:
  /// Appends an entry. Throws LoadError on a duplicate llt_id or empty word list.
  TermIndex add(TermEntry entry);

  const TermEntry& operator[](TermIndex index) const { return entries_[index]; }
  std::span<const TermEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::optional<TermIndex> index_of(std::string_view llt_id) const;
  const TermEntry* find(std::string_view llt_id) const;

  const TerminologyStats& stats() const noexcept { return stats_; }

 private:
  std::vector<TermEntry> entries_;
  std::unordered_map<std::string, TermIndex> by_id_;
  std::unordered_set<std::string> vocabulary_;
  TerminologyStats stats_;
};

/// Reads the terminology CSV (header row naming at least `llt_id` and
/// `llt_text`; `pt_id`, `pt_text`, `hlt_text`, `hlgt_text`, `soc_text` are
/// optional). Throws ParseError naming the line, LoadError on duplicates.
Terminology load_terminology(const std::filesystem::path& path, const WordSet& stop_words,
                             const NormalizeOptions& options = {});
Terminology load_terminology(std::istream& in, const std::string& source_name,
                             const WordSet& stop_words, const NormalizeOptions& options = {});

/// (term, position of the word inside the term).
struct Posting {
  TermIndex term = 0;
  std::uint32_t position = 0;

  friend bool operator==(const Posting&, const Posting&) = default;
  friend auto operator<=>(const Posting&, const Posting&) = default;
};

/// Inverted index word -> postings. Built once per Terminology; immutable.
class MetaDictionary {
 public:
  /// With a stemmer the keys are stems of the term words. A word (or stem)
  /// occurring twice in one term is posted at its first position only.
  static MetaDictionary build(const Terminology& terminology, const Stemmer* stemmer = nullptr);

  /// Empty span when the key is absent.
  std::span<const Posting> lookup(std::string_view key) const;

  bool stemmed() const noexcept { return stemmed_; }
  std::size_t key_count() const noexcept { return index_.size(); }
  std::size_t posting_count() const noexcept { return posting_count_; }
  std::size_t max_postings() const noexcept { return max_postings_; }
  double mean_postings() const noexcept {
    return index_.empty() ? 0.0 : static_cast<double>(posting_count_) / index_.size();
  }

  template <typename F>
  void for_each_key(F&& f) const {
    for (const auto& [key, postings] : index_) f(key, std::span<const Posting>(postings));
  }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::unordered_map<std::string, std::vector<Posting>, Hash, std::equal_to<>> index_;
  bool stemmed_ = false;
  std::size_t posting_count_ = 0;
  std::size_t max_postings_ = 0;
};

inline MetaDictionary build_meta_dict(const Terminology& terminology,
                                      const Stemmer* stemmer = nullptr) {
  return MetaDictionary::build(terminology, stemmer);
}

}  // namespace adrcode
