#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "adrcode/selection.hpp"
#include "adrcode/terminology.hpp"

namespace adrcode {

/// A locution that stands for exactly one official term.
struct PseudoTerm {
  std::string pseudo_text;
  std::string target_llt_id;

  friend bool operator==(const PseudoTerm&, const PseudoTerm&) = default;
};

/// Reads `pseudo_text,target_llt_id` rows (header optional). Every target must
/// be an official term of `terminology`; otherwise LoadError naming the row.
std::vector<PseudoTerm> load_pseudo_lexicon(const std::filesystem::path& path,
                                            const Terminology& terminology,
                                            const NormalizeOptions& options = {});
std::vector<PseudoTerm> load_pseudo_lexicon(std::istream& in, const std::string& source_name,
                                            const Terminology& terminology,
                                            const NormalizeOptions& options = {});

void write_pseudo_lexicon(std::ostream& out, std::span<const PseudoTerm> lexicon);

struct VariantPair {
  std::string noun;
  std::string adjective;
};

/// aumento/aumentato, diminuzione/diminuito, riduzione/ridotto.
std::vector<VariantPair> default_variant_pairs();

/// For each official term containing a pair's noun (adjective), emits the term
/// with that word swapped for the adjective (noun). Duplicates are dropped.
std::vector<PseudoTerm> generate_variants(const Terminology& terminology,
                                          std::span<const VariantPair> pairs,
                                          const NormalizeOptions& options = {});

/// Adds the locutions as searchable pseudo entries. Each copies the PT of its
/// target and gets a synthetic id `~<target>.<n>`.
void add_pseudo_terms(Terminology& terminology, std::span<const PseudoTerm> lexicon,
                      const WordSet& stop_words, const NormalizeOptions& options = {});

/// Replaces winners that are pseudo entries with their official term (keeping
/// provenance) and merges winners that end up with the same llt_id; the first
/// occurrence keeps its place.
std::vector<Winner> resolve_synonyms(std::vector<Winner> winners, const Terminology& terminology);

}  // namespace adrcode
