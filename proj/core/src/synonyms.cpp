#include "adrcode/synonyms.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include <boost/tokenizer.hpp>

#include "adrcode/error.hpp"

namespace adrcode {
namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\\") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::vector<PseudoTerm> load_pseudo_lexicon(const std::filesystem::path& path,
                                            const Terminology& terminology,
                                            const NormalizeOptions& options) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open pseudo lexicon: " + path.string());
  return load_pseudo_lexicon(in, path.string(), terminology, options);
}

std::vector<PseudoTerm> load_pseudo_lexicon(std::istream& in, const std::string& source_name,
                                            const Terminology& terminology,
                                            const NormalizeOptions& options) {
  using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
  std::vector<PseudoTerm> lexicon;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    std::vector<std::string> fields;
    try {
      Tokenizer tok(line, boost::escaped_list_separator<char>('\\', ',', '"'));
      fields.assign(tok.begin(), tok.end());
    } catch (const boost::escaped_list_error& e) {
      throw ParseError(source_name, line_no, std::string("malformed CSV: ") + e.what());
    }
    if (first && !fields.empty() && fields[0] == "pseudo_text") {
      first = false;
      continue;
    }
    first = false;
    if (fields.size() != 2) throw ParseError(source_name, line_no, "expected pseudo_text,target_llt_id");

    PseudoTerm pseudo{fields[0], fields[1]};
    const TermEntry* target = terminology.find(pseudo.target_llt_id);
    if (target == nullptr || target->is_pseudo()) {
      throw LoadError(source_name + ":" + std::to_string(line_no) + ": unknown target llt_id " +
                      pseudo.target_llt_id);
    }
    if (normalize(pseudo.pseudo_text, options) == normalize(target->llt_text, options)) {
      throw LoadError(source_name + ":" + std::to_string(line_no) +
                      ": pseudo text equals its target's text");
    }
    lexicon.push_back(std::move(pseudo));
  }
  return lexicon;
}

void write_pseudo_lexicon(std::ostream& out, std::span<const PseudoTerm> lexicon) {
  out << "pseudo_text,target_llt_id\n";
  for (const auto& p : lexicon) out << csv_quote(p.pseudo_text) << ',' << csv_quote(p.target_llt_id) << '\n';
}

std::vector<VariantPair> default_variant_pairs() {
  return {{"aumento", "aumentato"}, {"diminuzione", "diminuito"}, {"riduzione", "ridotto"}};
}

std::vector<PseudoTerm> generate_variants(const Terminology& terminology,
                                          std::span<const VariantPair> pairs,
                                          const NormalizeOptions& options) {
  std::vector<PseudoTerm> out;
  std::set<std::pair<std::string, std::string>> seen;

  const auto emit = [&](const TermEntry& term, const std::vector<RawToken>& tokens,
                        const std::string& from, const std::string& to) {
    bool hit = false;
    std::string text;
    for (const auto& token : tokens) {
      if (!text.empty()) text.push_back(' ');
      if (token.text == from) {
        text += to;
        hit = true;
      } else {
        text += token.text;
      }
    }
    if (hit && seen.emplace(text, term.llt_id).second) out.push_back({text, term.llt_id});
  };

  for (const auto& term : terminology.entries()) {
    if (term.is_pseudo()) continue;
    const auto tokens = tokenize(term.llt_text, options);
    for (const auto& pair : pairs) {
      const auto noun = normalize(pair.noun, options);
      const auto adjective = normalize(pair.adjective, options);
      emit(term, tokens, noun, adjective);
      emit(term, tokens, adjective, noun);
    }
  }
  return out;
}

void add_pseudo_terms(Terminology& terminology, std::span<const PseudoTerm> lexicon,
                      const WordSet& stop_words, const NormalizeOptions& options) {
  std::size_t n = 0;
  for (const auto& pseudo : lexicon) {
    const TermEntry* target = terminology.find(pseudo.target_llt_id);
    if (target == nullptr || target->is_pseudo()) {
      throw LoadError("pseudo term '" + pseudo.pseudo_text + "' targets unknown llt_id " +
                      pseudo.target_llt_id);
    }
    auto entry = make_term("~" + pseudo.target_llt_id + "." + std::to_string(++n),
                           pseudo.pseudo_text, stop_words, options);
    entry.pt_id = target->pt_id;
    entry.pt_text = target->pt_text;
    entry.hierarchy = target->hierarchy;
    entry.pseudo_target = pseudo.target_llt_id;
    terminology.add(std::move(entry));
  }
}

std::vector<Winner> resolve_synonyms(std::vector<Winner> winners, const Terminology& terminology) {
  std::vector<Winner> out;
  std::unordered_set<std::string> seen;
  for (auto& w : winners) {
    const TermEntry* entry = terminology.find(w.llt_id);
    if (entry != nullptr && entry->is_pseudo()) {
      const TermEntry* official = terminology.find(*entry->pseudo_target);
      w.via_synonym = SynonymOrigin{entry->llt_id, entry->llt_text};
      w.llt_id = official->llt_id;
      w.llt_text = official->llt_text;
      w.pt_id = official->pt_id;
      w.pt_text = official->pt_text;
    }
    if (seen.insert(w.llt_id).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace adrcode
