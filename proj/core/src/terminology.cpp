#include "adrcode/terminology.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>

#include <boost/tokenizer.hpp>

#include "adrcode/error.hpp"

namespace adrcode {
namespace {

using CsvTokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;

std::vector<std::string> split_csv(const std::string& line, const std::string& source,
                                   std::size_t line_no) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\') {
      ++i;
    } else if (line[i] == '"') {
      quoted = !quoted;
    }
  }
  if (quoted) throw ParseError(source, line_no, "malformed CSV: unterminated quote");
  try {
    CsvTokenizer tok(line, boost::escaped_list_separator<char>('\\', ',', '"'));
    return {tok.begin(), tok.end()};
  } catch (const boost::escaped_list_error& e) {
    throw ParseError(source, line_no, std::string("malformed CSV: ") + e.what());
  }
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

TermEntry make_term(std::string llt_id, std::string llt_text, const WordSet& stop_words,
                    const NormalizeOptions& options) {
  TermEntry entry;
  entry.llt_id = std::move(llt_id);
  entry.llt_text = std::move(llt_text);
  for (auto& token : tokenize(entry.llt_text, options)) {
    if (stop_words.contains(token.text)) continue;
    if (!entry.normalized.empty()) entry.normalized.push_back(' ');
    entry.normalized += token.text;
    entry.words.push_back(std::move(token.text));
  }
  if (entry.words.empty()) {
    throw LoadError("term " + entry.llt_id + " ('" + entry.llt_text +
                    "') has no words after stop-word removal");
  }
  return entry;
}

TermIndex Terminology::add(TermEntry entry) {
  if (entry.words.empty()) throw LoadError("term " + entry.llt_id + " has no words");
  if (by_id_.contains(entry.llt_id)) throw LoadError("duplicate llt_id " + entry.llt_id);

  const auto index = static_cast<TermIndex>(entries_.size());
  by_id_.emplace(entry.llt_id, index);
  for (const auto& w : entry.words) vocabulary_.insert(w);
  stats_.term_count = entries_.size() + 1;
  stats_.distinct_words = vocabulary_.size();
  stats_.max_term_size = std::max(stats_.max_term_size, entry.size());
  entries_.push_back(std::move(entry));
  return index;
}

std::optional<TermIndex> Terminology::index_of(std::string_view llt_id) const {
  const auto it = by_id_.find(std::string(llt_id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

const TermEntry* Terminology::find(std::string_view llt_id) const {
  const auto index = index_of(llt_id);
  return index ? &entries_[*index] : nullptr;
}

Terminology load_terminology(const std::filesystem::path& path, const WordSet& stop_words,
                             const NormalizeOptions& options) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open terminology file: " + path.string());
  return load_terminology(in, path.string(), stop_words, options);
}

Terminology load_terminology(std::istream& in, const std::string& source_name,
                             const WordSet& stop_words, const NormalizeOptions& options) {
  enum Column { kId, kText, kPtId, kPtText, kHlt, kHlgt, kSoc, kColumnCount };
  static constexpr std::array<std::string_view, kColumnCount> kNames = {
      "llt_id", "llt_text", "pt_id", "pt_text", "hlt_text", "hlgt_text", "soc_text"};

  Terminology terminology;
  std::string line;
  std::size_t line_no = 0;

  // Header. An empty file is an empty terminology.
  std::array<std::optional<std::size_t>, kColumnCount> where;
  std::size_t header_width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;
    const auto header = split_csv(line, source_name, line_no);
    header_width = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
      const auto name = trim(header[i]);
      for (std::size_t c = 0; c < kColumnCount; ++c) {
        if (name == kNames[c]) where[c] = i;
      }
    }
    if (!where[kId] || !where[kText]) {
      throw ParseError(source_name, line_no, "header must name llt_id and llt_text columns");
    }
    break;
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line, source_name, line_no);
    if (fields.size() > header_width) {
      throw ParseError(source_name, line_no,
                       "expected at most " + std::to_string(header_width) + " fields, got " +
                           std::to_string(fields.size()));
    }
    const auto field = [&](Column c) -> std::string {
      if (!where[c] || *where[c] >= fields.size()) return {};
      return trim(fields[*where[c]]);
    };

    auto id = field(kId);
    auto text = field(kText);
    if (id.empty()) throw ParseError(source_name, line_no, "empty llt_id");
    if (text.empty()) throw ParseError(source_name, line_no, "empty llt_text");

    TermEntry entry;
    try {
      entry = make_term(std::move(id), std::move(text), stop_words, options);
    } catch (const LoadError& e) {
      throw ParseError(source_name, line_no, e.what());
    }
    entry.pt_id = field(kPtId);
    entry.pt_text = field(kPtText);
    entry.hierarchy = {field(kHlt), field(kHlgt), field(kSoc)};
    try {
      terminology.add(std::move(entry));
    } catch (const LoadError& e) {
      throw LoadError(source_name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return terminology;
}

MetaDictionary MetaDictionary::build(const Terminology& terminology, const Stemmer* stemmer) {
  MetaDictionary dict;
  dict.stemmed_ = stemmer != nullptr;
  dict.index_.reserve(terminology.stats().distinct_words);

  std::vector<std::string> seen;
  for (TermIndex t = 0; t < terminology.size(); ++t) {
    const auto& words = terminology[t].words;
    seen.clear();
    for (std::uint32_t pos = 0; pos < words.size(); ++pos) {
      std::string key = stemmer ? stemmer->stem(words[pos]) : words[pos];
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      dict.index_[std::move(key)].push_back({t, pos});
      ++dict.posting_count_;
    }
  }
  for (const auto& [key, postings] : dict.index_) {
    dict.max_postings_ = std::max(dict.max_postings_, postings.size());
  }
  return dict;
}

std::span<const Posting> MetaDictionary::lookup(std::string_view key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return {};
  return it->second;
}

}  // namespace adrcode
