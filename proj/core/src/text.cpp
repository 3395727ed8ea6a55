#include "adrcode/text.hpp"

#include <fstream>

#include "adrcode/error.hpp"

namespace adrcode {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t cp;
  std::size_t length;
};

Decoded decode_one(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};

  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {kReplacement, 1};
  }
  if (i + len > s.size()) return {kReplacement, 1};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {kReplacement, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong encodings and surrogates.
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {kReplacement, 1};
  }
  return {cp, len};
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_separator(char32_t cp) {
  if (cp < 0x80) {
    const bool alnum = (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
                       (cp >= '0' && cp <= '9');
    return !alnum;
  }
  // Latin-1 punctuation and symbols, multiplication/division signs.
  if (cp >= 0x80 && cp <= 0xBF) return true;
  if (cp == 0xD7 || cp == 0xF7) return true;
  // General punctuation, super/subscripts, currency, arrows, math operators.
  if (cp >= 0x2000 && cp <= 0x22FF) return true;
  // CJK symbols, ideographic space.
  if (cp >= 0x3000 && cp <= 0x303F) return true;
  if (cp == 0xFEFF) return true;
  return false;
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A alternates upper/lower in pairs.
  if (cp >= 0x100 && cp <= 0x137 && (cp % 2 == 0)) return cp + 1;
  return cp;
}

char32_t fold_accent(char32_t cp) {
  if (cp < 0xE0 || cp > 0xFF) return cp;
  static constexpr char32_t kFold[] = {
      U'a', U'a', U'a', U'a', U'a', U'a', 0xE6, U'c',  // E0-E7
      U'e', U'e', U'e', U'e', U'i', U'i', U'i', U'i',  // E8-EF
      0xF0, U'n', U'o', U'o', U'o', U'o', U'o', 0xF7,  // F0-F7
      U'o', U'u', U'u', U'u', U'u', U'y', 0xFE, U'y',  // F8-FF
  };
  return kFold[cp - 0xE0];
}

}  // namespace

std::u32string utf8_decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto d = decode_one(text, i);
    out.push_back(d.cp);
    i += d.length;
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

std::size_t codepoint_count(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); ++n) i += decode_one(text, i).length;
  return n;
}

std::vector<RawToken> tokenize(std::string_view text, const NormalizeOptions& options) {
  std::vector<RawToken> tokens;
  std::string current;
  std::size_t start = 0;

  const auto flush = [&](std::size_t end) {
    if (!current.empty()) {
      tokens.push_back({std::move(current), {start, end}});
      current.clear();
    }
  };

  for (std::size_t i = 0; i < text.size();) {
    const auto d = decode_one(text, i);
    if (is_separator(d.cp)) {
      flush(i);
    } else {
      if (current.empty()) start = i;
      char32_t cp = to_lower(d.cp);
      if (options.fold_accents) cp = fold_accent(cp);
      append_utf8(current, cp);
    }
    i += d.length;
  }
  flush(text.size());
  return tokens;
}

std::string normalize(std::string_view text, const NormalizeOptions& options) {
  std::string out;
  for (const auto& token : tokenize(text, options)) {
    if (!out.empty()) out.push_back(' ');
    out += token.text;
  }
  return out;
}

WordSet load_word_list(const std::filesystem::path& path, const NormalizeOptions& options) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open word list: " + path.string());

  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (auto& token : tokenize(line, options)) words.insert(std::move(token.text));
  }
  return words;
}

}  // namespace adrcode
