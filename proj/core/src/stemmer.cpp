#include "adrcode/stemmer.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>

#include "adrcode/error.hpp"
#include "adrcode/text.hpp"

namespace adrcode {
namespace {

bool is_light_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'à': case U'á': case U'è': case U'é': case U'ì':
    case U'í': case U'ò': case U'ó': case U'ù': case U'ú':
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Snowball Italian
// ---------------------------------------------------------------------------

bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'à': case U'è': case U'ì': case U'ò': case U'ù':
      return true;
    default:
      return false;
  }
}

bool is_aeio(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o':
    case U'à': case U'è': case U'ì': case U'ò':
      return true;
    default:
      return false;
  }
}

class ItalianWord {
 public:
  explicit ItalianWord(std::u32string w) : s_(std::move(w)) {
    prelude();
    mark_regions();
  }

  std::string finish() {
    for (auto& c : s_) {
      if (c == U'I') c = U'i';
      if (c == U'U') c = U'u';
    }
    return utf8_encode(s_);
  }

  void attached_pronoun() {
    static const std::initializer_list<std::u32string_view> kPronouns = {
        U"ci",     U"gli",    U"la",     U"le",     U"li",   U"lo",   U"mi",
        U"ne",     U"si",     U"ti",     U"vi",     U"sene", U"gliela", U"gliele",
        U"glieli", U"glielo", U"gliene", U"mela",   U"mele", U"meli", U"melo",
        U"mene",   U"tela",   U"tele",   U"teli",   U"telo", U"tene", U"cela",
        U"cele",   U"celi",   U"celo",   U"cene",   U"vela", U"vele", U"veli",
        U"velo",   U"vene"};
    const auto pronoun = longest_suffix(kPronouns, s_.size());
    if (pronoun.empty()) return;
    const std::size_t pron_start = s_.size() - pronoun.size();

    static const std::initializer_list<std::u32string_view> kGerund = {U"ando", U"endo"};
    static const std::initializer_list<std::u32string_view> kInfinitive = {U"ar", U"er", U"ir"};
    const auto gerund = longest_suffix(kGerund, pron_start);
    const auto infinitive = longest_suffix(kInfinitive, pron_start);
    // Both groups live in one among(); the longest candidate wins.
    if (gerund.empty() && infinitive.empty()) return;
    const bool is_gerund = gerund.size() >= infinitive.size();
    const std::size_t before_start = pron_start - (is_gerund ? gerund.size() : infinitive.size());
    if (before_start < pv_) return;
    s_.erase(pron_start);
    if (!is_gerund) s_ += U'e';
  }

  bool standard_suffix() {
    static const std::initializer_list<std::u32string_view> kGroupDelete = {
        U"anza",  U"anze",  U"ico",  U"ici",  U"ica",    U"ice",    U"iche", U"ichi",
        U"ismo",  U"ismi",  U"abile", U"abili", U"ibile", U"ibili", U"ista", U"iste",
        U"isti",  U"istà",  U"istè", U"istì", U"oso",    U"osi",    U"osa",  U"ose",
        U"mente", U"atrice", U"atrici", U"ante", U"anti"};
    static const std::initializer_list<std::u32string_view> kAzione = {U"azione", U"azioni",
                                                                       U"atore", U"atori"};
    static const std::initializer_list<std::u32string_view> kLogia = {U"logia", U"logie"};
    static const std::initializer_list<std::u32string_view> kUzione = {U"uzione", U"uzioni",
                                                                       U"usione", U"usioni"};
    static const std::initializer_list<std::u32string_view> kEnza = {U"enza", U"enze"};
    static const std::initializer_list<std::u32string_view> kAmento = {U"amento", U"amenti",
                                                                       U"imento", U"imenti"};
    static const std::initializer_list<std::u32string_view> kAmente = {U"amente"};
    static const std::initializer_list<std::u32string_view> kIta = {U"ità"};
    static const std::initializer_list<std::u32string_view> kIvo = {U"ivo", U"ivi", U"iva",
                                                                    U"ive"};

    enum class Group { kDelete, kAzione, kLogia, kUzione, kEnza, kAmento, kAmente, kIta, kIvo };
    struct Candidate {
      std::u32string_view suffix;
      Group group;
    };
    const std::array<Candidate, 9> candidates = {{
        {longest_suffix(kGroupDelete, s_.size()), Group::kDelete},
        {longest_suffix(kAzione, s_.size()), Group::kAzione},
        {longest_suffix(kLogia, s_.size()), Group::kLogia},
        {longest_suffix(kUzione, s_.size()), Group::kUzione},
        {longest_suffix(kEnza, s_.size()), Group::kEnza},
        {longest_suffix(kAmento, s_.size()), Group::kAmento},
        {longest_suffix(kAmente, s_.size()), Group::kAmente},
        {longest_suffix(kIta, s_.size()), Group::kIta},
        {longest_suffix(kIvo, s_.size()), Group::kIvo},
    }};
    const auto best = std::max_element(candidates.begin(), candidates.end(),
                                       [](const Candidate& a, const Candidate& b) {
                                         return a.suffix.size() < b.suffix.size();
                                       });
    if (best->suffix.empty()) return false;
    const std::size_t start = s_.size() - best->suffix.size();

    switch (best->group) {
      case Group::kDelete:
        if (start < p2_) return false;
        s_.erase(start);
        return true;
      case Group::kAzione:
        if (start < p2_) return false;
        s_.erase(start);
        delete_if_suffix_in(U"ic", p2_);
        return true;
      case Group::kLogia:
        if (start < p2_) return false;
        s_.replace(start, std::u32string::npos, U"log");
        return true;
      case Group::kUzione:
        if (start < p2_) return false;
        s_.replace(start, std::u32string::npos, U"u");
        return true;
      case Group::kEnza:
        if (start < p2_) return false;
        s_.replace(start, std::u32string::npos, U"ente");
        return true;
      case Group::kAmento:
        if (start < pv_) return false;
        s_.erase(start);
        return true;
      case Group::kAmente: {
        if (start < p1_) return false;
        s_.erase(start);
        static const std::initializer_list<std::u32string_view> kAfter = {U"iv", U"os", U"ic",
                                                                          U"abil"};
        const auto prev = longest_suffix(kAfter, s_.size());
        if (!prev.empty() && s_.size() - prev.size() >= p2_) {
          s_.erase(s_.size() - prev.size());
          if (prev == U"iv") delete_if_suffix_in(U"at", p2_);
        }
        return true;
      }
      case Group::kIta: {
        if (start < p2_) return false;
        s_.erase(start);
        static const std::initializer_list<std::u32string_view> kAfter = {U"abil", U"ic", U"iv"};
        const auto prev = longest_suffix(kAfter, s_.size());
        if (!prev.empty() && s_.size() - prev.size() >= p2_) s_.erase(s_.size() - prev.size());
        return true;
      }
      case Group::kIvo:
        if (start < p2_) return false;
        s_.erase(start);
        if (delete_if_suffix_in(U"at", p2_)) delete_if_suffix_in(U"ic", p2_);
        return true;
    }
    return false;
  }

  bool verb_suffix() {
    static const std::initializer_list<std::u32string_view> kVerb = {
        U"ammo",    U"ando",     U"ano",    U"are",    U"arono",  U"asse",   U"assero",
        U"assi",    U"assimo",   U"ata",    U"ate",    U"ati",    U"ato",    U"ava",
        U"avamo",   U"avano",    U"avate",  U"avi",    U"avo",    U"emmo",   U"enda",
        U"ende",    U"endi",     U"endo",   U"erà",    U"erai",   U"eranno", U"ere",
        U"erebbe",  U"erebbero", U"erei",   U"eremmo", U"eremo",  U"ereste", U"eresti",
        U"erete",   U"erò",      U"erono",  U"essero", U"ete",    U"eva",    U"evamo",
        U"evano",   U"evate",    U"evi",    U"evo",    U"Yamo",   U"iamo",   U"immo",
        U"irà",     U"irai",     U"iranno", U"ire",    U"irebbe", U"irebbero", U"irei",
        U"iremmo",  U"iremo",    U"ireste", U"iresti", U"irete",  U"irò",    U"irono",
        U"isca",    U"iscano",   U"isce",   U"isci",   U"isco",   U"iscono", U"issero",
        U"ita",     U"ite",      U"iti",    U"ito",    U"iva",    U"ivamo",  U"ivano",
        U"ivate",   U"ivi",      U"ivo",    U"ono",    U"uta",    U"ute",    U"uti",
        U"uto",     U"ar",       U"ir"};
    // The search is confined to RV.
    const auto suffix = longest_suffix(kVerb, s_.size(), pv_);
    if (suffix.empty()) return false;
    s_.erase(s_.size() - suffix.size());
    return true;
  }

  void vowel_suffix() {
    if (!s_.empty() && is_aeio(s_.back()) && s_.size() - 1 >= pv_) {
      s_.pop_back();
      if (!s_.empty() && s_.back() == U'i' && s_.size() - 1 >= pv_) s_.pop_back();
    }
    if (s_.size() >= 2 && s_.back() == U'h') {
      const char32_t prev = s_[s_.size() - 2];
      if ((prev == U'c' || prev == U'g') && s_.size() - 2 >= pv_) s_.pop_back();
    }
  }

 private:
  // Longest entry of `suffixes` that ends at `end` and starts at or after `floor`.
  std::u32string_view longest_suffix(std::initializer_list<std::u32string_view> suffixes,
                                     std::size_t end, std::size_t floor = 0) const {
    std::u32string_view best;
    const std::u32string_view head = std::u32string_view(s_).substr(0, end);
    for (auto suffix : suffixes) {
      if (suffix.size() <= best.size() || suffix.size() > head.size()) continue;
      if (head.size() - suffix.size() < floor) continue;
      if (head.ends_with(suffix)) best = suffix;
    }
    return best;
  }

  bool delete_if_suffix_in(std::u32string_view suffix, std::size_t region) {
    if (!std::u32string_view(s_).ends_with(suffix)) return false;
    const std::size_t start = s_.size() - suffix.size();
    if (start < region) return false;
    s_.erase(start);
    return true;
  }

  void prelude() {
    for (std::size_t i = 0; i < s_.size(); ++i) {
      switch (s_[i]) {
        case U'á': s_[i] = U'à'; break;
        case U'é': s_[i] = U'è'; break;
        case U'í': s_[i] = U'ì'; break;
        case U'ó': s_[i] = U'ò'; break;
        case U'ú': s_[i] = U'ù'; break;
        case U'q':
          if (i + 1 < s_.size() && s_[i + 1] == U'u') {
            s_[i + 1] = U'U';
            ++i;
          }
          break;
        default:
          break;
      }
    }
    // i and u between vowels are consonants.
    for (std::size_t j = 0; j + 2 < s_.size(); ++j) {
      if (!is_vowel(s_[j])) continue;
      const char32_t mid = s_[j + 1];
      if ((mid == U'u' || mid == U'i') && is_vowel(s_[j + 2])) {
        s_[j + 1] = mid == U'u' ? U'U' : U'I';
      }
    }
  }

  std::size_t gopast(bool want_vowel, std::size_t from) const {
    for (std::size_t i = from; i < s_.size(); ++i) {
      if (is_vowel(s_[i]) == want_vowel) return i + 1;
    }
    return s_.size();
  }

  void mark_regions() {
    const std::size_t n = s_.size();
    pv_ = n;
    if (n >= 2) {
      const bool v0 = is_vowel(s_[0]);
      const bool v1 = is_vowel(s_[1]);
      if (!v1) {
        pv_ = gopast(true, 2);
      } else if (v0) {
        pv_ = gopast(false, 2);
      } else if (n >= 3) {
        pv_ = 3;
      }
    }
    p1_ = gopast(false, gopast(true, 0));
    p2_ = gopast(false, gopast(true, p1_));
  }

  std::u32string s_;
  std::size_t pv_ = 0;
  std::size_t p1_ = 0;
  std::size_t p2_ = 0;
};

}  // namespace

std::string LightStemmer::stem(std::string_view word) const {
  std::u32string s = utf8_decode(word);
  while (s.size() > 2 && is_light_vowel(s.back())) s.pop_back();
  return utf8_encode(s);
}

std::string SnowballItalianStemmer::stem(std::string_view word) const {
  ItalianWord w(utf8_decode(word));
  w.attached_pronoun();
  if (!w.standard_suffix()) w.verb_suffix();
  w.vowel_suffix();
  return w.finish();
}

std::unique_ptr<Stemmer> make_stemmer(std::string_view name) {
  if (name == "light") return std::make_unique<LightStemmer>();
  if (name == "aggressive") return std::make_unique<SnowballItalianStemmer>();
  throw Error("unknown stemmer '" + std::string(name) + "' (expected light|aggressive)");
}

}  // namespace adrcode
