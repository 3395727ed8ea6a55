#include "synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace adrcode::testing {
namespace {

constexpr const char* kOnsets[] = {"b", "c", "d", "f", "g", "l", "m", "n", "p", "r",
                                   "s", "t", "v", "z", "br", "cr", "tr", "st", "gl", "sc"};
constexpr const char* kNuclei[] = {"a", "e", "i", "o", "u", "ia", "io"};

std::string syllables(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<std::size_t> onset(0, std::size(kOnsets) - 1);
  std::uniform_int_distribution<std::size_t> nucleus(0, std::size(kNuclei) - 1);
  std::string w;
  for (int i = 0; i < count; ++i) {
    w += kOnsets[onset(rng)];
    w += kNuclei[nucleus(rng)];
  }
  return w;
}

// Zipf(s=1) sampler over [0, n) via inverse CDF on precomputed weights.
class Zipf {
 public:
  explicit Zipf(std::size_t n) : cdf_(n) {
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) cdf_[i] = sum += 1.0 / static_cast<double>(i + 1);
    for (auto& c : cdf_) c /= sum;
  }
  std::size_t operator()(std::mt19937_64& rng) const {
    const double u = std::uniform_real_distribution<double>(0, 1)(rng);
    return std::min<std::size_t>(std::lower_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin(),
                                 cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

}  // namespace

std::vector<std::string> make_vocabulary(std::size_t n, std::mt19937_64& rng) {
  std::unordered_set<std::string> seen;
  std::vector<std::string> words;
  words.reserve(n);
  std::uniform_int_distribution<int> length(2, 5);
  while (words.size() < n) {
    auto w = syllables(rng, length(rng));
    if (seen.insert(w).second) words.push_back(std::move(w));
  }
  return words;
}

Terminology synthetic_terminology(const SyntheticShape& shape) {
  std::mt19937_64 rng(shape.seed);
  const auto vocab = make_vocabulary(shape.vocabulary + shape.stop_ranks, rng);
  const Zipf zipf(vocab.size());
  // Term sizes: mostly 1-4 words with a thin tail up to max_words.
  std::geometric_distribution<std::size_t> extra(0.45);

  Terminology terminology;
  std::unordered_set<std::string> texts;
  const WordSet no_stop_words;
  std::size_t id = 10'000'000;
  while (terminology.size() < shape.terms) {
    std::size_t size = 1 + extra(rng);
    if (terminology.size() == 0) size = shape.max_words;
    size = std::min(size, shape.max_words);
    std::string text;
    for (std::size_t k = 0; k < size; ++k) {
      std::size_t rank = zipf(rng);
      while (rank < shape.stop_ranks) rank = zipf(rng);
      if (k) text += ' ';
      text += vocab[rank];
    }
    if (!texts.insert(text).second) continue;
    auto entry = make_term(std::to_string(id), text, no_stop_words);
    entry.pt_id = std::to_string(id - id % 4);
    entry.pt_text = text;
    terminology.add(std::move(entry));
    ++id;
  }
  return terminology;
}

std::string synthetic_description_words(const Terminology& terminology, std::size_t words,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_term(0, terminology.size() - 1);
  std::bernoulli_distribution filler(0.3);
  std::string out;
  std::size_t n = 0;
  while (n < words) {
    if (filler(rng)) {
      if (!out.empty()) out += ' ';
      out += "qx" + syllables(rng, 2);
      ++n;
      continue;
    }
    const auto& term = terminology[static_cast<TermIndex>(pick_term(rng))];
    for (const auto& w : term.words) {
      if (n == words) break;
      if (!out.empty()) out += ' ';
      out += w;
      ++n;
    }
  }
  return out;
}

std::string synthetic_description(const Terminology& terminology, std::size_t chars,
                                  std::mt19937_64& rng) {
  std::string out;
  while (out.size() < chars) {
    auto next = synthetic_description_words(terminology, 1, rng);
    if (!out.empty()) out += ' ';
    out += next;
  }
  out.resize(chars);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace adrcode::testing
