#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace adrcode {

/// Reduces a normalized (lowercase) word to a root form.
class Stemmer {
 public:
  virtual ~Stemmer() = default;
  virtual std::string stem(std::string_view word) const = 0;
  virtual std::string_view name() const noexcept = 0;
};

/// Final-vowel elision: drops trailing vowels (accented ones included) while
/// at least two characters remain. Collapses Italian singular/plural and
/// masculine/feminine endings ("mano", "mani" -> "man").
class LightStemmer final : public Stemmer {
 public:
  std::string stem(std::string_view word) const override;
  std::string_view name() const noexcept override { return "light"; }
};

/// The Snowball Italian stemmer. Strips derivational and verbal suffixes as
/// well, which sometimes separates forms the light stemmer keeps together
/// ("psichiatrico" -> "psichiatr" but "psichiatrici" -> "psichiatric").
class SnowballItalianStemmer final : public Stemmer {
 public:
  std::string stem(std::string_view word) const override;
  std::string_view name() const noexcept override { return "aggressive"; }
};

/// "light" or "aggressive"; throws adrcode::Error otherwise.
std::unique_ptr<Stemmer> make_stemmer(std::string_view name);

}  // namespace adrcode
