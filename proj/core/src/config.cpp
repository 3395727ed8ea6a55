#include "adrcode/config.hpp"

#include <algorithm>

#include <yaml-cpp/yaml.h>

#include "adrcode/error.hpp"
#include "adrcode/synonyms.hpp"

namespace adrcode {

EngineConfig load_config(const std::filesystem::path& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path.string());
  } catch (const YAML::Exception& e) {
    throw Error("cannot read config " + path.string() + ": " + e.what());
  }

  EngineConfig config;
  if (root.IsNull()) return config;
  if (!root.IsMap()) throw Error("config " + path.string() + ": expected key: value pairs");

  const auto base = path.parent_path();
  const auto as_path = [&](const YAML::Node& node) {
    std::filesystem::path p = node.as<std::string>();
    return p.is_relative() ? base / p : p;
  };

  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    const auto& value = kv.second;
    try {
      if (key == "dictionary") {
        config.dictionary = as_path(value);
      } else if (key == "stop_words") {
        config.stop_words = as_path(value);
      } else if (key == "negation_lexicon") {
        config.negation_lexicon = as_path(value);
      } else if (key == "synonym_lexicon") {
        config.synonym_lexicon = as_path(value);
      } else if (key == "generate_variants") {
        config.generate_variants = value.as<bool>();
      } else if (key == "stemmer") {
        config.stemmer = value.as<std::string>();
        make_stemmer(config.stemmer);  // validate early
      } else if (key == "fold_accents") {
        config.fold_accents = value.as<bool>();
      } else if (key == "max_terms") {
        const auto n = value.as<long long>();
        if (n < 1) throw Error("max_terms must be >= 1");
        config.selection.max_terms = static_cast<std::size_t>(n);
      } else if (key == "c3_threshold") {
        config.selection.c3_threshold = value.as<double>();
      } else if (key == "c4_threshold") {
        config.selection.c4_threshold = value.as<double>();
      } else if (key == "enable_c5") {
        config.selection.enable_c5 = value.as<bool>();
      } else {
        throw Error("unknown key");
      }
    } catch (const YAML::Exception& e) {
      throw Error("config " + path.string() + ": bad value for '" + key + "': " + e.what());
    } catch (const Error& e) {
      throw Error("config " + path.string() + ": '" + key + "': " + e.what());
    }
  }
  return config;
}

Engine build_engine(const EngineConfig& config) {
  if (!config.dictionary) throw Error("no dictionary configured");

  EngineOptions options;
  options.normalize.fold_accents = config.fold_accents;
  options.stemmer = config.stemmer;
  options.selection = config.selection;
  if (config.stop_words) options.stop_words = load_word_list(*config.stop_words, options.normalize);
  if (config.negation_lexicon) {
    options.negation_cues = load_word_list(*config.negation_lexicon, options.normalize);
  }

  auto terminology = load_terminology(*config.dictionary, options.stop_words, options.normalize);

  std::vector<PseudoTerm> pseudo;
  if (config.synonym_lexicon) {
    pseudo = load_pseudo_lexicon(*config.synonym_lexicon, terminology, options.normalize);
  }
  if (config.generate_variants) {
    const auto pairs = default_variant_pairs();
    auto generated = generate_variants(terminology, pairs, options.normalize);
    for (auto& p : generated) {
      if (std::find(pseudo.begin(), pseudo.end(), p) == pseudo.end()) pseudo.push_back(std::move(p));
    }
  }
  add_pseudo_terms(terminology, pseudo, options.stop_words, options.normalize);

  return Engine(std::move(terminology), std::move(options));
}

}  // namespace adrcode
