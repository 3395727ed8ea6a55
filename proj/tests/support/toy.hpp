#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adrcode/engine.hpp"
#include "oracle.hpp"

namespace adrcode::testing {

/// Small random dictionary plus one description, built from a vocabulary with
/// many shared light stems ("mano"/"mani", "febbre"/"febbri") and a couple of
/// stop words so every filter gets exercised.
struct ToyInstance {
  std::vector<oracle::Term> terms;  // at most 30 terms of at most 4 words
  std::string description;          // at most 12 words
  std::set<std::string> stop_words;
};

ToyInstance random_toy_instance(std::mt19937_64& rng);

Engine toy_engine(const ToyInstance& instance, std::size_t max_terms = 1000);

/// Runs both implementations on the instance. Returns a description of the
/// first disagreement, or nothing when they agree stage by stage.
std::optional<std::string> compare_with_oracle(const ToyInstance& instance);

/// Checks the structural guarantees of a final term list: c1=0, c3<0.5,
/// c4<3, no term text is a prefix of another, no voter set inside another.
std::vector<std::string> winner_invariant_violations(const EncodeTrace& trace);

}  // namespace adrcode::testing
