#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "adrcode/config.hpp"
#include "adrcode/engine.hpp"

namespace adrcode::testing {

std::filesystem::path data_dir();       // shipped dictionaries and word lists
std::filesystem::path test_data_dir();  // test-only fixtures

/// data/adrcode_it.yaml: Italian toy dictionary, stop words, negation cues and
/// generated noun/adjective variants.
Engine italian_engine();
/// data/adrcode_en.yaml
Engine english_engine();
/// The four-term English dictionary of the voting walk-through.
Engine worked_example_engine();

inline constexpr const char* kWorkedExample =
    "anaphylactic shock (hypotension + cutaneous rash) 1 hour after taking the drug";

/// A description with the PTs a correct encoding must produce.
struct ExampleRow {
  std::string name;
  std::string text;
  std::set<std::string> pt_ids;
};

std::vector<ExampleRow> italian_example_rows();

std::set<std::string> winner_pts(const EncodingResult& result);
std::set<std::string> winner_ids(const EncodingResult& result);

}  // namespace adrcode::testing
