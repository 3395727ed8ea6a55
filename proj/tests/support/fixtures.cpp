#include "fixtures.hpp"

#include "adrcode/text.hpp"

namespace adrcode::testing {

std::filesystem::path data_dir() { return ADRCODE_DATA_DIR; }
std::filesystem::path test_data_dir() { return ADRCODE_TEST_DATA_DIR; }

Engine italian_engine() { return build_engine(load_config(data_dir() / "adrcode_it.yaml")); }

Engine english_engine() { return build_engine(load_config(data_dir() / "adrcode_en.yaml")); }

Engine worked_example_engine() {
  EngineConfig config;
  config.dictionary = test_data_dir() / "worked_en.csv";
  config.stop_words = data_dir() / "stopwords_en.txt";
  return build_engine(config);
}

std::vector<ExampleRow> italian_example_rows() {
  return {
      {"D1", "Shock anafilattico (ipotensione + rash cutaneo) 1 h dopo assunzione x os del farmaco",
       {"10002218", "10021097"}},
      {"D2",
       "gonfiore in sede di vaccinazione sx dal 5/11, febbre meno di 39,5 dal 21/11, vescicole, "
       "bolle presso la guancia dal 10/11",
       {"10069618", "10037660", "10047016", "10005191"}},
      {"D3", "Reazione locale estesa, dolore locale; cefalea e febbre per due giorni",
       {"10022052", "10033371", "10019211", "10037660"}},
  };
}

std::set<std::string> winner_pts(const EncodingResult& result) {
  std::set<std::string> out;
  for (const auto& w : result.winners) out.insert(w.pt_id);
  return out;
}

std::set<std::string> winner_ids(const EncodingResult& result) {
  std::set<std::string> out;
  for (const auto& w : result.winners) out.insert(w.llt_id);
  return out;
}

}  // namespace adrcode::testing
