#include "gold.hpp"

namespace adrcode::testing {

EncodingResult result_with(const std::vector<std::string>& llt_ids, std::size_t candidates) {
  EncodingResult r;
  for (const auto& id : llt_ids) {
    Winner w;
    w.llt_id = id;
    r.winners.push_back(w);
  }
  r.candidate_count = candidates ? candidates : llt_ids.size();
  return r;
}

GoldFixture make_gold_fixture() {
  GoldFixture f;
  // PT "P<p>" owns LLTs "<p>1" and "<p>2".
  for (int p = 0; p < 10; ++p) {
    for (int s = 1; s <= 2; ++s) {
      auto e = make_term(std::to_string(p * 10 + s), "term " + std::to_string(p * 10 + s), {});
      e.pt_id = "P" + std::to_string(p);
      e.pt_text = "pt " + std::to_string(p);
      f.terminology.add(std::move(e));
    }
  }

  constexpr std::size_t kLengths[kLengthClasses] = {12, 33, 77, 180, 300};
  for (int k = 0; k < 50; ++k) {
    const int cls = k % 5;
    const int tp = k % 4;
    const int fp = (k / 3) % 3;
    const int fn = (k / 7) % 3;

    GoldCase c;
    c.id = "case" + std::to_string(k);
    c.text = std::string(kLengths[cls], 'a');
    c.text.replace(0, c.id.size(), c.id);
    std::vector<std::string> automatic;
    int pt = 0;
    for (int i = 0; i < tp; ++i, ++pt) {
      c.gold_llt_ids.push_back(std::to_string(pt * 10 + 1));
      automatic.push_back(std::to_string(pt * 10 + 2));
    }
    for (int i = 0; i < fp; ++i, ++pt) automatic.push_back(std::to_string(pt * 10 + 1));
    for (int i = 0; i < fn; ++i, ++pt) c.gold_llt_ids.push_back(std::to_string(pt * 10 + 2));

    f.answers[c.text] = result_with(automatic);
    f.corpus.push_back(std::move(c));
    auto& e = f.expected[cls];
    ++e.reports;
    e.tp += tp;
    e.fp += fp;
    e.fn += fn;
  }
  return f;
}

}  // namespace adrcode::testing
