#include "adrcode/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

#include "adrcode/error.hpp"
#include "adrcode/text.hpp"

namespace adrcode {
namespace {

std::optional<double> percent(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

std::set<std::string> project_to_pt(std::span<const std::string> llt_ids,
                                    const Terminology& terminology) {
  std::set<std::string> pts;
  for (const auto& id : llt_ids) {
    const TermEntry* entry = terminology.find(id);
    if (entry == nullptr) throw EvaluationError("unknown llt_id " + id);
    if (entry->pt_id.empty()) throw EvaluationError("llt_id " + id + " has no PT");
    pts.insert(entry->pt_id);
  }
  return pts;
}

std::string id_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument("ids must be strings or integers");
}

struct Outcome {
  int length_class = 1;
  bool excluded = false;
  std::optional<CaseComparison> comparison;
  std::string error;
};

}  // namespace

std::vector<GoldCase> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open corpus: " + path.string());
  return load_corpus(in, path.string());
}

std::vector<GoldCase> load_corpus(std::istream& in, const std::string& source_name) {
  std::vector<GoldCase> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
      GoldCase c;
      c.id = id_string(j.at("id"));
      c.text = j.at("text").get<std::string>();
      for (const auto& g : j.at("gold_llt_ids")) c.gold_llt_ids.push_back(id_string(g));
      corpus.push_back(std::move(c));
    } catch (const std::exception& e) {
      throw ParseError(source_name, line_no, e.what());
    }
  }
  return corpus;
}

int length_class(std::string_view text) {
  const auto n = codepoint_count(text);
  if (n <= 20) return 1;
  if (n <= 40) return 2;
  if (n <= 100) return 3;
  if (n <= 255) return 4;
  return 5;
}

CaseComparison compare_case(std::span<const std::string> gold_llt_ids,
                            std::span<const std::string> auto_llt_ids,
                            const Terminology& terminology) {
  const auto gold = project_to_pt(gold_llt_ids, terminology);
  const auto automatic = project_to_pt(auto_llt_ids, terminology);
  CaseComparison c;
  std::set_intersection(gold.begin(), gold.end(), automatic.begin(), automatic.end(),
                        std::inserter(c.tp, c.tp.end()));
  std::set_difference(automatic.begin(), automatic.end(), gold.begin(), gold.end(),
                      std::inserter(c.fp, c.fp.end()));
  std::set_difference(gold.begin(), gold.end(), automatic.begin(), automatic.end(),
                      std::inserter(c.fn, c.fn.end()));
  return c;
}

CaseComparison compare_case(const GoldCase& gold, const EncodingResult& result,
                            const Terminology& terminology) {
  std::vector<std::string> automatic;
  automatic.reserve(result.winners.size());
  for (const auto& w : result.winners) automatic.push_back(w.llt_id);
  return compare_case(gold.gold_llt_ids, automatic, terminology);
}

std::optional<double> ClassMetrics::common_pt() const { return percent(tp, tp + fp + fn); }
std::optional<double> ClassMetrics::fn_rate() const { return percent(fn, tp + fp + fn); }
std::optional<double> ClassMetrics::fp_rate() const { return percent(fp, tp + fp + fn); }
std::optional<double> ClassMetrics::recall() const { return percent(tp, tp + fn); }
std::optional<double> ClassMetrics::precision() const { return percent(tp, tp + fp); }

void ClassMetrics::add(const CaseComparison& c) {
  ++reports;
  tp += c.tp.size();
  fp += c.fp.size();
  fn += c.fn.size();
}

EvalReport run_benchmark(std::span<const GoldCase> corpus, const EncodeFn& encode,
                         const Terminology& terminology, std::size_t max_terms) {
  if (corpus.empty()) throw Error("empty corpus");

  std::vector<Outcome> outcomes(corpus.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto& out = outcomes[i];
      const auto& gold = corpus[i];
      out.length_class = length_class(gold.text);
      try {
        const auto result = encode(gold.text);
        if (result.candidate_count > max_terms) {
          out.excluded = true;
          continue;
        }
        out.comparison = compare_case(gold, result, terminology);
      } catch (const std::exception& e) {
        out.error = e.what();
      }
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  if (workers == 1 || corpus.size() < 64) {
    work(0, corpus.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (corpus.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < corpus.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(begin + chunk, corpus.size()));
    }
  }

  EvalReport report;
  report.total_cases = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& out = outcomes[i];
    if (!out.error.empty()) {
      report.failures.push_back({corpus[i].id, out.error});
    } else if (out.excluded) {
      ++report.excluded;
    } else {
      report.classes[out.length_class - 1].add(*out.comparison);
      report.overall.add(*out.comparison);
    }
  }
  return report;
}

namespace {

nlohmann::json metrics_json(const ClassMetrics& m) {
  const auto opt = [](std::optional<double> v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {{"reports", m.reports},       {"tp", m.tp},
          {"fp", m.fp},                 {"fn", m.fn},
          {"common_pt", opt(m.common_pt())}, {"fn_rate", opt(m.fn_rate())},
          {"fp_rate", opt(m.fp_rate())},     {"recall", opt(m.recall())},
          {"precision", opt(m.precision())}};
}

constexpr std::array<const char*, kLengthClasses> kClassLabels = {
    "0-20", "21-40", "41-100", "101-255", ">255"};

}  // namespace

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (int c = 0; c < kLengthClasses; ++c) {
    auto row = metrics_json(report.classes[c]);
    row["class"] = c + 1;
    row["chars"] = kClassLabels[c];
    classes.push_back(std::move(row));
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) failures.push_back({{"id", f.case_id}, {"error", f.message}});
  return {{"classes", std::move(classes)},
          {"overall", metrics_json(report.overall)},
          {"total_cases", report.total_cases},
          {"excluded", report.excluded},
          {"failures", std::move(failures)}};
}

std::string to_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "class,chars,reports,tp,fp,fn,common_pt,fn_rate,fp_rate,recall,precision\n";
  const auto cell = [](std::optional<double> v) {
    if (!v) return std::string();
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(4);
    s << *v;
    return s.str();
  };
  const auto row = [&](const std::string& cls, const std::string& chars, const ClassMetrics& m) {
    out << cls << ',' << chars << ',' << m.reports << ',' << m.tp << ',' << m.fp << ',' << m.fn
        << ',' << cell(m.common_pt()) << ',' << cell(m.fn_rate()) << ',' << cell(m.fp_rate())
        << ',' << cell(m.recall()) << ',' << cell(m.precision()) << '\n';
  };
  for (int c = 0; c < kLengthClasses; ++c) {
    row(std::to_string(c + 1), std::string("\"") + kClassLabels[c] + "\"", report.classes[c]);
  }
  row("all", "", report.overall);
  return out.str();
}

}  // namespace adrcode
