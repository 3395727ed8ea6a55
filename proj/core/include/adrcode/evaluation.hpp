#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "adrcode/selection.hpp"
#include "adrcode/terminology.hpp"

namespace adrcode {

/// A description with its human (gold) coding.
struct GoldCase {
  std::string id;
  std::string text;
  std::vector<std::string> gold_llt_ids;
};

/// JSON-lines, one `{"id", "text", "gold_llt_ids"}` object per line. Blank
/// lines are skipped; anything else malformed raises ParseError with its line.
std::vector<GoldCase> load_corpus(const std::filesystem::path& path);
std::vector<GoldCase> load_corpus(std::istream& in, const std::string& source_name);

inline constexpr int kLengthClasses = 5;

/// 1: 0-20 chars, 2: 21-40, 3: 41-100, 4: 101-255, 5: more. Characters are
/// code points of the raw description.
int length_class(std::string_view text);

/// PT-level comparison of one case.
struct CaseComparison {
  std::set<std::string> tp;
  std::set<std::string> fp;
  std::set<std::string> fn;
};

/// Projects both LLT lists to PTs. Throws EvaluationError for an id that is
/// unknown or has no PT.
CaseComparison compare_case(std::span<const std::string> gold_llt_ids,
                            std::span<const std::string> auto_llt_ids,
                            const Terminology& terminology);
CaseComparison compare_case(const GoldCase& gold, const EncodingResult& result,
                            const Terminology& terminology);

/// Counts pooled over the cases of one length class. Rates are percentages;
/// empty when their denominator is zero. Common PT, FN and FP are shares of
/// all PTs involved (TP + FP + FN) and add up to 100.
struct ClassMetrics {
  std::size_t reports = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::optional<double> common_pt() const;
  std::optional<double> fn_rate() const;
  std::optional<double> fp_rate() const;
  std::optional<double> recall() const;
  std::optional<double> precision() const;

  void add(const CaseComparison& c);
};

struct CaseFailure {
  std::string case_id;
  std::string message;
};

struct EvalReport {
  std::array<ClassMetrics, kLengthClasses> classes{};
  ClassMetrics overall;
  std::size_t total_cases = 0;
  /// Cases left out because the encoder proposed more than max_terms terms.
  std::size_t excluded = 0;
  std::vector<CaseFailure> failures;
};

using EncodeFn = std::function<EncodingResult(std::string_view)>;

/// Encodes every case (in parallel; `encode` must be thread-safe) and pools
/// the PT-level counts per length class. Throws Error on an empty corpus.
EvalReport run_benchmark(std::span<const GoldCase> corpus, const EncodeFn& encode,
                         const Terminology& terminology, std::size_t max_terms);

nlohmann::json to_json(const EvalReport& report);
/// One row per class plus `all`; columns mirror the published results table.
std::string to_csv(const EvalReport& report);

}  // namespace adrcode
