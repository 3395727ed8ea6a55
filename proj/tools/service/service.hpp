#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "adrcode/engine.hpp"

namespace adrcode::service {

/// Status code plus JSON body; what every handler returns.
struct Response {
  int status = 200;
  nlohmann::json body;
};

enum class ReviewAction { accept, reject, replace };

std::string_view to_string(ReviewAction action);
std::optional<ReviewAction> parse_action(std::string_view text);

struct ReviewDecision {
  std::string case_id;
  std::string llt_id;
  ReviewAction action = ReviewAction::accept;
  std::optional<std::string> target_llt_id;  // replace only
  std::string reviewer_id;
  std::string timestamp;  // ISO 8601, UTC
};

nlohmann::json to_json(const ReviewDecision& decision);
/// Throws std::invalid_argument describing the first bad field.
ReviewDecision review_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EncodingResult& result);

/// Validated coding per case obtained by replaying a review log: for every
/// (case, llt_id) the last decision counts; accepted terms are kept, replaced
/// ones become their target, rejected ones are dropped. Ids appear in order of
/// first decision.
std::map<std::string, std::vector<std::string>> replay_review_log(
    const std::filesystem::path& log);
std::map<std::string, std::vector<std::string>> replay_review_log(
    const std::vector<ReviewDecision>& decisions);

/// Request handlers behind /api/*. The engine may be installed after
/// construction; until then every endpoint answers 503.
class Service {
 public:
  /// Without a log path decisions are only kept in memory.
  explicit Service(std::optional<std::filesystem::path> review_log = std::nullopt);

  void set_engine(std::shared_ptr<const Engine> engine);
  std::shared_ptr<const Engine> engine() const;
  bool ready() const { return engine() != nullptr; }

  /// POST /api/encode. Body: {"text", "max_terms"?, "case_id"?, "overrides"?}
  /// where overrides may set max_terms, c3_threshold, c4_threshold, enable_c5.
  Response encode(std::string_view body) const;
  /// GET /api/terms?q=...&limit=...
  Response terms(std::string_view query, std::size_t limit = 20) const;
  /// POST /api/review
  Response review(std::string_view body);

  std::vector<ReviewDecision> decisions() const;

 private:
  mutable std::mutex engine_mutex_;
  std::shared_ptr<const Engine> engine_;

  mutable std::mutex log_mutex_;
  std::optional<std::filesystem::path> review_log_;
  std::vector<ReviewDecision> decisions_;
};

}  // namespace adrcode::service
