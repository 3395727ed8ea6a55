#include "service.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "adrcode/error.hpp"
#include "adrcode/text.hpp"

namespace adrcode::service {
namespace {

using nlohmann::json;

Response error(int status, std::string message) {
  return {status, json{{"error", std::move(message)}}};
}

Response not_ready() { return error(503, "dictionary is still loading"); }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03lldZ", buf, static_cast<long long>(ms));
  return out;
}

std::string id_field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing ") + key);
  const auto& v = j.at(key);
  if (v.is_string() && !v.get<std::string>().empty()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument(std::string(key) + " must be a non-empty string or an integer");
}

json weights_json(const WeightVector& w) {
  json out = {{"c1", w.coverage.value()},
              {"c2", w.stem_flag},
              {"c3", w.pair_distance.value()},
              {"c4", w.density.value()}};
  if (w.distribution) out["c5"] = *w.distribution;
  return out;
}

SelectionConfig apply_overrides(SelectionConfig config, const json& body) {
  if (body.contains("max_terms")) {
    const auto& v = body.at("max_terms");
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw std::invalid_argument("max_terms must be a positive integer");
    }
    config.max_terms = v.get<std::size_t>();
  }
  if (!body.contains("overrides")) return config;
  const auto& ov = body.at("overrides");
  if (!ov.is_object()) throw std::invalid_argument("overrides must be an object");
  for (const auto& [key, v] : ov.items()) {
    if (key == "max_terms") {
      if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw std::invalid_argument("max_terms must be a positive integer");
      }
      config.max_terms = v.get<std::size_t>();
    } else if (key == "c3_threshold" || key == "c4_threshold") {
      if (!v.is_number()) throw std::invalid_argument(key + " must be a number");
      (key == "c3_threshold" ? config.c3_threshold : config.c4_threshold) = v.get<double>();
    } else if (key == "enable_c5") {
      if (!v.is_boolean()) throw std::invalid_argument("enable_c5 must be a boolean");
      config.enable_c5 = v.get<bool>();
    } else {
      throw std::invalid_argument("unknown override " + key);
    }
  }
  return config;
}

}  // namespace

std::string_view to_string(ReviewAction action) {
  switch (action) {
    case ReviewAction::accept: return "accept";
    case ReviewAction::reject: return "reject";
    case ReviewAction::replace: return "replace";
  }
  return "accept";
}

std::optional<ReviewAction> parse_action(std::string_view text) {
  if (text == "accept") return ReviewAction::accept;
  if (text == "reject") return ReviewAction::reject;
  if (text == "replace") return ReviewAction::replace;
  return std::nullopt;
}

json to_json(const ReviewDecision& d) {
  json j = {{"case_id", d.case_id},
            {"llt_id", d.llt_id},
            {"action", to_string(d.action)},
            {"reviewer_id", d.reviewer_id},
            {"timestamp", d.timestamp}};
  if (d.target_llt_id) j["target_llt_id"] = *d.target_llt_id;
  return j;
}

ReviewDecision review_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  ReviewDecision d;
  d.case_id = id_field(j, "case_id");
  d.llt_id = id_field(j, "llt_id");
  d.reviewer_id = id_field(j, "reviewer_id");
  if (!j.contains("action") || !j.at("action").is_string()) {
    throw std::invalid_argument("missing action");
  }
  const auto action = parse_action(j.at("action").get<std::string>());
  if (!action) throw std::invalid_argument("action must be accept, reject or replace");
  d.action = *action;
  if (d.action == ReviewAction::replace) {
    d.target_llt_id = id_field(j, "target_llt_id");
  } else if (j.contains("target_llt_id") && !j.at("target_llt_id").is_null()) {
    throw std::invalid_argument("target_llt_id is only valid with replace");
  }
  if (j.contains("timestamp") && j.at("timestamp").is_string()) {
    d.timestamp = j.at("timestamp").get<std::string>();
  }
  return d;
}

json to_json(const EncodingResult& result) {
  json winners = json::array();
  for (const auto& w : result.winners) {
    json spans = json::array();
    for (const auto& s : w.spans) spans.push_back({s.begin, s.end});
    json entry = {{"llt_id", w.llt_id},
                  {"llt_text", w.llt_text},
                  {"pt_id", w.pt_id},
                  {"pt_text", w.pt_text},
                  {"weights", weights_json(w.weights)},
                  {"voters", w.voters},
                  {"spans", std::move(spans)},
                  {"stem_used", w.stem_used},
                  {"via_synonym", nullptr}};
    if (w.via_synonym) {
      entry["via_synonym"] = {{"pseudo_id", w.via_synonym->pseudo_id},
                              {"pseudo_text", w.via_synonym->pseudo_text}};
    }
    winners.push_back(std::move(entry));
  }
  json negations = json::array();
  for (const auto& n : result.negations) {
    negations.push_back({{"word", n.word}, {"span", {n.span.begin, n.span.end}}});
  }
  return {{"winners", std::move(winners)},
          {"negation_alert", result.negation_alert()},
          {"negations", std::move(negations)},
          {"candidate_count", result.candidate_count}};
}

std::map<std::string, std::vector<std::string>> replay_review_log(
    const std::vector<ReviewDecision>& decisions) {
  // Per case: term -> current outcome, plus first-seen order of terms.
  struct CaseState {
    std::vector<std::string> order;
    std::map<std::string, std::optional<std::string>> outcome;
  };
  std::map<std::string, CaseState> cases;
  for (const auto& d : decisions) {
    auto& state = cases[d.case_id];
    if (!state.outcome.contains(d.llt_id)) state.order.push_back(d.llt_id);
    switch (d.action) {
      case ReviewAction::accept: state.outcome[d.llt_id] = d.llt_id; break;
      case ReviewAction::reject: state.outcome[d.llt_id] = std::nullopt; break;
      case ReviewAction::replace: state.outcome[d.llt_id] = d.target_llt_id; break;
    }
  }

  std::map<std::string, std::vector<std::string>> validated;
  for (const auto& [case_id, state] : cases) {
    auto& ids = validated[case_id];
    for (const auto& term : state.order) {
      const auto& result = state.outcome.at(term);
      if (result && std::find(ids.begin(), ids.end(), *result) == ids.end()) ids.push_back(*result);
    }
  }
  return validated;
}

std::map<std::string, std::vector<std::string>> replay_review_log(
    const std::filesystem::path& log) {
  std::ifstream in(log);
  if (!in) throw LoadError("cannot open review log: " + log.string());
  std::vector<ReviewDecision> decisions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      decisions.push_back(review_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw ParseError(log.string(), line_no, e.what());
    }
  }
  return replay_review_log(decisions);
}

Service::Service(std::optional<std::filesystem::path> review_log)
    : review_log_(std::move(review_log)) {}

void Service::set_engine(std::shared_ptr<const Engine> engine) {
  std::lock_guard lock(engine_mutex_);
  engine_ = std::move(engine);
}

std::shared_ptr<const Engine> Service::engine() const {
  std::lock_guard lock(engine_mutex_);
  return engine_;
}

Response Service::encode(std::string_view body) const {
  const auto engine = this->engine();
  if (!engine) return not_ready();

  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("invalid JSON: ") + e.what());
  }
  if (!request.is_object()) return error(400, "expected a JSON object");
  if (!request.contains("text") || !request.at("text").is_string()) {
    return error(400, "missing text");
  }

  SelectionConfig selection;
  try {
    selection = apply_overrides(engine->options().selection, request);
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  }

  const auto text = request.at("text").get<std::string>();
  const auto start = std::chrono::steady_clock::now();
  const auto result = engine->encode(text, selection);
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

  auto out = to_json(result);
  out["timing_ms"] = elapsed.count();
  if (request.contains("case_id")) out["case_id"] = request.at("case_id");
  return {200, std::move(out)};
}

Response Service::terms(std::string_view query, std::size_t limit) const {
  const auto engine = this->engine();
  if (!engine) return not_ready();

  const auto& opts = engine->options().normalize;
  const auto q = normalize(query, opts);
  if (q.empty()) return error(400, "empty query");

  // Whole-text prefix matches rank before word-prefix matches.
  std::vector<const TermEntry*> head;
  std::vector<const TermEntry*> tail;
  for (const auto& entry : engine->terminology().entries()) {
    if (entry.is_pseudo()) continue;
    const auto text = normalize(entry.llt_text, opts);
    if (text.starts_with(q)) {
      head.push_back(&entry);
    } else if (text.find(" " + q) != std::string::npos) {
      tail.push_back(&entry);
    }
  }
  const auto by_text = [](const TermEntry* a, const TermEntry* b) {
    return a->llt_text != b->llt_text ? a->llt_text < b->llt_text : llt_id_less(a->llt_id, b->llt_id);
  };
  std::sort(head.begin(), head.end(), by_text);
  std::sort(tail.begin(), tail.end(), by_text);
  head.insert(head.end(), tail.begin(), tail.end());
  if (head.size() > limit) head.resize(limit);

  json out = json::array();
  for (const auto* e : head) {
    out.push_back({{"llt_id", e->llt_id},
                   {"llt_text", e->llt_text},
                   {"pt_id", e->pt_id},
                   {"pt_text", e->pt_text}});
  }
  return {200, std::move(out)};
}

Response Service::review(std::string_view body) {
  const auto engine = this->engine();
  if (!engine) return not_ready();

  ReviewDecision decision;
  try {
    decision = review_from_json(json::parse(body));
  } catch (const json::parse_error& e) {
    return error(400, std::string("invalid JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  }

  const auto official = [&](const std::string& id) {
    const auto* entry = engine->terminology().find(id);
    return entry != nullptr && !entry->is_pseudo();
  };
  if (!official(decision.llt_id)) return error(422, "unknown llt_id " + decision.llt_id);
  if (decision.target_llt_id && !official(*decision.target_llt_id)) {
    return error(422, "unknown target_llt_id " + *decision.target_llt_id);
  }

  std::lock_guard lock(log_mutex_);
  decision.timestamp = utc_timestamp();
  auto record = to_json(decision);
  if (review_log_) {
    std::ofstream out(*review_log_, std::ios::app);
    if (!out) return error(500, "cannot write review log");
    out << record.dump() << '\n';
    out.flush();
    if (!out) return error(500, "cannot write review log");
  }
  decisions_.push_back(std::move(decision));
  return {200, std::move(record)};
}

std::vector<ReviewDecision> Service::decisions() const {
  std::lock_guard lock(log_mutex_);
  return decisions_;
}

}  // namespace adrcode::service
