#include <unistd.h>

#include <fstream>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "fixtures.hpp"
#include "service/http.hpp"
#include "service/service.hpp"

namespace adrcode::service {
namespace {

using nlohmann::json;

std::shared_ptr<const Engine> italian() {
  static const auto engine = std::make_shared<const Engine>(testing::italian_engine());
  return engine;
}

std::shared_ptr<const Engine> worked() {
  static const auto engine = std::make_shared<const Engine>(testing::worked_example_engine());
  return engine;
}

std::filesystem::path temp_log(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() /
           ("adrcode_" + name + "_" + std::to_string(::getpid()) + ".jsonl");
  std::filesystem::remove(p);
  return p;
}

TEST(ServiceEncode, WorkedExample) {
  Service svc;
  svc.set_engine(worked());
  const auto r = svc.encode(json{{"text", testing::kWorkedExample}}.dump());
  ASSERT_EQ(r.status, 200);
  ASSERT_EQ(r.body["winners"].size(), 2u);
  std::set<std::string> ids;
  for (const auto& w : r.body["winners"]) {
    ids.insert(w["llt_id"].get<std::string>());
    EXPECT_TRUE(w.contains("weights"));
    EXPECT_TRUE(w.contains("spans"));
    EXPECT_TRUE(w["via_synonym"].is_null());
    EXPECT_EQ(w["weights"]["c1"], 0.0);
  }
  EXPECT_EQ(ids, (std::set<std::string>{"10002199", "10021097"}));
  EXPECT_FALSE(r.body["negation_alert"].get<bool>());
  EXPECT_GE(r.body["timing_ms"].get<double>(), 0.0);
}

TEST(ServiceEncode, SpansAndVoters) {
  Service svc;
  svc.set_engine(worked());
  const std::string text = "Hypotension, anaphylactic shock";
  const auto r = svc.encode(json{{"text", text}}.dump());
  for (const auto& w : r.body["winners"]) {
    for (const auto& s : w["spans"]) {
      const auto b = s[0].get<std::size_t>();
      const auto e = s[1].get<std::size_t>();
      EXPECT_LT(b, e);
      EXPECT_LE(e, text.size());
    }
    EXPECT_EQ(w["spans"].size(), w["voters"].size());
  }
}

TEST(ServiceEncode, BadRequests) {
  Service svc;
  svc.set_engine(worked());
  EXPECT_EQ(svc.encode("{}").status, 400);
  EXPECT_EQ(svc.encode("not json").status, 400);
  EXPECT_EQ(svc.encode("[1]").status, 400);
  EXPECT_EQ(svc.encode(R"({"text": 5})").status, 400);
  EXPECT_EQ(svc.encode(R"({"text": "x", "max_terms": 0})").status, 400);
  EXPECT_EQ(svc.encode(R"({"text": "x", "overrides": {"c9": 1}})").status, 400);
  EXPECT_EQ(svc.encode(R"({"text": "x", "overrides": {"enable_c5": "yes"}})").status, 400);
}

TEST(ServiceEncode, NotReadyUntilEngineInstalled) {
  Service svc;
  EXPECT_FALSE(svc.ready());
  EXPECT_EQ(svc.encode(R"({"text": "febbre"})").status, 503);
  EXPECT_EQ(svc.terms("feb").status, 503);
  EXPECT_EQ(svc.review("{}").status, 503);
  svc.set_engine(italian());
  EXPECT_TRUE(svc.ready());
  EXPECT_EQ(svc.encode(R"({"text": "febbre"})").status, 200);
}

TEST(ServiceEncode, MaxTermsAndOverrides) {
  Service svc;
  svc.set_engine(italian());
  const std::string text = "nausea vomito orticaria prurito eritema astenia malessere";
  auto r = svc.encode(json{{"text", text}}.dump());
  EXPECT_EQ(r.body["winners"].size(), 6u);
  r = svc.encode(json{{"text", text}, {"max_terms", 2}}.dump());
  EXPECT_EQ(r.body["winners"].size(), 2u);
  r = svc.encode(json{{"text", text}, {"overrides", {{"max_terms", 3}}}}.dump());
  EXPECT_EQ(r.body["winners"].size(), 3u);
  r = svc.encode(json{{"text", "febbri"}, {"overrides", {{"c3_threshold", 0.1}}}}.dump());
  EXPECT_TRUE(r.body["winners"].empty());
  r = svc.encode(json{{"text", "febbre alta"}, {"overrides", {{"enable_c5", true}}}}.dump());
  EXPECT_EQ(r.status, 200);
  EXPECT_TRUE(r.body["winners"][0]["weights"].contains("c5"));
}

TEST(ServiceEncode, IdenticalRequestsIdenticalResponses) {
  Service svc;
  svc.set_engine(italian());
  const auto body = json{{"text", testing::italian_example_rows()[1].text}}.dump();
  auto a = svc.encode(body).body;
  auto b = svc.encode(body).body;
  a.erase("timing_ms");
  b.erase("timing_ms");
  EXPECT_EQ(a, b);
}

TEST(ServiceEncode, LongTextIsAccepted) {
  Service svc;
  svc.set_engine(italian());
  std::string text = "febbre e tosse";
  while (text.size() < 10 * 1024) text += ", qwerty asdf";
  const auto r = svc.encode(json{{"text", text}}.dump());
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["winners"].size(), 2u);
}

TEST(ServiceEncode, NegationAndSynonymFields) {
  Service svc;
  svc.set_engine(italian());
  const auto r = svc.encode(json{{"text", "non aumentato di peso"}}.dump());
  EXPECT_TRUE(r.body["negation_alert"].get<bool>());
  EXPECT_EQ(r.body["negations"][0]["word"], "non");
  EXPECT_EQ(r.body["winners"][0]["llt_id"], "10047899");
  EXPECT_EQ(r.body["winners"][0]["via_synonym"]["pseudo_text"], "aumentato di peso");
}

TEST(ServiceTerms, PrefixSearch) {
  Service svc;
  svc.set_engine(worked());
  const auto r = svc.terms("anaph");
  ASSERT_EQ(r.status, 200);
  std::set<std::string> ids;
  for (const auto& t : r.body) ids.insert(t["llt_id"].get<std::string>());
  EXPECT_TRUE(ids.contains("10002199"));
  EXPECT_EQ(svc.terms("").status, 400);
  EXPECT_EQ(svc.terms(" ,").status, 400);
  EXPECT_TRUE(svc.terms("zzz").body.empty());
}

TEST(ServiceTerms, WordPrefixesRankAfterTextPrefixes) {
  Service svc;
  svc.set_engine(italian());
  const auto r = svc.terms("dol");
  ASSERT_GE(r.body.size(), 3u);
  EXPECT_EQ(r.body[0]["llt_text"], "Dolore");
  const auto limited = svc.terms("dol", 1);
  EXPECT_EQ(limited.body.size(), 1u);
  // "lingua" appears only as a later word.
  const auto lingua = svc.terms("lingua");
  EXPECT_EQ(lingua.body.size(), 2u);
  // Pseudo entries are not offered.
  for (const auto& t : svc.terms("aumentato").body) {
    EXPECT_FALSE(t["llt_id"].get<std::string>().starts_with("~"));
  }
}

TEST(ServiceReview, AppendsAndEchoes) {
  const auto log = temp_log("review");
  Service svc(log);
  svc.set_engine(worked());
  const auto r = svc.review(
      json{{"case_id", "c1"}, {"llt_id", "10002199"}, {"action", "accept"}, {"reviewer_id", "rv"}}
          .dump());
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["case_id"], "c1");
  EXPECT_EQ(r.body["action"], "accept");
  EXPECT_FALSE(r.body["timestamp"].get<std::string>().empty());

  std::ifstream in(log);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(json::parse(line), r.body);
  EXPECT_FALSE(std::getline(in, line));
  std::filesystem::remove(log);
}

TEST(ServiceReview, Validation) {
  Service svc;
  svc.set_engine(worked());
  const auto body = [](json j) { return j.dump(); };
  json base = {{"case_id", "c1"}, {"llt_id", "10002199"}, {"action", "accept"}, {"reviewer_id", "rv"}};

  auto unknown = base;
  unknown["llt_id"] = "42";
  EXPECT_EQ(svc.review(body(unknown)).status, 422);

  auto replace = base;
  replace["action"] = "replace";
  EXPECT_EQ(svc.review(body(replace)).status, 400);  // no target
  replace["target_llt_id"] = "42";
  EXPECT_EQ(svc.review(body(replace)).status, 422);
  replace["target_llt_id"] = "10021097";
  EXPECT_EQ(svc.review(body(replace)).status, 200);

  auto bad_action = base;
  bad_action["action"] = "maybe";
  EXPECT_EQ(svc.review(body(bad_action)).status, 400);
  auto missing = base;
  missing.erase("reviewer_id");
  EXPECT_EQ(svc.review(body(missing)).status, 400);
  auto stray = base;
  stray["target_llt_id"] = "10021097";
  EXPECT_EQ(svc.review(body(stray)).status, 400);
  EXPECT_EQ(svc.review("{").status, 400);
  EXPECT_EQ(svc.decisions().size(), 1u);
}

TEST(ServiceReview, ReplayReconstructsValidatedCoding) {
  const auto log = temp_log("replay");
  Service svc(log);
  svc.set_engine(worked());
  const auto post = [&](const std::string& c, const std::string& id, const std::string& action,
                        const std::string& target = "") {
    json j = {{"case_id", c}, {"llt_id", id}, {"action", action}, {"reviewer_id", "rv"}};
    if (!target.empty()) j["target_llt_id"] = target;
    ASSERT_EQ(svc.review(j.dump()).status, 200);
  };
  post("c1", "10002199", "accept");
  post("c1", "10021097", "reject");
  post("c2", "10054844", "replace", "10002199");
  post("c2", "10021097", "accept");
  post("c1", "10021097", "accept");  // reconsidered

  const auto from_file = replay_review_log(log);
  const auto from_memory = replay_review_log(svc.decisions());
  EXPECT_EQ(from_file, from_memory);
  EXPECT_EQ(from_file.at("c1"), (std::vector<std::string>{"10002199", "10021097"}));
  EXPECT_EQ(from_file.at("c2"), (std::vector<std::string>{"10002199", "10021097"}));
  std::filesystem::remove(log);
}

TEST(ServiceReview, ConcurrentAppendsAreNotInterleaved) {
  const auto log = temp_log("concurrent");
  Service svc(log);
  svc.set_engine(worked());
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (int k = 0; k < 25; ++k) {
          svc.review(json{{"case_id", std::to_string(t * 100 + k)},
                          {"llt_id", "10002199"},
                          {"action", "accept"},
                          {"reviewer_id", "rv"}}
                         .dump());
        }
      });
    }
  }
  std::ifstream in(log);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    EXPECT_NO_THROW(json::parse(line));
    ++lines;
  }
  EXPECT_EQ(lines, 100);
  std::filesystem::remove(log);
}

TEST(HttpServer, EndToEndOverSocket) {
  Service svc;
  HttpServer server(svc);
  const int port = server.bind_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread listener([&] { server.listen(); });
  while (!server.running()) std::this_thread::sleep_for(std::chrono::milliseconds(5));

  httplib::Client client("127.0.0.1", port);
  const auto body = json{{"text", testing::kWorkedExample}}.dump();
  auto res = client.Post("/api/encode", body, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 503);

  svc.set_engine(worked());
  res = client.Post("/api/encode", body, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["winners"].size(), 2u);

  res = client.Post("/api/encode", "{}", "application/json");
  EXPECT_EQ(res->status, 400);

  res = client.Get("/api/terms?q=anaph");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_NE(res->body.find("10002199"), std::string::npos);
  EXPECT_EQ(client.Get("/api/terms?q=")->status, 400);
  EXPECT_EQ(client.Get("/api/terms?q=a&limit=0")->status, 400);

  res = client.Post("/api/review",
                    json{{"case_id", 7}, {"llt_id", "999"}, {"action", "accept"}, {"reviewer_id", "r"}}
                        .dump(),
                    "application/json");
  EXPECT_EQ(res->status, 422);
  EXPECT_EQ(client.Get("/api/health")->status, 200);

  server.stop();
  listener.join();
}

}  // namespace
}  // namespace adrcode::service
