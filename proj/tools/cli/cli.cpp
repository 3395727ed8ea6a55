#include "cli.hpp"

#include <atomic>
#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "adrcode/config.hpp"
#include "adrcode/error.hpp"
#include "adrcode/evaluation.hpp"
#include "adrcode/synonyms.hpp"
#include "../service/http.hpp"
#include "../service/service.hpp"

namespace adrcode::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct EngineFlags {
  std::string config;
  std::string dict;
  std::string stop_words;
  std::string negations;
  std::string synonyms;
  std::string stemmer;
  bool variants = false;
  bool fold_accents = false;
};

void add_engine_flags(CLI::App& cmd, EngineFlags& f) {
  cmd.add_option("--config", f.config, "YAML engine configuration")->check(CLI::ExistingFile);
  cmd.add_option("--dict", f.dict, "terminology CSV (overrides the config)");
  cmd.add_option("--stop-words", f.stop_words, "stop-word list");
  cmd.add_option("--negations", f.negations, "negation cue list");
  cmd.add_option("--synonyms", f.synonyms, "pseudo-term lexicon CSV");
  cmd.add_option("--stemmer", f.stemmer, "light | aggressive");
  cmd.add_flag("--variants", f.variants, "generate noun/adjective pseudo terms");
  cmd.add_flag("--fold-accents", f.fold_accents, "fold accented letters");
}

EngineConfig resolve(const EngineFlags& f) {
  EngineConfig c = f.config.empty() ? EngineConfig{} : load_config(f.config);
  if (!f.dict.empty()) c.dictionary = f.dict;
  if (!f.stop_words.empty()) c.stop_words = f.stop_words;
  if (!f.negations.empty()) c.negation_lexicon = f.negations;
  if (!f.synonyms.empty()) c.synonym_lexicon = f.synonyms;
  if (!f.stemmer.empty()) c.stemmer = f.stemmer;
  if (f.variants) c.generate_variants = true;
  if (f.fold_accents) c.fold_accents = true;
  if (!c.dictionary) throw UsageError("a dictionary is required (--dict or --config)");
  return c;
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

void print_table(std::ostream& out, const EncodingResult& result) {
  out << std::left << std::setw(10) << "llt_id" << std::setw(36) << "llt_text" << std::setw(8)
      << "c1" << std::setw(4) << "c2" << std::setw(8) << "c3" << std::setw(8) << "c4"
      << "voters\n";
  for (const auto& w : result.winners) {
    std::string voters;
    for (const auto v : w.voters) voters += (voters.empty() ? "" : ",") + std::to_string(v);
    std::string text = w.llt_text;
    if (w.via_synonym) text += " (via " + w.via_synonym->pseudo_text + ")";
    if (text.size() >= 36) text += ' ';
    out << std::left << std::setw(10) << w.llt_id << std::setw(36) << text << std::setw(8)
        << fixed(w.weights.coverage.value()) << std::setw(4) << w.weights.stem_flag
        << std::setw(8) << fixed(w.weights.pair_distance.value()) << std::setw(8)
        << fixed(w.weights.density.value()) << voters << '\n';
  }
}

int cmd_encode(const EngineFlags& flags, const std::optional<std::string>& text, bool from_stdin,
               std::optional<std::size_t> max_terms, bool table, std::istream& in,
               std::ostream& out, std::ostream& err) {
  if (text.has_value() == from_stdin) throw UsageError("give exactly one of --text or --stdin");
  auto config = resolve(flags);
  if (max_terms) config.selection.max_terms = *max_terms;
  const Engine engine = build_engine(config);

  std::string input;
  if (from_stdin) {
    input.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    input = *text;
  }

  const auto result = engine.encode(input);
  if (result.negation_alert()) {
    err << "warning: negation cue";
    for (const auto& n : result.negations) err << " '" << n.word << "'";
    err << " found; check the proposed terms\n";
  }
  if (table) {
    print_table(out, result);
  } else {
    out << service::to_json(result).at("winners").dump(2) << '\n';
  }
  return kOk;
}

int cmd_bench(const EngineFlags& flags, const std::string& corpus_path, const std::string& prefix,
              std::size_t max_terms, std::ostream& out, std::ostream& err) {
  const Engine engine = build_engine(resolve(flags));
  const auto corpus = load_corpus(corpus_path);
  const auto report = run_benchmark(
      corpus, [&](std::string_view text) { return engine.encode(text); }, engine.terminology(),
      max_terms);

  const auto csv = to_csv(report);
  out << csv;
  for (const auto& f : report.failures) err << "case " << f.case_id << ": " << f.message << '\n';
  if (report.excluded > 0) {
    err << report.excluded << " case(s) excluded: more than " << max_terms << " candidates\n";
  }
  if (!prefix.empty()) {
    std::ofstream csv_out(prefix + ".csv");
    std::ofstream json_out(prefix + ".json");
    if (!csv_out || !json_out) throw Error("cannot write " + prefix + ".{csv,json}");
    csv_out << csv;
    json_out << to_json(report).dump(2) << '\n';
  }
  return kOk;
}

int cmd_lexicon(const EngineFlags& flags, const std::string& out_path, std::ostream& out) {
  auto config = resolve(flags);
  NormalizeOptions norm{config.fold_accents};
  WordSet stop_words;
  if (config.stop_words) stop_words = load_word_list(*config.stop_words, norm);
  const auto terminology = load_terminology(*config.dictionary, stop_words, norm);
  const auto pairs = default_variant_pairs();
  const auto lexicon = generate_variants(terminology, pairs, norm);
  if (out_path.empty() || out_path == "-") {
    write_pseudo_lexicon(out, lexicon);
  } else {
    std::ofstream file(out_path);
    if (!file) throw Error("cannot write " + out_path);
    write_pseudo_lexicon(file, lexicon);
  }
  return kOk;
}

std::atomic<service::HttpServer*> g_server{nullptr};

extern "C" void on_signal(int) {
  if (auto* s = g_server.load()) s->stop();
}

int cmd_serve(const EngineFlags& flags, const std::string& host, int port,
              const std::string& review_log, const std::string& ui_dir) {
  const auto config = resolve(flags);
  service::Service svc(review_log.empty() ? std::nullopt
                                          : std::optional<std::filesystem::path>(review_log));
  service::HttpServer server(svc, ui_dir.empty() ? std::nullopt
                                                 : std::optional<std::filesystem::path>(ui_dir));
  if (server.bind(host, port) < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));

  std::atomic<bool> load_failed{false};
  std::jthread loader([&] {
    try {
      const auto start = std::chrono::steady_clock::now();
      auto engine = std::make_shared<const Engine>(build_engine(config));
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      spdlog::info("dictionary ready: {} terms, {} index keys, {:.2f}s",
                   engine->terminology().size(), engine->exact_index().key_count(), took.count());
      svc.set_engine(std::move(engine));
    } catch (const std::exception& e) {
      spdlog::error("cannot load dictionary: {}", e.what());
      load_failed = true;
      server.stop();
    }
  });

  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  spdlog::info("listening on http://{}:{}", host, port);
  server.listen();
  g_server = nullptr;
  loader.join();
  return load_failed ? kBadInput : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Automatic coding of adverse drug reaction descriptions", "adrcode"};
  app.require_subcommand(1);

  EngineFlags flags;

  auto* encode = app.add_subcommand("encode", "encode one description");
  add_engine_flags(*encode, flags);
  std::optional<std::string> text;
  bool from_stdin = false;
  std::optional<std::size_t> max_terms;
  bool json_out = false;
  bool table = false;
  encode->add_option("--text", text, "description to encode");
  encode->add_flag("--stdin", from_stdin, "read the description from standard input");
  encode->add_option("--max-terms", max_terms, "at most this many terms")->check(CLI::PositiveNumber);
  auto* json_flag = encode->add_flag("--json", json_out, "JSON array of winners (default)");
  encode->add_flag("--table", table, "aligned table")->excludes(json_flag);

  auto* bench = app.add_subcommand("bench", "score the encoder against a gold corpus");
  add_engine_flags(*bench, flags);
  std::string corpus;
  std::string prefix;
  std::size_t bench_max = 6;
  bench->add_option("--corpus", corpus, "JSON-lines gold corpus")->required();
  bench->add_option("--out", prefix, "write <prefix>.csv and <prefix>.json");
  bench->add_option("--max-terms", bench_max, "exclude cases with more candidates")
      ->check(CLI::PositiveNumber);

  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  add_engine_flags(*serve, flags);
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string review_log;
  std::string ui_dir;
  serve->add_option("--host", host, "listen address");
  serve->add_option("--port", port, "listen port")->check(CLI::Range(1, 65535));
  serve->add_option("--review-log", review_log, "append-only JSON-lines review log");
  serve->add_option("--ui", ui_dir, "static files to serve at /")->check(CLI::ExistingDirectory);

  auto* lexicon = app.add_subcommand("lexicon", "generate noun/adjective pseudo terms");
  add_engine_flags(*lexicon, flags);
  std::string lexicon_out;
  lexicon->add_option("--out", lexicon_out, "output CSV (default: stdout)");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (encode->parsed()) {
      return cmd_encode(flags, text, from_stdin, max_terms, table, in, out, err);
    }
    if (bench->parsed()) return cmd_bench(flags, corpus, prefix, bench_max, out, err);
    if (serve->parsed()) return cmd_serve(flags, host, port, review_log, ui_dir);
    if (lexicon->parsed()) return cmd_lexicon(flags, lexicon_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace adrcode::cli
