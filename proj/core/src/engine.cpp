#include "adrcode/engine.hpp"

#include "adrcode/synonyms.hpp"

namespace adrcode {
namespace {

Winner make_winner(const ScoredTerm& st, const CleanText& clean) {
  Winner w;
  w.llt_id = st.term->llt_id;
  w.llt_text = st.term->llt_text;
  w.pt_id = st.term->pt_id;
  w.pt_text = st.term->pt_text;
  w.weights = st.weights;
  w.voters = st.record->voters;
  w.stem_used = st.record->stem_used;
  w.spans.reserve(w.voters.size());
  for (const auto v : w.voters) w.spans.push_back(clean.tokens[v].span);
  return w;
}

}  // namespace

Engine::Engine(Terminology terminology, EngineOptions options)
    : terminology_(std::move(terminology)),
      options_(std::move(options)),
      stemmer_(make_stemmer(options_.stemmer)),
      exact_(MetaDictionary::build(terminology_)),
      stemmed_(MetaDictionary::build(terminology_, stemmer_.get())) {}

CleanText Engine::preprocess(std::string_view text) const {
  PreprocessOptions opts;
  opts.stop_words = &options_.stop_words;
  opts.negation_cues = &options_.negation_cues;
  opts.stemmer = stemmer_.get();
  opts.normalize = options_.normalize;
  return adrcode::preprocess(text, opts);
}

EncodingResult Engine::encode(std::string_view text) const {
  return trace(text, options_.selection).result;
}

EncodingResult Engine::encode(std::string_view text, const SelectionConfig& selection) const {
  return trace(text, selection).result;
}

EncodeTrace Engine::trace(std::string_view text) const { return trace(text, options_.selection); }

EncodeTrace Engine::trace(std::string_view text, const SelectionConfig& selection) const {
  EncodeTrace tr;
  tr.clean = preprocess(text);
  tr.voted = vote(tr.clean, exact_, &stemmed_, &tr.stats);
  tr.scored = compute_weights(tr.voted, terminology_, tr.clean, selection.enable_c5);
  tr.phrases = ordered_phrases_filter(tr.scored);
  tr.sorted = tr.phrases;
  multi_sort(tr.sorted, selection.enable_c5);
  tr.selected = select_winners(tr.sorted, tr.clean.size(), selection);
  tr.final_terms = maximal_voters_filter(tr.selected);

  std::vector<Winner> winners;
  winners.reserve(tr.final_terms.size());
  for (const auto& st : tr.final_terms) winners.push_back(make_winner(st, tr.clean));
  winners = resolve_synonyms(std::move(winners), terminology_);

  tr.result.candidate_count = winners.size();
  tr.result.winners = win(std::move(winners), selection.max_terms);
  tr.result.negations = tr.clean.negations;
  return tr;
}

}  // namespace adrcode
