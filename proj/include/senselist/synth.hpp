#ifndef SENSELIST_SYNTH_HPP
#define SENSELIST_SYNTH_HPP

// Seeded synthetic corpus generation: a desk-scale stand-in for licensed
// sense-tagged corpora. Every sense of every word gets signature
// collocations that appear next to the target with probability 1 - noise;
// otherwise a confounder word appears. Documents carry their own topic
// word, and an optional skew makes a document prefer one dominant sense,
// which is what makes example folds leak relative to document folds.
//
// Generation is a pure function of the spec: per-word splitmix64 streams
// are derived from (seed, target key), so neither word order nor document
// count changes another word's draws.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "senselist/corpus.hpp"
#include "senselist/rng.hpp"

namespace senselist {

struct SynthWord {
  std::string target_key;
  std::string target_form;  // empty: use target_key up to the last '.'
  std::vector<std::string> senses;
  std::map<std::string, std::vector<std::string>> signatures;  // sense -> signature words
  std::vector<std::string> confounders;                        // empty: built-in pool
  double noise = 0.0;
  int examples = 0;
  double document_skew = 0.0;  // probability of taking the document's dominant sense
};

struct SynthSpec {
  std::string name;
  std::uint64_t seed = 0;
  int documents = 1;
  std::vector<std::string> categories;  // assigned round-robin; empty: none
  std::vector<SynthWord> words;
};

namespace detail {

inline const std::vector<std::string>& default_confounders() {
  static const std::vector<std::string> pool = {"thing", "part", "case", "hand",
                                                "side",  "day",  "way",  "fact"};
  return pool;
}

inline std::string target_pos_tag(const std::string& target_key) {
  const std::size_t dot = target_key.rfind('.');
  if (dot != std::string::npos && target_key.substr(dot) == ".v") return "VB";
  return "NN";
}

inline std::string default_form(const std::string& target_key) {
  const std::size_t dot = target_key.rfind('.');
  return dot == std::string::npos ? target_key : target_key.substr(0, dot);
}

}  // namespace detail

inline void validate(const SynthSpec& spec) {
  if (spec.name.empty()) throw std::invalid_argument("synth: corpus name must be non-empty");
  if (spec.documents < 1) throw std::invalid_argument("synth: need at least one document");
  for (const SynthWord& word : spec.words) {
    if (word.target_key.empty()) throw std::invalid_argument("synth: empty target key");
    if (word.senses.empty())
      throw std::invalid_argument("synth: word '" + word.target_key + "' has zero senses");
    if (word.examples < 0)
      throw std::invalid_argument("synth: negative example count for '" + word.target_key + "'");
    if (word.noise < 0.0 || word.noise > 1.0)
      throw std::invalid_argument("synth: noise must lie in [0,1]");
    if (word.document_skew < 0.0 || word.document_skew > 1.0)
      throw std::invalid_argument("synth: document_skew must lie in [0,1]");
  }
}

inline Corpus synth(const SynthSpec& spec) {
  validate(spec);

  Corpus corpus{spec.name, {}};
  corpus.documents.resize(static_cast<std::size_t>(spec.documents));
  for (int d = 0; d < spec.documents; ++d) {
    Document& doc = corpus.documents[static_cast<std::size_t>(d)];
    doc.id = spec.name + "-d" + std::to_string(d);
    doc.corpus_name = spec.name;
    doc.grouping_key = doc.id;  // one file per document
    if (!spec.categories.empty())
      doc.category = spec.categories[static_cast<std::size_t>(d) % spec.categories.size()];
  }

  // Sort words by key so document assembly order is canonical.
  std::vector<const SynthWord*> words;
  for (const SynthWord& w : spec.words) words.push_back(&w);
  std::sort(words.begin(), words.end(),
            [](const SynthWord* a, const SynthWord* b) { return a->target_key < b->target_key; });

  for (const SynthWord* wp : words) {
    const SynthWord& word = *wp;
    const std::string form =
        word.target_form.empty() ? detail::default_form(word.target_key) : word.target_form;
    const std::string pos = detail::target_pos_tag(word.target_key);
    const std::vector<std::string>& confounders =
        word.confounders.empty() ? detail::default_confounders() : word.confounders;

    // Dominant sense per document, independent of draw order.
    std::vector<std::string> dominant(static_cast<std::size_t>(spec.documents));
    for (int d = 0; d < spec.documents; ++d) {
      const std::uint64_t pick = derive_seed(
          spec.seed, "dom:" + word.target_key + ":" + corpus.documents[std::size_t(d)].id);
      dominant[static_cast<std::size_t>(d)] = word.senses[pick % word.senses.size()];
    }

    SplitMix64 rng(derive_seed(spec.seed, "word:" + word.target_key));
    for (int i = 0; i < word.examples; ++i) {
      const int d = i % spec.documents;
      Document& doc = corpus.documents[static_cast<std::size_t>(d)];

      const double skew_draw = rng.unit();
      const std::string& sense = (skew_draw < word.document_skew)
                                     ? dominant[static_cast<std::size_t>(d)]
                                     : word.senses[rng.below(word.senses.size())];

      const auto sig_it = word.signatures.find(sense);
      const std::vector<std::string>* sigs =
          (sig_it != word.signatures.end() && !sig_it->second.empty()) ? &sig_it->second : nullptr;
      const bool noisy = rng.unit() < word.noise || sigs == nullptr;
      const std::string& context_word =
          noisy ? confounders[rng.below(confounders.size())] : (*sigs)[rng.below(sigs->size())];

      Sentence sentence;
      sentence.tokens = {
          Token{"the", "DT"},
          Token{context_word, "NN"},
          Token{form, pos},
          Token{"of", "IN"},
          Token{"topic_" + doc.id, "NN"},
          Token{".", "."},
      };
      sentence.annotations[2] = SenseAnnotation{word.target_key, sense};
      doc.sentences.push_back(std::move(sentence));
    }
  }
  return corpus;
}

}  // namespace senselist

#endif  // SENSELIST_SYNTH_HPP
