#ifndef SENSELIST_CORPUS_HPP
#define SENSELIST_CORPUS_HPP

// In-memory corpus model and the vertical corpus file format.
//
// The format is line-oriented, UTF-8, LF:
//
//   #DOC id=<id> corpus=<name> group=<grouping-key>[ category=<cat>]
//   <form>\t<pos>
//   <form>\t<pos>\t<target_key>=<sense>
//                                  <- blank line ends a sentence
//   ## anything                    <- comment, ignored
//
// Header values contain no spaces. Surface forms are case-preserved and
// never normalized; sense labels are opaque strings scoped to their
// target key.

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace senselist {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Input data that parses but cannot be used for the requested run
/// (no shared target words, missing categories, too few documents...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Token {
  std::string form;
  std::string pos;

  friend bool operator==(const Token&, const Token&) = default;
};

struct SenseAnnotation {
  std::string target_key;  // word type + part of speech, e.g. "state.n"
  std::string sense;

  friend bool operator==(const SenseAnnotation&, const SenseAnnotation&) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::map<std::size_t, SenseAnnotation> annotations;  // token index -> annotation

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  std::string id;
  std::string corpus_name;
  std::string grouping_key;  // file or directory identity, drives document folds
  std::optional<std::string> category;
  std::vector<Sentence> sentences;

  friend bool operator==(const Document&, const Document&) = default;
};

struct Corpus {
  std::string name;
  std::vector<Document> documents;
};

/// One sense-annotated occurrence of a target word. `context` points into
/// the owning Corpus, which must outlive the example.
struct Example {
  std::string target_key;
  std::string sense;
  std::string doc_id;
  std::size_t sentence_index = 0;
  std::size_t token_index = 0;
  std::string target_form;
  const Sentence* context = nullptr;
};

/// Content word under the Penn convention: the tag starts with N, V, J or R.
/// Everything else (including punctuation tags) counts as a function word.
inline bool is_content_tag(std::string_view pos) {
  if (pos.empty()) return false;
  const char c = pos.front();
  return c == 'N' || c == 'V' || c == 'J' || c == 'R';
}

namespace detail {

inline bool has_whitespace(std::string_view s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') return true;
  }
  return false;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    if (at == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

}  // namespace detail

inline Corpus parse_corpus(std::istream& in, std::string corpus_name) {
  Corpus corpus{std::move(corpus_name), {}};
  std::set<std::string> seen_ids;
  Sentence pending;
  std::string line;
  std::size_t lineno = 0;

  auto current = [&]() -> Document& { return corpus.documents.back(); };
  auto flush_sentence = [&]() {
    if (!pending.tokens.empty()) {
      current().sentences.push_back(std::move(pending));
      pending = {};
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (line.starts_with("##")) continue;
    if (line.empty()) {
      if (!pending.tokens.empty()) flush_sentence();
      continue;
    }
    if (line.front() == '#') {
      if (!line.starts_with("#DOC ")) throw ParseError(lineno, "malformed header line: " + line);
      Document doc;
      bool have_id = false, have_corpus = false, have_group = false;
      for (std::string_view part : detail::split(std::string_view(line).substr(5), ' ')) {
        if (part.empty()) throw ParseError(lineno, "malformed header line: empty field");
        const std::size_t eq = part.find('=');
        if (eq == std::string_view::npos || eq == 0)
          throw ParseError(lineno, "malformed header field '" + std::string(part) + "'");
        const std::string_view key = part.substr(0, eq);
        const std::string value(part.substr(eq + 1));
        if (value.empty())
          throw ParseError(lineno, "empty value for header key '" + std::string(key) + "'");
        if (key == "id") {
          if (have_id) throw ParseError(lineno, "duplicate header key 'id'");
          doc.id = value;
          have_id = true;
        } else if (key == "corpus") {
          if (have_corpus) throw ParseError(lineno, "duplicate header key 'corpus'");
          doc.corpus_name = value;
          have_corpus = true;
        } else if (key == "group") {
          if (have_group) throw ParseError(lineno, "duplicate header key 'group'");
          doc.grouping_key = value;
          have_group = true;
        } else if (key == "category") {
          if (doc.category) throw ParseError(lineno, "duplicate header key 'category'");
          doc.category = value;
        } else {
          throw ParseError(lineno, "unknown header key '" + std::string(key) + "'");
        }
      }
      if (!have_id || !have_corpus || !have_group)
        throw ParseError(lineno, "header needs id=, corpus= and group=");
      if (!seen_ids.insert(doc.id).second)
        throw ParseError(lineno, "duplicate document id '" + doc.id + "'");
      if (!corpus.documents.empty()) flush_sentence();
      corpus.documents.push_back(std::move(doc));
      continue;
    }
    // Token line.
    if (corpus.documents.empty()) throw ParseError(lineno, "token line before any #DOC header");
    const auto fields = detail::split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError(lineno, "token line needs 2 or 3 tab-separated fields");
    if (fields[0].empty()) throw ParseError(lineno, "empty token form");
    if (fields[1].empty() || detail::has_whitespace(fields[1]))
      throw ParseError(lineno, "bad part-of-speech tag '" + std::string(fields[1]) + "'");
    Token token{std::string(fields[0]), std::string(fields[1])};
    if (fields.size() == 3) {
      const std::string_view ann = fields[2];
      const std::size_t eq = ann.find('=');
      if (eq == std::string_view::npos || eq == 0 || eq + 1 == ann.size())
        throw ParseError(lineno, "malformed annotation '" + std::string(ann) + "'");
      pending.annotations[pending.tokens.size()] =
          SenseAnnotation{std::string(ann.substr(0, eq)), std::string(ann.substr(eq + 1))};
    }
    pending.tokens.push_back(std::move(token));
  }
  if (!pending.tokens.empty()) current().sentences.push_back(std::move(pending));
  return corpus;
}

inline Corpus parse_corpus(const std::string& text, std::string corpus_name) {
  std::istringstream in(text);
  return parse_corpus(in, std::move(corpus_name));
}

/// Canonical serialization: fixed header key order, token lines tab-joined,
/// one blank line after every sentence, comments dropped. Parsing a canonical
/// file and serializing it again is byte-identical.
inline void serialize_corpus(const Corpus& corpus, std::ostream& out) {
  for (const Document& doc : corpus.documents) {
    out << "#DOC id=" << doc.id << " corpus=" << doc.corpus_name << " group=" << doc.grouping_key;
    if (doc.category) out << " category=" << *doc.category;
    out << '\n';
    for (const Sentence& sentence : doc.sentences) {
      for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        const Token& t = sentence.tokens[i];
        out << t.form << '\t' << t.pos;
        if (auto it = sentence.annotations.find(i); it != sentence.annotations.end())
          out << '\t' << it->second.target_key << '=' << it->second.sense;
        out << '\n';
      }
      out << '\n';
    }
  }
}

inline std::string serialize_corpus(const Corpus& corpus) {
  std::ostringstream out;
  serialize_corpus(corpus, out);
  return out.str();
}

/// All annotated occurrences, optionally filtered to one target key, in
/// document order, then sentence order, then token order.
inline std::vector<Example> extract_examples(
    const Corpus& corpus, const std::optional<std::string>& target_key = std::nullopt) {
  std::vector<Example> out;
  for (const Document& doc : corpus.documents) {
    for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
      const Sentence& sentence = doc.sentences[si];
      for (const auto& [ti, ann] : sentence.annotations) {
        if (target_key && ann.target_key != *target_key) continue;
        out.push_back(Example{ann.target_key, ann.sense, doc.id, si, ti,
                              sentence.tokens.at(ti).form, &sentence});
      }
    }
  }
  return out;
}

/// Distinct target keys annotated anywhere in the corpus, sorted.
inline std::vector<std::string> annotated_target_keys(const Corpus& corpus) {
  std::set<std::string> keys;
  for (const Document& doc : corpus.documents)
    for (const Sentence& sentence : doc.sentences)
      for (const auto& [ti, ann] : sentence.annotations) keys.insert(ann.target_key);
  return {keys.begin(), keys.end()};
}

}  // namespace senselist

#endif  // SENSELIST_CORPUS_HPP
