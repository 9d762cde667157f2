#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"
#include "senselist/corpus.hpp"

using namespace senselist;

namespace {

const char* kSmallFile =
    "#DOC id=d1 corpus=bc group=f01 category=A\n"
    "The\tDT\n"
    "state\tNN\tstate.n=#3\n"
    "acted\tVBD\n"
    "\n";

}  // namespace

TEST_CASE("empty stream parses to an empty corpus") {
  std::istringstream in("");
  const Corpus c = parse_corpus(in, "empty");
  CHECK(c.name == "empty");
  CHECK(c.documents.empty());
}

TEST_CASE("small file parses field by field") {
  const Corpus c = parse_corpus(std::string(kSmallFile), "bc");

  Corpus expected{"bc", {}};
  Document doc{"d1", "bc", "f01", "A", {}};
  Sentence s;
  s.tokens = {Token{"The", "DT"}, Token{"state", "NN"}, Token{"acted", "VBD"}};
  s.annotations[1] = SenseAnnotation{"state.n", "#3"};
  doc.sentences.push_back(s);
  expected.documents.push_back(doc);

  REQUIRE(c.documents.size() == 1);
  CHECK(c.documents[0] == expected.documents[0]);

  const auto examples = extract_examples(c);
  REQUIRE(examples.size() == 1);
  CHECK(examples[0].target_key == "state.n");
  CHECK(examples[0].sense == "#3");
  CHECK(examples[0].doc_id == "d1");
  CHECK(examples[0].sentence_index == 0);
  CHECK(examples[0].token_index == 1);
  CHECK(examples[0].target_form == "state");
  CHECK(examples[0].context == &c.documents[0].sentences[0]);
}

TEST_CASE("duplicate document ids name the second header line") {
  const std::string text =
      "#DOC id=d1 corpus=bc group=g1\n"
      "a\tDT\n"
      "\n"
      "#DOC id=d1 corpus=bc group=g2\n";
  try {
    parse_corpus(text, "bc");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("duplicate document id") != std::string::npos);
  }
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_corpus("#DOCid=x\n", "c"), ParseError);
  CHECK_THROWS_AS(parse_corpus("#DOC id=d1 corpus=c\n", "c"), ParseError);       // missing group
  CHECK_THROWS_AS(parse_corpus("#DOC id=d1 corpus=c group=\n", "c"), ParseError);  // empty value
  CHECK_THROWS_AS(parse_corpus("#DOC id=d1 corpus=c group=g color=red\n", "c"), ParseError);
  CHECK_THROWS_AS(parse_corpus("word\tNN\n", "c"), ParseError);  // token before header
  const std::string doc = "#DOC id=d1 corpus=c group=g\n";
  CHECK_THROWS_AS(parse_corpus(doc + "word\n", "c"), ParseError);
  CHECK_THROWS_AS(parse_corpus(doc + "word\tNN\textra\tmore\n", "c"), ParseError);
  CHECK_THROWS_AS(parse_corpus(doc + "word\tN N\n", "c"), ParseError);
  CHECK_THROWS_AS(parse_corpus(doc + "word\tNN\tstate.n\n", "c"), ParseError);   // no '=' in ann
  CHECK_THROWS_AS(parse_corpus(doc + "word\tNN\t=x\n", "c"), ParseError);
  CHECK_THROWS_AS(parse_corpus(doc + "word\tNN\tk=\n", "c"), ParseError);
  CHECK_THROWS_AS(parse_corpus(doc + "\tNN\n", "c"), ParseError);  // empty form
}

TEST_CASE("comments and extra blank lines are ignored") {
  const std::string text =
      "## a comment\n"
      "#DOC id=d1 corpus=bc group=g1\n"
      "## another\n"
      "a\tDT\n"
      "\n"
      "\n"
      "b\tNN\n"
      "\n";
  const Corpus c = parse_corpus(text, "bc");
  REQUIRE(c.documents.size() == 1);
  REQUIRE(c.documents[0].sentences.size() == 2);
  CHECK(c.documents[0].sentences[1].tokens[0].form == "b");
}

TEST_CASE("serialization round-trips canonical files byte for byte") {
  const std::string canonical = serialize_corpus(parse_corpus(std::string(kSmallFile), "bc"));
  CHECK(canonical == kSmallFile);  // the fixture is already canonical
  CHECK(serialize_corpus(parse_corpus(canonical, "bc")) == canonical);
}

TEST_CASE("round-trip property on random corpora") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Corpus c = helpers::random_word_corpus(seed, 25, 3);
    const std::string once = serialize_corpus(c);
    const std::string twice = serialize_corpus(parse_corpus(once, c.name));
    CHECK(once == twice);
  }
}

TEST_CASE("missing trailing blank line still closes the last sentence") {
  const std::string text = "#DOC id=d1 corpus=bc group=g1\na\tDT";
  const Corpus c = parse_corpus(text, "bc");
  REQUIRE(c.documents[0].sentences.size() == 1);
  CHECK(serialize_corpus(c) == "#DOC id=d1 corpus=bc group=g1\na\tDT\n\n");
}

TEST_CASE("extract_examples filters and orders deterministically") {
  Corpus corpus{"bc", {}};
  Document d1{"d1", "bc", "g1", std::nullopt, {}};
  Sentence s1 = helpers::make_sentence("the/DT state/NN of/IN age/NN");
  s1.annotations[1] = SenseAnnotation{"state.n", "#1"};
  s1.annotations[3] = SenseAnnotation{"age.n", "#2"};
  Sentence s2 = helpers::make_sentence("state/NN and/CC state/NN");
  s2.annotations[0] = SenseAnnotation{"state.n", "#2"};
  s2.annotations[2] = SenseAnnotation{"state.n", "#1"};
  d1.sentences = {s1, s2};
  Document d2{"d2", "bc", "g2", std::nullopt, {}};
  Sentence s3 = helpers::make_sentence("age/NN matters/VBZ");
  s3.annotations[0] = SenseAnnotation{"age.n", "#1"};
  d2.sentences = {s3};
  corpus.documents = {d1, d2};

  const auto all = extract_examples(corpus);
  REQUIRE(all.size() == 5);
  const auto state = extract_examples(corpus, std::string("state.n"));
  REQUIRE(state.size() == 3);
  CHECK(state[0].sentence_index == 0);
  CHECK(state[1].sentence_index == 1);
  CHECK(state[1].token_index == 0);
  CHECK(state[2].token_index == 2);

  CHECK(extract_examples(corpus, std::string("missing.n")).empty());
  CHECK(annotated_target_keys(corpus) == std::vector<std::string>{"age.n", "state.n"});

  // A corpus without annotations yields nothing.
  Corpus bare{"x", {Document{"d", "x", "d", std::nullopt, {helpers::make_sentence("a/DT")}}}};
  CHECK(extract_examples(bare).empty());
}

TEST_CASE("content tag classification") {
  CHECK(is_content_tag("NN"));
  CHECK_FALSE(is_content_tag("IN"));
  CHECK(is_content_tag("RBR"));
  CHECK(is_content_tag("VBZ"));
  CHECK(is_content_tag("JJS"));
  CHECK_FALSE(is_content_tag("DT"));
  CHECK_FALSE(is_content_tag("."));
  CHECK_FALSE(is_content_tag(""));

  // Total function: every tag lands in exactly one class.
  for (const char* tag : {"NN", "NNS", "NNP", "VB", "VBD", "JJ", "RB", "DT", "IN", "CC", "PRP",
                          "MD", "TO", ",", ".", "``", "CD", "WDT"}) {
    const bool content = is_content_tag(tag);
    CHECK((content || !content));
    const char c = tag[0];
    CHECK(content == (c == 'N' || c == 'V' || c == 'J' || c == 'R'));
  }
}
