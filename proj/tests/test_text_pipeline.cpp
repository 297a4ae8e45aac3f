#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "sentivec/text_pipeline.hpp"

using namespace sentivec;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/sentivec_tp_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("tokenize lowercases and strips punctuation") {
    PipelineConfig cfg;
    CHECK(tokenize("The movie, was (GREAT).", cfg) ==
          std::vector<Token>{"the", "movie", "was", "great"});
}

TEST_CASE("tokenize keeps ! and ? as standalone tokens") {
    PipelineConfig cfg;
    CHECK(tokenize("great!", cfg) == std::vector<Token>{"great", "!"});
    CHECK(tokenize("what?!now", cfg) == std::vector<Token>{"what", "?", "!", "now"});
}

TEST_CASE("tokenize keeps emoticon chunks verbatim") {
    PipelineConfig cfg;
    cfg.multiword = {":))"};
    CHECK(tokenize("loved it :))", cfg) == std::vector<Token>{"loved", "it", ":))"});
    // The same characters inside a non-matching chunk are still punctuation.
    CHECK(tokenize("it:))x", cfg) == std::vector<Token>{"itx"});
}

TEST_CASE("tokenize merges idioms into single underscore tokens") {
    PipelineConfig cfg;
    cfg.multiword = {"kick the bucket"};
    CHECK(tokenize("he might kick the bucket today", cfg) ==
          std::vector<Token>{"he", "might", "kick_the_bucket", "today"});
}

TEST_CASE("longest idiom wins at the same position") {
    PipelineConfig cfg;
    cfg.multiword = {"new york", "new york city"};
    CHECK(tokenize("in new york city today", cfg) ==
          std::vector<Token>{"in", "new_york_city", "today"});
}

TEST_CASE("tokenize passes multibyte letters through") {
    PipelineConfig cfg;
    CHECK(tokenize("çok güzel", cfg) == std::vector<Token>{"çok", "güzel"});
}

TEST_CASE("negation suffixes the preceding token and drops the marker") {
    CHECK(apply_negation({"güzel", "değil"}, {"değil"}) == std::vector<Token>{"güzel_"});
    CHECK(apply_negation({"good"}, {"değil", "not"}) == std::vector<Token>{"good"});
    CHECK(apply_negation({"değil", "good"}, {"değil"}) == std::vector<Token>{"good"});
    CHECK(apply_negation({"a", "not", "b", "not"}, {"not"}) ==
          std::vector<Token>{"a_", "b_"});
}

TEST_CASE("stopword removal preserves order") {
    CHECK(remove_stopwords({"the", "movie", "was", "great"}, {"the", "was"}) ==
          std::vector<Token>{"movie", "great"});
}

TEST_CASE("process_text chains normalization, negation, stopwords") {
    PipelineConfig cfg;
    cfg.stopwords = {"the"};
    CHECK(process_text("The plot was not great!", cfg) ==
          std::vector<Token>{"plot", "was_", "great", "!"});
}

TEST_CASE("normalizer hook runs before tokenization") {
    PipelineConfig cfg;
    cfg.normalizer = [](const std::string& s) {
        std::string out = s;
        for (char& c : out) {
            if (c == '0') c = 'o';
        }
        return out;
    };
    CHECK(process_text("g00d", cfg) == std::vector<Token>{"good"});
}

TEST_CASE("sliding windows truncate at document boundaries") {
    Document doc;
    doc.tokens = {"a", "b", "c", "d"};
    const auto windows = sliding_windows(doc, 1);
    REQUIRE(windows.size() == 4);
    CHECK(windows[0].begin == 0);
    CHECK(windows[0].end == 2);
    CHECK(windows[0].center == 0);
    CHECK(windows[2].begin == 1);
    CHECK(windows[2].end == 4);
    CHECK(windows[3].begin == 2);
    CHECK(windows[3].end == 4);
}

TEST_CASE("vocabulary orders by descending count then lexicographically") {
    std::vector<Document> docs(1);
    docs[0].tokens = {"b", "b", "a", "c", "c"};
    const Vocabulary vocab = build_vocabulary(docs, 1);
    REQUIRE(vocab.size() == 3);
    CHECK(vocab.word(0) == "b");
    CHECK(vocab.word(1) == "c");
    CHECK(vocab.word(2) == "a");
    CHECK(vocab.index("c") == 1);
    CHECK(vocab.index("zzz") == -1);
    CHECK(vocab.count(0) == 2);
}

TEST_CASE("vocabulary honors min_count and rejects empty results") {
    std::vector<Document> docs(1);
    docs[0].tokens = {"a", "a", "b"};
    CHECK(build_vocabulary(docs, 2).size() == 1);
    CHECK_THROWS_AS(build_vocabulary(docs, 5), std::runtime_error);
}

TEST_CASE("load_corpus parses labels, assigns line ids, builds vocabulary") {
    const std::string path = write_temp("corpus.tsv", "pos\tgood fun\nneg\tbad end\n");
    PipelineConfig cfg;
    const Corpus corpus = load_corpus(path, cfg);
    REQUIRE(corpus.documents.size() == 2);
    CHECK(corpus.documents[0].id == "1");
    CHECK(corpus.documents[0].label == Label::positive);
    CHECK(corpus.documents[1].id == "2");
    CHECK(corpus.documents[1].label == Label::negative);
    CHECK(corpus.vocabulary.size() == 4);
    std::remove(path.c_str());
}

TEST_CASE("load_corpus reports the offending line") {
    const std::string path = write_temp("bad.tsv", "pos\tok\nmaybe\thmm\n");
    PipelineConfig cfg;
    CHECK_THROWS_WITH_AS(load_corpus(path, cfg), doctest::Contains(":2:"), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("load_corpus rejects lines without a tab") {
    const std::string path = write_temp("notab.tsv", "pos no tab here\n");
    PipelineConfig cfg;
    CHECK_THROWS_AS(load_corpus(path, cfg), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("collect_windows drops OOV tokens and empty windows") {
    std::vector<Document> docs(2);
    docs[0].tokens = {"a", "zz", "b"};
    docs[1].tokens = {"zz", "zz"};
    Document vocab_doc;
    vocab_doc.tokens = {"a", "b"};
    const Vocabulary vocab = build_vocabulary({vocab_doc}, 1);
    const auto windows = collect_windows(docs, vocab, 1);
    // Document 2 is entirely OOV: its windows vanish.
    REQUIRE(windows.size() == 3);
    for (const auto& w : windows) {
        for (const int id : w) CHECK((id == vocab.index("a") || id == vocab.index("b")));
    }
}

TEST_CASE("pipeline config validation") {
    PipelineConfig cfg;
    cfg.window_size = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.window_size = 5;
    cfg.multiword = {"single"};  // neither idiom nor emoticon
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.multiword = {":))", "kick the bucket"};
    CHECK_NOTHROW(cfg.validate());
}
