#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace sentivec {

using Token = std::string;

enum class Label { positive, negative };

const char* label_name(Label label);
Label parse_label(const std::string& name);

struct Document {
    std::string id;
    std::vector<Token> tokens;
    Label label = Label::positive;
};

/// Dense word <-> index bijection. Indices are assigned by descending corpus
/// count, ties broken lexicographically, so they are deterministic.
class Vocabulary {
public:
    Vocabulary() = default;

    static Vocabulary from_counts(const std::unordered_map<std::string, long long>& counts,
                                  long long min_count);

    /// -1 when the word is absent.
    int index(const std::string& word) const;
    const std::string& word(int index) const;
    long long count(int index) const;
    bool contains(const std::string& word) const { return index_.find(word) != index_.end(); }
    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<std::string>& words() const { return words_; }

private:
    std::vector<std::string> words_;
    std::vector<long long> counts_;
    std::unordered_map<std::string, int> index_;
};

struct Corpus {
    std::vector<Document> documents;
    Vocabulary vocabulary;
};

/// Hook for external raw-text normalizers (deasciifier, morphological
/// analyzer, ...). Applied before tokenization; identity when unset.
using TextNormalizer = std::function<std::string(const std::string&)>;

struct PipelineConfig {
    int window_size = 5;  // tokens to each side of the center
    long long min_count = 1;
    bool lowercase = true;
    std::unordered_set<std::string> stopwords;
    std::vector<std::string> multiword;  // emoticons and multi-token idioms
    std::vector<std::string> negation_markers = {"değil", "not", "no"};
    TextNormalizer normalizer;

    /// Throws std::invalid_argument on out-of-range fields or multiword
    /// entries that are neither >= 2 tokens nor emoticon strings.
    void validate() const;
};

/// Token position span [begin, end) around a center position.
struct Window {
    int begin = 0;
    int end = 0;
    int center = 0;
};

/// Lowercases (optionally), keeps "!" and "?" as standalone tokens, deletes
/// all other punctuation, and merges multiword lexicon entries into single
/// tokens. Whitespace-delimited chunks that exactly match an emoticon entry
/// are kept verbatim.
std::vector<Token> tokenize(const std::string& raw_text, const PipelineConfig& config);

/// Drops every marker token; the token immediately preceding a marker gets a
/// trailing underscore. Markers with no preceding token are just dropped.
std::vector<Token> apply_negation(const std::vector<Token>& tokens,
                                  const std::vector<std::string>& markers);

/// Order-preserving exact-match filter.
std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const std::unordered_set<std::string>& stopwords);

/// One window per token position, truncated at document boundaries.
std::vector<Window> sliding_windows(const Document& doc, int window_size);

/// Words with total count >= min_count. Throws std::runtime_error when the
/// result would be empty.
Vocabulary build_vocabulary(const std::vector<Document>& documents, long long min_count);

/// normalizer -> tokenize -> negation -> stop-word removal.
std::vector<Token> process_text(const std::string& raw_text, const PipelineConfig& config);

/// Reads a corpus file: one document per line, "<label>\t<raw text>" with
/// label in {pos, neg}. Document ids are 1-based line numbers.
Corpus load_corpus(const std::string& path, const PipelineConfig& config);

std::unordered_set<std::string> load_stopwords(const std::string& path);
std::vector<std::string> load_multiword(const std::string& path);

/// All windows over all documents as vocabulary ids, position order kept.
/// Out-of-vocabulary tokens are dropped; windows left empty are skipped.
std::vector<std::vector<int>> collect_windows(const std::vector<Document>& documents,
                                              const Vocabulary& vocab, int window_size);

}  // namespace sentivec
