#include "sentivec/text_pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sentivec {

namespace {

// UTF-8 continuation and lead bytes count as word characters so multibyte
// letters pass through untouched. '_' is reserved as the negation/merge
// marker and must survive re-tokenization.
bool is_word_char(unsigned char c) {
    if (c >= 0x80) return true;
    if (c >= 'a' && c <= 'z') return true;
    if (c >= 'A' && c <= 'Z') return true;
    if (c >= '0' && c <= '9') return true;
    return c == '_';
}

bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string ascii_lower(const std::string& s) {
    std::string out = s;
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::vector<std::string> split_whitespace(const std::string& s) {
    std::vector<std::string> chunks;
    std::string cur;
    for (unsigned char c : s) {
        if (is_space(c)) {
            if (!cur.empty()) chunks.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(static_cast<char>(c));
        }
    }
    if (!cur.empty()) chunks.push_back(std::move(cur));
    return chunks;
}

// Punctuation policy: '!' and '?' become standalone tokens, everything else
// that is not a word character is deleted.
void clean_chunk(const std::string& chunk, std::vector<Token>& out) {
    std::string cur;
    for (unsigned char c : chunk) {
        if (c == '!' || c == '?') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
            out.push_back(std::string(1, static_cast<char>(c)));
        } else if (is_word_char(c)) {
            cur.push_back(static_cast<char>(c));
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
}

struct MultiwordIndex {
    std::unordered_set<std::string> emoticons;
    std::vector<std::vector<Token>> idioms;  // longest first
};

bool entry_is_emoticon(const std::string& entry) {
    for (unsigned char c : entry) {
        if (!is_word_char(c) && !is_space(c)) return true;
    }
    return false;
}

MultiwordIndex index_multiword(const std::vector<std::string>& entries, bool lowercase,
                               bool strict) {
    MultiwordIndex index;
    for (const std::string& raw : entries) {
        std::string entry = lowercase ? ascii_lower(raw) : raw;
        std::vector<std::string> parts = split_whitespace(entry);
        if (parts.size() == 1 && entry_is_emoticon(parts[0])) {
            index.emoticons.insert(parts[0]);
            continue;
        }
        std::vector<Token> toks;
        for (const std::string& p : parts) clean_chunk(p, toks);
        if (toks.size() >= 2) {
            index.idioms.push_back(std::move(toks));
            continue;
        }
        if (strict) {
            throw std::invalid_argument("multiword entry must be >= 2 tokens or an emoticon: \"" +
                                        raw + "\"");
        }
    }
    std::stable_sort(index.idioms.begin(), index.idioms.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return index;
}

std::vector<Token> merge_idioms(std::vector<Token> tokens, const MultiwordIndex& index) {
    if (index.idioms.empty()) return tokens;
    std::vector<Token> out;
    size_t i = 0;
    while (i < tokens.size()) {
        const std::vector<Token>* hit = nullptr;
        for (const auto& idiom : index.idioms) {
            if (i + idiom.size() > tokens.size()) continue;
            if (std::equal(idiom.begin(), idiom.end(), tokens.begin() + i)) {
                hit = &idiom;
                break;
            }
        }
        if (hit) {
            std::string merged = (*hit)[0];
            for (size_t j = 1; j < hit->size(); ++j) {
                merged += '_';
                merged += (*hit)[j];
            }
            out.push_back(std::move(merged));
            i += hit->size();
        } else {
            out.push_back(std::move(tokens[i]));
            ++i;
        }
    }
    return out;
}

}  // namespace

const char* label_name(Label label) {
    return label == Label::positive ? "pos" : "neg";
}

Label parse_label(const std::string& name) {
    if (name == "pos") return Label::positive;
    if (name == "neg") return Label::negative;
    throw std::runtime_error("unknown label \"" + name + "\" (expected pos or neg)");
}

Vocabulary Vocabulary::from_counts(const std::unordered_map<std::string, long long>& counts,
                                   long long min_count) {
    std::vector<std::pair<std::string, long long>> kept;
    kept.reserve(counts.size());
    for (const auto& [word, count] : counts) {
        if (count >= min_count) kept.emplace_back(word, count);
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    Vocabulary vocab;
    vocab.words_.reserve(kept.size());
    vocab.counts_.reserve(kept.size());
    for (auto& [word, count] : kept) {
        vocab.index_.emplace(word, static_cast<int>(vocab.words_.size()));
        vocab.words_.push_back(std::move(word));
        vocab.counts_.push_back(count);
    }
    return vocab;
}

int Vocabulary::index(const std::string& word) const {
    auto it = index_.find(word);
    return it == index_.end() ? -1 : it->second;
}

const std::string& Vocabulary::word(int index) const {
    return words_.at(static_cast<size_t>(index));
}

long long Vocabulary::count(int index) const {
    return counts_.at(static_cast<size_t>(index));
}

void PipelineConfig::validate() const {
    if (window_size < 1) throw std::invalid_argument("window_size must be >= 1");
    if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
    index_multiword(multiword, lowercase, /*strict=*/true);
}

std::vector<Token> tokenize(const std::string& raw_text, const PipelineConfig& config) {
    const std::string text = config.lowercase ? ascii_lower(raw_text) : raw_text;
    const MultiwordIndex multiword = index_multiword(config.multiword, false, false);

    std::vector<Token> tokens;
    for (const std::string& chunk : split_whitespace(text)) {
        if (multiword.emoticons.find(chunk) != multiword.emoticons.end()) {
            tokens.push_back(chunk);
        } else {
            clean_chunk(chunk, tokens);
        }
    }
    return merge_idioms(std::move(tokens), multiword);
}

std::vector<Token> apply_negation(const std::vector<Token>& tokens,
                                  const std::vector<std::string>& markers) {
    const std::unordered_set<std::string> marker_set(markers.begin(), markers.end());
    std::vector<Token> out;
    out.reserve(tokens.size());
    for (const Token& tok : tokens) {
        if (marker_set.find(tok) != marker_set.end()) {
            if (!out.empty()) out.back() += '_';
        } else {
            out.push_back(tok);
        }
    }
    return out;
}

std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const std::unordered_set<std::string>& stopwords) {
    std::vector<Token> out;
    out.reserve(tokens.size());
    for (const Token& tok : tokens) {
        if (stopwords.find(tok) == stopwords.end()) out.push_back(tok);
    }
    return out;
}

std::vector<Window> sliding_windows(const Document& doc, int window_size) {
    if (window_size < 1) throw std::invalid_argument("window_size must be >= 1");
    const int n = static_cast<int>(doc.tokens.size());
    std::vector<Window> windows;
    windows.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        Window w;
        w.begin = std::max(0, t - window_size);
        w.end = std::min(n, t + window_size + 1);
        w.center = t;
        windows.push_back(w);
    }
    return windows;
}

Vocabulary build_vocabulary(const std::vector<Document>& documents, long long min_count) {
    std::unordered_map<std::string, long long> counts;
    for (const Document& doc : documents) {
        for (const Token& tok : doc.tokens) ++counts[tok];
    }
    Vocabulary vocab = Vocabulary::from_counts(counts, min_count);
    if (vocab.size() == 0) {
        throw std::runtime_error("vocabulary is empty: no word reaches min_count=" +
                                 std::to_string(min_count));
    }
    return vocab;
}

std::vector<Token> process_text(const std::string& raw_text, const PipelineConfig& config) {
    const std::string normalized = config.normalizer ? config.normalizer(raw_text) : raw_text;
    std::vector<Token> tokens = tokenize(normalized, config);
    tokens = apply_negation(tokens, config.negation_markers);
    return remove_stopwords(tokens, config.stopwords);
}

Corpus load_corpus(const std::string& path, const PipelineConfig& config) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);

    Corpus corpus;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected \"<label>\\t<text>\"");
        }
        Document doc;
        try {
            doc.label = parse_label(line.substr(0, tab));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        doc.id = std::to_string(line_no);
        doc.tokens = process_text(line.substr(tab + 1), config);
        corpus.documents.push_back(std::move(doc));
    }
    if (corpus.documents.empty()) throw std::runtime_error("corpus file has no documents: " + path);
    corpus.vocabulary = build_vocabulary(corpus.documents, config.min_count);
    return corpus;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stop-word file: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) words.insert(line);
    }
    return words;
}

std::vector<std::string> load_multiword(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open multiword lexicon file: " + path);
    std::vector<std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) entries.push_back(line);
    }
    return entries;
}

std::vector<std::vector<int>> collect_windows(const std::vector<Document>& documents,
                                              const Vocabulary& vocab, int window_size) {
    std::vector<std::vector<int>> windows;
    for (const Document& doc : documents) {
        for (const Window& w : sliding_windows(doc, window_size)) {
            std::vector<int> ids;
            ids.reserve(static_cast<size_t>(w.end - w.begin));
            for (int t = w.begin; t < w.end; ++t) {
                const int id = vocab.index(doc.tokens[static_cast<size_t>(t)]);
                if (id >= 0) ids.push_back(id);
            }
            if (!ids.empty()) windows.push_back(std::move(ids));
        }
    }
    return windows;
}

}  // namespace sentivec
