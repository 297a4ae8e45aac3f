#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sentivec/text_pipeline.hpp"

namespace sentivec {

/// How per-class counts are accumulated: token occurrences (default) or the
/// number of documents a word occurs in.
enum class FrequencyMode { token, document };

struct CountStats {
    std::unordered_map<std::string, long long> pos_count;  // per-word, positive class
    std::unordered_map<std::string, long long> neg_count;  // per-word, negative class
    long long pos_total = 0;
    long long neg_total = 0;
};

CountStats accumulate_counts(const std::vector<const Document*>& training_docs,
                             FrequencyMode mode);

/// log((pos_rate + 0.01) / (neg_rate + 0.01)), natural log. Throws when
/// either class corpus is empty.
double polarity_score(const std::string& word, const CountStats& stats);

/// Strictly positive -> +1, strictly negative -> -1, zero -> 0.
int sign_score(double score);

/// Supervised per-word scores with provenance of the training split they
/// were computed from. Words outside the lexicon score 0.
class PolarityLexicon {
public:
    PolarityLexicon() = default;
    PolarityLexicon(std::vector<std::pair<std::string, double>> entries, std::string provenance,
                    std::unordered_set<std::string> contributing_docs);

    double score(const std::string& word) const;
    int size() const { return static_cast<int>(entries_.size()); }
    /// Vocabulary order.
    const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }
    const std::string& provenance() const { return provenance_; }
    /// Leakage instrumentation: true when the document was part of the
    /// training split this lexicon was built from.
    bool contributed(const std::string& doc_id) const;

private:
    std::vector<std::pair<std::string, double>> entries_;
    std::unordered_map<std::string, double> scores_;
    std::string provenance_;
    std::unordered_set<std::string> contributing_docs_;
};

/// Scores every vocabulary word from the given training documents only.
/// Throws when the split does not contain both classes.
PolarityLexicon build_lexicon(const std::vector<const Document*>& training_docs,
                              const Vocabulary& vocab,
                              FrequencyMode mode = FrequencyMode::token,
                              const std::string& provenance = "all");

struct FourScores {
    double self = 0.0;
    double ctx_min = 0.0;
    double ctx_max = 0.0;
    double ctx_avg = 0.0;
};

/// Context scores of one word over all windows containing it, occurrences of
/// the word itself excluded. No context -> min = max = avg = self.
FourScores four_scores(const std::string& word, const std::vector<std::vector<int>>& windows,
                       const Vocabulary& vocab, const PolarityLexicon& lexicon);

/// Single pass over the windows; one FourScores row per vocabulary word.
std::vector<FourScores> four_scores_all(const std::vector<std::vector<int>>& windows,
                                        const Vocabulary& vocab,
                                        const PolarityLexicon& lexicon);

struct ThreeFeats {
    double doc_min = 0.0;
    double doc_mean = 0.0;
    double doc_max = 0.0;
};

/// Min/mean/max of the document's token scores; empty document -> zeros.
ThreeFeats doc_three_feats(const Document& doc, const PolarityLexicon& lexicon);

/// "<word>\t<score>" per line, >= 9 significant digits, vocabulary order.
void write_lexicon(const PolarityLexicon& lexicon, const std::string& path);

}  // namespace sentivec
