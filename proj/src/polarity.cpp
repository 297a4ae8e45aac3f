#include "sentivec/polarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace sentivec {

namespace {
constexpr double kSmoothing = 0.01;
}

CountStats accumulate_counts(const std::vector<const Document*>& training_docs,
                             FrequencyMode mode) {
    CountStats stats;
    std::unordered_set<std::string> seen;
    for (const Document* doc : training_docs) {
        const bool positive = doc->label == Label::positive;
        auto& counts = positive ? stats.pos_count : stats.neg_count;
        auto& total = positive ? stats.pos_total : stats.neg_total;
        if (mode == FrequencyMode::token) {
            for (const Token& tok : doc->tokens) {
                ++counts[tok];
                ++total;
            }
        } else {
            seen.clear();
            for (const Token& tok : doc->tokens) {
                if (seen.insert(tok).second) ++counts[tok];
            }
            ++total;  // documents are the unit
        }
    }
    return stats;
}

double polarity_score(const std::string& word, const CountStats& stats) {
    if (stats.pos_total <= 0 || stats.neg_total <= 0) {
        throw std::runtime_error("polarity_score requires both class corpora to be non-empty");
    }
    const auto pos_it = stats.pos_count.find(word);
    const auto neg_it = stats.neg_count.find(word);
    const double pos_rate =
        pos_it == stats.pos_count.end()
            ? 0.0
            : static_cast<double>(pos_it->second) / static_cast<double>(stats.pos_total);
    const double neg_rate =
        neg_it == stats.neg_count.end()
            ? 0.0
            : static_cast<double>(neg_it->second) / static_cast<double>(stats.neg_total);
    return std::log((pos_rate + kSmoothing) / (neg_rate + kSmoothing));
}

int sign_score(double score) {
    if (score > 0.0) return 1;
    if (score < 0.0) return -1;
    return 0;
}

PolarityLexicon::PolarityLexicon(std::vector<std::pair<std::string, double>> entries,
                                 std::string provenance,
                                 std::unordered_set<std::string> contributing_docs)
    : entries_(std::move(entries)),
      provenance_(std::move(provenance)),
      contributing_docs_(std::move(contributing_docs)) {
    scores_.reserve(entries_.size());
    for (const auto& [word, score] : entries_) scores_.emplace(word, score);
}

double PolarityLexicon::score(const std::string& word) const {
    const auto it = scores_.find(word);
    return it == scores_.end() ? 0.0 : it->second;
}

bool PolarityLexicon::contributed(const std::string& doc_id) const {
    return contributing_docs_.find(doc_id) != contributing_docs_.end();
}

PolarityLexicon build_lexicon(const std::vector<const Document*>& training_docs,
                              const Vocabulary& vocab, FrequencyMode mode,
                              const std::string& provenance) {
    bool has_pos = false;
    bool has_neg = false;
    std::unordered_set<std::string> doc_ids;
    for (const Document* doc : training_docs) {
        (doc->label == Label::positive ? has_pos : has_neg) = true;
        doc_ids.insert(doc->id);
    }
    if (!has_pos || !has_neg) {
        throw std::runtime_error("build_lexicon requires both classes in the training split");
    }

    const CountStats stats = accumulate_counts(training_docs, mode);
    std::vector<std::pair<std::string, double>> entries;
    entries.reserve(static_cast<size_t>(vocab.size()));
    for (int i = 0; i < vocab.size(); ++i) {
        const std::string& word = vocab.word(i);
        entries.emplace_back(word, polarity_score(word, stats));
    }
    return PolarityLexicon(std::move(entries), provenance, std::move(doc_ids));
}

FourScores four_scores(const std::string& word, const std::vector<std::vector<int>>& windows,
                       const Vocabulary& vocab, const PolarityLexicon& lexicon) {
    FourScores result;
    result.self = lexicon.score(word);
    const int word_id = vocab.index(word);

    double sum = 0.0;
    long long count = 0;
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    if (word_id >= 0) {
        for (const auto& window : windows) {
            if (std::find(window.begin(), window.end(), word_id) == window.end()) continue;
            for (const int id : window) {
                if (id == word_id) continue;
                const double s = lexicon.score(vocab.word(id));
                sum += s;
                ++count;
                mn = std::min(mn, s);
                mx = std::max(mx, s);
            }
        }
    }
    if (count == 0) {
        result.ctx_min = result.ctx_max = result.ctx_avg = result.self;
    } else {
        result.ctx_min = mn;
        result.ctx_max = mx;
        result.ctx_avg = sum / static_cast<double>(count);
    }
    return result;
}

std::vector<FourScores> four_scores_all(const std::vector<std::vector<int>>& windows,
                                        const Vocabulary& vocab,
                                        const PolarityLexicon& lexicon) {
    const int v = vocab.size();
    std::vector<double> self(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) self[static_cast<size_t>(i)] = lexicon.score(vocab.word(i));

    std::vector<double> sum(static_cast<size_t>(v), 0.0);
    std::vector<long long> count(static_cast<size_t>(v), 0);
    std::vector<double> mn(static_cast<size_t>(v), std::numeric_limits<double>::infinity());
    std::vector<double> mx(static_cast<size_t>(v), -std::numeric_limits<double>::infinity());

    std::vector<int> distinct;
    std::vector<long long> occurrences;
    for (const auto& window : windows) {
        distinct.clear();
        occurrences.clear();
        double window_sum = 0.0;
        for (const int id : window) {
            window_sum += self[static_cast<size_t>(id)];
            auto it = std::find(distinct.begin(), distinct.end(), id);
            if (it == distinct.end()) {
                distinct.push_back(id);
                occurrences.push_back(1);
            } else {
                ++occurrences[static_cast<size_t>(it - distinct.begin())];
            }
        }
        const long long window_len = static_cast<long long>(window.size());
        for (size_t a = 0; a < distinct.size(); ++a) {
            const int target = distinct[a];
            const long long ctx = window_len - occurrences[a];
            if (ctx == 0) continue;
            sum[static_cast<size_t>(target)] +=
                window_sum - self[static_cast<size_t>(target)] * static_cast<double>(occurrences[a]);
            count[static_cast<size_t>(target)] += ctx;
            for (size_t b = 0; b < distinct.size(); ++b) {
                if (b == a) continue;
                const double s = self[static_cast<size_t>(distinct[b])];
                mn[static_cast<size_t>(target)] = std::min(mn[static_cast<size_t>(target)], s);
                mx[static_cast<size_t>(target)] = std::max(mx[static_cast<size_t>(target)], s);
            }
        }
    }

    std::vector<FourScores> result(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) {
        const size_t si = static_cast<size_t>(i);
        result[si].self = self[si];
        if (count[si] == 0) {
            result[si].ctx_min = result[si].ctx_max = result[si].ctx_avg = self[si];
        } else {
            result[si].ctx_min = mn[si];
            result[si].ctx_max = mx[si];
            result[si].ctx_avg = sum[si] / static_cast<double>(count[si]);
        }
    }
    return result;
}

ThreeFeats doc_three_feats(const Document& doc, const PolarityLexicon& lexicon) {
    ThreeFeats feats;
    if (doc.tokens.empty()) return feats;
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const Token& tok : doc.tokens) {
        const double s = lexicon.score(tok);
        mn = std::min(mn, s);
        mx = std::max(mx, s);
        sum += s;
    }
    feats.doc_min = mn;
    feats.doc_max = mx;
    feats.doc_mean = sum / static_cast<double>(doc.tokens.size());
    return feats;
}

void write_lexicon(const PolarityLexicon& lexicon, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write lexicon file: " + path);
    char buf[64];
    for (const auto& [word, score] : lexicon.entries()) {
        std::snprintf(buf, sizeof(buf), "%.12g", score);
        out << word << '\t' << buf << '\n';
    }
}

}  // namespace sentivec
