#include "sentivec/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

namespace sentivec {

void SyntheticParams::validate() const {
    if (documents < 2 || documents % 2 != 0) {
        throw std::invalid_argument("gen-synthetic: documents must be a positive even number");
    }
    if (marker_words < 1) throw std::invalid_argument("gen-synthetic: need at least one marker word");
    if (filler_words < 1) throw std::invalid_argument("gen-synthetic: need at least one filler word");
    if (marker_rate < 0.0 || marker_rate > 1.0 || cross_rate < 0.0 || cross_rate > 1.0) {
        throw std::invalid_argument("gen-synthetic: rates must lie in [0, 1]");
    }
    if (min_fillers < 1 || max_fillers < min_fillers) {
        throw std::invalid_argument("gen-synthetic: filler range must satisfy 1 <= min <= max");
    }
}

namespace {

std::string numbered(const char* stem, int n) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%02d", stem, n);
    return buf;
}

}  // namespace

SyntheticCorpus generate_synthetic(const SyntheticParams& params) {
    params.validate();

    std::vector<std::string> pos_markers;
    std::vector<std::string> neg_markers;
    std::vector<std::string> fillers;
    for (int i = 0; i < params.marker_words; ++i) {
        pos_markers.push_back(numbered("posw", i));
        neg_markers.push_back(numbered("negw", i));
    }
    for (int i = 0; i < params.filler_words; ++i) fillers.push_back(numbered("fill", i));

    std::mt19937_64 rng(params.seed);
    std::bernoulli_distribution own(params.marker_rate);
    std::bernoulli_distribution cross(params.cross_rate);
    std::uniform_int_distribution<int> filler_count(params.min_fillers, params.max_fillers);
    std::uniform_int_distribution<size_t> filler_pick(0, fillers.size() - 1);

    SyntheticCorpus out;
    std::vector<bool> positive(static_cast<size_t>(params.documents));
    for (int i = 0; i < params.documents; ++i) positive[static_cast<size_t>(i)] = i % 2 == 0;
    std::vector<std::string> texts;
    texts.reserve(static_cast<size_t>(params.documents));

    for (int i = 0; i < params.documents; ++i) {
        const bool is_pos = positive[static_cast<size_t>(i)];
        const auto& mine = is_pos ? pos_markers : neg_markers;
        const auto& theirs = is_pos ? neg_markers : pos_markers;

        std::vector<std::string> tokens;
        for (const std::string& m : mine) {
            if (own(rng)) tokens.push_back(m);
        }
        for (const std::string& m : theirs) {
            if (cross(rng)) tokens.push_back(m);
        }
        const int n_fill = filler_count(rng);
        for (int f = 0; f < n_fill; ++f) tokens.push_back(fillers[filler_pick(rng)]);
        std::shuffle(tokens.begin(), tokens.end(), rng);

        std::string text;
        for (const std::string& t : tokens) {
            if (!text.empty()) text += ' ';
            text += t;
        }
        texts.push_back(std::move(text));
    }

    if (params.shuffle_labels) {
        std::shuffle(positive.begin(), positive.end(), rng);
    }
    for (int i = 0; i < params.documents; ++i) {
        out.corpus_lines.push_back(
            std::string(positive[static_cast<size_t>(i)] ? "pos" : "neg") + '\t' +
            texts[static_cast<size_t>(i)]);
    }

    // Markers of one class share definition tokens (plus a word-specific one)
    // so the definition channel carries the same planted signal.
    for (int i = 0; i < params.marker_words; ++i) {
        out.dictionary_lines.push_back(pos_markers[static_cast<size_t>(i)] +
                                       "\tpleasant delight praise " + numbered("ptone", i));
        out.dictionary_lines.push_back(neg_markers[static_cast<size_t>(i)] +
                                       "\tdreary gloom blame " + numbered("ntone", i));
    }
    for (int i = 0; i < params.filler_words; ++i) {
        out.dictionary_lines.push_back(fillers[static_cast<size_t>(i)] + "\tordinary thing " +
                                       numbered("item", i));
    }
    return out;
}

void write_synthetic(const SyntheticCorpus& corpus, const std::string& corpus_path,
                     const std::string& dictionary_path) {
    std::ofstream cf(corpus_path);
    if (!cf) throw std::runtime_error("cannot write " + corpus_path);
    for (const std::string& line : corpus.corpus_lines) cf << line << '\n';
    if (!cf.flush()) throw std::runtime_error("write failed for " + corpus_path);

    if (dictionary_path.empty()) return;
    std::ofstream df(dictionary_path);
    if (!df) throw std::runtime_error("cannot write " + dictionary_path);
    for (const std::string& line : corpus.dictionary_lines) df << line << '\n';
    if (!df.flush()) throw std::runtime_error("write failed for " + dictionary_path);
}

}  // namespace sentivec
