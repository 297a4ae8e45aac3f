#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentivec/classify_eval.hpp"
#include "sentivec/synthetic.hpp"

namespace sentivec {

struct RunConfig {
    std::string corpus_path;
    std::string dictionary_path;  // optional
    std::string external_path;    // optional
    std::vector<Variant> channels{Variant::four_scores};
    int window_size = 5;
    int dims = 200;
    int min_count = 1;
    int folds = 10;
    std::uint64_t seed = 1;
    std::string three_feats = "both";  // both | on | off
    std::string out_dir = ".";
    std::string stopwords_path;
    std::string multiword_path;
    int cmeans_iterations = 25;
    double cmeans_fuzzifier = 2.0;
    SupervisionMode dict_mode = SupervisionMode::sign;
    DictReduction dict_reduction = DictReduction::svd;
    FrequencyMode frequency_mode = FrequencyMode::token;
    AveragingMode averaging = AveragingMode::occurrence;
    double svm_cost = 1.0;
    bool strict_folds = false;

    void validate() const;
};

/// FNV-1a hash of the canonical rendering of every field; identifies a run
/// configuration in output metadata.
std::string config_fingerprint(const RunConfig& config);

/// One embedding file per selected channel, plus the concatenation when more
/// than one channel is selected. Every file gets a `.meta` sidecar carrying
/// the config fingerprint.
void cmd_embed(const RunConfig& config);

/// Cross-validates every selected channel with and without the 3 document
/// polarity features (narrowed by three_feats), prints an accuracy grid, and
/// writes <out>/eval_report.json.
void cmd_eval(const RunConfig& config);

/// Top-n nearest vocabulary words to the query by cosine over the given
/// embedding files (concatenated per word). Files must agree on their config
/// fingerprint.
std::vector<std::string> cmd_neighbors(const std::vector<std::string>& embedding_paths,
                                       const std::string& query, int top_n);

/// Writes the planted-polarity corpus (and dictionary when requested).
void cmd_gen_synthetic(const SyntheticParams& params, const std::string& corpus_out,
                       const std::string& dictionary_out);

/// Levenshtein distance; used for near-miss suggestions on unknown words.
int edit_distance(const std::string& a, const std::string& b);

}  // namespace sentivec
