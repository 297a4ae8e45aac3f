#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentivec/compose.hpp"
#include "sentivec/corpus_embed.hpp"
#include "sentivec/dict_embed.hpp"
#include "sentivec/polarity.hpp"
#include "sentivec/text_pipeline.hpp"

#include <json.hpp>

namespace sentivec {

struct LinearModel {
    Vector weights;
    double bias = 0.0;
    double cost = 1.0;

    double decision(const Vector& x) const { return weights.dot(x) + bias; }
    /// Tie (decision exactly 0) predicts positive.
    int predict(const Vector& x) const { return decision(x) >= 0.0 ? 1 : -1; }
};

struct SvmParams {
    double cost = 1.0;       // C
    int max_epochs = 1000;
    double tolerance = 1e-9;  // max projected gradient magnitude
    std::uint64_t seed = 1;
};

/// L2-regularized hinge-loss minimization, solved by dual coordinate descent
/// with the bias as an augmented constant feature. Deterministic for a fixed
/// seed. Labels must be in {+1, -1} and both classes present.
LinearModel train_linear_svm(const Matrix& x, const std::vector<int>& y,
                             const SvmParams& params = {});

/// Fraction of matching entries; lengths must be equal and positive.
double accuracy(const std::vector<int>& predictions, const std::vector<int>& labels);

/// Two-sided approximate randomization test on the accuracy difference:
/// each round swaps the two systems' predictions per document with
/// probability 1/2; p = (#{pseudo >= observed} + 1) / (rounds + 1).
double approx_randomization_test(const std::vector<int>& preds_a, const std::vector<int>& preds_b,
                                 const std::vector<int>& labels, int rounds, std::uint64_t seed);

enum class Variant { corpus_svd, corpus_cluster, dict, four_scores, concat, external };

std::string variant_name(Variant variant);
Variant parse_variant(const std::string& name);

struct EvalSettings {
    PipelineConfig pipeline;
    Variant variant = Variant::four_scores;
    bool with_three_feats = true;
    int folds = 10;
    std::uint64_t seed = 1;
    int dims = 200;
    FcmParams cmeans;
    SupervisionMode dict_mode = SupervisionMode::sign;
    DictReduction dict_reduction = DictReduction::svd;
    FrequencyMode frequency_mode = FrequencyMode::token;
    AveragingMode averaging = AveragingMode::occurrence;
    double svm_cost = 1.0;
    /// Rebuild the unsupervised matrices from the training folds only
    /// instead of once over all text.
    bool strict_folds = false;
    const DefinitionLexicon* dictionary = nullptr;  // required for dict / used by concat
    const Matrix* external = nullptr;               // vocabulary-aligned external embeddings
};

/// FNV-1a (64-bit) of arbitrary bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

std::string settings_fingerprint(const EvalSettings& settings);

struct PredictionRecord {
    std::string doc_id;
    int fold = 0;
    int label = 0;      // +1 / -1
    int predicted = 0;  // +1 / -1
};

struct FoldReport {
    std::vector<double> fold_accuracies;
    double mean_accuracy = 0.0;
    std::vector<PredictionRecord> predictions;  // corpus document order
    std::string fingerprint;
    std::uint64_t seed = 0;
};

nlohmann::json fold_report_json(const FoldReport& report);

/// Sequential assignment over class-shuffled documents: fold sizes differ by
/// at most one overall and per class.
std::vector<int> stratified_fold_assignment(const std::vector<Label>& labels, int folds,
                                            std::uint64_t seed);

/// Leakage-safe cross-validation: supervised statistics (polarity lexicon,
/// 4-scores, 3-feats, dictionary supervision and its reduction) are rebuilt
/// from the training folds of each round; unsupervised matrices are built
/// once over all text unless strict_folds is set.
FoldReport cross_validate(const Corpus& corpus, const EvalSettings& settings);

}  // namespace sentivec
