#include "sentivec/classify_eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sentivec {

LinearModel train_linear_svm(const Matrix& x, const std::vector<int>& y, const SvmParams& params) {
    const Eigen::Index n = x.rows();
    const Eigen::Index d = x.cols();
    if (static_cast<Eigen::Index>(y.size()) != n) {
        throw std::invalid_argument("train_linear_svm: label count does not match row count");
    }
    if (n == 0) throw std::invalid_argument("train_linear_svm: empty training set");
    bool has_pos = false;
    bool has_neg = false;
    for (const int label : y) {
        if (label == 1) has_pos = true;
        else if (label == -1) has_neg = true;
        else throw std::invalid_argument("train_linear_svm: labels must be +1 or -1");
    }
    if (!has_pos || !has_neg) {
        throw std::invalid_argument("train_linear_svm: both classes required");
    }
    if (params.cost <= 0.0) throw std::invalid_argument("train_linear_svm: C must be positive");

    // Dual of the L1-hinge SVM with the bias as a constant feature:
    //   min_a 1/2 a^T Q a - e^T a,  0 <= a_i <= C,  Q_ij = y_i y_j xb_i.xb_j
    // where xb = [x; 1]. Single-coordinate updates with projected-gradient
    // screening, coordinate order reshuffled per epoch from the seed.
    std::vector<double> alpha(static_cast<size_t>(n), 0.0);
    std::vector<double> q_diag(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        q_diag[static_cast<size_t>(i)] = x.row(i).squaredNorm() + 1.0;
    }
    Vector w = Vector::Zero(d);
    double bias = 0.0;

    std::mt19937_64 rng(params.seed);
    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 0; epoch < params.max_epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        double max_violation = 0.0;
        for (const Eigen::Index i : order) {
            const double yi = static_cast<double>(y[static_cast<size_t>(i)]);
            const double grad = yi * (w.dot(x.row(i)) + bias) - 1.0;
            const double a = alpha[static_cast<size_t>(i)];

            double projected = grad;
            if (a <= 0.0) projected = std::min(grad, 0.0);
            else if (a >= params.cost) projected = std::max(grad, 0.0);
            max_violation = std::max(max_violation, std::fabs(projected));
            if (std::fabs(projected) < 1e-14) continue;

            const double updated =
                std::clamp(a - grad / q_diag[static_cast<size_t>(i)], 0.0, params.cost);
            const double delta = (updated - a) * yi;
            alpha[static_cast<size_t>(i)] = updated;
            w += delta * x.row(i).transpose();
            bias += delta;
        }
        if (max_violation < params.tolerance) break;
    }

    LinearModel model;
    model.weights = std::move(w);
    model.bias = bias;
    model.cost = params.cost;
    return model;
}

double accuracy(const std::vector<int>& predictions, const std::vector<int>& labels) {
    if (predictions.size() != labels.size()) {
        throw std::invalid_argument("accuracy: length mismatch");
    }
    if (predictions.empty()) throw std::invalid_argument("accuracy: empty input");
    long long correct = 0;
    for (size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i] == labels[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(predictions.size());
}

double approx_randomization_test(const std::vector<int>& preds_a, const std::vector<int>& preds_b,
                                 const std::vector<int>& labels, int rounds, std::uint64_t seed) {
    const size_t n = labels.size();
    if (preds_a.size() != n || preds_b.size() != n) {
        throw std::invalid_argument("approx_randomization_test: length mismatch");
    }
    if (n == 0) throw std::invalid_argument("approx_randomization_test: empty input");
    if (rounds < 1) throw std::invalid_argument("approx_randomization_test: rounds must be >= 1");

    // Work in integer correct-counts: |acc_a - acc_b| * n without rounding.
    std::vector<int> correct_a(n);
    std::vector<int> correct_b(n);
    long long observed = 0;
    for (size_t i = 0; i < n; ++i) {
        correct_a[i] = preds_a[i] == labels[i] ? 1 : 0;
        correct_b[i] = preds_b[i] == labels[i] ? 1 : 0;
        observed += correct_a[i] - correct_b[i];
    }
    observed = std::llabs(observed);

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(0.5);
    long long at_least = 0;
    for (int r = 0; r < rounds; ++r) {
        long long diff = 0;
        for (size_t i = 0; i < n; ++i) {
            const long long term = correct_a[i] - correct_b[i];
            diff += flip(rng) ? -term : term;
        }
        if (std::llabs(diff) >= observed) ++at_least;
    }
    return static_cast<double>(at_least + 1) / static_cast<double>(rounds + 1);
}

std::string variant_name(Variant variant) {
    switch (variant) {
        case Variant::corpus_svd: return "corpus-svd";
        case Variant::corpus_cluster: return "corpus-cluster";
        case Variant::dict: return "dict";
        case Variant::four_scores: return "4scores";
        case Variant::concat: return "concat";
        case Variant::external: return "external";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    if (name == "corpus-svd") return Variant::corpus_svd;
    if (name == "corpus-cluster") return Variant::corpus_cluster;
    if (name == "dict") return Variant::dict;
    if (name == "4scores") return Variant::four_scores;
    if (name == "concat") return Variant::concat;
    if (name == "external") return Variant::external;
    throw std::runtime_error(
        "unknown channel \"" + name +
        "\" (expected corpus-svd, corpus-cluster, dict, 4scores, concat, or external)");
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (const unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string settings_fingerprint(const EvalSettings& settings) {
    std::ostringstream canon;
    canon << "variant=" << variant_name(settings.variant)
          << ";three_feats=" << settings.with_three_feats << ";folds=" << settings.folds
          << ";seed=" << settings.seed << ";dims=" << settings.dims
          << ";window=" << settings.pipeline.window_size
          << ";min_count=" << settings.pipeline.min_count
          << ";lowercase=" << settings.pipeline.lowercase
          << ";cmeans=" << settings.cmeans.clusters << "," << settings.cmeans.fuzzifier << ","
          << settings.cmeans.max_iterations << "," << settings.cmeans.epsilon << ","
          << settings.cmeans.seed
          << ";dict_mode=" << (settings.dict_mode == SupervisionMode::raw ? "raw" : "sign")
          << ";dict_reduce=" << (settings.dict_reduction == DictReduction::svd ? "svd" : "cluster")
          << ";freq=" << (settings.frequency_mode == FrequencyMode::token ? "token" : "document")
          << ";avg=" << (settings.averaging == AveragingMode::occurrence ? "occurrence" : "type")
          << ";svm_cost=" << settings.svm_cost << ";strict=" << settings.strict_folds
          << ";dict_present=" << (settings.dictionary != nullptr)
          << ";external_present=" << (settings.external != nullptr);
    return fnv1a_hex(canon.str());
}

nlohmann::json fold_report_json(const FoldReport& report) {
    nlohmann::json j;
    j["fingerprint"] = report.fingerprint;
    j["seed"] = report.seed;
    j["fold_accuracies"] = report.fold_accuracies;
    j["mean_accuracy"] = report.mean_accuracy;
    nlohmann::json preds = nlohmann::json::array();
    for (const PredictionRecord& rec : report.predictions) {
        preds.push_back({{"id", rec.doc_id},
                         {"fold", rec.fold},
                         {"label", rec.label == 1 ? "pos" : "neg"},
                         {"predicted", rec.predicted == 1 ? "pos" : "neg"}});
    }
    j["predictions"] = std::move(preds);
    return j;
}

std::vector<int> stratified_fold_assignment(const std::vector<Label>& labels, int folds,
                                            std::uint64_t seed) {
    if (folds < 2) throw std::invalid_argument("cross_validate: folds must be >= 2");
    std::vector<size_t> pos_idx;
    std::vector<size_t> neg_idx;
    for (size_t i = 0; i < labels.size(); ++i) {
        (labels[i] == Label::positive ? pos_idx : neg_idx).push_back(i);
    }
    if (pos_idx.size() < static_cast<size_t>(folds) || neg_idx.size() < static_cast<size_t>(folds)) {
        throw std::invalid_argument("cross_validate: fold count exceeds a class size");
    }
    std::mt19937_64 rng(seed);
    std::shuffle(pos_idx.begin(), pos_idx.end(), rng);
    std::shuffle(neg_idx.begin(), neg_idx.end(), rng);

    // Sequential assignment over the concatenated shuffled classes keeps the
    // overall fold sizes within one of each other while staying stratified.
    std::vector<int> assignment(labels.size(), 0);
    int next = 0;
    for (const size_t i : pos_idx) {
        assignment[i] = next;
        next = (next + 1) % folds;
    }
    for (const size_t i : neg_idx) {
        assignment[i] = next;
        next = (next + 1) % folds;
    }
    return assignment;
}

namespace {

// Channel matrices that do not depend on fold labels.
struct UnsupervisedParts {
    Matrix corpus_svd;
    Matrix corpus_cluster;
    BooleanDefMatrix bool_matrix;
    bool has_bool_matrix = false;
};

bool needs_corpus_svd(Variant v) { return v == Variant::corpus_svd || v == Variant::concat; }
bool needs_corpus_cluster(Variant v) { return v == Variant::corpus_cluster; }
bool needs_dict(Variant v) { return v == Variant::dict || v == Variant::concat; }
bool needs_four_scores(Variant v) { return v == Variant::four_scores || v == Variant::concat; }

UnsupervisedParts build_unsupervised(const std::vector<Document>& docs, const Vocabulary& vocab,
                                     const EvalSettings& settings) {
    UnsupervisedParts parts;
    const Variant v = settings.variant;
    if (needs_corpus_svd(v) || needs_corpus_cluster(v)) {
        const auto windows = collect_windows(docs, vocab, settings.pipeline.window_size);
        const Matrix cooc = build_cooccurrence(windows, vocab);
        if (needs_corpus_svd(v)) {
            parts.corpus_svd = truncated_svd(ppmi(cooc), settings.dims).u;
        }
        if (needs_corpus_cluster(v)) {
            const Matrix reduced = pca_reduce(row_max_normalize(cooc), settings.dims);
            const Matrix dissim = dissimilarity(cosine_similarity_matrix(reduced));
            parts.corpus_cluster = fuzzy_cmeans(dissim, settings.cmeans).memberships;
        }
    }
    if (needs_dict(v) && settings.dictionary != nullptr) {
        parts.bool_matrix = build_bool_matrix(vocab, *settings.dictionary);
        parts.has_bool_matrix = true;
    }
    return parts;
}

Matrix four_scores_matrix(const std::vector<FourScores>& scores) {
    Matrix m(static_cast<Eigen::Index>(scores.size()), 4);
    for (size_t i = 0; i < scores.size(); ++i) {
        const Eigen::Index r = static_cast<Eigen::Index>(i);
        m(r, 0) = scores[i].self;
        m(r, 1) = scores[i].ctx_min;
        m(r, 2) = scores[i].ctx_max;
        m(r, 3) = scores[i].ctx_avg;
    }
    return m;
}

Matrix assemble_channel(const UnsupervisedParts& parts, const EvalSettings& settings,
                        const Corpus& corpus, const std::vector<Document>& train_docs,
                        const PolarityLexicon& lexicon) {
    const Variant v = settings.variant;
    Matrix four;
    if (needs_four_scores(v)) {
        const auto windows =
            collect_windows(train_docs, corpus.vocabulary, settings.pipeline.window_size);
        four = four_scores_matrix(four_scores_all(windows, corpus.vocabulary, lexicon));
    }
    Matrix dict;
    if (needs_dict(v) && parts.has_bool_matrix) {
        const BooleanDefMatrix supervised =
            apply_supervision(parts.bool_matrix, lexicon, settings.dict_mode);
        dict = reduce_dict(supervised, settings.dict_reduction, settings.dims, settings.cmeans);
    }

    switch (v) {
        case Variant::corpus_svd: return parts.corpus_svd;
        case Variant::corpus_cluster: return parts.corpus_cluster;
        case Variant::four_scores: return four;
        case Variant::external:
            if (settings.external == nullptr) {
                throw std::runtime_error("external variant requires external embeddings");
            }
            return *settings.external;
        case Variant::dict:
            if (!parts.has_bool_matrix) {
                throw std::runtime_error("dict variant requires a dictionary file");
            }
            return dict;
        case Variant::concat: {
            // Fixed order: corpus, dictionary, 4-scores.
            std::vector<Channel> channels;
            channels.push_back({"corpus-svd", parts.corpus_svd});
            if (parts.has_bool_matrix) channels.push_back({"dict", dict});
            channels.push_back({"4scores", four});
            return concat_channels(channels);
        }
    }
    throw std::logic_error("assemble_channel: unreachable");
}

}  // namespace

FoldReport cross_validate(const Corpus& corpus, const EvalSettings& settings) {
    const std::vector<Document>& docs = corpus.documents;
    std::vector<Label> labels(docs.size());
    for (size_t i = 0; i < docs.size(); ++i) labels[i] = docs[i].label;
    const std::vector<int> fold_of = stratified_fold_assignment(labels, settings.folds, settings.seed);

    UnsupervisedParts shared;
    if (!settings.strict_folds) shared = build_unsupervised(docs, corpus.vocabulary, settings);

    FoldReport report;
    report.seed = settings.seed;
    report.fingerprint = settings_fingerprint(settings);
    report.predictions.resize(docs.size());

    for (int fold = 0; fold < settings.folds; ++fold) {
        std::vector<const Document*> train_ptrs;
        std::vector<Document> train_docs;
        std::vector<size_t> train_index;
        std::vector<size_t> test_index;
        for (size_t i = 0; i < docs.size(); ++i) {
            if (fold_of[i] == fold) {
                test_index.push_back(i);
            } else {
                train_ptrs.push_back(&docs[i]);
                train_docs.push_back(docs[i]);
                train_index.push_back(i);
            }
        }

        const PolarityLexicon lexicon =
            build_lexicon(train_ptrs, corpus.vocabulary, settings.frequency_mode,
                          "fold" + std::to_string(fold));
        const UnsupervisedParts local =
            settings.strict_folds ? build_unsupervised(train_docs, corpus.vocabulary, settings)
                                  : UnsupervisedParts{};
        const UnsupervisedParts& parts = settings.strict_folds ? local : shared;

        const Matrix channel = assemble_channel(parts, settings, corpus, train_docs, lexicon);

        const Eigen::Index feat_dim = channel.cols() + (settings.with_three_feats ? 3 : 0);
        Matrix x_train(static_cast<Eigen::Index>(train_index.size()), feat_dim);
        std::vector<int> y_train(train_index.size());
        for (size_t r = 0; r < train_index.size(); ++r) {
            const Document& doc = docs[train_index[r]];
            x_train.row(static_cast<Eigen::Index>(r)) =
                document_vector(doc, channel, corpus.vocabulary, lexicon,
                                settings.with_three_feats, settings.averaging)
                    .transpose();
            y_train[r] = doc.label == Label::positive ? 1 : -1;
        }

        SvmParams svm;
        svm.cost = settings.svm_cost;
        svm.seed = settings.seed * 1000003ULL + static_cast<std::uint64_t>(fold);
        const LinearModel model = train_linear_svm(x_train, y_train, svm);

        long long correct = 0;
        for (const size_t i : test_index) {
            const Document& doc = docs[i];
            const Vector features =
                document_vector(doc, channel, corpus.vocabulary, lexicon,
                                settings.with_three_feats, settings.averaging);
            const int predicted = model.predict(features);
            const int truth = doc.label == Label::positive ? 1 : -1;
            if (predicted == truth) ++correct;
            report.predictions[i] = {doc.id, fold, truth, predicted};
        }
        report.fold_accuracies.push_back(static_cast<double>(correct) /
                                         static_cast<double>(test_index.size()));
    }

    report.mean_accuracy =
        std::accumulate(report.fold_accuracies.begin(), report.fold_accuracies.end(), 0.0) /
        static_cast<double>(report.fold_accuracies.size());
    return report;
}

}  // namespace sentivec
