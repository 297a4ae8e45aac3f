#include "sentivec/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "sentivec/compose.hpp"

namespace sentivec {

namespace {

bool has_channel(const RunConfig& config, Variant v) {
    return std::find(config.channels.begin(), config.channels.end(), v) != config.channels.end();
}

}  // namespace

void RunConfig::validate() const {
    if (corpus_path.empty()) throw std::runtime_error("a corpus file is required (--corpus)");
    if (channels.empty()) throw std::runtime_error("at least one channel is required (--channels)");
    if (window_size < 1) throw std::runtime_error("--window must be >= 1");
    if (dims < 1) throw std::runtime_error("--dims must be >= 1");
    if (min_count < 1) throw std::runtime_error("--min-count must be >= 1");
    if (folds < 2) throw std::runtime_error("--folds must be >= 2");
    if (svm_cost <= 0.0) throw std::runtime_error("--svm-c must be positive");
    if (three_feats != "both" && three_feats != "on" && three_feats != "off") {
        throw std::runtime_error("--three-feats must be both, on, or off");
    }
    if (has_channel(*this, Variant::dict) && dictionary_path.empty()) {
        throw std::runtime_error(
            "the dict channel needs a definition file; pass --dict <file> "
            "(one \"headword<TAB>definition\" per line)");
    }
    if (has_channel(*this, Variant::external) && external_path.empty()) {
        throw std::runtime_error(
            "the external channel needs an embedding file; pass --external-emb <file>");
    }
}

std::string config_fingerprint(const RunConfig& config) {
    std::ostringstream canon;
    canon << "corpus=" << config.corpus_path << ";dict=" << config.dictionary_path
          << ";external=" << config.external_path << ";channels=";
    for (const Variant v : config.channels) canon << variant_name(v) << ",";
    canon << ";window=" << config.window_size << ";dims=" << config.dims
          << ";min_count=" << config.min_count << ";folds=" << config.folds
          << ";seed=" << config.seed << ";three_feats=" << config.three_feats
          << ";stopwords=" << config.stopwords_path << ";multiword=" << config.multiword_path
          << ";cmeans=" << config.cmeans_iterations << "," << config.cmeans_fuzzifier
          << ";dict_mode=" << (config.dict_mode == SupervisionMode::raw ? "raw" : "sign")
          << ";dict_reduce=" << (config.dict_reduction == DictReduction::svd ? "svd" : "cluster")
          << ";freq=" << (config.frequency_mode == FrequencyMode::token ? "token" : "document")
          << ";avg=" << (config.averaging == AveragingMode::occurrence ? "occurrence" : "type")
          << ";svm_cost=" << config.svm_cost << ";strict=" << config.strict_folds;
    return fnv1a_hex(canon.str());
}

namespace {

PipelineConfig pipeline_from(const RunConfig& config) {
    PipelineConfig pipeline;
    pipeline.window_size = config.window_size;
    pipeline.min_count = config.min_count;
    if (!config.stopwords_path.empty()) pipeline.stopwords = load_stopwords(config.stopwords_path);
    if (!config.multiword_path.empty()) pipeline.multiword = load_multiword(config.multiword_path);
    pipeline.validate();
    return pipeline;
}

EvalSettings settings_from(const RunConfig& config, const PipelineConfig& pipeline) {
    EvalSettings settings;
    settings.pipeline = pipeline;
    settings.folds = config.folds;
    settings.seed = config.seed;
    settings.dims = config.dims;
    settings.cmeans.clusters = config.dims;
    settings.cmeans.fuzzifier = config.cmeans_fuzzifier;
    settings.cmeans.max_iterations = config.cmeans_iterations;
    settings.cmeans.seed = config.seed;
    settings.dict_mode = config.dict_mode;
    settings.dict_reduction = config.dict_reduction;
    settings.frequency_mode = config.frequency_mode;
    settings.averaging = config.averaging;
    settings.svm_cost = config.svm_cost;
    settings.strict_folds = config.strict_folds;
    return settings;
}

void write_meta(const std::string& path, const std::string& fingerprint) {
    std::ofstream out(path + ".meta");
    if (!out) throw std::runtime_error("cannot write " + path + ".meta");
    out << "fingerprint\t" << fingerprint << '\n';
    if (!out.flush()) throw std::runtime_error("write failed for " + path + ".meta");
}

std::string read_meta_fingerprint(const std::string& embedding_path) {
    const std::string meta_path = embedding_path + ".meta";
    std::ifstream in(meta_path);
    if (!in) throw std::runtime_error("missing sidecar " + meta_path);
    std::string key;
    std::string value;
    if (!(in >> key >> value) || key != "fingerprint") {
        throw std::runtime_error("malformed sidecar " + meta_path);
    }
    return value;
}

std::string out_path(const RunConfig& config, const std::string& name) {
    std::filesystem::create_directories(config.out_dir);
    return (std::filesystem::path(config.out_dir) / name).string();
}

}  // namespace

void cmd_embed(const RunConfig& config) {
    config.validate();
    const PipelineConfig pipeline = pipeline_from(config);
    const Corpus corpus = load_corpus(config.corpus_path, pipeline);
    if (corpus.documents.empty()) throw std::runtime_error("corpus is empty");
    const std::string fingerprint = config_fingerprint(config);

    std::vector<const Document*> all_docs;
    for (const Document& d : corpus.documents) all_docs.push_back(&d);
    const PolarityLexicon lexicon =
        build_lexicon(all_docs, corpus.vocabulary, config.frequency_mode, "all");
    const auto windows = collect_windows(corpus.documents, corpus.vocabulary, config.window_size);

    FcmParams cmeans;
    cmeans.clusters = config.dims;
    cmeans.fuzzifier = config.cmeans_fuzzifier;
    cmeans.max_iterations = config.cmeans_iterations;
    cmeans.seed = config.seed;

    std::vector<Channel> channels;
    for (const Variant v : config.channels) {
        switch (v) {
            case Variant::corpus_svd: {
                const Matrix cooc = build_cooccurrence(windows, corpus.vocabulary);
                channels.push_back({variant_name(v), truncated_svd(ppmi(cooc), config.dims).u});
                break;
            }
            case Variant::corpus_cluster: {
                const Matrix cooc = build_cooccurrence(windows, corpus.vocabulary);
                const Matrix reduced = pca_reduce(row_max_normalize(cooc), config.dims);
                const Matrix dissim = dissimilarity(cosine_similarity_matrix(reduced));
                channels.push_back({variant_name(v), fuzzy_cmeans(dissim, cmeans).memberships});
                break;
            }
            case Variant::dict: {
                const DefinitionLexicon dict = load_dictionary(config.dictionary_path, pipeline);
                BooleanDefMatrix bools = build_bool_matrix(corpus.vocabulary, dict);
                bools = apply_supervision(bools, lexicon, config.dict_mode);
                channels.push_back(
                    {variant_name(v),
                     reduce_dict(bools, config.dict_reduction, config.dims, cmeans)});
                break;
            }
            case Variant::four_scores: {
                const auto scores = four_scores_all(windows, corpus.vocabulary, lexicon);
                Matrix m(static_cast<Eigen::Index>(scores.size()), 4);
                for (size_t i = 0; i < scores.size(); ++i) {
                    m(static_cast<Eigen::Index>(i), 0) = scores[i].self;
                    m(static_cast<Eigen::Index>(i), 1) = scores[i].ctx_min;
                    m(static_cast<Eigen::Index>(i), 2) = scores[i].ctx_max;
                    m(static_cast<Eigen::Index>(i), 3) = scores[i].ctx_avg;
                }
                channels.push_back({variant_name(v), std::move(m)});
                break;
            }
            case Variant::external: {
                channels.push_back(
                    {variant_name(v),
                     load_external_embeddings(config.external_path, corpus.vocabulary)});
                break;
            }
            case Variant::concat:
                // Assembled below from the other selections.
                break;
        }
    }

    for (const Channel& channel : channels) {
        const std::string path = out_path(config, channel.name + ".emb");
        write_embeddings(channel.vectors, corpus.vocabulary.words(), path);
        write_meta(path, fingerprint);
        std::cout << "wrote " << path << " (" << channel.vectors.rows() << " x "
                  << channel.vectors.cols() << ")\n";
    }
    if (channels.size() > 1) {
        const Matrix combined = concat_channels(channels);
        const std::string path = out_path(config, "concat.emb");
        write_embeddings(combined, corpus.vocabulary.words(), path);
        write_meta(path, fingerprint);
        std::cout << "wrote " << path << " (" << combined.rows() << " x " << combined.cols()
                  << ")\n";
    }
    const std::string fp_path = out_path(config, "fingerprint.txt");
    std::ofstream fp(fp_path);
    if (!fp) throw std::runtime_error("cannot write " + fp_path);
    fp << fingerprint << '\n';
}

void cmd_eval(const RunConfig& config) {
    config.validate();
    const PipelineConfig pipeline = pipeline_from(config);
    const Corpus corpus = load_corpus(config.corpus_path, pipeline);
    if (corpus.documents.empty()) throw std::runtime_error("corpus is empty");

    DefinitionLexicon dict;
    const bool has_dict = !config.dictionary_path.empty();
    if (has_dict) dict = load_dictionary(config.dictionary_path, pipeline);
    Matrix external;
    const bool has_external = !config.external_path.empty();
    if (has_external) external = load_external_embeddings(config.external_path, corpus.vocabulary);

    std::vector<bool> feat_options;
    if (config.three_feats != "off") feat_options.push_back(true);
    if (config.three_feats != "on") feat_options.push_back(false);

    nlohmann::json grid = nlohmann::json::array();
    std::cout << "variant";
    for (const bool with : feat_options) std::cout << (with ? "\t+3feats" : "\t-3feats");
    std::cout << '\n';

    for (const Variant v : config.channels) {
        std::cout << variant_name(v);
        for (const bool with : feat_options) {
            EvalSettings settings = settings_from(config, pipeline);
            settings.variant = v;
            settings.with_three_feats = with;
            if (has_dict) settings.dictionary = &dict;
            if (has_external) settings.external = &external;
            const FoldReport report = cross_validate(corpus, settings);

            char cell[32];
            std::snprintf(cell, sizeof(cell), "\t%.4f", report.mean_accuracy);
            std::cout << cell;

            nlohmann::json entry = fold_report_json(report);
            entry["variant"] = variant_name(v);
            entry["three_feats"] = with;
            grid.push_back(std::move(entry));
        }
        std::cout << '\n';
    }

    nlohmann::json doc;
    doc["fingerprint"] = config_fingerprint(config);
    doc["seed"] = config.seed;
    doc["grid"] = std::move(grid);
    const std::string report_path = out_path(config, "eval_report.json");
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << doc.dump(2) << '\n';
    if (!out.flush()) throw std::runtime_error("write failed for " + report_path);
    std::cout << "report: " << report_path << '\n';
}

int edit_distance(const std::string& a, const std::string& b) {
    std::vector<int> prev(b.size() + 1);
    std::vector<int> cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (size_t j = 1; j <= b.size(); ++j) {
            const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::vector<std::string> cmd_neighbors(const std::vector<std::string>& embedding_paths,
                                       const std::string& query, int top_n) {
    if (embedding_paths.empty()) throw std::runtime_error("an embedding file is required (--emb)");
    if (top_n < 1) throw std::runtime_error("--top must be >= 1");

    std::string fingerprint;
    std::vector<EmbeddingFile> files;
    for (const std::string& path : embedding_paths) {
        const std::string fp = read_meta_fingerprint(path);
        if (fingerprint.empty()) {
            fingerprint = fp;
        } else if (fp != fingerprint) {
            throw std::runtime_error("embedding files carry different config fingerprints (" +
                                     fingerprint + " vs " + fp + ")");
        }
        files.push_back(read_embedding_file(path));
    }

    const std::vector<std::string>& words = files.front().words;
    for (const EmbeddingFile& f : files) {
        if (f.words != words) {
            throw std::runtime_error("embedding files list different vocabularies");
        }
    }
    Eigen::Index total_cols = 0;
    for (const EmbeddingFile& f : files) total_cols += f.vectors.cols();
    Matrix combined(static_cast<Eigen::Index>(words.size()), total_cols);
    Eigen::Index col = 0;
    for (const EmbeddingFile& f : files) {
        combined.middleCols(col, f.vectors.cols()) = f.vectors;
        col += f.vectors.cols();
    }

    const auto it = std::find(words.begin(), words.end(), query);
    if (it == words.end()) {
        std::vector<std::pair<int, std::string>> near;
        for (const std::string& w : words) near.emplace_back(edit_distance(query, w), w);
        std::sort(near.begin(), near.end());
        std::string hint;
        for (size_t i = 0; i < near.size() && i < 3; ++i) {
            if (!hint.empty()) hint += ", ";
            hint += near[i].second;
        }
        throw std::runtime_error("query \"" + query + "\" not in vocabulary (nearest: " + hint +
                                 ")");
    }
    const Eigen::Index qi = static_cast<Eigen::Index>(it - words.begin());

    const Matrix sims = cosine_similarity_matrix(combined);
    std::vector<std::pair<double, std::string>> ranked;
    for (Eigen::Index i = 0; i < sims.rows(); ++i) {
        if (i == qi) continue;
        ranked.emplace_back(sims(qi, i), words[static_cast<size_t>(i)]);
    }
    // Descending similarity, lexicographic tie-break.
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    std::vector<std::string> out;
    const size_t limit = std::min<size_t>(static_cast<size_t>(top_n), ranked.size());
    for (size_t i = 0; i < limit; ++i) {
        char line[512];
        std::snprintf(line, sizeof(line), "%s\t%.6f", ranked[i].second.c_str(), ranked[i].first);
        out.push_back(line);
    }
    return out;
}

void cmd_gen_synthetic(const SyntheticParams& params, const std::string& corpus_out,
                       const std::string& dictionary_out) {
    const SyntheticCorpus corpus = generate_synthetic(params);
    write_synthetic(corpus, corpus_out, dictionary_out);
    std::cout << "wrote " << corpus_out << " (" << corpus.corpus_lines.size() << " documents)\n";
    if (!dictionary_out.empty()) {
        std::cout << "wrote " << dictionary_out << " (" << corpus.dictionary_lines.size()
                  << " entries)\n";
    }
}

}  // namespace sentivec
