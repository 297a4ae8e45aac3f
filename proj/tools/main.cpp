#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentivec/cli.hpp"

namespace {

using sentivec::RunConfig;

void add_common_flags(CLI::App* cmd, RunConfig& config, std::vector<std::string>& channel_names) {
    cmd->add_option("--corpus", config.corpus_path, "labeled corpus, one \"<pos|neg>\\t<text>\" per line")
        ->required();
    cmd->add_option("--dict", config.dictionary_path,
                    "definition file, one \"<headword>\\t<definition>\" per line");
    cmd->add_option("--external-emb", config.external_path, "external word embedding text file");
    cmd->add_option("--channels", channel_names,
                    "comma list of corpus-svd,corpus-cluster,dict,4scores,concat,external")
        ->delimiter(',');
    cmd->add_option("--window", config.window_size, "context window size per side");
    cmd->add_option("--dims", config.dims, "embedding dimensionality k");
    cmd->add_option("--min-count", config.min_count, "drop words rarer than this");
    cmd->add_option("--folds", config.folds, "cross-validation folds");
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--three-feats", config.three_feats,
                    "document polarity features: both, on, or off");
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_option("--stopwords", config.stopwords_path, "stopword list, one per line");
    cmd->add_option("--multiword", config.multiword_path,
                    "multiword lexicon (emoticons and idioms), one per line");
    cmd->add_option("--svm-c", config.svm_cost, "SVM cost parameter C");
    cmd->add_option("--cmeans-iters", config.cmeans_iterations, "fuzzy c-means iteration cap");
    cmd->add_option("--cmeans-m", config.cmeans_fuzzifier, "fuzzy c-means fuzzifier");
    cmd->add_flag("--strict-folds", config.strict_folds,
                  "rebuild unsupervised matrices from training folds only");
    cmd->add_option_function<std::string>(
           "--dict-mode",
           [&config](const std::string& v) {
               if (v == "raw") config.dict_mode = sentivec::SupervisionMode::raw;
               else if (v == "sign") config.dict_mode = sentivec::SupervisionMode::sign;
               else throw CLI::ValidationError("--dict-mode must be raw or sign");
           },
           "definition supervision: raw or sign")
        ->default_str("sign");
    cmd->add_option_function<std::string>(
           "--dict-reduce",
           [&config](const std::string& v) {
               if (v == "svd") config.dict_reduction = sentivec::DictReduction::svd;
               else if (v == "cluster") config.dict_reduction = sentivec::DictReduction::cluster;
               else throw CLI::ValidationError("--dict-reduce must be svd or cluster");
           },
           "definition channel reduction: svd or cluster")
        ->default_str("svd");
    cmd->add_option_function<std::string>(
           "--freq-mode",
           [&config](const std::string& v) {
               if (v == "token") config.frequency_mode = sentivec::FrequencyMode::token;
               else if (v == "document") config.frequency_mode = sentivec::FrequencyMode::document;
               else throw CLI::ValidationError("--freq-mode must be token or document");
           },
           "polarity counting: token or document")
        ->default_str("token");
    cmd->add_option_function<std::string>(
           "--averaging",
           [&config](const std::string& v) {
               if (v == "occurrence") config.averaging = sentivec::AveragingMode::occurrence;
               else if (v == "type") config.averaging = sentivec::AveragingMode::type;
               else throw CLI::ValidationError("--averaging must be occurrence or type");
           },
           "document averaging: occurrence or type")
        ->default_str("occurrence");
}

void resolve_channels(const std::vector<std::string>& names, RunConfig& config) {
    if (names.empty()) return;
    config.channels.clear();
    for (const std::string& name : names) config.channels.push_back(sentivec::parse_variant(name));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sentiment-aware word and document embeddings"};
    app.require_subcommand(1);

    RunConfig embed_config;
    std::vector<std::string> embed_channels;
    CLI::App* embed = app.add_subcommand("embed", "build embedding channel files");
    add_common_flags(embed, embed_config, embed_channels);

    RunConfig eval_config;
    std::vector<std::string> eval_channels;
    CLI::App* eval = app.add_subcommand("eval", "cross-validated accuracy grid");
    add_common_flags(eval, eval_config, eval_channels);

    std::vector<std::string> neighbor_embs;
    std::string query;
    int top_n = 10;
    CLI::App* neighbors = app.add_subcommand("neighbors", "nearest words by cosine");
    neighbors->add_option("--emb", neighbor_embs, "embedding file (repeatable; must share a fingerprint)")
        ->required();
    neighbors->add_option("--query", query, "query word")->required();
    neighbors->add_option("--top", top_n, "number of neighbors");

    sentivec::SyntheticParams syn;
    std::string syn_corpus = "synthetic_corpus.tsv";
    std::string syn_dict = "synthetic_dict.tsv";
    CLI::App* gen = app.add_subcommand("gen-synthetic", "planted-polarity test corpus");
    gen->add_option("--docs", syn.documents, "document count (even)");
    gen->add_option("--markers", syn.marker_words, "marker words per class");
    gen->add_option("--fillers", syn.filler_words, "filler word count");
    gen->add_option("--marker-rate", syn.marker_rate, "same-class marker probability");
    gen->add_option("--cross-rate", syn.cross_rate, "opposite-class marker probability");
    gen->add_option("--seed", syn.seed, "random seed");
    gen->add_flag("--shuffle-labels", syn.shuffle_labels, "permute labels (null-signal corpus)");
    gen->add_option("--out", syn_corpus, "corpus output path");
    gen->add_option("--dict-out", syn_dict, "dictionary output path (empty to skip)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (embed->parsed()) {
            resolve_channels(embed_channels, embed_config);
            sentivec::cmd_embed(embed_config);
        } else if (eval->parsed()) {
            resolve_channels(eval_channels, eval_config);
            sentivec::cmd_eval(eval_config);
        } else if (neighbors->parsed()) {
            for (const std::string& line : sentivec::cmd_neighbors(neighbor_embs, query, top_n)) {
                std::cout << line << '\n';
            }
        } else if (gen->parsed()) {
            sentivec::cmd_gen_synthetic(syn, syn_corpus, syn_dict);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
