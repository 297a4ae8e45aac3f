#include "sentivec/dict_embed.hpp"

#include <fstream>
#include <stdexcept>

namespace sentivec {

DefinitionLexicon load_dictionary(const std::string& path, const PipelineConfig& config) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dictionary file: " + path);

    DefinitionLexicon lexicon;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected \"<headword>\\t<definition>\"");
        }
        // The headword goes through the same normalization so multiword
        // headwords line up with idiom-merged corpus tokens.
        std::vector<Token> head_tokens = tokenize(line.substr(0, tab), config);
        if (head_tokens.empty()) continue;
        std::string headword = head_tokens[0];
        for (size_t i = 1; i < head_tokens.size(); ++i) {
            headword += '_';
            headword += head_tokens[i];
        }

        std::vector<Token> def_tokens = tokenize(line.substr(tab + 1), config);
        def_tokens = remove_stopwords(def_tokens, config.stopwords);
        if (def_tokens.empty()) continue;
        auto& set = lexicon.definitions[headword];
        set.insert(def_tokens.begin(), def_tokens.end());
    }
    if (lexicon.definitions.empty()) {
        throw std::runtime_error("dictionary file has no usable entries: " + path);
    }
    return lexicon;
}

BooleanDefMatrix build_bool_matrix(const Vocabulary& vocab, const DefinitionLexicon& lexicon) {
    if (lexicon.definitions.empty()) {
        throw std::invalid_argument("build_bool_matrix: empty definition lexicon");
    }

    // Column vocabulary from the definitions of headwords that are corpus
    // vocabulary words; ordering via the shared Vocabulary rules.
    std::unordered_map<std::string, long long> column_counts;
    for (int i = 0; i < vocab.size(); ++i) {
        const auto it = lexicon.definitions.find(vocab.word(i));
        if (it == lexicon.definitions.end()) continue;
        for (const Token& tok : it->second) ++column_counts[tok];
    }
    if (column_counts.empty()) {
        throw std::runtime_error(
            "build_bool_matrix: no vocabulary word has a dictionary definition");
    }

    BooleanDefMatrix result;
    result.row_words = vocab.words();
    result.def_vocab = Vocabulary::from_counts(column_counts, 1);
    result.values = Matrix::Zero(vocab.size(), result.def_vocab.size());
    for (int i = 0; i < vocab.size(); ++i) {
        const auto it = lexicon.definitions.find(vocab.word(i));
        if (it == lexicon.definitions.end()) continue;
        for (const Token& tok : it->second) {
            const int col = result.def_vocab.index(tok);
            if (col >= 0) result.values(i, col) = 1.0;
        }
    }
    return result;
}

BooleanDefMatrix apply_supervision(const BooleanDefMatrix& m, const PolarityLexicon& scores,
                                   SupervisionMode mode) {
    BooleanDefMatrix result = m;
    for (Eigen::Index i = 0; i < result.values.rows(); ++i) {
        const double raw = scores.score(result.row_words[static_cast<size_t>(i)]);
        const double factor = mode == SupervisionMode::raw
                                  ? raw
                                  : static_cast<double>(sign_score(raw));
        result.values.row(i) *= factor;
    }
    return result;
}

Matrix reduce_dict(const BooleanDefMatrix& m, DictReduction method, int k,
                   const FcmParams& cluster_params) {
    if (method == DictReduction::svd) {
        return truncated_svd(m.values, k).u;
    }
    FcmParams params = cluster_params;
    params.clusters = k;
    return fuzzy_cmeans(m.values, params).memberships;
}

}  // namespace sentivec
