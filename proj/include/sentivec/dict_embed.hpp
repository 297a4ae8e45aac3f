#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentivec/corpus_embed.hpp"
#include "sentivec/polarity.hpp"
#include "sentivec/text_pipeline.hpp"

namespace sentivec {

/// headword -> definition token set. Definitions are tokenized with the same
/// pipeline as corpus text, minus negation handling.
struct DefinitionLexicon {
    std::unordered_map<std::string, std::unordered_set<Token>> definitions;
};

/// Dictionary file: "<headword>\t<definition text>" per line; duplicate
/// headwords merge their definition token sets.
DefinitionLexicon load_dictionary(const std::string& path, const PipelineConfig& config);

/// Rows follow the corpus vocabulary; columns index the union of definition
/// tokens of vocabulary headwords. Entries are {0,1} until supervision is
/// applied.
struct BooleanDefMatrix {
    Matrix values;
    std::vector<std::string> row_words;  // corpus vocabulary order
    Vocabulary def_vocab;                // column indexing
};

BooleanDefMatrix build_bool_matrix(const Vocabulary& vocab, const DefinitionLexicon& lexicon);

enum class SupervisionMode { raw, sign };

/// Multiplies each row by its word's raw score or sign score.
BooleanDefMatrix apply_supervision(const BooleanDefMatrix& m, const PolarityLexicon& scores,
                                   SupervisionMode mode);

enum class DictReduction { svd, cluster };

/// svd -> U rows of the truncated SVD; cluster -> fuzzy c-means memberships
/// over the matrix rows.
Matrix reduce_dict(const BooleanDefMatrix& m, DictReduction method, int k,
                   const FcmParams& cluster_params = {});

}  // namespace sentivec
