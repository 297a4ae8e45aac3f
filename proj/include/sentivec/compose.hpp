#pragma once

#include <string>
#include <vector>

#include "sentivec/corpus_embed.hpp"
#include "sentivec/polarity.hpp"
#include "sentivec/text_pipeline.hpp"

namespace sentivec {

struct Channel {
    std::string name;
    Matrix vectors;  // vocabulary-aligned rows
};

/// Horizontal concatenation in the given order. Throws when channels do not
/// share the vocabulary row count.
Matrix concat_channels(const std::vector<Channel>& channels);

/// Whether repeated tokens weigh into the average per occurrence or once per
/// word type.
enum class AveragingMode { occurrence, type };

/// Mean of the embeddings of the document's in-vocabulary tokens;
/// out-of-vocabulary tokens are skipped and an empty or all-OOV document
/// yields a zero vector. With `with_3feats`, (doc_min, doc_mean, doc_max)
/// polarity statistics are appended.
Vector document_vector(const Document& doc, const Matrix& embeddings, const Vocabulary& vocab,
                       const PolarityLexicon& lexicon, bool with_3feats,
                       AveragingMode mode = AveragingMode::occurrence);

/// Reads an embedding text file and aligns it to the vocabulary: missing
/// words get zero rows, extra words are ignored.
Matrix load_external_embeddings(const std::string& path, const Vocabulary& vocab);

/// Same numeric format as embeddings with document ids in place of words,
/// plus a sidecar label file ("<id>\t<label>" per line).
void write_document_vectors(const Matrix& vectors, const std::vector<Document>& documents,
                            const std::string& path, const std::string& label_path);

}  // namespace sentivec
