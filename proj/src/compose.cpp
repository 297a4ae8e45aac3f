#include "sentivec/compose.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace sentivec {

Matrix concat_channels(const std::vector<Channel>& channels) {
    if (channels.empty()) throw std::invalid_argument("concat_channels: no channels");
    const Eigen::Index rows = channels.front().vectors.rows();
    Eigen::Index cols = 0;
    for (const Channel& channel : channels) {
        if (channel.vectors.rows() != rows) {
            throw std::invalid_argument("concat_channels: channel \"" + channel.name +
                                        "\" is not vocabulary-aligned");
        }
        cols += channel.vectors.cols();
    }
    Matrix out(rows, cols);
    Eigen::Index offset = 0;
    for (const Channel& channel : channels) {
        out.middleCols(offset, channel.vectors.cols()) = channel.vectors;
        offset += channel.vectors.cols();
    }
    return out;
}

Vector document_vector(const Document& doc, const Matrix& embeddings, const Vocabulary& vocab,
                       const PolarityLexicon& lexicon, bool with_3feats, AveragingMode mode) {
    const Eigen::Index k = embeddings.cols();
    Vector sum = Vector::Zero(k);
    long long count = 0;
    if (mode == AveragingMode::occurrence) {
        for (const Token& tok : doc.tokens) {
            const int id = vocab.index(tok);
            if (id < 0) continue;
            sum += embeddings.row(id).transpose();
            ++count;
        }
    } else {
        std::unordered_set<int> seen;
        for (const Token& tok : doc.tokens) {
            const int id = vocab.index(tok);
            if (id < 0 || !seen.insert(id).second) continue;
            sum += embeddings.row(id).transpose();
            ++count;
        }
    }
    if (count > 0) sum /= static_cast<double>(count);

    if (!with_3feats) return sum;
    const ThreeFeats feats = doc_three_feats(doc, lexicon);
    Vector out(k + 3);
    out.head(k) = sum;
    out(k) = feats.doc_min;
    out(k + 1) = feats.doc_mean;
    out(k + 2) = feats.doc_max;
    return out;
}

Matrix load_external_embeddings(const std::string& path, const Vocabulary& vocab) {
    const EmbeddingFile file = read_embedding_file(path);
    Matrix out = Matrix::Zero(vocab.size(), file.vectors.cols());
    for (size_t i = 0; i < file.words.size(); ++i) {
        const int id = vocab.index(file.words[i]);
        if (id >= 0) out.row(id) = file.vectors.row(static_cast<Eigen::Index>(i));
    }
    return out;
}

void write_document_vectors(const Matrix& vectors, const std::vector<Document>& documents,
                            const std::string& path, const std::string& label_path) {
    if (static_cast<Eigen::Index>(documents.size()) != vectors.rows()) {
        throw std::invalid_argument("write_document_vectors: document count mismatch");
    }
    std::vector<std::string> ids;
    ids.reserve(documents.size());
    for (const Document& doc : documents) ids.push_back(doc.id);
    write_embeddings(vectors, ids, path);

    std::ofstream out(label_path);
    if (!out) throw std::runtime_error("cannot write label file: " + label_path);
    for (const Document& doc : documents) {
        out << doc.id << '\t' << label_name(doc.label) << '\n';
    }
}

}  // namespace sentivec
