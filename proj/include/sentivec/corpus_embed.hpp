#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sentivec/text_pipeline.hpp"

namespace sentivec {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Symmetric window-count matrix. Off-diagonal (i, j): number of windows
/// containing both words; diagonal (i, i): number of windows containing
/// word i. Presence-based, so multiple occurrences inside one window still
/// count that window once.
Matrix build_cooccurrence(const std::vector<std::vector<int>>& windows, const Vocabulary& vocab);

/// Each row divided by its maximum entry. Throws on a row with max <= 0.
Matrix row_max_normalize(const Matrix& m);

/// Mean-centers columns and projects onto the top-k principal directions.
/// k is clamped to min(rows, cols).
Matrix pca_reduce(const Matrix& m, int k);

/// S(i, j) = wi . wj / (|wi| |wj|); zero-norm rows get similarity 0 with
/// everything, diagonal forced to 1.
Matrix cosine_similarity_matrix(const Matrix& m);

/// 1 - S elementwise.
Matrix dissimilarity(const Matrix& s);

struct SvdResult {
    Matrix u;                 // rows x k, orthonormal columns
    Vector singular_values;   // non-increasing
    Matrix vt;                // k x cols
};

/// Top-k singular triplets (k clamped to min(rows, cols)) with a fixed sign
/// convention: the largest-magnitude component of each U column is positive.
SvdResult truncated_svd(const Matrix& m, int k);

/// max(0, log(p(i,j) / (p(i) p(j)))) with probabilities from the full count
/// table including the diagonal.
Matrix ppmi(const Matrix& cooccurrence);

struct FcmParams {
    int clusters = 200;
    double fuzzifier = 2.0;   // m
    int max_iterations = 25;
    double epsilon = 1e-4;    // max membership change
    std::uint64_t seed = 0;
    /// Overrides the random initialization (rows of the same shape as the
    /// output, each summing to 1). Used for oracle comparisons.
    std::optional<Matrix> initial_memberships;
};

struct FcmResult {
    Matrix memberships;                   // n x c, rows sum to 1
    std::vector<double> objective_trace;  // sum u^m d^2 after each iteration
    int iterations = 0;
};

/// Standard fuzzy c-means over the rows of `points`. The cluster count is
/// clamped to the number of rows; clusters <= 1 or non-finite input throws.
FcmResult fuzzy_cmeans(const Matrix& points, const FcmParams& params);

/// One membership update for fixed centroids. A point coincident with a
/// centroid takes membership 1 there (split evenly across coincident ones).
Matrix fcm_membership_update(const Matrix& points, const Matrix& centroids, double fuzzifier);

/// Embedding text format: first line "<V> <k>", then "<word> <f1> ... <fk>".
void write_embeddings(const Matrix& m, const std::vector<std::string>& words,
                      const std::string& path);

struct EmbeddingFile {
    std::vector<std::string> words;
    Matrix vectors;
};

EmbeddingFile read_embedding_file(const std::string& path);

}  // namespace sentivec
