#include "sentivec/corpus_embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sentivec {

namespace {

// Deterministic sign convention: the largest-magnitude entry of each U
// column is made positive, V rows flipped to match.
void fix_svd_signs(Matrix& u, Matrix& vt) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        Eigen::Index argmax = 0;
        u.col(j).cwiseAbs().maxCoeff(&argmax);
        if (u(argmax, j) < 0.0) {
            u.col(j) = -u.col(j);
            if (j < vt.rows()) vt.row(j) = -vt.row(j);
        }
    }
}

}  // namespace

Matrix build_cooccurrence(const std::vector<std::vector<int>>& windows, const Vocabulary& vocab) {
    const int v = vocab.size();
    Matrix m = Matrix::Zero(v, v);
    std::vector<int> distinct;
    for (const auto& window : windows) {
        distinct.assign(window.begin(), window.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (size_t a = 0; a < distinct.size(); ++a) {
            m(distinct[a], distinct[a]) += 1.0;
            for (size_t b = a + 1; b < distinct.size(); ++b) {
                m(distinct[a], distinct[b]) += 1.0;
                m(distinct[b], distinct[a]) += 1.0;
            }
        }
    }
    return m;
}

Matrix row_max_normalize(const Matrix& m) {
    Matrix out = m;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        const double mx = out.row(i).maxCoeff();
        if (mx <= 0.0) {
            throw std::runtime_error("row_max_normalize: row " + std::to_string(i) +
                                     " has no positive entry");
        }
        out.row(i) /= mx;
    }
    return out;
}

Matrix pca_reduce(const Matrix& m, int k) {
    if (k <= 0) throw std::invalid_argument("pca_reduce: k must be positive");
    const Eigen::Index kk = std::min<Eigen::Index>(k, std::min(m.rows(), m.cols()));
    Matrix centered = m.rowwise() - m.colwise().mean();
    Eigen::BDCSVD<Matrix> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Matrix u = svd.matrixU().leftCols(kk);
    Matrix vt = svd.matrixV().leftCols(kk).transpose();
    Matrix scores = u * svd.singularValues().head(kk).asDiagonal();
    // Same sign convention as truncated_svd, applied to the principal
    // directions so the projection is reproducible.
    for (Eigen::Index j = 0; j < kk; ++j) {
        Eigen::Index argmax = 0;
        vt.row(j).cwiseAbs().maxCoeff(&argmax);
        if (vt(j, argmax) < 0.0) scores.col(j) = -scores.col(j);
    }
    return scores;
}

Matrix cosine_similarity_matrix(const Matrix& m) {
    Matrix normalized = m;
    for (Eigen::Index i = 0; i < normalized.rows(); ++i) {
        const double norm = normalized.row(i).norm();
        if (norm > 0.0) normalized.row(i) /= norm;
        // zero rows stay zero: similarity 0 by convention
    }
    Matrix s = normalized * normalized.transpose();
    s.diagonal().setOnes();
    return s;
}

Matrix dissimilarity(const Matrix& s) {
    return Matrix::Ones(s.rows(), s.cols()) - s;
}

SvdResult truncated_svd(const Matrix& m, int k) {
    if (k <= 0) throw std::invalid_argument("truncated_svd: k must be positive");
    const Eigen::Index kk = std::min<Eigen::Index>(k, std::min(m.rows(), m.cols()));
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdResult result;
    result.u = svd.matrixU().leftCols(kk);
    result.singular_values = svd.singularValues().head(kk);
    result.vt = svd.matrixV().leftCols(kk).transpose();
    // Directions beyond the numerical rank are arbitrary basis completions;
    // zero them so every U row is a linear image of its input row (equal
    // inputs keep equal embeddings past the rank).
    const double cutoff = result.singular_values.size() > 0
                              ? result.singular_values(0) * 1e-12
                              : 0.0;
    for (Eigen::Index j = 0; j < kk; ++j) {
        if (result.singular_values(j) <= cutoff) {
            result.u.col(j).setZero();
            result.vt.row(j).setZero();
            result.singular_values(j) = 0.0;
        }
    }
    fix_svd_signs(result.u, result.vt);
    return result;
}

Matrix ppmi(const Matrix& cooccurrence) {
    if (cooccurrence.size() == 0) throw std::invalid_argument("ppmi: empty matrix");
    const double total = cooccurrence.sum();
    if (total <= 0.0) throw std::invalid_argument("ppmi: total count must be positive");
    const Vector row_sums = cooccurrence.rowwise().sum();
    const Vector col_sums = cooccurrence.colwise().sum();

    Matrix out = Matrix::Zero(cooccurrence.rows(), cooccurrence.cols());
    for (Eigen::Index i = 0; i < cooccurrence.rows(); ++i) {
        if (row_sums(i) <= 0.0) continue;
        for (Eigen::Index j = 0; j < cooccurrence.cols(); ++j) {
            const double joint = cooccurrence(i, j);
            if (joint <= 0.0 || col_sums(j) <= 0.0) continue;
            const double pmi = std::log(joint * total / (row_sums(i) * col_sums(j)));
            if (pmi > 0.0) out(i, j) = pmi;
        }
    }
    return out;
}

Matrix fcm_membership_update(const Matrix& points, const Matrix& centroids, double fuzzifier) {
    const Eigen::Index n = points.rows();
    const Eigen::Index c = centroids.rows();
    const double exponent = 2.0 / (fuzzifier - 1.0);
    Matrix memberships(n, c);
    Vector dist2(c);
    for (Eigen::Index i = 0; i < n; ++i) {
        int coincident = 0;
        for (Eigen::Index j = 0; j < c; ++j) {
            dist2(j) = (points.row(i) - centroids.row(j)).squaredNorm();
            if (dist2(j) < 1e-30) ++coincident;
        }
        if (coincident > 0) {
            for (Eigen::Index j = 0; j < c; ++j) {
                memberships(i, j) = dist2(j) < 1e-30 ? 1.0 / coincident : 0.0;
            }
            continue;
        }
        // u_ij = 1 / sum_k (d_ij / d_ik)^(2/(m-1))
        for (Eigen::Index j = 0; j < c; ++j) {
            double denom = 0.0;
            for (Eigen::Index l = 0; l < c; ++l) {
                denom += std::pow(dist2(j) / dist2(l), exponent / 2.0);
            }
            memberships(i, j) = 1.0 / denom;
        }
    }
    return memberships;
}

FcmResult fuzzy_cmeans(const Matrix& points, const FcmParams& params) {
    if (params.clusters <= 1) throw std::invalid_argument("fuzzy_cmeans: clusters must be > 1");
    if (!points.allFinite()) throw std::invalid_argument("fuzzy_cmeans: non-finite input");
    if (params.fuzzifier <= 1.0) throw std::invalid_argument("fuzzy_cmeans: fuzzifier must be > 1");
    const Eigen::Index n = points.rows();
    const Eigen::Index c = std::min<Eigen::Index>(params.clusters, n);
    if (c <= 1) throw std::invalid_argument("fuzzy_cmeans: need at least 2 points");

    Matrix memberships;
    if (params.initial_memberships) {
        memberships = *params.initial_memberships;
        if (memberships.rows() != n || memberships.cols() != c) {
            throw std::invalid_argument("fuzzy_cmeans: initial membership shape mismatch");
        }
    } else {
        std::mt19937_64 rng(params.seed);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        memberships.resize(n, c);
        for (Eigen::Index i = 0; i < n; ++i) {
            double row_sum = 0.0;
            for (Eigen::Index j = 0; j < c; ++j) {
                memberships(i, j) = uniform(rng) + 1e-9;
                row_sum += memberships(i, j);
            }
            memberships.row(i) /= row_sum;
        }
    }

    FcmResult result;
    Matrix centroids(c, points.cols());
    for (int iter = 0; iter < params.max_iterations; ++iter) {
        const Matrix weights = memberships.array().pow(params.fuzzifier);
        for (Eigen::Index j = 0; j < c; ++j) {
            const double wsum = weights.col(j).sum();
            if (wsum > 1e-300) {
                centroids.row(j) = (weights.col(j).transpose() * points) / wsum;
            } else if (iter == 0) {
                centroids.row(j) = points.row(j % n);
            }
            // otherwise keep the previous centroid
        }

        const Matrix updated = fcm_membership_update(points, centroids, params.fuzzifier);
        const double change = (updated - memberships).cwiseAbs().maxCoeff();
        memberships = updated;
        ++result.iterations;

        double objective = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < c; ++j) {
                objective += std::pow(memberships(i, j), params.fuzzifier) *
                             (points.row(i) - centroids.row(j)).squaredNorm();
            }
        }
        result.objective_trace.push_back(objective);
        if (change < params.epsilon) break;
    }
    result.memberships = std::move(memberships);
    return result;
}

void write_embeddings(const Matrix& m, const std::vector<std::string>& words,
                      const std::string& path) {
    if (static_cast<Eigen::Index>(words.size()) != m.rows()) {
        throw std::invalid_argument("write_embeddings: word count does not match row count");
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write embedding file: " + path);
    out << m.rows() << ' ' << m.cols() << '\n';
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << words[static_cast<size_t>(i)];
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.9g", m(i, j));
            out << ' ' << buf;
        }
        out << '\n';
    }
}

EmbeddingFile read_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open embedding file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ":1: missing \"<V> <k>\" header");
    long long rows = 0;
    long long cols = 0;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> rows >> cols) || (header >> extra) || rows < 0 || cols < 0) {
            throw std::runtime_error(path + ":1: malformed \"<V> <k>\" header");
        }
    }

    EmbeddingFile file;
    file.words.reserve(static_cast<size_t>(rows));
    file.vectors.resize(rows, cols);
    for (long long i = 0; i < rows; ++i) {
        const long long line_no = i + 2;
        if (!std::getline(in, line)) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected " + std::to_string(rows) + " embedding rows");
        }
        std::istringstream row(line);
        std::string word;
        if (!(row >> word)) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": missing word");
        }
        for (long long j = 0; j < cols; ++j) {
            double value = 0.0;
            if (!(row >> value)) {
                throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                                         std::to_string(cols) + " values for word \"" + word +
                                         "\"");
            }
            file.vectors(i, j) = value;
        }
        std::string extra;
        if (row >> extra) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                                     std::to_string(cols) + " values for word \"" + word + "\"");
        }
        file.words.push_back(std::move(word));
    }
    return file;
}

}  // namespace sentivec
