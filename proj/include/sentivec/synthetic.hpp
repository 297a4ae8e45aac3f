#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sentivec {

struct SyntheticParams {
    int documents = 500;  // split evenly across the two classes
    int marker_words = 10;   // per class
    int filler_words = 30;
    double marker_rate = 0.8;   // chance of each same-class marker per document
    double cross_rate = 0.05;   // chance of each opposite-class marker
    int min_fillers = 5;
    int max_fillers = 10;
    std::uint64_t seed = 1;
    /// Permute the label column after generation, leaving the texts alone.
    /// The result has no label signal; any accuracy far from 0.5 on it
    /// indicates leakage.
    bool shuffle_labels = false;

    void validate() const;
};

struct SyntheticCorpus {
    std::vector<std::string> corpus_lines;      // "<label>\t<text>"
    std::vector<std::string> dictionary_lines;  // "<headword>\t<definition text>"
};

/// Planted-polarity corpus: poswNN / negwNN markers over a filler background,
/// plus a small dictionary defining every vocabulary word. Deterministic for
/// a fixed parameter set.
SyntheticCorpus generate_synthetic(const SyntheticParams& params);

/// Writes the corpus file and, when dictionary_path is non-empty, the
/// dictionary file.
void write_synthetic(const SyntheticCorpus& corpus, const std::string& corpus_path,
                     const std::string& dictionary_path);

}  // namespace sentivec
