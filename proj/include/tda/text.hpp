#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tda/metric.hpp"

namespace tda {

struct Document {
    std::string id;    // 1-based source line number
    std::string label;
    std::string text;
};

struct Corpus {
    std::vector<Document> docs;
    std::vector<std::string> label_set;   // sorted unique labels
    std::size_t dropped_blank_lines = 0;

    std::size_t size() const { return docs.size(); }
};

// One document per line, UTF-8. The label file must have exactly one label
// per text line; blank text lines are dropped together with their label and
// counted. Throws IoError on unreadable files or invalid UTF-8 (with line
// number), ConfigError on line-count mismatch or empty labels.
Corpus load_corpus(const std::filesystem::path& text_path,
                   const std::filesystem::path& label_path);

// Single-label mode: every document gets `label`.
Corpus load_corpus(const std::filesystem::path& text_path, const std::string& label);

// NFC normalization, simple lowercasing, then splitting on whitespace and
// punctuation. ZWNJ stays inside tokens; other format controls are dropped
// without creating a boundary. Invalid UTF-8 decodes to U+FFFD.
std::vector<std::string> tokenize(const std::string& text);

struct DocumentTermMatrix {
    std::vector<std::string> vocab;                        // sorted, unique
    std::vector<std::vector<std::pair<int, double>>> rows; // sparse, sorted by term index
    std::vector<std::string> doc_ids;

    std::size_t docs() const { return rows.size(); }
    std::size_t terms() const { return vocab.size(); }
};

// weight(d,t) = count(t in d) * (ln((1+N)/(1+df(t))) + 1), rows then
// L2-normalized (empty rows left as-is). Rejects an empty corpus and a
// corpus whose documents all tokenize to nothing.
DocumentTermMatrix tfidf(const Corpus& corpus);

struct SplitResult {
    std::vector<Corpus> parts; // consecutive chunks in original order
    bool last_short = false;
};

SplitResult split_parts(const Corpus& corpus, std::size_t part_size);

// Pairwise distances between the rows of a document-term matrix (sparse
// merge arithmetic; cosine requires no zero rows).
DistanceMatrix dtm_distances(const DocumentTermMatrix& dtm, Metric metric);

} // namespace tda
