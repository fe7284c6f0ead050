#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace latentgraph {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Tabular dataset: one instance per row, numeric features, dense integer
/// class labels in [0, c). Immutable after construction; safe to share
/// across fold workers.
struct Dataset {
    Matrix features;                         // n x d
    std::vector<int> labels;                 // size n, values in [0, c)
    std::vector<std::string> class_names;    // size c, first-appearance order
    std::vector<std::string> feature_names;  // size d
    std::string label_name = "label";

    Eigen::Index n() const { return features.rows(); }
    Eigen::Index d() const { return features.cols(); }
    int c() const { return static_cast<int>(class_names.size()); }

    /// Throws std::invalid_argument if any structural invariant is broken:
    /// non-finite features, label out of range, empty class, n < 2, d < 1,
    /// c < 2.
    void validate() const;
};

struct LoadOptions {
    std::string label_column;
    char delimiter = ',';
    // Reject classes with fewer than 2 instances (stratified CV needs at
    // least one training representative of every class in every fold).
    bool strict = false;
};

/// Parse a delimited text file with a header row into a Dataset. Labels are
/// mapped to dense indices in order of first appearance. Malformed cells
/// are reported with 1-based row and column.
Dataset load_csv(const std::string& path, const LoadOptions& options);

/// Companion writer: header row, features in column order, label column
/// last. Doubles are printed with 17 significant digits so a reload
/// reproduces the exact bit patterns.
void write_csv(const Dataset& ds, const std::string& path, char delimiter = ',');

enum class StandardizeMode { none, zscore };

/// mode == none returns the input unchanged. mode == zscore centers each
/// feature and scales by its population std; zero-variance features become
/// all-zero columns.
Dataset standardize(const Dataset& ds, StandardizeMode mode);

/// Synthetic Gaussian-cluster fixture: c isotropic unit-variance clusters
/// whose centers are mutually at least `separation` apart, class sizes
/// balanced to within one. Deterministic in `seed`.
Dataset synth_blobs(int n, int d, int c, double separation, std::uint64_t seed);

}  // namespace latentgraph
