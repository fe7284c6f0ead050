#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latentgraph/dataset.hpp"

namespace latentgraph {

/// Symmetric instance-instance cosine scores. Each (i, j) pair is computed
/// once and mirrored, so scores(i, j) == scores(j, i) holds bitwise. Values
/// are clamped to [-1, 1]; rows with zero norm score 0 against everything.
struct SimilarityMatrix {
    Eigen::Index n = 0;
    Matrix scores;  // n x n, diagonal present but never used for edges
};

/// Cosine of the angle between two equal-length vectors, clamped to
/// [-1, 1]. Zero-norm inputs yield 0 rather than NaN.
double cosine_similarity(const Eigen::Ref<const Vector>& u, const Eigen::Ref<const Vector>& v);

SimilarityMatrix similarity_matrix(const Dataset& ds);

/// Undirected unweighted graph over instances: edges are the pairs whose
/// cosine score reached the threshold used to build it. Isolated nodes stay
/// in the graph.
struct LatentGraph {
    Eigen::Index n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted, no duplicates
    double theta = 0.0;
};

/// Keep every pair (i, j), i < j, with scores(i, j) >= theta.
/// Requires 0 < theta <= 1.
LatentGraph threshold_graph(const SimilarityMatrix& sm, double theta);

std::size_t count_edges_at(const SimilarityMatrix& sm, double theta);

/// Fraction of the admissible-edge universe (all pairs with similarity > 0)
/// that survives the threshold. Throws if that universe is empty.
double edge_retention(const SimilarityMatrix& sm, double theta);

/// Empirical quantiles (linear interpolation between order statistics) of
/// the positive off-diagonal similarity population, deduplicated. Each
/// returned value is a valid threshold (> 0).
std::vector<double> theta_grid(const SimilarityMatrix& sm, const std::vector<double>& quantiles);

/// Quantile levels used when the caller does not supply a grid; chosen so
/// the candidate retentions bracket roughly 5%..20% of admissible edges.
std::vector<double> default_theta_quantiles();

/// One edge per line "i<TAB>j<TAB>similarity", preceded by a header line
/// "# n=<N> theta=<theta>".
void write_edge_list(const LatentGraph& g, const SimilarityMatrix& sm, const std::string& path);

}  // namespace latentgraph
