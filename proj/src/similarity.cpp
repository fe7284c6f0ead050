#include "latentgraph/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace latentgraph {

double cosine_similarity(const Eigen::Ref<const Vector>& u, const Eigen::Ref<const Vector>& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("cosine_similarity: length mismatch");
    if (u.size() < 1) throw std::invalid_argument("cosine_similarity: empty vectors");
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 0.0;
    const double value = u.dot(v) / (nu * nv);
    return std::clamp(value, -1.0, 1.0);
}

SimilarityMatrix similarity_matrix(const Dataset& ds) {
    const Eigen::Index n = ds.n();
    SimilarityMatrix sm;
    sm.n = n;
    sm.scores.resize(n, n);

    Vector norms(n);
    for (Eigen::Index i = 0; i < n; ++i) norms(i) = ds.features.row(i).norm();

    for (Eigen::Index i = 0; i < n; ++i) {
        sm.scores(i, i) = norms(i) == 0.0 ? 0.0 : 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double value = 0.0;
            if (norms(i) != 0.0 && norms(j) != 0.0) {
                value = ds.features.row(i).dot(ds.features.row(j)) / (norms(i) * norms(j));
                value = std::clamp(value, -1.0, 1.0);
            }
            sm.scores(i, j) = value;
            sm.scores(j, i) = value;
        }
    }
    return sm;
}

LatentGraph threshold_graph(const SimilarityMatrix& sm, double theta) {
    if (!(theta > 0.0) || theta > 1.0)
        throw std::invalid_argument("threshold_graph: theta must be in (0, 1]");
    LatentGraph g;
    g.n = sm.n;
    g.theta = theta;
    for (Eigen::Index i = 0; i < sm.n; ++i)
        for (Eigen::Index j = i + 1; j < sm.n; ++j)
            if (sm.scores(i, j) >= theta)
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::size_t count_edges_at(const SimilarityMatrix& sm, double theta) {
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < sm.n; ++i)
        for (Eigen::Index j = i + 1; j < sm.n; ++j)
            if (sm.scores(i, j) >= theta) ++count;
    return count;
}

namespace {

std::vector<double> positive_similarities(const SimilarityMatrix& sm) {
    std::vector<double> values;
    for (Eigen::Index i = 0; i < sm.n; ++i)
        for (Eigen::Index j = i + 1; j < sm.n; ++j)
            if (sm.scores(i, j) > 0.0) values.push_back(sm.scores(i, j));
    return values;
}

}  // namespace

double edge_retention(const SimilarityMatrix& sm, double theta) {
    if (!(theta > 0.0) || theta > 1.0)
        throw std::invalid_argument("edge_retention: theta must be in (0, 1]");
    const std::vector<double> positives = positive_similarities(sm);
    if (positives.empty())
        throw std::runtime_error("edge_retention: full graph has no admissible edges");
    std::size_t kept = 0;
    for (double s : positives)
        if (s >= theta) ++kept;
    return static_cast<double>(kept) / static_cast<double>(positives.size());
}

std::vector<double> theta_grid(const SimilarityMatrix& sm, const std::vector<double>& quantiles) {
    for (std::size_t i = 0; i < quantiles.size(); ++i) {
        if (!(quantiles[i] > 0.0) || !(quantiles[i] < 1.0))
            throw std::invalid_argument("theta_grid: quantile levels must lie in (0, 1)");
        if (i > 0 && !(quantiles[i] > quantiles[i - 1]))
            throw std::invalid_argument("theta_grid: quantile levels must be strictly increasing");
    }
    std::vector<double> values = positive_similarities(sm);
    if (values.empty())
        throw std::runtime_error("theta_grid: no positive similarities");
    std::sort(values.begin(), values.end());

    std::vector<double> grid;
    for (double q : quantiles) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
        const double frac = pos - static_cast<double>(lo);
        double theta = values[lo];
        if (frac > 0.0 && lo + 1 < values.size())
            theta += frac * (values[lo + 1] - values[lo]);
        if (grid.empty() || theta != grid.back()) grid.push_back(theta);
    }
    return grid;
}

std::vector<double> default_theta_quantiles() {
    return {0.80, 0.85, 0.875, 0.90, 0.925, 0.95};
}

void write_edge_list(const LatentGraph& g, const SimilarityMatrix& sm, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", g.theta);
    out << "# n=" << g.n << " theta=" << buffer << '\n';
    for (const auto& [i, j] : g.edges) {
        std::snprintf(buffer, sizeof(buffer), "%.17g", sm.scores(i, j));
        out << i << '\t' << j << '\t' << buffer << '\n';
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace latentgraph
