#pragma once

#include <Eigen/Sparse>
#include <cstdint>
#include <string>
#include <vector>

#include "latentgraph/dataset.hpp"
#include "latentgraph/similarity.hpp"

namespace latentgraph {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Symmetrically normalized adjacency: entry (v, u) = 1/sqrt(deg(v)*deg(u))
/// for every edge of the (optionally self-loop-augmented) graph. With
/// self-loops an isolated node carries the single entry (v, v) = 1, so the
/// network degenerates to a per-node MLP on edgeless graphs.
struct NormAdjacency {
    Eigen::Index n = 0;
    SparseMatrix weights;      // n x n, symmetric
    std::vector<int> degrees;  // includes the self-loop when enabled
    bool self_loops = true;
};

NormAdjacency normalize_adjacency(const LatentGraph& g, bool self_loops = true);

/// Two-layer GCN: W1 maps features to the hidden layer, W2 maps the hidden
/// layer to class logits. No biases.
struct GcnModel {
    Matrix w1;  // d x h
    Matrix w2;  // h x c
    std::uint64_t seed = 0;

    Eigen::Index input_dim() const { return w1.rows(); }
    Eigen::Index hidden_dim() const { return w1.cols(); }
    Eigen::Index class_count() const { return w2.cols(); }
};

/// Glorot-uniform initialization: entries uniform in +-sqrt(6/(fan_in+fan_out)).
GcnModel init_model(Eigen::Index d, Eigen::Index h, Eigen::Index c, std::uint64_t seed);

struct TrainConfig {
    double learning_rate = 0.01;
    double weight_decay = 5e-4;
    int patience = 10;
    int max_epochs = 200;
    int hidden_dim = 16;
    bool self_loops = true;
    // Propagate through the adjacency before the linear head (two full GCN
    // layers). Off gives logits = H1 * W2.
    bool head_propagation = true;
    std::uint64_t seed = 0;

    void validate() const;
};

struct ForwardCache {
    Matrix z1;      // pre-activation A*X*W1
    Matrix h1;      // relu(z1)
    Matrix head_in; // input to the linear head: A*H1 or H1
    Matrix logits;  // head_in * W2
};

ForwardCache forward(const GcnModel& model, const NormAdjacency& a,
                     const Eigen::Ref<const Matrix>& x, bool head_propagation = true);

/// Masked mean cross-entropy (stable log-sum-exp form) plus an L2 penalty
/// (weight_decay/2)*(|W1|^2 + |W2|^2).
double loss(const Eigen::Ref<const Matrix>& logits, const std::vector<int>& labels,
            const std::vector<int>& mask, const GcnModel& model, double weight_decay);

/// Cross-entropy term only, no penalty. Used for validation tracking.
double data_loss(const Eigen::Ref<const Matrix>& logits, const std::vector<int>& labels,
                 const std::vector<int>& mask);

struct Gradients {
    Matrix w1;
    Matrix w2;
};

/// Analytic gradients of loss() with respect to both weight matrices.
Gradients backward(const GcnModel& model, const NormAdjacency& a,
                   const Eigen::Ref<const Matrix>& x, const ForwardCache& cache,
                   const std::vector<int>& labels, const std::vector<int>& mask,
                   double weight_decay, bool head_propagation = true);

/// Adam optimizer state (Kingma & Ba defaults: beta1 0.9, beta2 0.999,
/// eps 1e-8), bias-corrected.
struct AdamState {
    Matrix m_w1, v_w1, m_w2, v_w2;
    long timestep = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    static AdamState for_model(const GcnModel& model);
};

void adam_step(AdamState& state, GcnModel& model, const Gradients& grads, double learning_rate);

struct EpochStats {
    double train_loss = 0.0;  // full objective on the training mask
    double val_loss = 0.0;    // data term on the validation mask
};

struct TrainResult {
    GcnModel model;  // snapshot from the best-validation epoch
    std::vector<EpochStats> history;
    int stopped_epoch = 0;  // 1-based epoch at which training halted
    int best_epoch = 0;     // 1-based epoch of the returned snapshot
    double best_val_loss = 0.0;
    double train_loss_at_best = 0.0;
};

/// Tracks validation loss; stops after `patience` consecutive epochs
/// without improvement.
class EarlyStopper {
public:
    explicit EarlyStopper(int patience);

    /// Returns true if this epoch improved on the best seen so far.
    bool update(double val_loss);
    bool should_stop() const { return bad_epochs_ >= patience_; }
    double best() const { return best_; }

private:
    int patience_;
    int bad_epochs_ = 0;
    double best_;
};

/// Full-batch training with validation-loss early stopping. Masks must be
/// disjoint and non-empty, and every class must appear in `fit_mask`.
TrainResult train(const Dataset& ds, const NormAdjacency& a, const std::vector<int>& fit_mask,
                  const std::vector<int>& val_mask, const TrainConfig& cfg);

struct Prediction {
    Matrix probabilities;       // n x c, rows sum to 1
    std::vector<int> labels;    // argmax, ties broken toward the lowest index
};

Prediction predict(const GcnModel& model, const NormAdjacency& a,
                   const Eigen::Ref<const Matrix>& x, bool head_propagation = true);

/// Versioned JSON checkpoint with row-major weight payloads; load validates
/// shapes.
void save_checkpoint(const GcnModel& model, const std::string& path);
GcnModel load_checkpoint(const std::string& path);

}  // namespace latentgraph
