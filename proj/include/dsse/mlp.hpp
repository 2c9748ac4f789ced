#ifndef DSSE_MLP_HPP
#define DSSE_MLP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsse/rng.hpp"

namespace dsse {

enum class Activation { Relu, Linear, Softmax };

struct LayerSpec {
    std::size_t width = 0;
    Activation activation = Activation::Relu;
};

enum class LossKind { Mse, CategoricalCrossEntropy };

/// Per-feature z-score scaler. Stds are floored at 1e-8.
struct Scaler {
    Eigen::VectorXd mean;
    Eigen::VectorXd std;

    void fit(const Eigen::MatrixXd& X); // features x samples
    Eigen::MatrixXd transform(const Eigen::MatrixXd& X) const;
    Eigen::MatrixXd inverse(const Eigen::MatrixXd& X) const;
    bool fitted() const { return mean.size() > 0; }
    static Scaler identity(std::size_t width);
};

struct MlpParams {
    std::size_t input_width = 0;
    std::vector<LayerSpec> specs;     // hidden layers then output layer
    std::vector<Eigen::MatrixXd> W;   // out x in per layer
    std::vector<Eigen::VectorXd> b;
    Scaler input_scaler;
    Scaler output_scaler;
    // checkpoint metadata
    std::string feeder_fingerprint;
    std::vector<std::string> feature_names;
    std::vector<std::string> output_names;
    std::vector<std::string> label_map; // TI: topology label per class index

    std::size_t output_width() const { return specs.back().width; }
};

/// He-normal initialization: W ~ N(0, 2/fan_in), b = 0.
MlpParams init_he_normal(const std::vector<LayerSpec>& specs, std::size_t input_width,
                         std::uint64_t seed);

/// Stored activations and dropout masks of one forward pass (columns = samples).
struct ForwardCache {
    std::vector<Eigen::MatrixXd> post;  // post-activation (and post-dropout) per layer
    std::vector<Eigen::MatrixXd> mask;  // dropout masks per hidden layer (empty in inference)
    Eigen::MatrixXd output;
};

/// Forward pass in the network's (scaled) space. rng != nullptr enables
/// inverted dropout on the hidden layers with the given rate.
ForwardCache forward(const MlpParams& params, const Eigen::MatrixXd& X, double dropout_rate = 0.0,
                     Rng* rng = nullptr);

double loss(const Eigen::MatrixXd& output, const Eigen::MatrixXd& target, LossKind kind);

struct Gradients {
    std::vector<Eigen::MatrixXd> dW;
    std::vector<Eigen::VectorXd> db;
};

/// Exact batch-loss gradients with the cache's dropout masks held fixed.
Gradients backward(const MlpParams& params, const ForwardCache& cache, const Eigen::MatrixXd& X,
                   const Eigen::MatrixXd& target, LossKind kind);

struct AdamState {
    std::vector<Eigen::MatrixXd> mW, vW;
    std::vector<Eigen::VectorXd> mb, vb;
    long long t = 0;
    double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;

    static AdamState init(const MlpParams& params);
};

void adam_step(MlpParams& params, const Gradients& grads, AdamState& state, double lr);

struct TrainConfig {
    std::size_t epochs = 200;
    std::size_t batch_size = 32;
    double dropout_rate = 0.30;
    double lr_init = 0.1;
    double plateau_factor = 0.5;
    std::size_t plateau_patience = 5;
    double min_lr = 1e-4;
    double plateau_threshold = 1e-6;
    double val_fraction = 0.10; // of the data handed to train()
    std::uint64_t seed = 0;
    LossKind loss = LossKind::Mse;
    bool standardize_inputs = true;
    bool standardize_outputs = true; // regression only
};

struct TrainHistory {
    std::vector<double> train_loss;
    std::vector<double> val_loss;
    std::vector<double> lr;
    double best_val_loss = 0.0;
    std::size_t best_epoch = 0;
};

/// Mini-batch Adam training with seeded shuffling, reduce-LR-on-plateau on
/// the validation loss, and best-validation checkpoint selection. X, Y are
/// raw (unscaled) features x samples / outputs x samples; scalers are fit
/// here on the training portion only and stored in the returned params.
TrainHistory train(MlpParams& params, const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                   const TrainConfig& cfg);

/// Inference on raw inputs: scale, forward, de-scale.
Eigen::MatrixXd predict(const MlpParams& params, const Eigen::MatrixXd& X);

std::string save_checkpoint(const MlpParams& params);
MlpParams load_checkpoint(const std::string& text);

} // namespace dsse

#endif
