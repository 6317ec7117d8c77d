#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixlab/matrix.hpp"
#include "mixlab/rng.hpp"

namespace mixlab {

enum class Activation { identity, relu, leaky_relu };

std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

struct LayerSpec {
    std::size_t input_dim = 0;
    std::size_t output_dim = 0;
    Activation activation = Activation::leaky_relu;
    double slope = 0.01; // leaky_relu only
};

struct LayerParams {
    Matrix weight;             // input_dim x output_dim
    std::vector<double> bias;  // output_dim
};

/// An MLP: an ordered stack of affine+activation layers. The network maps
/// inputs to logits; probabilities only ever appear downstream (loss,
/// analysis). Layer boundaries are post-activation outputs, boundary 0 being
/// the raw input, so the forward pass can be split at any k in {0..depth}.
struct NetworkParams {
    std::vector<LayerSpec> specs;
    std::vector<LayerParams> layers;

    std::size_t depth() const { return specs.size(); }
    std::size_t input_dim() const { return specs.empty() ? 0 : specs.front().input_dim; }
    std::size_t output_dim() const { return specs.empty() ? 0 : specs.back().output_dim; }
    /// Feature width at boundary k (k = 0 is the input).
    std::size_t width_at(std::size_t k) const;
};

struct LayerTrace {
    Matrix pre;  // affine output before activation
    Matrix post; // after activation
};

/// Memo of one partial forward pass, kept for backprop.
struct ForwardTrace {
    std::size_t start = 0; // boundary the pass began from
    Matrix input;          // batch fed at that boundary
    std::vector<LayerTrace> steps; // layers start+1 .. start+steps.size()
};

struct GradientSet {
    std::vector<LayerParams> layers; // same shapes as NetworkParams
};

/// Hidden-state interpolation node the backward pass routes through: the
/// gradient arriving at the mixed state splits as lambda into branch a and
/// (1-lambda) into branch b, both branches sharing the same parameters.
struct MixPoint {
    std::size_t layer = 0;
    double lambda = 1.0;
    const ForwardTrace* trace_a = nullptr;
    const ForwardTrace* trace_b = nullptr;
};

struct BackwardResult {
    GradientSet grads;
    Matrix input_grad;   // dLoss/dInput (branch a when mixed)
    Matrix input_grad_b; // dLoss/dInput of branch b; empty when unmixed
};

/// He-initialized parameters: weight std sqrt(2/input_dim), zero biases.
NetworkParams init_params(const std::vector<LayerSpec>& specs, Rng& rng);

/// Runs layers 1..k; k = 0 returns the input unchanged with an empty trace.
std::pair<Matrix, ForwardTrace> forward_to(const NetworkParams& params, const Matrix& x,
                                           std::size_t k);

/// Runs layers k+1..depth from a hidden state at boundary k.
std::pair<Matrix, ForwardTrace> forward_from(const NetworkParams& params, const Matrix& hidden,
                                             std::size_t k);

/// Full pass; identical to forward_from(params, x, 0).
std::pair<Matrix, ForwardTrace> forward(const NetworkParams& params, const Matrix& x);

/// Logits only, no trace kept.
Matrix forward_logits(const NetworkParams& params, const Matrix& x);

/// Exact reverse-mode gradients. `trace` covers the layers above the mix
/// point when `mix` is set (and must then start at mix->layer), otherwise
/// the whole network. With stop_before_mix, gradients of layers at or below
/// the mix point are zeroed; at mix->layer == 0 the flag is a no-op.
BackwardResult backward(const NetworkParams& params, const ForwardTrace& trace,
                        const std::optional<MixPoint>& mix, const Matrix& loss_grad,
                        bool stop_before_mix = false);

struct OptimizerState {
    double learning_rate = 0.1;
    double momentum = 0.0;
    double weight_decay = 0.0;
    /// (epoch, multiplicative factor) pairs; applied by the training loop
    /// when it enters the named epoch.
    std::vector<std::pair<std::size_t, double>> schedule;
    std::vector<LayerParams> velocity; // shaped like the params on first use
};

/// v <- momentum*v + grad + weight_decay*param; param <- param - lr*v.
/// Rejects non-finite gradients with a diagnostic before touching params.
void sgd_step(NetworkParams& params, const GradientSet& grads, OptimizerState& opt);

/// Classification accuracy of argmax(logits) against integer labels.
double accuracy(const Matrix& logits, const std::vector<int>& labels);

struct Checkpoint {
    NetworkParams params;
    std::uint64_t seed = 0;
    std::size_t epoch = 0;
};

/// JSON header line + flat little-endian float64 parameter block;
/// byte-stable for identical runs.
void save_checkpoint(const Checkpoint& ck, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

} // namespace mixlab
