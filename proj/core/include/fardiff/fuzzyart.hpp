#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fardiff/types.hpp"

namespace fardiff {

struct ArtParams {
    double alpha = 0.001;
    double beta = 1.0;
    double rho = 0.5;
    bool complement_coding = true;
    int max_epochs = 100;

    /// Throws ParameterError when a field is out of range.
    void validate() const;

    bool operator==(const ArtParams&) const = default;
};

/// Committed category prototypes. Weights live in the coded space
/// (2 * input_dim components with complement coding, input_dim without).
struct ArtModel {
    std::vector<std::vector<double>> weights;
    ArtParams params;
    Index input_dim = 0;

    std::size_t n_categories() const noexcept { return weights.size(); }
    Index coded_dim() const noexcept { return params.complement_coding ? 2 * input_dim : input_dim; }

    bool operator==(const ArtModel&) const = default;
};

inline constexpr int kNoMatch = -1;

struct Assignment {
    std::vector<int> category;
    int n_categories = 0;
};

struct TrainResult {
    ArtModel model;
    Assignment assignment;
    int epochs = 0;
    bool converged = false;
};

std::vector<double> complement_code(std::span<const double> x);
std::vector<double> fuzzy_and(std::span<const double> a, std::span<const double> b);
double l1_norm(std::span<const double> x);

/// T = |x ^ w| / (alpha + |w|) with the L1 norm.
double choice(std::span<const double> x, std::span<const double> w, double alpha);

/// rho <= |x ^ w| / |x|.
bool vigilance_pass(std::span<const double> x, std::span<const double> w, double rho);

/// w_new = beta (x ^ w_old) + (1 - beta) w_old.
std::vector<double> learn(std::span<const double> w_old, std::span<const double> x, double beta);

/// Index of the largest score among entries not marked disabled; ties go
/// to the lowest index. Returns -1 when every entry is disabled.
int winner_take_all(std::span<const double> scores, const std::vector<bool>& disabled);

/// Called after every epoch with the model state and the 1-based epoch.
using EpochObserver = std::function<void(const ArtModel&, const Assignment&, int epoch)>;

/// Rows of `inputs` are patterns in [0,1]^m, presented in row order.
/// Epochs repeat until one leaves every assignment unchanged or
/// params.max_epochs is reached.
TrainResult train(const RowMatrix& inputs, const ArtParams& params,
                  const EpochObserver& observer = {});

/// Winner-take-all with vigilance over committed categories only. Rows
/// that fail vigilance everywhere get kNoMatch. The model is not modified.
Assignment predict(const ArtModel& model, const RowMatrix& inputs);

}  // namespace fardiff
