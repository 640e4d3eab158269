#include "fardiff/fuzzyart.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fardiff/error.hpp"

namespace fardiff {
namespace {

void check_same_length(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw InputError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    }
}

double and_norm(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::min(a[i], b[i]);
    return sum;
}

void check_unit_box(const RowMatrix& inputs) {
    for (Index i = 0; i < inputs.rows(); ++i) {
        for (Index j = 0; j < inputs.cols(); ++j) {
            const double v = inputs(i, j);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw InputError("pattern " + std::to_string(i) + " component " + std::to_string(j) +
                                 " = " + std::to_string(v) + " lies outside [0,1]");
            }
        }
    }
}

std::vector<std::vector<double>> code_inputs(const RowMatrix& inputs, bool complement) {
    std::vector<std::vector<double>> coded;
    coded.reserve(static_cast<std::size_t>(inputs.rows()));
    for (Index i = 0; i < inputs.rows(); ++i) {
        std::vector<double> row(inputs.row(i).begin(), inputs.row(i).end());
        coded.push_back(complement ? complement_code(row) : std::move(row));
        if (!complement && l1_norm(coded.back()) == 0.0) {
            throw InputError("pattern " + std::to_string(i) +
                             " is all zeros; the match ratio is undefined without complement coding");
        }
    }
    return coded;
}

}  // namespace

int winner_take_all(std::span<const double> scores, const std::vector<bool>& disabled) {
    int best = -1;
    for (std::size_t j = 0; j < scores.size(); ++j) {
        if (disabled[j]) continue;
        if (best < 0 || scores[j] > scores[static_cast<std::size_t>(best)]) best = static_cast<int>(j);
    }
    return best;
}

void ArtParams::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be > 0");
    if (!(beta >= 0.0 && beta <= 1.0)) throw ParameterError("beta must lie in [0,1]");
    if (!(rho >= 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in [0,1]");
    if (max_epochs < 1) throw ParameterError("max_epochs must be >= 1");
}

std::vector<double> complement_code(std::span<const double> x) {
    std::vector<double> out(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
            throw InputError("complement coding needs components in [0,1], got " + std::to_string(x[i]));
        }
        out[i] = x[i];
        out[i + x.size()] = 1.0 - x[i];
    }
    return out;
}

std::vector<double> fuzzy_and(std::span<const double> a, std::span<const double> b) {
    check_same_length(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

double l1_norm(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += std::abs(v);
    return sum;
}

double choice(std::span<const double> x, std::span<const double> w, double alpha) {
    check_same_length(x, w);
    if (!(alpha > 0.0)) throw ParameterError("alpha must be > 0");
    return and_norm(x, w) / (alpha + l1_norm(w));
}

bool vigilance_pass(std::span<const double> x, std::span<const double> w, double rho) {
    check_same_length(x, w);
    const double norm = l1_norm(x);
    if (norm == 0.0) throw InputError("match ratio undefined for a zero input");
    return rho <= and_norm(x, w) / norm;
}

std::vector<double> learn(std::span<const double> w_old, std::span<const double> x, double beta) {
    check_same_length(w_old, x);
    if (!(beta >= 0.0 && beta <= 1.0)) throw ParameterError("beta must lie in [0,1]");
    std::vector<double> out(w_old.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = beta * std::min(x[i], w_old[i]) + (1.0 - beta) * w_old[i];
    }
    return out;
}

TrainResult train(const RowMatrix& inputs, const ArtParams& params, const EpochObserver& observer) {
    params.validate();
    if (inputs.rows() < 1 || inputs.cols() < 1) throw InputError("training needs at least one pattern");
    check_unit_box(inputs);

    const auto patterns = code_inputs(inputs, params.complement_coding);
    const std::size_t coded_dim = patterns.front().size();
    const std::vector<double> uncommitted(coded_dim, 1.0);

    TrainResult result;
    result.model.params = params;
    result.model.input_dim = inputs.cols();
    auto& weights = result.model.weights;
    std::vector<int>& assigned = result.assignment.category;
    assigned.assign(patterns.size(), kNoMatch);

    std::vector<double> scores;
    std::vector<bool> disabled;
    for (int epoch = 1; epoch <= params.max_epochs; ++epoch) {
        bool changed = false;
        for (std::size_t p = 0; p < patterns.size(); ++p) {
            const auto& x = patterns[p];
            // Committed categories first, the uncommitted node last.
            const std::size_t n_committed = weights.size();
            scores.resize(n_committed + 1);
            for (std::size_t j = 0; j < n_committed; ++j) scores[j] = choice(x, weights[j], params.alpha);
            scores[n_committed] = choice(x, uncommitted, params.alpha);
            disabled.assign(n_committed + 1, false);

            int category = kNoMatch;
            while (category == kNoMatch) {
                const int winner = winner_take_all(scores, disabled);
                const auto w = static_cast<std::size_t>(winner);
                if (w == n_committed) {
                    weights.push_back(learn(uncommitted, x, params.beta));
                    category = winner;
                } else if (vigilance_pass(x, weights[w], params.rho)) {
                    weights[w] = learn(weights[w], x, params.beta);
                    category = winner;
                } else {
                    disabled[w] = true;
                }
            }
            if (assigned[p] != category) changed = true;
            assigned[p] = category;
        }
        result.epochs = epoch;
        result.assignment.n_categories = static_cast<int>(weights.size());
        if (observer) observer(result.model, result.assignment, epoch);
        if (!changed) {
            result.converged = true;
            break;
        }
    }
    return result;
}

Assignment predict(const ArtModel& model, const RowMatrix& inputs) {
    if (model.weights.empty()) throw InputError("cannot predict with an untrained model");
    if (inputs.cols() != model.input_dim) {
        throw InputError("input dimension " + std::to_string(inputs.cols()) + " does not match model dimension " +
                         std::to_string(model.input_dim));
    }
    check_unit_box(inputs);
    const auto patterns = code_inputs(inputs, model.params.complement_coding);

    Assignment out;
    out.n_categories = static_cast<int>(model.n_categories());
    out.category.reserve(patterns.size());
    std::vector<double> scores(model.n_categories());
    std::vector<bool> disabled;
    for (const auto& x : patterns) {
        for (std::size_t j = 0; j < scores.size(); ++j) scores[j] = choice(x, model.weights[j], model.params.alpha);
        disabled.assign(scores.size(), false);
        int category = kNoMatch;
        for (int winner = winner_take_all(scores, disabled); winner >= 0; winner = winner_take_all(scores, disabled)) {
            if (vigilance_pass(x, model.weights[static_cast<std::size_t>(winner)], model.params.rho)) {
                category = winner;
                break;
            }
            disabled[static_cast<std::size_t>(winner)] = true;
        }
        out.category.push_back(category);
    }
    return out;
}

}  // namespace fardiff
