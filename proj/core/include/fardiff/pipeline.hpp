#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fardiff/dataset.hpp"
#include "fardiff/diffusion.hpp"
#include "fardiff/fuzzyart.hpp"

namespace fardiff {

struct FardiffConfig {
    std::optional<double> sigma;  ///< median pairwise distance when unset
    int t = 1;
    Index dims = 2;
    bool skip_trivial = false;
    ArtParams art;
    unsigned threads = 1;
};

/// Resolved values of a pipeline run.
struct RunReport {
    double sigma = 0.0;
    bool sigma_from_median = false;
    int t = 1;
    Index dims = 2;
    bool skip_trivial = false;
    ArtParams art;
    std::vector<double> eigenvalues;
    int epochs = 0;
    bool converged = false;
    int n_categories = 0;
    Index n_points = 0;
};

struct FardiffResult {
    DiffusionEmbedding embedding;
    ArtModel model;
    Assignment assignment;
    RunReport report;
};

/// affinity -> Markov normalization -> eigendecomposition -> embedding ->
/// min-max normalization -> Fuzzy ART training. Errors are rethrown as
/// fardiff::Error tagged with the failing stage name.
FardiffResult fardiff_cluster(const DataSet& data, const FardiffConfig& config);

}  // namespace fardiff
