#include "fardiff/pipeline.hpp"

#include <utility>

#include "fardiff/error.hpp"

namespace fardiff {
namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        if (!e.stage().empty()) throw;
        throw Error(e.kind(), std::string(name) + ": " + e.what(), name);
    }
}

}  // namespace

FardiffResult fardiff_cluster(const DataSet& data, const FardiffConfig& config) {
    FardiffResult result;
    RunReport& report = result.report;
    report.t = config.t;
    report.dims = config.dims;
    report.skip_trivial = config.skip_trivial;
    report.art = config.art;
    report.n_points = data.size();

    stage("config", [&] {
        config.art.validate();
        if (config.t < 0) throw ParameterError("diffusion time t must be non-negative");
        const Index limit = data.size() - (config.skip_trivial ? 1 : 0);
        if (config.dims < 1 || config.dims > limit) {
            throw ParameterError("embedding dimension L=" + std::to_string(config.dims) + " must lie in [1, " +
                                 std::to_string(limit) + "] for N=" + std::to_string(data.size()));
        }
        return 0;
    });

    report.sigma = stage("sigma", [&] {
        if (config.sigma) return *config.sigma;
        report.sigma_from_median = true;
        // A single point has W = [1] for every width.
        return data.size() == 1 ? 1.0 : median_sigma(data);
    });

    const Matrix affinity = stage("affinity", [&] { return gaussian_affinity(data, report.sigma, config.threads); });
    const MarkovModel model = stage("markov", [&] { return markov_normalize(affinity, report.sigma); });
    const Spectrum spectrum = stage("spectrum", [&] { return spectral_decompose(model); });
    report.eigenvalues.assign(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());

    result.embedding = stage("embed", [&] { return embed(spectrum, config.t, config.dims, config.skip_trivial); });
    const RowMatrix unit = minmax_normalize(result.embedding.coords);

    TrainResult trained = stage("fuzzyart", [&] { return train(unit, config.art); });
    result.model = std::move(trained.model);
    result.assignment = std::move(trained.assignment);
    report.epochs = trained.epochs;
    report.converged = trained.converged;
    report.n_categories = result.assignment.n_categories;
    return result;
}

}  // namespace fardiff
