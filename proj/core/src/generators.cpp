#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fardiff/dataset.hpp"
#include "fardiff/error.hpp"

namespace fardiff {
namespace {

void check_blob_spec(const BlobSpec& spec) {
    if (spec.k < 1) throw ParameterError("blobs: k must be >= 1");
    if (spec.n_per < 1) throw ParameterError("blobs: n_per must be >= 1");
    if (spec.m < 1) throw ParameterError("blobs: m must be >= 1");
    if (!(spec.spread > 0.0) || !std::isfinite(spec.spread)) throw ParameterError("blobs: spread must be > 0");
    if (!(spec.separation >= 0.0) || !std::isfinite(spec.separation)) {
        throw ParameterError("blobs: separation must be >= 0");
    }
}

// Rejection sampling in a cube; the cube doubles whenever a center cannot
// be placed after a fixed number of draws.
RowMatrix place_centers(const BlobSpec& spec, std::mt19937_64& rng) {
    RowMatrix centers(spec.k, spec.m);
    double side = std::max(spec.separation, 1.0) * (1.0 + std::ceil(std::pow(spec.k, 1.0 / spec.m)));
    const double min_sq = spec.separation * spec.separation;
    int placed = 0;
    while (placed < spec.k) {
        std::uniform_real_distribution<double> coord(0.0, side);
        bool ok = false;
        for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
            for (int d = 0; d < spec.m; ++d) centers(placed, d) = coord(rng);
            ok = true;
            for (int other = 0; other < placed && ok; ++other) {
                ok = (centers.row(placed) - centers.row(other)).squaredNorm() >= min_sq;
            }
        }
        if (ok) {
            ++placed;
        } else {
            side *= 2.0;
        }
    }
    return centers;
}

}  // namespace

RowMatrix blob_centers(const BlobSpec& spec) {
    check_blob_spec(spec);
    std::mt19937_64 rng(spec.seed);
    return place_centers(spec, rng);
}

DataSet generate_blobs(const BlobSpec& spec) {
    check_blob_spec(spec);
    std::mt19937_64 rng(spec.seed);
    const RowMatrix centers = place_centers(spec, rng);
    std::normal_distribution<double> gauss(0.0, spec.spread);

    const Index n = static_cast<Index>(spec.k) * spec.n_per;
    RowMatrix points(n, spec.m);
    std::vector<int> labels(static_cast<std::size_t>(n));
    Index row = 0;
    for (int c = 0; c < spec.k; ++c) {
        for (int p = 0; p < spec.n_per; ++p, ++row) {
            for (int d = 0; d < spec.m; ++d) points(row, d) = centers(c, d) + gauss(rng);
            labels[static_cast<std::size_t>(row)] = c;
        }
    }
    return DataSet(std::move(points), std::move(labels));
}

DataSet generate_rings(const RingSpec& spec) {
    if (spec.n_inner < 1 || spec.n_outer < 1) throw ParameterError("rings: point counts must be >= 1");
    if (!(spec.r_inner > 0.0) || !(spec.r_inner < spec.r_outer) || !std::isfinite(spec.r_outer)) {
        throw ParameterError("rings: require 0 < r_inner < r_outer");
    }
    if (!(spec.noise >= 0.0) || !std::isfinite(spec.noise)) throw ParameterError("rings: noise must be >= 0");

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const Index n = static_cast<Index>(spec.n_inner) + spec.n_outer;
    RowMatrix points(n, 2);
    std::vector<int> labels(static_cast<std::size_t>(n));
    Index row = 0;
    auto ring = [&](int count, double radius, int label) {
        const double phase = phase_dist(rng);
        for (int p = 0; p < count; ++p, ++row) {
            const double theta = phase + 2.0 * std::numbers::pi * p / count;
            const double r = spec.noise > 0.0 ? radius + spec.noise * gauss(rng) : radius;
            points(row, 0) = r * std::cos(theta);
            points(row, 1) = r * std::sin(theta);
            labels[static_cast<std::size_t>(row)] = label;
        }
    };
    ring(spec.n_inner, spec.r_inner, 0);
    ring(spec.n_outer, spec.r_outer, 1);
    return DataSet(std::move(points), std::move(labels));
}

}  // namespace fardiff
