#include "fardiff/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "fardiff/error.hpp"

namespace fardiff {
namespace {

double squared_distance(const RowMatrix& points, Index i, Index j) {
    double sum = 0.0;
    for (Index c = 0; c < points.cols(); ++c) {
        const double diff = points(i, c) - points(j, c);
        sum += diff * diff;
    }
    return sum;
}

double ipow(double base, int exponent) {
    double out = 1.0;
    for (int e = 0; e < exponent; ++e) out *= base;
    return out;
}

void check_index(const MarkovModel& model, Index i, Index j) {
    if (i < 0 || j < 0 || i >= model.size() || j >= model.size()) {
        throw ParameterError("point index out of range [0, " + std::to_string(model.size()) + ")");
    }
}

void check_time(int t) {
    if (t < 0) throw ParameterError("diffusion time t must be non-negative");
}

}  // namespace

Matrix gaussian_affinity(const RowMatrix& points, double sigma, unsigned threads) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("kernel width sigma must be a positive finite number");
    }
    if (!points.allFinite()) {
        throw InputError("non-finite coordinates in affinity input");
    }
    const Index n = points.rows();
    const double inv_sigma_sq = 1.0 / (sigma * sigma);
    Matrix w(n, n);

    // Upper triangle by interleaved rows, mirrored afterwards.
    auto fill_rows = [&](unsigned worker, unsigned stride) {
        for (Index i = worker; i < n; i += stride) {
            w(i, i) = 1.0;
            for (Index j = i + 1; j < n; ++j) {
                w(i, j) = std::exp(-squared_distance(points, i, j) * inv_sigma_sq);
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<Index>(n, 1))));
    if (workers == 1) {
        fill_rows(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned k = 0; k < workers; ++k) pool.emplace_back(fill_rows, k, workers);
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) w(j, i) = w(i, j);
    }
    return w;
}

Matrix gaussian_affinity(const DataSet& data, double sigma, unsigned threads) {
    return gaussian_affinity(data.points(), sigma, threads);
}

double median_sigma(const DataSet& data) {
    const Index n = data.size();
    if (n < 2) {
        throw ParameterError("median sigma needs at least two points; pass sigma explicitly");
    }
    std::vector<double> dist;
    dist.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) dist.push_back(std::sqrt(squared_distance(data.points(), i, j)));
    }
    auto median_of = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        const std::size_t mid = v.size() / 2;
        return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
    };
    double median = median_of(dist);
    if (median > 0.0) return median;

    // Mostly duplicates: fall back to the median of the non-zero distances.
    std::erase_if(dist, [](double d) { return d == 0.0; });
    if (dist.empty()) {
        throw ParameterError("all points are identical; the median distance is zero, pass sigma explicitly");
    }
    return median_of(dist);
}

MarkovModel markov_normalize(const Matrix& affinity, double sigma) {
    const Index n = affinity.rows();
    if (n < 1 || affinity.cols() != n) {
        throw InputError("affinity matrix must be square and non-empty");
    }
    for (Index i = 0; i < n; ++i) {
        if (affinity(i, i) != 1.0) throw InputError("affinity matrix must have a unit diagonal");
        for (Index j = 0; j < n; ++j) {
            if (!(affinity(i, j) >= 0.0) || affinity(i, j) != affinity(j, i)) {
                throw InputError("affinity matrix must be symmetric with non-negative entries");
            }
        }
    }
    MarkovModel model;
    model.affinity = affinity;
    model.sigma = sigma;
    model.degree.resize(n);
    model.transition.resize(n, n);
    for (Index i = 0; i < n; ++i) {
        double d = 0.0;
        for (Index j = 0; j < n; ++j) d += affinity(i, j);
        model.degree(i) = d;
        for (Index j = 0; j < n; ++j) model.transition(i, j) = affinity(i, j) / d;
    }
    return model;
}

Spectrum spectral_decompose(const MarkovModel& model) {
    const Index n = model.size();
    Spectrum spectrum;
    spectrum.degree_sqrt = model.degree.cwiseSqrt();

    Matrix conj(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            const double v = model.affinity(i, j) / (spectrum.degree_sqrt(i) * spectrum.degree_sqrt(j));
            conj(i, j) = v;
            conj(j, i) = v;
        }
    }

    Eigen::SelfAdjointEigenSolver<Matrix> solver(conj);
    if (solver.info() != Eigen::Success) {
        const Matrix residual = conj * solver.eigenvectors() -
                                solver.eigenvectors() * solver.eigenvalues().asDiagonal();
        const double r = residual.cwiseAbs().maxCoeff();
        throw NumericError("symmetric eigensolver did not converge (residual " + std::to_string(r) + ")", r);
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    const Vector& values = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return values(a) > values(b); });

    spectrum.eigenvalues.resize(n);
    spectrum.right_vectors.resize(n, n);
    for (Index k = 0; k < n; ++k) {
        const Index src = order[static_cast<std::size_t>(k)];
        spectrum.eigenvalues(k) = values(src);
        auto phi = spectrum.right_vectors.col(k);
        phi = solver.eigenvectors().col(src).cwiseQuotient(spectrum.degree_sqrt);
        Index lead = 0;
        for (Index i = 1; i < n; ++i) {
            if (std::abs(phi(i)) > std::abs(phi(lead))) lead = i;
        }
        if (phi(lead) < 0.0) phi = -phi;
    }
    return spectrum;
}

double spectral_residual(const MarkovModel& model, const Spectrum& spectrum) {
    const Matrix r = model.transition * spectrum.right_vectors -
                     spectrum.right_vectors * spectrum.eigenvalues.asDiagonal();
    return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
}

Spectrum stationary_normalized(const Spectrum& spectrum) {
    Spectrum out = spectrum;
    out.right_vectors *= std::sqrt(spectrum.degree_sqrt.squaredNorm());
    return out;
}

DiffusionEmbedding embed(const Spectrum& spectrum, int t, Index dims, bool skip_trivial) {
    check_time(t);
    const Index n = spectrum.size();
    const Index first = skip_trivial ? 1 : 0;
    if (dims < 1 || first + dims > n) {
        throw ParameterError("embedding dimension L=" + std::to_string(dims) + " out of range [1, " +
                             std::to_string(n - first) + "]" + (skip_trivial ? " with skip_trivial" : ""));
    }
    DiffusionEmbedding out;
    out.t = t;
    out.dims = dims;
    out.skip_trivial = skip_trivial;
    out.coords.resize(n, dims);
    for (Index c = 0; c < dims; ++c) {
        const Index k = first + c;
        const double scale = ipow(spectrum.eigenvalues(k), t);
        for (Index i = 0; i < n; ++i) out.coords(i, c) = scale * spectrum.right_vectors(i, k);
    }
    return out;
}

double embedding_distance(const DiffusionEmbedding& embedding, Index i, Index j) {
    const Index n = embedding.coords.rows();
    if (i < 0 || j < 0 || i >= n || j >= n) {
        throw ParameterError("point index out of range [0, " + std::to_string(n) + ")");
    }
    return (embedding.coords.row(i) - embedding.coords.row(j)).norm();
}

Matrix transition_power(const MarkovModel& model, int t) {
    check_time(t);
    if (t == 0) return Matrix::Identity(model.size(), model.size());
    Matrix out = model.transition;
    for (int step = 1; step < t; ++step) out = (out * model.transition).eval();
    return out;
}

namespace {

double row_distance(const Matrix& pt, Index i, Index j, const Vector* weights) {
    double sum = 0.0;
    for (Index x = 0; x < pt.cols(); ++x) {
        const double diff = pt(i, x) - pt(j, x);
        sum += weights ? diff * diff * (*weights)(x) : diff * diff;
    }
    return std::sqrt(sum);
}

Vector inverse_stationary(const MarkovModel& model) {
    const double total = model.degree.sum();
    return model.degree.cwiseInverse() * total;
}

Matrix all_pairs(const Matrix& pt, const Vector* weights) {
    const Index n = pt.rows();
    Matrix out = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            out(i, j) = row_distance(pt, i, j, weights);
            out(j, i) = out(i, j);
        }
    }
    return out;
}

}  // namespace

double diffusion_distance_bruteforce(const MarkovModel& model, int t, Index i, Index j) {
    check_index(model, i, j);
    return row_distance(transition_power(model, t), i, j, nullptr);
}

double weighted_diffusion_distance_bruteforce(const MarkovModel& model, int t, Index i, Index j) {
    check_index(model, i, j);
    const Vector weights = inverse_stationary(model);
    return row_distance(transition_power(model, t), i, j, &weights);
}

Matrix diffusion_distances_bruteforce(const MarkovModel& model, int t) {
    return all_pairs(transition_power(model, t), nullptr);
}

Matrix weighted_diffusion_distances_bruteforce(const MarkovModel& model, int t) {
    const Vector weights = inverse_stationary(model);
    return all_pairs(transition_power(model, t), &weights);
}

}  // namespace fardiff
