#pragma once

#include <cstddef>

#include "fardiff/dataset.hpp"
#include "fardiff/types.hpp"

namespace fardiff {

/// Affinity W, degrees d and the row-stochastic transition matrix P = D^-1 W.
struct MarkovModel {
    Matrix affinity;
    Vector degree;
    Matrix transition;
    double sigma = 0.0;

    Index size() const noexcept { return transition.rows(); }
};

/// Right eigenvectors of P (column k is Phi_k) with eigenvalues sorted
/// descending. `degree_sqrt` is d^(1/2), the conjugation that maps the
/// orthonormal eigenvectors u_k of D^-1/2 W D^-1/2 onto Phi_k = D^-1/2 u_k.
struct Spectrum {
    Vector eigenvalues;
    Matrix right_vectors;
    Vector degree_sqrt;

    Index size() const noexcept { return eigenvalues.size(); }
};

struct DiffusionEmbedding {
    RowMatrix coords;
    int t = 1;
    Index dims = 2;
    bool skip_trivial = false;
};

/// W(i,j) = exp(-|x_i - x_j|^2 / sigma^2). Rows are split across
/// `threads` workers; every entry is computed by the same arithmetic, so
/// the result does not depend on the thread count.
Matrix gaussian_affinity(const DataSet& data, double sigma, unsigned threads = 1);
Matrix gaussian_affinity(const RowMatrix& points, double sigma, unsigned threads = 1);

/// Median of the N(N-1)/2 pairwise Euclidean distances.
double median_sigma(const DataSet& data);

MarkovModel markov_normalize(const Matrix& affinity, double sigma = 0.0);

Spectrum spectral_decompose(const MarkovModel& model);

/// max_k |P Phi_k - lambda_k Phi_k|_inf
double spectral_residual(const MarkovModel& model, const Spectrum& spectrum);

/// Rescales eigenvectors so that sum_x pi(x) Phi_k(x)^2 = 1 for the
/// stationary distribution pi = d / sum(d).
Spectrum stationary_normalized(const Spectrum& spectrum);

/// Row i = (lambda_k^t Phi_k(i)) over the top `dims` eigen-indices,
/// starting at index 1 instead of 0 when `skip_trivial` is set.
DiffusionEmbedding embed(const Spectrum& spectrum, int t, Index dims, bool skip_trivial = false);

double embedding_distance(const DiffusionEmbedding& embedding, Index i, Index j);

/// P^t by repeated dense multiplication (t = 0 gives the identity). Row i
/// is the full diffusion coordinate vector of point i.
Matrix transition_power(const MarkovModel& model, int t);

/// sqrt(sum_x |P^t(i,x) - P^t(j,x)|^2), computed from transition_power.
double diffusion_distance_bruteforce(const MarkovModel& model, int t, Index i, Index j);

/// Same as above with each squared term weighted by sum(d) / d(x). This
/// is the norm in which the full-spectrum embedding distance is exact.
double weighted_diffusion_distance_bruteforce(const MarkovModel& model, int t, Index i, Index j);

/// All-pairs versions sharing one P^t.
Matrix diffusion_distances_bruteforce(const MarkovModel& model, int t);
Matrix weighted_diffusion_distances_bruteforce(const MarkovModel& model, int t);

}  // namespace fardiff
