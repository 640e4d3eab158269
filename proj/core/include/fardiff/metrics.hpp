#pragma once

#include <span>
#include <vector>

namespace fardiff {

/// counts(k, c): points with predicted category k and reference label c.
/// Rows and columns are the distinct values of each labelling in
/// ascending order.
struct ContingencyTable {
    std::vector<int> categories;
    std::vector<int> labels;
    std::vector<std::vector<long long>> counts;
    long long total = 0;
};

ContingencyTable contingency(std::span<const int> pred, std::span<const int> truth);

/// Adjusted Rand index under the permutation model. Returns 1.0 when both
/// labellings are the same degenerate partition (all-one or all-singleton).
double adjusted_rand_index(std::span<const int> pred, std::span<const int> truth);

/// (1/N) sum_k max_c counts(k, c).
double purity(std::span<const int> pred, std::span<const int> truth);

}  // namespace fardiff
