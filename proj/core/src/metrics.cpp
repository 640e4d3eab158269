#include "fardiff/metrics.hpp"

#include <algorithm>
#include <string>

#include "fardiff/error.hpp"

namespace fardiff {
namespace {

std::vector<int> distinct(std::span<const int> v) {
    std::vector<int> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t position(const std::vector<int>& sorted, int value) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

double pairs(long long n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

}  // namespace

ContingencyTable contingency(std::span<const int> pred, std::span<const int> truth) {
    if (pred.size() != truth.size()) {
        throw InputError("prediction has " + std::to_string(pred.size()) + " entries but reference has " +
                         std::to_string(truth.size()));
    }
    ContingencyTable table;
    table.categories = distinct(pred);
    table.labels = distinct(truth);
    table.counts.assign(table.categories.size(), std::vector<long long>(table.labels.size(), 0));
    for (std::size_t i = 0; i < pred.size(); ++i) {
        ++table.counts[position(table.categories, pred[i])][position(table.labels, truth[i])];
    }
    table.total = static_cast<long long>(pred.size());
    return table;
}

double adjusted_rand_index(std::span<const int> pred, std::span<const int> truth) {
    const ContingencyTable table = contingency(pred, truth);
    if (table.total < 2) throw InputError("adjusted Rand index needs at least two points");

    double index = 0.0;
    double row_sum = 0.0;
    std::vector<long long> col_totals(table.labels.size(), 0);
    for (const auto& row : table.counts) {
        long long row_total = 0;
        for (std::size_t c = 0; c < row.size(); ++c) {
            index += pairs(row[c]);
            row_total += row[c];
            col_totals[c] += row[c];
        }
        row_sum += pairs(row_total);
    }
    double col_sum = 0.0;
    for (long long c : col_totals) col_sum += pairs(c);

    const double expected = row_sum * col_sum / pairs(table.total);
    const double max_index = 0.5 * (row_sum + col_sum);
    if (max_index == expected) return 1.0;
    return (index - expected) / (max_index - expected);
}

double purity(std::span<const int> pred, std::span<const int> truth) {
    const ContingencyTable table = contingency(pred, truth);
    if (table.total < 1) throw InputError("purity needs at least one point");
    long long hits = 0;
    for (const auto& row : table.counts) hits += *std::max_element(row.begin(), row.end());
    return static_cast<double>(hits) / static_cast<double>(table.total);
}

}  // namespace fardiff
