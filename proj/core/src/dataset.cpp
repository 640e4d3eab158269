#include "fardiff/dataset.hpp"

#include <cmath>
#include <string>

#include "fardiff/error.hpp"

namespace fardiff {

DataSet::DataSet(RowMatrix points, std::optional<std::vector<int>> labels,
                 std::optional<std::vector<std::string>> ids)
    : points_(std::move(points)), labels_(std::move(labels)), ids_(std::move(ids)) {
    if (points_.rows() < 1 || points_.cols() < 1) {
        throw InputError("data set must have at least one row and one column (got " +
                         std::to_string(points_.rows()) + "x" + std::to_string(points_.cols()) + ")");
    }
    for (Index i = 0; i < points_.rows(); ++i) {
        for (Index j = 0; j < points_.cols(); ++j) {
            if (!std::isfinite(points_(i, j))) {
                throw InputError("non-finite coordinate at row " + std::to_string(i) + ", column " +
                                 std::to_string(j));
            }
        }
    }
    const auto n = static_cast<std::size_t>(points_.rows());
    if (labels_) {
        if (labels_->size() != n) {
            throw InputError("label count " + std::to_string(labels_->size()) +
                             " does not match row count " + std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if ((*labels_)[i] < 0) {
                throw InputError("negative label at row " + std::to_string(i));
            }
        }
    }
    if (ids_ && ids_->size() != n) {
        throw InputError("id count " + std::to_string(ids_->size()) + " does not match row count " +
                         std::to_string(n));
    }
}

DataSet DataSet::with_points(RowMatrix points) const {
    if (points.rows() != points_.rows()) {
        throw InputError("replacement points must keep the row count");
    }
    return DataSet(std::move(points), labels_, ids_);
}

RowMatrix minmax_normalize(const RowMatrix& points) {
    RowMatrix out(points.rows(), points.cols());
    for (Index j = 0; j < points.cols(); ++j) {
        const double lo = points.col(j).minCoeff();
        const double hi = points.col(j).maxCoeff();
        const double range = hi - lo;
        for (Index i = 0; i < points.rows(); ++i) {
            out(i, j) = range > 0.0 ? (points(i, j) - lo) / range : 0.5;
        }
    }
    return out;
}

DataSet minmax_normalize(const DataSet& data) {
    return data.with_points(minmax_normalize(data.points()));
}

}  // namespace fardiff
