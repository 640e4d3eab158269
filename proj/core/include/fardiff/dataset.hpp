#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fardiff/types.hpp"

namespace fardiff {

/// N points in m-dimensional space with optional class labels and row ids.
///
/// Construction validates the invariants (N >= 1, m >= 1, finite
/// coordinates, label/id lengths equal to N); afterwards the value is
/// immutable. Duplicate points are allowed.
class DataSet {
public:
    explicit DataSet(RowMatrix points,
                     std::optional<std::vector<int>> labels = std::nullopt,
                     std::optional<std::vector<std::string>> ids = std::nullopt);

    Index size() const noexcept { return points_.rows(); }
    Index dim() const noexcept { return points_.cols(); }

    const RowMatrix& points() const noexcept { return points_; }
    const std::optional<std::vector<int>>& labels() const noexcept { return labels_; }
    const std::optional<std::vector<std::string>>& ids() const noexcept { return ids_; }

    /// Same labels and ids, new coordinates (row count must match).
    DataSet with_points(RowMatrix points) const;

private:
    RowMatrix points_;
    std::optional<std::vector<int>> labels_;
    std::optional<std::vector<std::string>> ids_;
};

struct CsvOptions {
    bool has_header = false;
    /// Header name of the label column. Without a header, a 0-based column index.
    std::optional<std::string> label_column;
    /// First column holds row identifiers.
    bool id_column = false;
};

DataSet load_csv(const std::filesystem::path& path, const CsvOptions& options = {});
DataSet parse_csv(std::istream& in, const CsvOptions& options = {},
                  std::string_view source = "<stream>");

/// Writes `[id,]x0,...,x{m-1}[,label]` with a header row. Values are
/// printed with 17 significant digits so load_csv recovers them exactly.
void save_csv(const DataSet& data, std::ostream& out);
void save_csv(const DataSet& data, const std::filesystem::path& path);

struct BlobSpec {
    int k = 3;
    int n_per = 50;
    int m = 2;
    double spread = 0.1;
    double separation = 10.0;
    std::uint64_t seed = 42;
};

/// Centers used by generate_blobs for the same spec; rows are pairwise
/// at least `separation` apart.
RowMatrix blob_centers(const BlobSpec& spec);

/// Isotropic Gaussian clusters, `n_per` consecutive rows per cluster,
/// labelled with the generating cluster index.
DataSet generate_blobs(const BlobSpec& spec);

struct RingSpec {
    int n_inner = 100;
    int n_outer = 100;
    double r_inner = 1.0;
    double r_outer = 3.0;
    double noise = 0.05;
    std::uint64_t seed = 42;
};

/// Two concentric circles in the plane: inner rows first (label 0), then
/// outer rows (label 1). Angles are evenly spaced from a random phase;
/// the radius carries Gaussian noise.
DataSet generate_rings(const RingSpec& spec);

/// Per-column affine map onto [0,1]; zero-range columns map to 0.5.
RowMatrix minmax_normalize(const RowMatrix& points);
DataSet minmax_normalize(const DataSet& data);

}  // namespace fardiff
