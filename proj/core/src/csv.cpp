#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "fardiff/dataset.hpp"
#include "fardiff/error.hpp"

namespace fardiff {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return cells;
}

std::string where(std::string_view source, std::size_t line, std::size_t column) {
    std::ostringstream os;
    os << source << ": row " << line << ", column " << column + 1;
    return os.str();
}

double parse_real(std::string_view cell, std::string_view source, std::size_t line, std::size_t column) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    if (!cell.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (cell.empty() || ec != std::errc{} || ptr != last) {
        throw InputError(where(source, line, column) + ": cannot parse '" + std::string(cell) +
                         "' as a number");
    }
    if (!std::isfinite(value)) {
        throw InputError(where(source, line, column) + ": non-finite value '" + std::string(cell) + "'");
    }
    return value;
}

int parse_label(std::string_view cell, std::string_view source, std::size_t line, std::size_t column) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || value < 0) {
        throw InputError(where(source, line, column) + ": label '" + std::string(cell) +
                         "' is not a non-negative integer");
    }
    return value;
}

}  // namespace

DataSet parse_csv(std::istream& in, const CsvOptions& options, std::string_view source) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> arity;
    std::optional<std::size_t> label_col;
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::vector<std::string> ids;
    bool header_pending = options.has_header;

    auto resolve_label_by_index = [&](std::size_t width) {
        if (!options.label_column || label_col) return;
        const auto& spec = *options.label_column;
        std::size_t index = 0;
        const auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), index);
        if (ec != std::errc{} || ptr != spec.data() + spec.size() || index >= width) {
            throw InputError(std::string(source) + ": label column '" + spec +
                             "' is not a valid column index (no header row)");
        }
        label_col = index;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line);
        if (arity && cells.size() != *arity) {
            throw InputError(std::string(source) + ": row " + std::to_string(line_no) + " has " +
                             std::to_string(cells.size()) + " fields, expected " + std::to_string(*arity));
        }
        arity = cells.size();
        if (header_pending) {
            header_pending = false;
            if (options.label_column) {
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c] == *options.label_column) label_col = c;
                }
                if (!label_col) {
                    throw InputError(std::string(source) + ": no column named '" + *options.label_column +
                                     "' in header");
                }
            }
            continue;
        }
        resolve_label_by_index(cells.size());
        if (options.id_column && label_col == std::size_t{0}) {
            throw InputError(std::string(source) + ": label column cannot also be the id column");
        }
        std::vector<double> row;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (options.id_column && c == 0) {
                ids.emplace_back(cells[c]);
            } else if (label_col && c == *label_col) {
                labels.push_back(parse_label(cells[c], source, line_no, c));
            } else {
                row.push_back(parse_real(cells[c], source, line_no, c));
            }
        }
        if (row.empty()) {
            throw InputError(std::string(source) + ": row " + std::to_string(line_no) +
                             " has no numeric columns");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw InputError(std::string(source) + ": no data rows");
    }

    RowMatrix points(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            points(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
        }
    }
    std::optional<std::vector<int>> label_out;
    if (label_col) label_out = std::move(labels);
    std::optional<std::vector<std::string>> id_out;
    if (options.id_column) id_out = std::move(ids);
    return DataSet(std::move(points), std::move(label_out), std::move(id_out));
}

DataSet load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open input file '" + path.string() + "'");
    }
    return parse_csv(in, options, path.string());
}

void save_csv(const DataSet& data, std::ostream& out) {
    const auto& ids = data.ids();
    const auto& labels = data.labels();
    if (ids) out << "id,";
    for (Index j = 0; j < data.dim(); ++j) {
        out << (j ? "," : "") << 'x' << j;
    }
    if (labels) out << ",label";
    out << '\n';
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (Index i = 0; i < data.size(); ++i) {
        const auto row = static_cast<std::size_t>(i);
        if (ids) out << (*ids)[row] << ',';
        for (Index j = 0; j < data.dim(); ++j) {
            out << (j ? "," : "") << data.points()(i, j);
        }
        if (labels) out << ',' << (*labels)[row];
        out << '\n';
    }
}

void save_csv(const DataSet& data, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open output file '" + path.string() + "'");
    }
    save_csv(data, out);
}

}  // namespace fardiff
