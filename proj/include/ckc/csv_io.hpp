#pragma once

#include <span>
#include <string>
#include <vector>

#include "ckc/graph_space.hpp"
#include "ckc/matrix.hpp"

namespace ckc {

/// Number formatted with 12 significant digits ("%.12g").
std::string format_number(double v);

struct Table {
    std::vector<std::string> header;
    Matrix values;
};

/// Generic numeric CSV with one header row (RFC-4180 subset, '.' decimal).
Table load_table_csv(const std::string& path);

/// Sample matrix: header row, numeric body, >= 4 rows and >= 2 columns.
Matrix load_samples_csv(const std::string& path);

/// Writes a sample matrix with header x1..xm.
void write_samples_csv(const std::string& path, const Matrix& samples);

/// Single-column CSV with header `label`, integer body.
std::vector<int> load_labels_csv(const std::string& path);
void write_labels_csv(const std::string& path, std::span<const int> labels);

/// Header-less numeric matrix (kernel matrices).
Matrix load_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const Matrix& m);

/// Edge list with header `parent,child,weight`. When node_count < 0 it is
/// inferred as max node index + 1.
CausalGraph load_graph_csv(const std::string& path, int node_count = -1);
void write_graph_csv(const std::string& path, const CausalGraph& graph);

/// Long-format time-series row: `node_id,group,date,value`.
struct LongRecord {
    int node_id = 0;
    std::string group;
    std::string date;  // YYYY-MM-DD
    double value = 0.0;
};

std::vector<LongRecord> load_long_csv(const std::string& path);

/// Wide series assembled from long-format rows: one series per node
/// (ascending node_id within each group), rows within a node ordered by
/// date, plus the per-time-step year parsed from the first four date
/// characters.
struct SeriesBundle {
    std::vector<std::vector<double>> west;
    std::vector<std::vector<double>> east;
    std::vector<int> year_of_t;
};

SeriesBundle assemble_series(const std::vector<LongRecord>& records, const std::string& west_group,
                             const std::string& east_group);

}  // namespace ckc
