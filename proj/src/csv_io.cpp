#include "ckc/csv_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace ckc {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

[[noreturn]] void parse_fail(const std::string& path, int row, int col, const std::string& what) {
    throw Error(ErrorCode::ParseError,
                path + ": row " + std::to_string(row) + ", col " + std::to_string(col) + ": " + what);
}

double parse_double(const std::string& field, const std::string& path, int row, int col) {
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        parse_fail(path, row, col, "not a number: '" + field + "'");
    }
    if (used != field.size()) parse_fail(path, row, col, "trailing characters in '" + field + "'");
    return v;
}

int parse_int(const std::string& field, const std::string& path, int row, int col) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(field, &used);
    } catch (const std::exception&) {
        parse_fail(path, row, col, "not an integer: '" + field + "'");
    }
    if (used != field.size()) parse_fail(path, row, col, "trailing characters in '" + field + "'");
    return v;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    return out;
}

Matrix parse_numeric_rows(const std::vector<std::string>& lines, int first_row,
                          const std::string& path) {
    const int n = static_cast<int>(lines.size()) - first_row;
    if (n < 1) throw Error(ErrorCode::TooFewRows, path + ": no data rows");
    const int m = static_cast<int>(split_fields(lines[first_row]).size());
    Matrix out(n, m);
    for (int r = 0; r < n; ++r) {
        const auto fields = split_fields(lines[first_row + r]);
        if (static_cast<int>(fields.size()) != m)
            parse_fail(path, first_row + r + 1, 1,
                       "expected " + std::to_string(m) + " fields, got " + std::to_string(fields.size()));
        for (int c = 0; c < m; ++c) out(r, c) = parse_double(fields[c], path, first_row + r + 1, c + 1);
    }
    return out;
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Table load_table_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw Error(ErrorCode::TooFewRows, path + ": empty file");
    Table t;
    t.header = split_fields(lines[0]);
    t.values = parse_numeric_rows(lines, 1, path);
    if (static_cast<int>(t.header.size()) != t.values.cols())
        parse_fail(path, 1, 1, "header width does not match body width");
    return t;
}

Matrix load_samples_csv(const std::string& path) {
    Matrix m = load_table_csv(path).values;
    if (m.rows() < 4) throw Error(ErrorCode::TooFewRows, path + ": need at least 4 data rows");
    if (m.cols() < 2) throw Error(ErrorCode::ParseError, path + ": need at least 2 columns");
    return m;
}

void write_samples_csv(const std::string& path, const Matrix& samples) {
    auto out = open_out(path);
    for (int c = 0; c < samples.cols(); ++c) out << (c ? ",x" : "x") << (c + 1);
    out << '\n';
    for (int r = 0; r < samples.rows(); ++r) {
        for (int c = 0; c < samples.cols(); ++c) {
            if (c) out << ',';
            out << format_number(samples(r, c));
        }
        out << '\n';
    }
}

std::vector<int> load_labels_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty() || split_fields(lines[0]) != std::vector<std::string>{"label"})
        throw Error(ErrorCode::ParseError, path + ": expected header 'label'");
    std::vector<int> labels;
    for (size_t r = 1; r < lines.size(); ++r) {
        const auto fields = split_fields(lines[r]);
        if (fields.size() != 1) parse_fail(path, static_cast<int>(r) + 1, 1, "expected a single field");
        labels.push_back(parse_int(fields[0], path, static_cast<int>(r) + 1, 1));
    }
    if (labels.empty()) throw Error(ErrorCode::TooFewRows, path + ": no labels");
    return labels;
}

void write_labels_csv(const std::string& path, std::span<const int> labels) {
    auto out = open_out(path);
    out << "label\n";
    for (int v : labels) out << v << '\n';
}

Matrix load_matrix_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw Error(ErrorCode::TooFewRows, path + ": empty file");
    return parse_numeric_rows(lines, 0, path);
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
    auto out = open_out(path);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ',';
            out << format_number(m(r, c));
        }
        out << '\n';
    }
}

CausalGraph load_graph_csv(const std::string& path, int node_count) {
    const auto lines = read_lines(path);
    if (lines.empty() ||
        split_fields(lines[0]) != std::vector<std::string>{"parent", "child", "weight"})
        throw Error(ErrorCode::ParseError, path + ": expected header 'parent,child,weight'");
    CausalGraph g;
    int max_node = -1;
    for (size_t r = 1; r < lines.size(); ++r) {
        const auto fields = split_fields(lines[r]);
        if (fields.size() != 3) parse_fail(path, static_cast<int>(r) + 1, 1, "expected 3 fields");
        const int row = static_cast<int>(r) + 1;
        CausalGraph::Edge e;
        e.parent = parse_int(fields[0], path, row, 1);
        e.child = parse_int(fields[1], path, row, 2);
        e.weight = parse_double(fields[2], path, row, 3);
        if (e.parent < 0 || e.child < 0) parse_fail(path, row, 1, "negative node index");
        max_node = std::max({max_node, e.parent, e.child});
        g.edges.push_back(e);
    }
    g.node_count = node_count >= 0 ? node_count : max_node + 1;
    if (max_node >= g.node_count)
        throw Error(ErrorCode::IndexOutOfRange, path + ": edge references node beyond node_count");
    return g;
}

void write_graph_csv(const std::string& path, const CausalGraph& graph) {
    auto out = open_out(path);
    out << "parent,child,weight\n";
    for (const auto& e : graph.edges)
        out << e.parent << ',' << e.child << ',' << format_number(e.weight) << '\n';
}

std::vector<LongRecord> load_long_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty() ||
        split_fields(lines[0]) != std::vector<std::string>{"node_id", "group", "date", "value"})
        throw Error(ErrorCode::ParseError, path + ": expected header 'node_id,group,date,value'");
    std::vector<LongRecord> records;
    for (size_t r = 1; r < lines.size(); ++r) {
        const auto fields = split_fields(lines[r]);
        if (fields.size() != 4) parse_fail(path, static_cast<int>(r) + 1, 1, "expected 4 fields");
        const int row = static_cast<int>(r) + 1;
        LongRecord rec;
        rec.node_id = parse_int(fields[0], path, row, 1);
        rec.group = fields[1];
        rec.date = fields[2];
        rec.value = parse_double(fields[3], path, row, 4);
        records.push_back(rec);
    }
    if (records.empty()) throw Error(ErrorCode::TooFewRows, path + ": no records");
    return records;
}

SeriesBundle assemble_series(const std::vector<LongRecord>& records, const std::string& west_group,
                             const std::string& east_group) {
    // (group, node_id) -> date-sorted (date, value)
    std::map<std::pair<std::string, int>, std::map<std::string, double>> nodes;
    for (const auto& rec : records) {
        if (rec.group != west_group && rec.group != east_group)
            throw Error(ErrorCode::ParseError, "unknown group '" + rec.group + "'");
        if (rec.date.size() < 4)
            throw Error(ErrorCode::ParseError, "date '" + rec.date + "' too short for a year");
        nodes[{rec.group, rec.node_id}][rec.date] = rec.value;
    }

    SeriesBundle bundle;
    std::vector<std::string> dates;
    for (const auto& [key, by_date] : nodes) {
        std::vector<double> series;
        series.reserve(by_date.size());
        std::vector<std::string> node_dates;
        for (const auto& [date, value] : by_date) {
            node_dates.push_back(date);
            series.push_back(value);
        }
        if (dates.empty())
            dates = std::move(node_dates);
        else if (node_dates != dates)
            throw Error(ErrorCode::LengthMismatch, "nodes cover different date sets");
        (key.first == west_group ? bundle.west : bundle.east).push_back(std::move(series));
    }
    if (bundle.west.empty() || bundle.east.empty())
        throw Error(ErrorCode::EmptyInput, "both groups must contribute at least one node");

    bundle.year_of_t.reserve(dates.size());
    for (const auto& d : dates) {
        int year = 0;
        try {
            year = std::stoi(d.substr(0, 4));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "date '" + d + "' does not start with a year");
        }
        bundle.year_of_t.push_back(year);
    }
    return bundle;
}

}  // namespace ckc
