#include "skm/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace skm {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, delim)) out.push_back(field);
    if (!line.empty() && line.back() == delim) out.emplace_back();
    return out;
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col) {
    const std::string s = trim(raw);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << "unparseable numeric cell '" << s << "' at row " << row + 1 << ", column "
            << col + 1;
        throw std::runtime_error(msg.str());
    }
    return v;
}

// Shortest representation that round-trips through double.
std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

LabeledDataset load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");

    LabeledDataset ds;
    std::unordered_map<std::string, int> class_ids;
    std::vector<double> row_values;
    std::string line;
    std::size_t line_no = 0, expected_fields = 0, data_rows = 0;
    bool header_pending = schema.has_header;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        const auto fields = split(line, schema.delimiter);
        if (expected_fields == 0) {
            expected_fields = fields.size();
            if (schema.label_column < 0 ||
                static_cast<std::size_t>(schema.label_column) >= expected_fields)
                throw std::runtime_error("label column out of range for '" + path + "'");
        } else if (fields.size() != expected_fields) {
            std::ostringstream msg;
            msg << "row " << line_no << " has " << fields.size() << " fields, expected "
                << expected_fields;
            throw std::runtime_error(msg.str());
        }

        row_values.clear();
        int label = -1;
        for (std::size_t col = 0; col < fields.size(); ++col) {
            const int c = static_cast<int>(col);
            if (std::find(schema.drop_columns.begin(), schema.drop_columns.end(), c) !=
                schema.drop_columns.end())
                continue;
            if (c == schema.label_column) {
                const std::string name = trim(fields[col]);
                auto [it, inserted] = class_ids.try_emplace(name, static_cast<int>(ds.class_names.size()));
                if (inserted) ds.class_names.push_back(name);
                label = it->second;
            } else {
                row_values.push_back(parse_cell(fields[col], data_rows, col));
            }
        }

        if (ds.data.cols == 0) ds.data.cols = row_values.size();
        ds.data.values.insert(ds.data.values.end(), row_values.begin(), row_values.end());
        ds.labels.push_back(label);
        ++data_rows;
    }

    if (data_rows == 0) throw std::runtime_error("empty file '" + path + "'");
    ds.data.rows = data_rows;
    return ds;
}

void save_csv(const LabeledDataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    for (std::size_t i = 0; i < ds.data.rows; ++i) {
        for (std::size_t j = 0; j < ds.data.cols; ++j) out << format_double(ds.data(i, j)) << ',';
        out << ds.class_names[ds.labels[i]] << '\n';
    }
}

LabeledDataset standardize(const LabeledDataset& ds, Preprocess mode) {
    if (mode == Preprocess::none) return ds;
    LabeledDataset out = ds;
    const std::size_t n = ds.data.rows, d = ds.data.cols;
    for (std::size_t j = 0; j < d; ++j) {
        double lo = ds.data(0, j), hi = lo, sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = ds.data(i, j);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
        if (mode == Preprocess::minmax) {
            const double range = hi - lo;
            for (std::size_t i = 0; i < n; ++i)
                out.data(i, j) = range > 0.0 ? (ds.data(i, j) - lo) / range : 0.0;
        } else {
            const double mean = sum / static_cast<double>(n);
            double var = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double c = ds.data(i, j) - mean;
                var += c * c;
            }
            var /= static_cast<double>(n);  // population convention
            const double sd = std::sqrt(var);
            for (std::size_t i = 0; i < n; ++i)
                out.data(i, j) = sd > 0.0 ? (ds.data(i, j) - mean) / sd : 0.0;
        }
    }
    return out;
}

BoundingBox bounding_box(const Matrix& m) {
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("bounding_box: empty matrix");
    BoundingBox box;
    box.lower.assign(m.row(0).begin(), m.row(0).end());
    box.upper = box.lower;
    for (std::size_t i = 1; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            box.lower[j] = std::min(box.lower[j], m(i, j));
            box.upper[j] = std::max(box.upper[j], m(i, j));
        }
    return box;
}

Preprocess parse_preprocess(const std::string& name) {
    if (name == "none") return Preprocess::none;
    if (name == "zscore") return Preprocess::zscore;
    if (name == "minmax") return Preprocess::minmax;
    throw std::invalid_argument("unknown preprocessing mode '" + name + "'");
}

std::string to_string(Preprocess mode) {
    switch (mode) {
        case Preprocess::none: return "none";
        case Preprocess::zscore: return "zscore";
        case Preprocess::minmax: return "minmax";
    }
    return "?";
}

CsvSchema iris_schema() {
    CsvSchema s;
    s.label_column = 4;
    return s;
}

CsvSchema wine_schema() {
    CsvSchema s;
    s.label_column = 0;
    return s;
}

CsvSchema glass_schema() {
    CsvSchema s;
    s.label_column = 10;
    s.drop_columns = {0};  // running ID
    return s;
}

LabeledDataset load_named_dataset(const std::string& name, const std::string& data_dir,
                                  const std::optional<CsvSchema>& fallback) {
    namespace fs = std::filesystem;
    const std::unordered_map<std::string, CsvSchema> builtins = {
        {"iris", iris_schema()}, {"wine", wine_schema()}, {"glass", glass_schema()}};
    if (auto it = builtins.find(name); it != builtins.end()) {
        const fs::path p = fs::path(data_dir) / (name + ".csv");
        if (!fs::exists(p))
            throw std::runtime_error("builtin dataset '" + name + "' needs " + p.string() +
                                     "; see README for where to obtain it");
        return load_csv(p.string(), it->second);
    }
    return load_csv(name, fallback.value_or(iris_schema()));
}

}  // namespace skm
