#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skm/matrix.hpp"

namespace skm {

/// How to read a delimited text file into numeric columns plus one label column.
/// Column indices refer to the file as written, before any drops.
struct CsvSchema {
    char delimiter = ',';
    bool has_header = false;
    int label_column = -1;             // index of the class label column
    std::vector<int> drop_columns;     // e.g. an ID column
};

struct LabeledDataset {
    Matrix data;
    std::vector<int> labels;               // class ids in [0, C), first-appearance order
    std::vector<std::string> class_names;  // size C

    std::size_t classes() const { return class_names.size(); }
    bool operator==(const LabeledDataset&) const = default;
};

enum class Preprocess { none, zscore, minmax };

/// Parse a labeled CSV file. Throws std::runtime_error with row/column context
/// on malformed numeric cells, inconsistent column counts, or an empty file.
LabeledDataset load_csv(const std::string& path, const CsvSchema& schema);

/// Write headerless comma-separated numeric columns followed by the class name.
/// Numeric formatting is shortest-round-trip, so load(save(ds)) == ds.
void save_csv(const LabeledDataset& ds, const std::string& path);

/// none: identity. zscore: per-column mean 0, population variance 1 (constant
/// columns map to 0). minmax: per-column [0,1] (constant columns map to 0).
LabeledDataset standardize(const LabeledDataset& ds, Preprocess mode);

/// Per-column min/max over all rows. Requires a nonempty matrix.
BoundingBox bounding_box(const Matrix& m);

Preprocess parse_preprocess(const std::string& name);
std::string to_string(Preprocess mode);

// Schemas for the bundled UCI files.
CsvSchema iris_schema();   // 4 numeric columns, label last
CsvSchema wine_schema();   // label first, 13 numeric columns
CsvSchema glass_schema();  // ID column dropped, 9 numeric columns, label last

/// Resolve a builtin dataset name (iris|wine|glass, looked up in data_dir) or
/// treat `name` as a path loaded with `fallback` (or iris-style schema if absent).
LabeledDataset load_named_dataset(const std::string& name, const std::string& data_dir,
                                  const std::optional<CsvSchema>& fallback = std::nullopt);

}  // namespace skm
