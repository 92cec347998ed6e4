#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skm/dataset.hpp"
#include "skm/seeding.hpp"

namespace skm {

enum class Algorithm { kmeans, rs_kmeans, ds_kmeans, ids_kmeans };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm a);

enum class OutputFormat { markdown, csv, json };

OutputFormat parse_format(const std::string& name);

struct ExperimentConfig {
    std::string dataset = "iris";            // builtin name or CSV path
    std::string data_dir = "data";           // where builtin files live
    std::optional<CsvSchema> schema;         // for non-builtin paths
    Algorithm algorithm = Algorithm::kmeans;
    std::size_t k = 3;
    std::vector<std::uint64_t> seeds = {1};
    Preprocess preprocess = Preprocess::none;
    int depth = 3;
    std::uint64_t max_evals = 0;             // 0 = auto: 150*K*d + 1000
    int max_restarts = 5;
    double collapse_threshold = 0.0;         // <= 0 = auto: 1e-4 * box diameter
    double rs_step_scale = 0.0;              // <= 0 = auto: 5% of mean box width
    int final_max_iter = 300;
    OutputFormat format = OutputFormat::markdown;
    std::string out_path;                    // empty = stdout, no trace files
};

/// One row of a validity trace: indices of the partition after a final-phase
/// Lloyd assignment pass. Dunn can be undefined mid-run (NaN).
struct TraceRow {
    int iteration = 0;
    double sse = 0.0;
    double dunn = 0.0;
    double jagota = 0.0;
};

struct SeedRecord {
    std::uint64_t seed = 0;
    double sse = 0.0;
    double dunn = 0.0;
    double jagota = 0.0;
    double accuracy = 0.0;
    int lloyd_iterations = 0;            // final-phase Lloyd rounds
    std::uint64_t evaluations = 0;       // seeding-objective evaluations
    std::uint64_t search_loops = 0;      // optimizer iterations (l)
    int restarts = 0;
    std::uint64_t inner_lloyd_iterations = 0;
    std::uint64_t distance_computations = 0;
    double wall_seconds = 0.0;           // informational only, excluded from golden output
    std::vector<TraceRow> trace;
};

struct Aggregate {
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;  // population
    double best = 0.0;    // max for accuracy/dunn, min for sse/jagota/iterations
};

struct RunReport {
    ExperimentConfig config;
    std::size_t n = 0;  // objects
    std::size_t d = 0;  // attributes
    std::vector<SeedRecord> records;
    std::map<std::string, Aggregate> aggregates;  // keyed by metric name
};

/// Runs the configured pipeline once per seed. Deterministic per
/// (dataset, config, seed) apart from wall-clock fields.
RunReport run_experiment(const ExperimentConfig& cfg);

/// Aggregates recomputed from the per-seed records (used internally and by
/// self-consistency checks).
std::map<std::string, Aggregate> compute_aggregates(const std::vector<SeedRecord>& records);

struct ComparisonTable {
    std::string dataset;
    std::vector<std::string> columns;              // algorithm display names
    std::vector<std::string> metrics;              // row labels
    std::vector<std::vector<double>> cells;        // metrics x columns
    // Published Table-1 accuracy constants for GA/GKM/IGKM, transcribed not
    // reproduced; empty when the dataset has no published row.
    std::vector<std::pair<std::string, double>> published_accuracy;
};

/// Runs every config (all must share dataset and K) and tabulates
/// accuracy/Dunn/Jagota/median SSE/mean evaluations side by side.
ComparisonTable compare(const std::vector<ExperimentConfig>& cfgs);

/// Serialize a report. markdown/csv/json per cfg.format; trace files
/// (<stem>_trace_seed<seed>.csv) are written next to a file target.
void emit(const RunReport& report, OutputFormat format, const std::string& path);
std::string render_markdown(const RunReport& report);
std::string render_csv(const RunReport& report);
std::string render_json(const RunReport& report);  // schema-versioned
std::string render_markdown(const ComparisonTable& table);

struct CostSummary {
    std::uint64_t c = 0;  // attributes + 1
    std::uint64_t l = 0;  // simplex loops (median over seeds)
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::uint64_t depth = 0;
    double predicted_cost = 0.0;            // c*l*k*n*depth
    double measured_distance_mean = 0.0;    // distance computations per seed
    double measured_evaluations_mean = 0.0;
    std::uint64_t inner_lloyd_iterations_total = 0;
};

/// Empirical counters for the cost model of the seeded pipeline.
CostSummary cost_counters(const RunReport& report);

/// Flat key=value config file mirroring the CLI flags; '#' starts a comment.
/// `algo` may hold a comma-separated list (expanded into one config each).
std::vector<ExperimentConfig> parse_config_file(const std::string& path);

}  // namespace skm
