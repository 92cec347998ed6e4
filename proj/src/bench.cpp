#include "skm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "skm/kmeans.hpp"
#include "skm/validity.hpp"

namespace skm {

namespace {

using json = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string>& metric_names() {
    static const std::vector<std::string> names = {
        "sse",        "dunn",         "jagota",
        "accuracy",   "lloyd_iterations", "evaluations",
        "search_loops", "restarts",   "inner_lloyd_iterations",
        "distance_computations"};
    return names;
}

double metric_value(const SeedRecord& r, const std::string& name) {
    if (name == "sse") return r.sse;
    if (name == "dunn") return r.dunn;
    if (name == "jagota") return r.jagota;
    if (name == "accuracy") return r.accuracy;
    if (name == "lloyd_iterations") return static_cast<double>(r.lloyd_iterations);
    if (name == "evaluations") return static_cast<double>(r.evaluations);
    if (name == "search_loops") return static_cast<double>(r.search_loops);
    if (name == "restarts") return static_cast<double>(r.restarts);
    if (name == "inner_lloyd_iterations") return static_cast<double>(r.inner_lloyd_iterations);
    if (name == "distance_computations") return static_cast<double>(r.distance_computations);
    throw std::logic_error("unknown metric " + name);
}

bool bigger_is_better(const std::string& metric) {
    return metric == "accuracy" || metric == "dunn";
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::uint64_t resolve_max_evals(const ExperimentConfig& cfg, std::size_t d) {
    if (cfg.max_evals > 0) return cfg.max_evals;
    return 150 * static_cast<std::uint64_t>(cfg.k * d) + 1000;
}

double mean_box_width(const BoundingBox& box) {
    double s = 0.0;
    for (std::size_t j = 0; j < box.dims(); ++j) s += box.upper[j] - box.lower[j];
    return box.dims() ? s / static_cast<double>(box.dims()) : 0.0;
}

double safe_dunn(const Matrix& points, const std::vector<int>& a) {
    try {
        return dunn_index(points, a);
    } catch (const std::domain_error&) {
        return kNaN;  // degenerate partition mid-run
    }
}

struct PipelineOutcome {
    Clustering clustering;
    std::uint64_t evaluations = 0;
    std::uint64_t search_loops = 0;
    int restarts = 0;
    std::uint64_t inner_lloyd_iterations = 0;
};

PipelineOutcome run_pipeline(const ExperimentConfig& cfg, const Matrix& points,
                             std::uint64_t seed, const LloydObserver& observer) {
    std::mt19937_64 rng(seed);
    PipelineOutcome out;
    const std::size_t d = points.cols;

    switch (cfg.algorithm) {
        case Algorithm::kmeans: {
            const Matrix init = forgy_init(points, cfg.k, rng);
            out.clustering = lloyd(points, init, cfg.final_max_iter, 0.0, observer);
            return out;
        }
        case Algorithm::rs_kmeans: {
            SeedingObjectiveStats stats;
            Objective obj = seeding_objective(points, cfg.k, cfg.depth, &stats);
            const BoundingBox box = bounding_box(points).tiled(cfg.k);
            RsConfig rs;
            rs.max_evals = resolve_max_evals(cfg, d);
            rs.step_scale =
                cfg.rs_step_scale > 0.0 ? cfg.rs_step_scale : 0.05 * mean_box_width(box);
            const std::vector<double> x0 = encode(forgy_init(points, cfg.k, rng));
            const OptimizerResult r = random_search(obj, x0, rs, rng);
            out.clustering = lloyd(points, decode(r.best_point, cfg.k, d), cfg.final_max_iter,
                                   0.0, observer);
            out.evaluations = r.evaluations;
            out.search_loops = r.iterations;
            out.inner_lloyd_iterations = stats.inner_lloyd_iterations;
            return out;
        }
        case Algorithm::ds_kmeans: {
            SeedingObjectiveStats stats;
            Objective obj = seeding_objective(points, cfg.k, cfg.depth, &stats);
            const BoundingBox box = bounding_box(points).tiled(cfg.k);
            DsConfig ds;
            ds.max_evals = resolve_max_evals(cfg, d);
            ds.collapse_threshold = cfg.collapse_threshold > 0.0 ? cfg.collapse_threshold
                                                                 : 1e-4 * box.diameter();
            const std::vector<double> x0 = encode(forgy_init(points, cfg.k, rng));
            std::vector<double> steps(box.dims());
            for (std::size_t j = 0; j < steps.size(); ++j) {
                const double w = box.upper[j] - box.lower[j];
                steps[j] = ds.initial_step * (w > 0.0 ? w : 1e-9);
            }
            Simplex s0 = init_simplex(obj, x0, steps);
            const OptimizerResult r = downhill_simplex(obj, std::move(s0), ds);
            out.clustering = lloyd(points, decode(r.best_point, cfg.k, d), cfg.final_max_iter,
                                   0.0, observer);
            out.evaluations = r.evaluations;
            out.search_loops = r.iterations;
            out.inner_lloyd_iterations = stats.inner_lloyd_iterations;
            return out;
        }
        case Algorithm::ids_kmeans: {
            SeedingConfig sc;
            sc.k = cfg.k;
            sc.depth = cfg.depth;
            sc.final_max_iter = cfg.final_max_iter;
            sc.ds.max_evals = resolve_max_evals(cfg, d);
            sc.ds.max_restarts = cfg.max_restarts;
            sc.ds.collapse_threshold = cfg.collapse_threshold;
            const SeedingResult r = simplex_seeded_kmeans(points, sc, rng, observer);
            out.clustering = r.clustering;
            out.evaluations = r.search.evaluations;
            out.search_loops = r.search.iterations;
            out.restarts = r.search.restarts;
            out.inner_lloyd_iterations = r.objective_stats.inner_lloyd_iterations;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

json record_to_json(const SeedRecord& r) {
    json j;
    j["seed"] = r.seed;
    j["sse"] = r.sse;
    j["dunn"] = r.dunn;
    j["jagota"] = r.jagota;
    j["accuracy"] = r.accuracy;
    j["lloyd_iterations"] = r.lloyd_iterations;
    j["evaluations"] = r.evaluations;
    j["search_loops"] = r.search_loops;
    j["restarts"] = r.restarts;
    j["inner_lloyd_iterations"] = r.inner_lloyd_iterations;
    j["distance_computations"] = r.distance_computations;
    j["wall_seconds"] = r.wall_seconds;
    json rows = json::array();
    for (const TraceRow& t : r.trace)
        rows.push_back({{"final_lloyd_iteration", t.iteration},
                        {"sse", t.sse},
                        {"dunn", t.dunn},
                        {"jagota", t.jagota}});
    j["trace"] = rows;
    return j;
}

double json_number(const json& j) {
    return j.is_null() ? kNaN : j.get<double>();
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
    if (name == "kmeans") return Algorithm::kmeans;
    if (name == "rs-kmeans") return Algorithm::rs_kmeans;
    if (name == "ds-kmeans") return Algorithm::ds_kmeans;
    if (name == "ids-kmeans") return Algorithm::ids_kmeans;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::kmeans: return "kmeans";
        case Algorithm::rs_kmeans: return "rs-kmeans";
        case Algorithm::ds_kmeans: return "ds-kmeans";
        case Algorithm::ids_kmeans: return "ids-kmeans";
    }
    return "?";
}

OutputFormat parse_format(const std::string& name) {
    if (name == "md" || name == "markdown") return OutputFormat::markdown;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

std::map<std::string, Aggregate> compute_aggregates(const std::vector<SeedRecord>& records) {
    std::map<std::string, Aggregate> out;
    if (records.empty()) return out;
    for (const std::string& name : metric_names()) {
        std::vector<double> v;
        v.reserve(records.size());
        for (const SeedRecord& r : records) v.push_back(metric_value(r, name));
        Aggregate a;
        a.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        a.median = median_of(v);
        double var = 0.0;
        for (double x : v) var += (x - a.mean) * (x - a.mean);
        a.stddev = std::sqrt(var / static_cast<double>(v.size()));
        a.best = bigger_is_better(name) ? *std::max_element(v.begin(), v.end())
                                        : *std::min_element(v.begin(), v.end());
        out[name] = a;
    }
    return out;
}

RunReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.seeds.empty()) throw std::invalid_argument("run_experiment: at least one seed");
    if (cfg.k < 1) throw std::invalid_argument("run_experiment: k must be >= 1");

    const LabeledDataset raw = load_named_dataset(cfg.dataset, cfg.data_dir, cfg.schema);
    const LabeledDataset ds = standardize(raw, cfg.preprocess);
    const Matrix& points = ds.data;

    RunReport report;
    report.config = cfg;
    report.n = points.rows;
    report.d = points.cols;

    for (const std::uint64_t seed : cfg.seeds) {
        SeedRecord rec;
        rec.seed = seed;
        std::vector<TraceRow> trace;
        const LloydObserver observer = [&](int iter, const std::vector<int>& a,
                                           const Matrix& centroids, double sse) {
            TraceRow row;
            row.iteration = iter;
            row.sse = sse;
            row.dunn = safe_dunn(points, a);
            row.jagota = jagota_index(points, a, centroids);
            trace.push_back(row);
        };

        const std::uint64_t dist0 = distance_evaluations();
        const auto t0 = std::chrono::steady_clock::now();
        const PipelineOutcome out = run_pipeline(cfg, points, seed, observer);
        const auto t1 = std::chrono::steady_clock::now();
        rec.distance_computations = distance_evaluations() - dist0;
        rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();

        rec.sse = out.clustering.sse;
        rec.lloyd_iterations = out.clustering.iterations;
        rec.evaluations = out.evaluations;
        rec.search_loops = out.search_loops;
        rec.restarts = out.restarts;
        rec.inner_lloyd_iterations = out.inner_lloyd_iterations;
        rec.dunn = safe_dunn(points, out.clustering.assignments);
        rec.jagota = jagota_index(points, out.clustering.assignments, out.clustering.centroids);
        rec.accuracy = cfg.k == ds.classes()
                           ? accuracy(confusion(out.clustering.assignments, ds.labels, cfg.k,
                                                ds.classes()))
                           : kNaN;
        rec.trace = std::move(trace);
        report.records.push_back(std::move(rec));
    }

    report.aggregates = compute_aggregates(report.records);
    return report;
}

ComparisonTable compare(const std::vector<ExperimentConfig>& cfgs) {
    if (cfgs.size() < 2) throw std::invalid_argument("compare: needs at least 2 configs");
    for (const auto& c : cfgs)
        if (c.dataset != cfgs.front().dataset || c.k != cfgs.front().k)
            throw std::invalid_argument("compare: configs must share dataset and K");

    ComparisonTable table;
    table.dataset = cfgs.front().dataset;
    table.metrics = {"accuracy (best)", "dunn (median)", "jagota (median)", "sse (median)",
                     "evaluations (mean)"};
    for (const auto& cfg : cfgs) {
        const RunReport r = run_experiment(cfg);
        table.columns.push_back(to_string(cfg.algorithm));
        const std::vector<double> col = {
            r.aggregates.at("accuracy").best, r.aggregates.at("dunn").median,
            r.aggregates.at("jagota").median, r.aggregates.at("sse").median,
            r.aggregates.at("evaluations").mean};
        if (table.cells.empty()) table.cells.assign(table.metrics.size(), {});
        for (std::size_t i = 0; i < col.size(); ++i) table.cells[i].push_back(col[i]);
    }

    // Table-1 reference accuracies; transcribed from the literature, never computed here.
    if (table.dataset == "iris")
        table.published_accuracy = {{"GA", 0.40}, {"GKM", 0.9267}, {"IGKM", 0.9267}};
    else if (table.dataset == "wine")
        table.published_accuracy = {{"GA", 0.4382}, {"GKM", 0.9831}, {"IGKM", 0.9831}};
    else if (table.dataset == "glass")
        table.published_accuracy = {{"GA", 0.2336}, {"GKM", 0.8131}, {"IGKM", 0.8131}};
    return table;
}

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    std::ostringstream ss;
    ss.precision(10);
    ss << v;
    return ss.str();
}

}  // namespace

std::string render_markdown(const RunReport& report) {
    std::ostringstream os;
    const auto& cfg = report.config;
    os << "# " << to_string(cfg.algorithm) << " on " << cfg.dataset << "\n\n";
    os << "objects: " << report.n << ", attributes: " << report.d << ", K: " << cfg.k
       << ", preprocessing: " << to_string(cfg.preprocess) << ", seeds: "
       << report.records.size() << "\n\n";

    os << "| seed |";
    for (const auto& m : metric_names()) os << ' ' << m << " |";
    os << "\n|" << std::string(6, '-') << '|';
    for (const auto& m : metric_names()) os << std::string(m.size() + 2, '-') << '|';
    os << '\n';
    for (const SeedRecord& r : report.records) {
        os << "| " << r.seed << " |";
        for (const auto& m : metric_names()) os << ' ' << fmt(metric_value(r, m)) << " |";
        os << '\n';
    }

    os << "\n| aggregate |";
    for (const auto& m : metric_names()) os << ' ' << m << " |";
    os << "\n|" << std::string(11, '-') << '|';
    for (const auto& m : metric_names()) os << std::string(m.size() + 2, '-') << '|';
    os << '\n';
    const std::vector<std::pair<std::string, double Aggregate::*>> kinds = {
        {"mean", &Aggregate::mean},
        {"median", &Aggregate::median},
        {"stddev", &Aggregate::stddev},
        {"best", &Aggregate::best}};
    for (const auto& [label, member] : kinds) {
        os << "| " << label << " |";
        for (const auto& m : metric_names()) os << ' ' << fmt(report.aggregates.at(m).*member) << " |";
        os << '\n';
    }
    return os.str();
}

std::string render_csv(const RunReport& report) {
    std::ostringstream os;
    os << "seed";
    for (const auto& m : metric_names()) os << ',' << m;
    os << ",wall_seconds,aggregate\n";
    for (const SeedRecord& r : report.records) {
        os << r.seed;
        for (const auto& m : metric_names()) os << ',' << fmt(metric_value(r, m));
        os << ',' << fmt(r.wall_seconds) << ",\n";
    }
    const std::vector<std::pair<std::string, double Aggregate::*>> kinds = {
        {"mean", &Aggregate::mean},
        {"median", &Aggregate::median},
        {"stddev", &Aggregate::stddev},
        {"best", &Aggregate::best}};
    for (const auto& [label, member] : kinds) {
        os << "";
        for (const auto& m : metric_names()) os << ',' << fmt(report.aggregates.at(m).*member);
        os << ",," << label << '\n';
    }
    return os.str();
}

std::string render_json(const RunReport& report) {
    const auto& cfg = report.config;
    json j;
    j["schema_version"] = 1;
    j["config"] = {{"dataset", cfg.dataset},
                   {"algorithm", to_string(cfg.algorithm)},
                   {"k", cfg.k},
                   {"seeds", cfg.seeds},
                   {"preprocess", to_string(cfg.preprocess)},
                   {"depth", cfg.depth},
                   {"max_evals", cfg.max_evals},
                   {"max_restarts", cfg.max_restarts},
                   {"collapse_threshold", cfg.collapse_threshold},
                   {"rs_step_scale", cfg.rs_step_scale},
                   {"final_max_iter", cfg.final_max_iter}};
    j["dataset"] = {{"n", report.n}, {"d", report.d}};
    json records = json::array();
    for (const SeedRecord& r : report.records) records.push_back(record_to_json(r));
    j["records"] = records;
    json aggs;
    for (const auto& [name, a] : report.aggregates)
        aggs[name] = {{"mean", a.mean}, {"median", a.median}, {"stddev", a.stddev},
                      {"best", a.best}};
    j["aggregates"] = aggs;
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("schema_version").get<int>() != 1)
        throw std::runtime_error("unsupported report schema version");
    RunReport report;
    const json& c = j.at("config");
    report.config.dataset = c.at("dataset").get<std::string>();
    report.config.algorithm = parse_algorithm(c.at("algorithm").get<std::string>());
    report.config.k = c.at("k").get<std::size_t>();
    report.config.seeds = c.at("seeds").get<std::vector<std::uint64_t>>();
    report.config.preprocess = parse_preprocess(c.at("preprocess").get<std::string>());
    report.config.depth = c.at("depth").get<int>();
    report.config.max_evals = c.at("max_evals").get<std::uint64_t>();
    report.config.max_restarts = c.at("max_restarts").get<int>();
    report.config.collapse_threshold = c.at("collapse_threshold").get<double>();
    report.config.rs_step_scale = c.at("rs_step_scale").get<double>();
    report.config.final_max_iter = c.at("final_max_iter").get<int>();
    report.n = j.at("dataset").at("n").get<std::size_t>();
    report.d = j.at("dataset").at("d").get<std::size_t>();
    for (const json& rj : j.at("records")) {
        SeedRecord r;
        r.seed = rj.at("seed").get<std::uint64_t>();
        r.sse = json_number(rj.at("sse"));
        r.dunn = json_number(rj.at("dunn"));
        r.jagota = json_number(rj.at("jagota"));
        r.accuracy = json_number(rj.at("accuracy"));
        r.lloyd_iterations = rj.at("lloyd_iterations").get<int>();
        r.evaluations = rj.at("evaluations").get<std::uint64_t>();
        r.search_loops = rj.at("search_loops").get<std::uint64_t>();
        r.restarts = rj.at("restarts").get<int>();
        r.inner_lloyd_iterations = rj.at("inner_lloyd_iterations").get<std::uint64_t>();
        r.distance_computations = rj.at("distance_computations").get<std::uint64_t>();
        r.wall_seconds = json_number(rj.at("wall_seconds"));
        for (const json& tj : rj.at("trace")) {
            TraceRow t;
            t.iteration = tj.at("final_lloyd_iteration").get<int>();
            t.sse = json_number(tj.at("sse"));
            t.dunn = json_number(tj.at("dunn"));
            t.jagota = json_number(tj.at("jagota"));
            r.trace.push_back(t);
        }
        report.records.push_back(std::move(r));
    }
    for (const auto& [name, aj] : j.at("aggregates").items()) {
        Aggregate a;
        a.mean = json_number(aj.at("mean"));
        a.median = json_number(aj.at("median"));
        a.stddev = json_number(aj.at("stddev"));
        a.best = json_number(aj.at("best"));
        report.aggregates[name] = a;
    }
    return report;
}

std::string render_markdown(const ComparisonTable& table) {
    std::ostringstream os;
    os << "# Comparison on " << table.dataset << "\n\n| metric |";
    for (const auto& c : table.columns) os << ' ' << c << " |";
    os << "\n|--------|";
    for (const auto& c : table.columns) os << std::string(c.size() + 2, '-') << '|';
    os << '\n';
    for (std::size_t i = 0; i < table.metrics.size(); ++i) {
        os << "| " << table.metrics[i] << " |";
        for (double v : table.cells[i]) os << ' ' << fmt(v) << " |";
        os << '\n';
    }
    if (!table.published_accuracy.empty()) {
        os << "\nPublished accuracies (published, not reproduced):\n\n";
        os << "| algorithm | accuracy |\n|-----------|----------|\n";
        for (const auto& [name, v] : table.published_accuracy)
            os << "| " << name << " | " << fmt(v) << " |\n";
    }
    return os.str();
}

void emit(const RunReport& report, OutputFormat format, const std::string& path) {
    std::string body;
    switch (format) {
        case OutputFormat::markdown: body = render_markdown(report); break;
        case OutputFormat::csv: body = render_csv(report); break;
        case OutputFormat::json: body = render_json(report); break;
    }
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << body;

    const std::filesystem::path p(path);
    const std::filesystem::path dir = p.parent_path();
    const std::string stem = p.stem().string();
    for (const SeedRecord& r : report.records) {
        std::ostringstream name;
        name << stem << "_trace_seed" << r.seed << ".csv";
        std::ofstream tf(dir.empty() ? name.str() : (dir / name.str()).string());
        if (!tf) throw std::runtime_error("cannot write trace file " + name.str());
        tf << "final_lloyd_iteration,sse,dunn,jagota\n";
        for (const TraceRow& row : r.trace)
            tf << row.iteration << ',' << fmt(row.sse) << ',' << fmt(row.dunn) << ','
               << fmt(row.jagota) << '\n';
    }
}

CostSummary cost_counters(const RunReport& report) {
    CostSummary s;
    s.c = report.d + 1;
    s.k = report.config.k;
    s.n = report.n;
    s.depth = static_cast<std::uint64_t>(report.config.depth);
    std::vector<double> loops;
    double dist_sum = 0.0, eval_sum = 0.0;
    for (const SeedRecord& r : report.records) {
        loops.push_back(static_cast<double>(r.search_loops));
        dist_sum += static_cast<double>(r.distance_computations);
        eval_sum += static_cast<double>(r.evaluations);
        s.inner_lloyd_iterations_total += r.inner_lloyd_iterations;
    }
    s.l = loops.empty() ? 0 : static_cast<std::uint64_t>(median_of(loops));
    s.predicted_cost = static_cast<double>(s.c) * static_cast<double>(s.l) *
                       static_cast<double>(s.k) * static_cast<double>(s.n) *
                       static_cast<double>(s.depth);
    const double cnt = report.records.empty() ? 1.0 : static_cast<double>(report.records.size());
    s.measured_distance_mean = dist_sum / cnt;
    s.measured_evaluations_mean = eval_sum / cnt;
    return s;
}

namespace {

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    if (text.find(',') == std::string::npos) {
        const std::uint64_t count = std::stoull(text);
        if (count == 0) throw std::invalid_argument("seeds: count must be >= 1");
        for (std::uint64_t s = 1; s <= count; ++s) seeds.push_back(s);
        return seeds;
    }
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) seeds.push_back(std::stoull(item));
    if (seeds.empty()) throw std::invalid_argument("seeds: empty list");
    return seeds;
}

}  // namespace

std::vector<ExperimentConfig> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");

    ExperimentConfig base;
    std::vector<std::string> algos = {"kmeans"};
    CsvSchema schema;
    bool custom_schema = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r\n");
            const auto e = s.find_last_not_of(" \t\r\n");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));

        if (key == "dataset") base.dataset = value;
        else if (key == "data-dir") base.data_dir = value;
        else if (key == "algo") {
            algos.clear();
            std::istringstream ss(value);
            std::string a;
            while (std::getline(ss, a, ',')) algos.push_back(strip(a));
        } else if (key == "k") base.k = std::stoul(value);
        else if (key == "seeds") base.seeds = parse_seeds(value);
        else if (key == "preprocess") base.preprocess = parse_preprocess(value);
        else if (key == "depth") base.depth = std::stoi(value);
        else if (key == "max-evals") base.max_evals = std::stoull(value);
        else if (key == "max-restarts") base.max_restarts = std::stoi(value);
        else if (key == "collapse-threshold") base.collapse_threshold = std::stod(value);
        else if (key == "rs-step-scale") base.rs_step_scale = std::stod(value);
        else if (key == "final-max-iter") base.final_max_iter = std::stoi(value);
        else if (key == "format") base.format = parse_format(value);
        else if (key == "out") base.out_path = value;
        else if (key == "delimiter") schema.delimiter = value.empty() ? ',' : value[0], custom_schema = true;
        else if (key == "has-header") schema.has_header = (value == "true" || value == "1"), custom_schema = true;
        else if (key == "label-column") schema.label_column = std::stoi(value), custom_schema = true;
        else if (key == "drop-columns") {
            std::istringstream ss(value);
            std::string c;
            while (std::getline(ss, c, ',')) schema.drop_columns.push_back(std::stoi(strip(c)));
            custom_schema = true;
        } else
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
    }

    if (custom_schema) base.schema = schema;
    std::vector<ExperimentConfig> out;
    for (const std::string& a : algos) {
        ExperimentConfig cfg = base;
        cfg.algorithm = parse_algorithm(a);
        out.push_back(std::move(cfg));
    }
    return out;
}

}  // namespace skm
