#include "skm/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skm {

namespace {

std::vector<double> to_vec(std::span<const double> x) { return {x.begin(), x.end()}; }

void record(OptimizerResult& r, double best, double spread) {
    r.trace.push_back({best, spread});
}

// Centroid of all vertices except the worst (the last one after sort()).
std::vector<double> centroid_excluding_worst(const Simplex& s) {
    const std::size_t m = s.dims();
    std::vector<double> c(m, 0.0);
    for (std::size_t i = 0; i + 1 < s.vertices.rows; ++i)
        for (std::size_t j = 0; j < m; ++j) c[j] += s.vertices(i, j);
    for (std::size_t j = 0; j < m; ++j) c[j] /= static_cast<double>(s.vertices.rows - 1);
    return c;
}

void set_worst(Simplex& s, std::span<const double> x, double fx) {
    const std::size_t w = s.vertices.rows - 1;
    std::copy(x.begin(), x.end(), s.vertices.row(w).begin());
    s.values[w] = fx;
}

}  // namespace

void Simplex::sort() {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    Matrix v(vertices.rows, vertices.cols);
    std::vector<double> f(values.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const auto src = vertices.row(idx[i]);
        std::copy(src.begin(), src.end(), v.row(i).begin());
        f[i] = values[idx[i]];
    }
    vertices = std::move(v);
    values = std::move(f);
}

double simplex_diameter(const Simplex& s) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < s.vertices.rows; ++i)
        for (std::size_t j = i + 1; j < s.vertices.rows; ++j)
            d2 = std::max(d2, squared_distance(s.vertices.row(i), s.vertices.row(j)));
    return std::sqrt(d2);
}

Simplex init_simplex(Objective& obj, std::span<const double> x0, double h) {
    if (h <= 0.0) throw std::invalid_argument("init_simplex: step must be positive");
    std::vector<double> steps(x0.size(), h);
    return init_simplex(obj, x0, steps);
}

Simplex init_simplex(Objective& obj, std::span<const double> x0, std::span<const double> steps) {
    const std::size_t m = x0.size();
    Simplex s;
    s.vertices = Matrix(m + 1, m);
    s.values.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        auto row = s.vertices.row(i);
        std::copy(x0.begin(), x0.end(), row.begin());
        if (i > 0) row[i - 1] += steps[i - 1];
        s.values[i] = obj(row);
    }
    s.sort();
    return s;
}

void random_search_step(Objective& obj, std::vector<double>& x, double& fx,
                        std::vector<double>& b, std::span<const double> dx,
                        std::uint64_t& evals_left) {
    const std::size_t m = x.size();
    std::vector<double> probe(m);
    if (evals_left == 0) return;

    for (std::size_t j = 0; j < m; ++j) probe[j] = x[j] + b[j] + dx[j];
    --evals_left;
    const double f_plus = obj(probe);
    if (f_plus < fx) {
        x = probe;
        fx = f_plus;
        for (std::size_t j = 0; j < m; ++j) b[j] = 0.2 * b[j] + 0.4 * dx[j];
        return;
    }

    if (evals_left == 0) return;
    for (std::size_t j = 0; j < m; ++j) probe[j] = x[j] + b[j] - dx[j];
    --evals_left;
    const double f_minus = obj(probe);
    if (f_minus < fx) {
        x = probe;
        fx = f_minus;
        for (std::size_t j = 0; j < m; ++j) b[j] = b[j] - 0.4 * dx[j];
        return;
    }

    for (std::size_t j = 0; j < m; ++j) b[j] = 0.5 * b[j];
}

OptimizerResult random_search(Objective& obj, std::vector<double> x0, const RsConfig& cfg,
                              std::mt19937_64& rng) {
    if (obj.arity() != x0.size())
        throw std::invalid_argument("random_search: x0 size does not match objective arity");
    if (cfg.max_evals < 1) throw std::invalid_argument("random_search: max_evals must be >= 1");

    OptimizerResult r;
    std::vector<double> x = std::move(x0);
    std::vector<double> b(x.size(), 0.0);
    std::vector<double> dx(x.size());
    double fx = obj(x);  // the start point's evaluation is charged to the budget
    std::uint64_t evals_left =
        cfg.max_evals > obj.evaluations() ? cfg.max_evals - obj.evaluations() : 0;

    std::normal_distribution<double> gauss(0.0, cfg.step_scale);
    while (evals_left > 0) {
        for (auto& v : dx) v = gauss(rng);
        random_search_step(obj, x, fx, b, dx, evals_left);
        double bias_norm2 = 0.0;
        for (double v : b) bias_norm2 += v * v;
        record(r, fx, std::sqrt(bias_norm2));
        ++r.iterations;
    }

    r.best_point = x;
    r.best_value = fx;
    r.evaluations = obj.evaluations();
    return r;
}

bool nelder_mead_step(Simplex& s, Objective& obj, const DsConfig& cfg,
                      std::uint64_t& evals_left) {
    const std::size_t m = s.dims();
    const std::size_t worst = s.vertices.rows - 1;
    if (evals_left == 0) return false;

    const std::vector<double> cen = centroid_excluding_worst(s);
    const auto xw = s.vertices.row(worst);

    std::vector<double> xr(m);
    for (std::size_t j = 0; j < m; ++j) xr[j] = cen[j] + cfg.reflection * (cen[j] - xw[j]);
    --evals_left;
    const double fr = obj(xr);

    if (fr < s.values.front()) {
        // Reflection is a new best: try stretching further the same way.
        if (evals_left > 0) {
            std::vector<double> xe(m);
            for (std::size_t j = 0; j < m; ++j) xe[j] = cen[j] + cfg.expansion * (xr[j] - cen[j]);
            --evals_left;
            const double fe = obj(xe);
            if (fe < fr)
                set_worst(s, xe, fe);
            else
                set_worst(s, xr, fr);
        } else {
            set_worst(s, xr, fr);
        }
        s.sort();
        return true;
    }

    if (fr < s.values[worst - 1]) {  // beats the second-worst: keep it
        set_worst(s, xr, fr);
        s.sort();
        return true;
    }

    if (evals_left == 0) return false;
    std::vector<double> xc(m);
    if (fr < s.values[worst]) {
        // Outside contraction, between the centroid and the reflected point.
        for (std::size_t j = 0; j < m; ++j) xc[j] = cen[j] + cfg.contraction * (xr[j] - cen[j]);
        --evals_left;
        const double fc = obj(xc);
        if (fc <= fr) {
            set_worst(s, xc, fc);
            s.sort();
            return true;
        }
    } else {
        // Inside contraction, between the centroid and the worst vertex.
        for (std::size_t j = 0; j < m; ++j) xc[j] = cen[j] + cfg.contraction * (xw[j] - cen[j]);
        --evals_left;
        const double fc = obj(xc);
        if (fc < s.values[worst]) {
            set_worst(s, xc, fc);
            s.sort();
            return true;
        }
    }

    // Contraction failed: shrink everything toward the best vertex, one vertex
    // at a time so the cache stays coherent if the budget dies here.
    const std::vector<double> best = to_vec(s.vertices.row(0));
    for (std::size_t i = 1; i <= m; ++i) {
        if (evals_left == 0) {
            s.sort();
            return true;
        }
        auto row = s.vertices.row(i);
        for (std::size_t j = 0; j < m; ++j) row[j] = best[j] + cfg.shrink * (row[j] - best[j]);
        --evals_left;
        s.values[i] = obj(row);
    }
    s.sort();
    return true;
}

namespace {

// Shared phase driver: iterate steps until collapse or dead budget.
// Returns true when the phase ended by collapse.
bool run_phase(Simplex& s, Objective& obj, const DsConfig& cfg, double eps,
               std::uint64_t& evals_left, OptimizerResult& r, double incumbent) {
    while (true) {
        const double diam = simplex_diameter(s);
        // A zero-diameter simplex is dead regardless of the threshold.
        if (diam == 0.0 || (eps > 0.0 && diam < eps)) return true;
        if (evals_left == 0) return false;
        if (!nelder_mead_step(s, obj, cfg, evals_left)) return false;
        ++r.iterations;
        record(r, std::min(incumbent, s.values.front()), simplex_diameter(s));
    }
}

}  // namespace

OptimizerResult downhill_simplex(Objective& obj, Simplex s0, const DsConfig& cfg) {
    OptimizerResult r;
    // The objective's counter is the budget meter; s0's construction has
    // already been charged to it.
    std::uint64_t evals_left =
        cfg.max_evals > obj.evaluations() ? cfg.max_evals - obj.evaluations() : 0;

    s0.sort();
    const double eps = cfg.collapse_threshold;  // <= 0: run to the budget
    record(r, s0.values.front(), simplex_diameter(s0));
    run_phase(s0, obj, cfg, eps, evals_left, r, s0.values.front());

    r.best_point = to_vec(s0.vertices.row(0));
    r.best_value = s0.values.front();
    r.evaluations = obj.evaluations();
    return r;
}

OptimizerResult improved_downhill_simplex(Objective& obj, Simplex s0, const BoundingBox& box,
                                          const DsConfig& cfg, std::mt19937_64& rng) {
    if (cfg.max_restarts < 0)
        throw std::invalid_argument("improved_downhill_simplex: max_restarts must be >= 0");
    const std::size_t m = s0.dims();
    if (box.dims() != m)
        throw std::invalid_argument("improved_downhill_simplex: box/simplex dimension mismatch");

    OptimizerResult r;
    std::uint64_t evals_left =
        cfg.max_evals > obj.evaluations() ? cfg.max_evals - obj.evaluations() : 0;

    const double eps =
        cfg.collapse_threshold > 0.0 ? cfg.collapse_threshold : 1e-4 * box.diameter();

    Simplex s = std::move(s0);
    s.sort();
    std::vector<double> best_x = to_vec(s.vertices.row(0));
    double best_f = s.values.front();
    record(r, best_f, simplex_diameter(s));

    while (true) {
        const bool collapsed = run_phase(s, obj, cfg, eps, evals_left, r, best_f);
        if (s.values.front() < best_f) {
            best_f = s.values.front();
            best_x = to_vec(s.vertices.row(0));
        }
        if (!collapsed) break;
        if (r.restarts >= cfg.max_restarts) break;
        if (evals_left < m + 1) break;  // cannot afford a full fresh simplex

        for (std::size_t i = 0; i <= m; ++i) {
            auto row = s.vertices.row(i);
            for (std::size_t j = 0; j < m; ++j) {
                std::uniform_real_distribution<double> u(box.lower[j], box.upper[j]);
                row[j] = u(rng);
            }
            --evals_left;
            s.values[i] = obj(row);
        }
        s.sort();
        ++r.restarts;
        record(r, std::min(best_f, s.values.front()), simplex_diameter(s));
    }

    r.best_point = std::move(best_x);
    r.best_value = best_f;
    r.evaluations = obj.evaluations();
    return r;
}

}  // namespace skm
