#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "skm/matrix.hpp"

namespace skm {

/// Black-box objective with a monotone evaluation counter. Every call to
/// operator() costs exactly one evaluation.
class Objective {
   public:
    using Fn = std::function<double(std::span<const double>)>;

    Objective(std::size_t arity, Fn fn) : arity_(arity), fn_(std::move(fn)) {}

    double operator()(std::span<const double> x) {
        ++evaluations_;
        return fn_(x);
    }

    std::size_t arity() const { return arity_; }
    std::uint64_t evaluations() const { return evaluations_; }

   private:
    std::size_t arity_;
    Fn fn_;
    std::uint64_t evaluations_ = 0;
};

/// m+1 vertices in R^m with cached objective values, kept sorted best-first.
struct Simplex {
    Matrix vertices;             // (m+1) x m
    std::vector<double> values;  // values[i] = f(vertices.row(i))

    std::size_t dims() const { return vertices.cols; }
    void sort();  // stable, ascending by value
};

struct TracePoint {
    double best_value = 0.0;
    double spread = 0.0;  // simplex diameter, or bias norm for random search
};

struct OptimizerResult {
    std::vector<double> best_point;
    double best_value = std::numeric_limits<double>::infinity();
    // The objective's evaluation counter at exit. Budgets are expressed against
    // this meter, so with a fresh objective it equals the run's consumption.
    std::uint64_t evaluations = 0;
    int restarts = 0;
    std::uint64_t iterations = 0;   // search loops executed
    std::vector<TracePoint> trace;  // best_value is non-increasing
};

struct RsConfig {
    std::uint64_t max_evals = 1000;
    double step_scale = 1.0;  // std-dev of each coordinate of dx
};

struct DsConfig {
    std::uint64_t max_evals = 2000;
    double reflection = 1.0;    // alpha
    double expansion = 2.0;     // gamma
    double contraction = 0.5;   // rho
    double shrink = 0.5;
    // Simplex diameter below which the search is considered collapsed.
    // <= 0 means: derive 1e-4 * box diameter where a box is known, else never.
    double collapse_threshold = 0.0;
    int max_restarts = 0;
    double initial_step = 0.1;  // h, as used by callers of init_simplex
};

/// One decision of the random-search loop, exposed for direct testing.
/// Probes x+b+dx (and on failure x+b-dx) against fx, applying the bias rules:
/// accept first probe  -> b = 0.2*b + 0.4*dx
/// accept second probe -> b = b - 0.4*dx
/// both fail           -> b = 0.5*b
/// Consumes 1 or 2 evaluations; stops early (no bias update) if the budget
/// dies before the second probe. Updates x/fx/b in place.
void random_search_step(Objective& obj, std::vector<double>& x, double& fx,
                        std::vector<double>& b, std::span<const double> dx,
                        std::uint64_t& evals_left);

/// Sequential random search with a bias term. dx is sampled i.i.d. Gaussian
/// per coordinate with std-dev cfg.step_scale.
OptimizerResult random_search(Objective& obj, std::vector<double> x0, const RsConfig& cfg,
                              std::mt19937_64& rng);

/// Axis-aligned initial simplex: vertex 0 = x0, vertex j = x0 + h e_j.
Simplex init_simplex(Objective& obj, std::span<const double> x0, double h);
/// Same with a per-coordinate step.
Simplex init_simplex(Objective& obj, std::span<const double> x0, std::span<const double> steps);

/// Maximum pairwise Euclidean distance between vertices.
double simplex_diameter(const Simplex& s);

/// One Nelder-Mead iteration: reflect the worst vertex through the centroid of
/// the rest; expand when the reflection is a new best; contract (outside or
/// inside) when it fails to beat the second-worst; shrink toward the best
/// vertex when the contraction fails. The simplex stays coherent even if the
/// evaluation budget dies mid-step. Returns false when nothing could be done.
bool nelder_mead_step(Simplex& s, Objective& obj, const DsConfig& cfg,
                      std::uint64_t& evals_left);
inline bool nelder_mead_step(Simplex& s, Objective& obj, const DsConfig& cfg) {
    std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();
    return nelder_mead_step(s, obj, cfg, unlimited);
}

/// Iterate Nelder-Mead until the evaluation budget is exhausted or the simplex
/// diameter falls below the collapse threshold. cfg.max_evals covers the whole
/// run including the evaluations already spent building s0.
OptimizerResult downhill_simplex(Objective& obj, Simplex s0, const DsConfig& cfg);

/// Restart variant: runs downhill simplex phases; every time the simplex
/// collapses with budget and restarts remaining, records the incumbent and
/// continues from m+1 fresh vertices drawn uniformly in the box. The result is
/// the best point seen across all phases.
OptimizerResult improved_downhill_simplex(Objective& obj, Simplex s0, const BoundingBox& box,
                                          const DsConfig& cfg, std::mt19937_64& rng);

}  // namespace skm
