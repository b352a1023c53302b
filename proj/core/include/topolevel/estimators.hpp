#ifndef TOPOLEVEL_ESTIMATORS_HPP
#define TOPOLEVEL_ESTIMATORS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "topolevel/complexes.hpp"
#include "topolevel/fields.hpp"
#include "topolevel/kernels.hpp"
#include "topolevel/persistence.hpp"
#include "topolevel/sample.hpp"

namespace topolevel {

// Image homology of a level pair.  betti_image[k] is the rank of the
// map induced by including the upper filtered set into the lower one;
// it never exceeds either complex's own rank.
struct LevelEstimate {
    double level = 0.0;
    double epsilon = 0.0;
    double r = 0.0;
    std::size_t n_upper = 0;
    std::size_t n_lower = 0;
    bool empty_level = false;
    std::vector<std::int64_t> betti_image;
    std::vector<std::int64_t> betti_upper;
    std::vector<std::int64_t> betti_lower;
    std::vector<std::string> assumptions;
    std::vector<std::string> warnings;
};

struct LevelProbe {
    double level = 0.0;
    std::int64_t betti_m = 0;
};

// Outcome of the descending level scan: i_star is one past the first
// level index whose degree-m image rank is 1.
struct ManifoldRecovery {
    int i_star = 0;
    double level_used = 0.0;
    double epsilon = 0.0;
    double r = 0.0;
    int m = 0;
    std::vector<std::int64_t> betti;
    std::vector<LevelProbe> trace;
    std::vector<std::string> assumptions;
};

struct PhEstimate {
    double epsilon = 0.0;
    double r = 0.0;
    std::vector<double> levels;
    std::vector<PersistenceDiagram> diagrams;
    std::vector<std::string> assumptions;
};

// Tolerance default when nothing better is known: a fiftieth of the
// estimator's value range (1.0 on a flat range).
double default_epsilon(const std::vector<double>& values);

// Image homology between the filtered samples at levels L+epsilon and
// L-epsilon, Rips complexes at radius r, degrees 0..k_max-1.  Issues a
// warning (not an error) when epsilon is outside (0, L/2); epsilon = 0
// degenerates to the plain homology of the single filtered set.
LevelEstimate estimate_level_homology(
    const LabeledSample& data, double L, double epsilon, double r, int k_max,
    EstimatorMode mode, const KernelSpec& kernel,
    Field field = Field::exact_rationals, int threads = 1,
    std::uint64_t budget = kDefaultSimplexBudget);

// Descending scan over levels L_i = Lhat_max - 2*i*epsilon in density
// mode, stopping one level past the first degree-m image rank of 1 and
// reporting the ranks there.  k_max <= 0 defaults to m+1, the smallest
// value able to express degree-m ranks.  NoStableLevelError when the
// scan exhausts all levels without a hit.
ManifoldRecovery recover_manifold_homology(
    const LabeledSample& data, double epsilon, int m, double r, int k_max,
    const KernelSpec& kernel, Field field = Field::exact_rationals,
    int threads = 1, std::uint64_t budget = kDefaultSimplexBudget);

// Persistent homology of the estimator's super-level filtration along
// the ladder of levels descending by 2*epsilon from Lhat_max.  k_max <=
// 0 defaults to the ambient dimension.
PhEstimate estimate_ph_full(const LabeledSample& data, double epsilon,
                            double r, int k_max, EstimatorMode mode,
                            const KernelSpec& kernel, int threads = 1,
                            std::uint64_t budget = kDefaultSimplexBudget);

std::vector<PersistenceDiagram> estimate_ph(
    const LabeledSample& data, double epsilon, double r, int k_max,
    EstimatorMode mode, const KernelSpec& kernel, int threads = 1,
    std::uint64_t budget = kDefaultSimplexBudget);

// Reference diagrams for an analytic function: a regular grid over bbox
// (per-axis [lo, hi] ranges), Rips radius spacing*1.01, vertex values
// evaluated exactly, then the same filtered reduction.
PhEstimate grid_ph_oracle_full(
    const std::function<double(const double*)>& f,
    const std::vector<std::pair<double, double>>& bbox, double spacing,
    double epsilon, int k_max = 0,
    std::uint64_t budget = kDefaultSimplexBudget);

std::vector<PersistenceDiagram> grid_ph_oracle(
    const std::function<double(const double*)>& f,
    const std::vector<std::pair<double, double>>& bbox, double spacing,
    double epsilon, int k_max = 0,
    std::uint64_t budget = kDefaultSimplexBudget);

}  // namespace topolevel

#endif
