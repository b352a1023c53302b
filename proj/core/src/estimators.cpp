#include "topolevel/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "topolevel/errors.hpp"
#include "topolevel/homology.hpp"

namespace topolevel {

namespace {

const char* const kAssumeRegularity =
    "level-set regularity at the requested tolerance is assumed, not checked";
const char* const kAssumeTame =
    "tameness of the target function is assumed, not checked";
const char* const kAssumeNoCritical =
    "absence of critical values within 2*epsilon of the level is assumed, "
    "not checked";
const char* const kAssumeManifold =
    "connectedness and orientability of the underlying manifold are "
    "assumed, not checked";
const char* const kAssumeSeparation =
    "noise-to-feature separation wider than 8*epsilon is assumed, not "
    "checked";

// points reordered so the upper filtered set is the initial segment;
// within each block the original order is kept
PointCloud gather(const LabeledSample& data,
                  const std::vector<std::size_t>& order) {
    PointCloud out;
    const int d = data.dimension();
    out.d = d;
    out.coords.reserve(order.size() * static_cast<std::size_t>(d));
    for (std::size_t i : order) {
        const double* p = data.points.point(i);
        out.coords.insert(out.coords.end(), p, p + d);
    }
    return out;
}

// smallest ladder top: the least multiple of 2*epsilon at or above vmax
double ladder_top(double vmax, double epsilon) {
    return std::ceil(vmax / (2.0 * epsilon)) * 2.0 * epsilon;
}

// levels descending by 2*epsilon from the ladder top; the last level is
// the first at or below vmin, so every point enters the filtration
std::vector<double> level_ladder(double vmax, double vmin, double epsilon) {
    std::vector<double> levels;
    double top = ladder_top(vmax, epsilon);
    levels.push_back(top);
    std::size_t i = 1;
    while (levels.back() > vmin) {
        if (i > 1000000)
            throw OutOfRangeError(
                "level ladder exceeds 1e6 entries; epsilon is too small for "
                "the value range");
        levels.push_back(top - 2.0 * epsilon * static_cast<double>(i));
        ++i;
    }
    return levels;
}

struct SplitSets {
    std::vector<std::size_t> order;  // upper indices, then the rest of lower
    std::size_t n_upper = 0;
    std::size_t n_lower = 0;
};

SplitSets split_levels(const std::vector<double>& values, double upper_level,
                       double lower_level) {
    SplitSets s;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] >= upper_level) s.order.push_back(i);
    s.n_upper = s.order.size();
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] >= lower_level && values[i] < upper_level)
            s.order.push_back(i);
    s.n_lower = s.order.size();
    return s;
}

// degrees 0..k_max-1 of the inclusion pair; the streaming route carries
// the k_max = 2 prime-field case without materializing the complexes
PairHomology pair_ranks(const PointCloud& pts, std::size_t n_upper, double r,
                        int k_max, Field field, std::uint64_t budget) {
    if (field == Field::prime_field && k_max == 2)
        return pair_homology_rips2_prime(pts, n_upper, r, budget);
    RipsPair pair = build_rips_pair(pts, n_upper, r, k_max, budget);
    return pair_homology(pair.upper, pair.lower, k_max, field);
}

}  // namespace

double default_epsilon(const std::vector<double>& values) {
    if (values.empty()) return 1.0;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double range = *hi - *lo;
    return range > 0.0 ? range / 50.0 : 1.0;
}

LevelEstimate estimate_level_homology(const LabeledSample& data, double L,
                                      double epsilon, double r, int k_max,
                                      EstimatorMode mode,
                                      const KernelSpec& kernel, Field field,
                                      int threads, std::uint64_t budget) {
    data.validate();
    if (!(r > 0.0)) throw OutOfRangeError("bandwidth must be positive");
    if (!(epsilon >= 0.0))
        throw OutOfRangeError("tolerance must be nonnegative");
    if (k_max < 1) throw OutOfRangeError("k_max must be at least 1");

    LevelEstimate out;
    out.level = L;
    out.epsilon = epsilon;
    out.r = r;
    out.assumptions = {kAssumeRegularity, kAssumeTame, kAssumeNoCritical};
    if (!(epsilon > 0.0 && epsilon < L / 2.0))
        out.warnings.push_back(
            "epsilon outside (0, L/2): the image guarantee does not apply");

    std::vector<double> values = estimator_values(data, mode, kernel, r, threads);
    SplitSets sets = split_levels(values, L + epsilon, L - epsilon);
    out.n_upper = sets.n_upper;
    out.n_lower = sets.n_lower;
    out.empty_level = sets.n_upper == 0;

    out.betti_image.assign(static_cast<std::size_t>(k_max), 0);
    out.betti_upper.assign(static_cast<std::size_t>(k_max), 0);
    out.betti_lower.assign(static_cast<std::size_t>(k_max), 0);
    if (sets.n_lower == 0) return out;

    PointCloud pts = gather(data, sets.order);
    PairHomology ranks = pair_ranks(pts, sets.n_upper, r, k_max, field, budget);
    out.betti_image = std::move(ranks.image);
    out.betti_upper = std::move(ranks.betti_upper);
    out.betti_lower = std::move(ranks.betti_lower);
    return out;
}

ManifoldRecovery recover_manifold_homology(const LabeledSample& data,
                                           double epsilon, int m, double r,
                                           int k_max, const KernelSpec& kernel,
                                           Field field, int threads,
                                           std::uint64_t budget) {
    data.validate();
    if (!(epsilon > 0.0)) throw OutOfRangeError("tolerance must be positive");
    if (!(r > 0.0)) throw OutOfRangeError("bandwidth must be positive");
    if (m < 0) throw OutOfRangeError("target degree must be nonnegative");
    if (k_max <= 0) k_max = m + 1;
    if (k_max < m + 1)
        throw OutOfRangeError("k_max must be at least m+1");

    ManifoldRecovery out;
    out.epsilon = epsilon;
    out.r = r;
    out.m = m;
    out.assumptions = {kAssumeRegularity, kAssumeTame, kAssumeManifold,
                       kAssumeSeparation};

    std::vector<double> values =
        estimator_values(data, EstimatorMode::density, kernel, r, threads);
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double vmin = *lo_it;
    const double top = ladder_top(*hi_it, epsilon);

    auto image_at = [&](double level, int degrees) {
        SplitSets sets = split_levels(values, level + epsilon, level - epsilon);
        if (sets.n_upper == 0) {
            PairHomology zero;
            zero.betti_upper.assign(static_cast<std::size_t>(degrees), 0);
            zero.betti_lower.assign(static_cast<std::size_t>(degrees), 0);
            zero.image.assign(static_cast<std::size_t>(degrees), 0);
            return zero;
        }
        PointCloud pts = gather(data, sets.order);
        return pair_ranks(pts, sets.n_upper, r, degrees, field, budget);
    };

    for (int i = 1;; ++i) {
        const double level = top - 2.0 * epsilon * static_cast<double>(i);
        std::int64_t beta_m =
            image_at(level, m + 1).image[static_cast<std::size_t>(m)];
        out.trace.push_back({level, beta_m});
        if (beta_m == 1) {
            out.i_star = i + 1;
            out.level_used = top - 2.0 * epsilon * static_cast<double>(i + 1);
            PairHomology final_ranks = image_at(out.level_used, k_max);
            out.betti = std::move(final_ranks.image);
            out.trace.push_back(
                {out.level_used, out.betti[static_cast<std::size_t>(m)]});
            return out;
        }
        // once the lower set is the whole sample, deeper levels cannot
        // change the pair
        if (level - epsilon <= vmin)
            throw NoStableLevelError(
                "no level reached an image rank of 1 in degree " +
                std::to_string(m));
    }
}

PhEstimate estimate_ph_full(const LabeledSample& data, double epsilon,
                            double r, int k_max, EstimatorMode mode,
                            const KernelSpec& kernel, int threads,
                            std::uint64_t budget) {
    data.validate();
    if (!(epsilon > 0.0)) throw OutOfRangeError("tolerance must be positive");
    if (!(r > 0.0)) throw OutOfRangeError("bandwidth must be positive");
    if (k_max <= 0) k_max = data.dimension();

    PhEstimate out;
    out.epsilon = epsilon;
    out.r = r;
    out.assumptions = {kAssumeRegularity, kAssumeTame};

    std::vector<double> values = estimator_values(data, mode, kernel, r, threads);
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    out.levels = level_ladder(*hi_it, *lo_it, epsilon);
    FilteredComplex fc =
        build_filtered_rips(data.points, r, k_max, values, out.levels, budget);
    out.diagrams = reduce(fc);
    return out;
}

std::vector<PersistenceDiagram> estimate_ph(const LabeledSample& data,
                                            double epsilon, double r,
                                            int k_max, EstimatorMode mode,
                                            const KernelSpec& kernel,
                                            int threads,
                                            std::uint64_t budget) {
    return estimate_ph_full(data, epsilon, r, k_max, mode, kernel, threads,
                            budget)
        .diagrams;
}

PhEstimate grid_ph_oracle_full(const std::function<double(const double*)>& f,
                               const std::vector<std::pair<double, double>>& bbox,
                               double spacing, double epsilon, int k_max,
                               std::uint64_t budget) {
    if (!(spacing > 0.0)) throw OutOfRangeError("spacing must be positive");
    if (!(epsilon > 0.0)) throw OutOfRangeError("tolerance must be positive");
    if (bbox.empty()) throw OutOfRangeError("bounding box has no axes");
    const int d = static_cast<int>(bbox.size());
    if (k_max <= 0) k_max = d;

    std::vector<std::vector<double>> axes;
    std::uint64_t count = 1;
    for (const auto& [lo, hi] : bbox) {
        if (!(hi >= lo))
            throw OutOfRangeError("bounding box axis has hi below lo");
        std::vector<double> axis;
        for (std::size_t j = 0;; ++j) {
            double x = lo + spacing * static_cast<double>(j);
            if (x > hi + 1e-12) break;
            axis.push_back(x);
            if (axis.size() > budget)
                throw CapacityExceededError(
                    budget, "grid axis exceeds the simplex budget");
        }
        unsigned __int128 next =
            static_cast<unsigned __int128>(count) * axis.size();
        if (next > budget)
            throw CapacityExceededError(budget,
                                        "grid exceeds the simplex budget");
        count = static_cast<std::uint64_t>(next);
        axes.push_back(std::move(axis));
    }

    PointCloud pts;
    pts.d = d;
    pts.coords.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(d));
    std::vector<std::size_t> digit(static_cast<std::size_t>(d), 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        for (int a = 0; a < d; ++a)
            pts.coords.push_back(axes[static_cast<std::size_t>(a)]
                                     [digit[static_cast<std::size_t>(a)]]);
        for (int a = d - 1; a >= 0; --a) {
            if (++digit[static_cast<std::size_t>(a)] <
                axes[static_cast<std::size_t>(a)].size())
                break;
            digit[static_cast<std::size_t>(a)] = 0;
        }
    }

    std::vector<double> values(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        values[i] = f(pts.point(i));
        if (!std::isfinite(values[i]))
            throw OutOfRangeError("function value at a grid point is not finite");
    }

    PhEstimate out;
    out.epsilon = epsilon;
    out.r = spacing * 1.01;
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    out.levels = level_ladder(*hi_it, *lo_it, epsilon);
    FilteredComplex fc =
        build_filtered_rips(pts, out.r, k_max, values, out.levels, budget);
    out.diagrams = reduce(fc);
    out.assumptions = {kAssumeTame};
    return out;
}

std::vector<PersistenceDiagram> grid_ph_oracle(
    const std::function<double(const double*)>& f,
    const std::vector<std::pair<double, double>>& bbox, double spacing,
    double epsilon, int k_max, std::uint64_t budget) {
    return grid_ph_oracle_full(f, bbox, spacing, epsilon, k_max, budget)
        .diagrams;
}

}  // namespace topolevel
