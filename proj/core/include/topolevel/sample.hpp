#ifndef TOPOLEVEL_SAMPLE_HPP
#define TOPOLEVEL_SAMPLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "topolevel/errors.hpp"

namespace topolevel {

// Point set in R^d, row-major: coords[i*d + j] is coordinate j of point i.
struct PointCloud {
    int d = 0;
    std::vector<double> coords;

    std::size_t size() const {
        return d > 0 ? coords.size() / static_cast<std::size_t>(d) : 0;
    }
    const double* point(std::size_t i) const {
        return coords.data() + i * static_cast<std::size_t>(d);
    }
};

// Sample with optional per-point responses.  Invariants enforced by
// validate(): n >= 1, d >= 1, all coordinates finite; responses, when
// present, have length n and satisfy |Y_i| <= y_max when y_max is set.
struct LabeledSample {
    PointCloud points;
    std::optional<std::vector<double>> responses;
    std::optional<double> y_max;

    std::size_t size() const { return points.size(); }
    int dimension() const { return points.d; }
    bool has_responses() const { return responses.has_value(); }

    void validate() const;
};

enum class EstimatorMode { density, regression };

// Model bounds feeding the theory constants; all fields optional, each
// operation states which ones it requires.
struct EstimatorBounds {
    std::optional<double> p_max;
    std::optional<double> p_min;
    std::optional<double> y_max;
};

}  // namespace topolevel

#endif
