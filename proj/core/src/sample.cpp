#include "topolevel/sample.hpp"

#include <cmath>
#include <string>

namespace topolevel {

void LabeledSample::validate() const {
    if (points.d < 1) throw OutOfRangeError("sample dimension must be at least 1");
    std::size_t n = size();
    if (n < 1) throw OutOfRangeError("sample must contain at least one point");
    if (points.coords.size() != n * static_cast<std::size_t>(points.d)) {
        throw OutOfRangeError("coordinate array length is not n * d");
    }
    for (double v : points.coords) {
        if (!std::isfinite(v)) throw OutOfRangeError("coordinates must be finite");
    }
    if (responses) {
        if (responses->size() != n) {
            throw OutOfRangeError("responses length must equal the point count");
        }
        for (double y : *responses) {
            if (!std::isfinite(y)) throw OutOfRangeError("responses must be finite");
        }
        if (y_max) {
            if (!(*y_max >= 0.0)) throw OutOfRangeError("y_max must be nonnegative");
            for (double y : *responses) {
                if (std::fabs(y) > *y_max) {
                    throw OutOfRangeError("response exceeds the stated y_max");
                }
            }
        }
    }
}

}  // namespace topolevel
