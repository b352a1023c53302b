#ifndef TOPOLEVEL_BOTTLENECK_HPP
#define TOPOLEVEL_BOTTLENECK_HPP

#include "topolevel/persistence.hpp"

namespace topolevel {

// Exact bottleneck distance between two diagrams of the same degree.
// Finite pairs may match the diagonal at half their persistence;
// essential classes match only essential classes, at the difference of
// their births.  A mismatched essential count gives +infinity.
double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

namespace detail {
// Exhaustive enumeration over all partial matchings; exponential,
// intended for cross-checking on diagrams with at most a few points.
double bottleneck_brute(const PersistenceDiagram& d1,
                        const PersistenceDiagram& d2);
}  // namespace detail

}  // namespace topolevel

#endif
