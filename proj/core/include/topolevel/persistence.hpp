#ifndef TOPOLEVEL_PERSISTENCE_HPP
#define TOPOLEVEL_PERSISTENCE_HPP

#include <limits>
#include <vector>

#include "topolevel/complexes.hpp"

namespace topolevel {

// Death value reported for classes still alive at the last level.
inline constexpr double kEssentialDeath =
    -std::numeric_limits<double>::infinity();

struct DiagramPoint {
    double birth;
    double death;
};

// Multiset of birth/death pairs of one homology degree, in level-value
// coordinates.  Levels decrease along the filtration, so birth > death
// for every finite pair; essential classes carry kEssentialDeath.
struct PersistenceDiagram {
    int degree = 0;
    std::vector<DiagramPoint> pairs;
};

// Persistent homology of the filtered complex over Z/2, one diagram per
// degree 0..max_dim.  Simplexes are ordered by (filtration_index,
// dimension, tuple); zero-length pairs are dropped.
std::vector<PersistenceDiagram> reduce(const FilteredComplex& fc);

namespace detail {
// Textbook column reduction of the boundary matrix in filtration order;
// reference route used to cross-check reduce on small complexes.
std::vector<PersistenceDiagram> reduce_reference(const FilteredComplex& fc);
}  // namespace detail

}  // namespace topolevel

#endif
