#ifndef TOPOLEVEL_DIAGRAM_IO_HPP
#define TOPOLEVEL_DIAGRAM_IO_HPP

#include <string>
#include <vector>

#include "topolevel/persistence.hpp"

namespace topolevel {

// One line per pair: degree<TAB>birth<TAB>death, values with 17
// significant digits, "-inf" for essential deaths.  Diagrams are
// emitted in input order and empty diagrams contribute no lines.
std::string diagrams_to_tsv(const std::vector<PersistenceDiagram>& diagrams);

// Inverse of diagrams_to_tsv; pairs are grouped by ascending degree
// with file order preserved within a degree.  Malformed lines raise
// ParseError with the 1-based line number.
std::vector<PersistenceDiagram> diagrams_from_tsv(const std::string& text);

// Diagram of the given degree, or an empty one when absent.
PersistenceDiagram diagram_for_degree(
    const std::vector<PersistenceDiagram>& diagrams, int degree);

}  // namespace topolevel

#endif
