#ifndef TOPOLEVEL_BARCODE_HPP
#define TOPOLEVEL_BARCODE_HPP

#include <string>
#include <vector>

#include "topolevel/persistence.hpp"

namespace topolevel {

// Barcode rendering, one panel per degree.  The level axis decreases
// left to right, so a bar runs from its birth toward its death;
// essential bars run to the edge and carry an open-end marker.  Bars
// shorter than min_length are suppressed.  format is "text" or "svg";
// anything else raises UnsupportedFormatError.
std::string render_barcode(const std::vector<PersistenceDiagram>& diagrams,
                           const std::string& format, double min_length = 0.0);

}  // namespace topolevel

#endif
